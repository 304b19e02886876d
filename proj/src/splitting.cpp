#include "qgol/splitting.hpp"

#include <cmath>
#include <string>

#include "qgol/error.hpp"

namespace qgol {

void EvolutionParams::validate() const {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive and finite");
    if (sample_interval < dt) throw ConfigError("sample_interval must be at least dt");
    if (t_final < sample_interval) throw ConfigError("t_final must be at least sample_interval");
    if (order != 1 && order != 2 && order != 4) {
        throw ConfigError("splitting order must be 1, 2 or 4, got " + std::to_string(order));
    }
    if (!(generation_time > 0.0)) throw ConfigError("generation_time must be positive");
    // sample_interval must be a whole number of steps
    const double ratio = sample_interval / dt;
    if (std::abs(ratio - std::round(ratio)) > 1e-9 * ratio) {
        throw ConfigError("sample_interval must be an integer multiple of dt");
    }
}

long EvolutionParams::steps_per_sample() const { return std::lround(sample_interval / dt); }

long EvolutionParams::num_samples() const {
    return static_cast<long>(std::floor(t_final / sample_interval + 1e-9));
}

namespace {

void push_stage(std::vector<SplittingStage> &out, int group, double fraction) {
    if (!out.empty() && out.back().group == group) {
        out.back().fraction += fraction;
    } else {
        out.push_back({group, fraction});
    }
}

void push_strang(std::vector<SplittingStage> &out, double weight) {
    push_stage(out, 0, weight / 2);
    push_stage(out, 1, weight / 2);
    push_stage(out, 2, weight);
    push_stage(out, 1, weight / 2);
    push_stage(out, 0, weight / 2);
}

} // namespace

std::vector<SplittingStage> splitting_schedule(int order) {
    std::vector<SplittingStage> out;
    switch (order) {
    case 1:
        push_stage(out, 0, 1.0);
        push_stage(out, 1, 1.0);
        push_stage(out, 2, 1.0);
        break;
    case 2:
        push_strang(out, 1.0);
        break;
    case 4: {
        const double outer = 1.0 / (2.0 - std::cbrt(2.0));
        const double inner = 1.0 - 2.0 * outer;
        push_strang(out, outer);
        push_strang(out, inner);
        push_strang(out, outer);
        break;
    }
    default:
        throw ConfigError("splitting order must be 1, 2 or 4, got " + std::to_string(order));
    }
    return out;
}

} // namespace qgol
