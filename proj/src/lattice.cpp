#include "qgol/lattice.hpp"

#include <algorithm>

#include "qgol/error.hpp"

namespace qgol {

LatticeSpec::LatticeSpec(int num_sites) : num_sites_(num_sites) {
    if (num_sites < kMinSites) {
        throw LatticeTooSmall("lattice needs at least " + std::to_string(kMinSites) +
                              " sites, got " + std::to_string(num_sites));
    }
}

ClassicalConfig ClassicalConfig::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw ConfigError("configuration string may only contain '0' and '1', got '" +
                              std::string(text) + "'");
        }
        bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return ClassicalConfig(std::move(bits));
}

ClassicalConfig ClassicalConfig::all_dead(int num_sites) {
    return ClassicalConfig(std::vector<std::uint8_t>(static_cast<std::size_t>(num_sites), 0));
}

ClassicalConfig ClassicalConfig::all_alive(int num_sites) {
    return ClassicalConfig(std::vector<std::uint8_t>(static_cast<std::size_t>(num_sites), 1));
}

int ClassicalConfig::alive_count() const noexcept {
    return static_cast<int>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

ClassicalConfig ClassicalConfig::mirrored() const {
    return ClassicalConfig(std::vector<std::uint8_t>(bits.rbegin(), bits.rend()));
}

std::string ClassicalConfig::to_string() const {
    std::string out;
    out.reserve(bits.size());
    for (auto b : bits) out.push_back(b ? '1' : '0');
    return out;
}

std::uint64_t ClassicalConfig::to_index() const {
    if (bits.size() > 63) throw CapacityError("configuration too long to pack into a basis index");
    std::uint64_t index = 0;
    for (std::size_t k = 0; k < bits.size(); ++k) {
        if (bits[k]) index |= std::uint64_t{1} << k;
    }
    return index;
}

std::uint64_t HamTerm::neighbor_mask() const noexcept {
    std::uint64_t mask = 0;
    for (int s : neighbor_sites) mask |= std::uint64_t{1} << (s - 1);
    return mask;
}

std::array<int, 4> neighbor_indices(const LatticeSpec &spec, int site) {
    if (!spec.is_flip_site(site)) {
        throw InvalidFlipSite("site " + std::to_string(site) + " carries no flip term on a chain of " +
                              std::to_string(spec.size()) + " sites (valid: 3.." +
                              std::to_string(spec.last_flip_site()) + ")");
    }
    return {site - 2, site - 1, site + 1, site + 2};
}

bool is_active(const ClassicalConfig &config, int site) {
    const LatticeSpec spec(config.size());
    int count = 0;
    for (int n : neighbor_indices(spec, site)) count += config.at(n);
    return count_is_active(count);
}

std::vector<HamTerm> build_terms(const LatticeSpec &spec) {
    std::vector<HamTerm> terms;
    terms.reserve(static_cast<std::size_t>(spec.size() - 4));
    for (int i = spec.first_flip_site(); i <= spec.last_flip_site(); ++i) {
        terms.push_back(HamTerm{i, neighbor_indices(spec, i)});
    }
    return terms;
}

std::array<std::vector<HamTerm>, 3> sublattice_partition(const std::vector<HamTerm> &terms) {
    std::array<std::vector<HamTerm>, 3> groups;
    for (const auto &t : terms) groups[static_cast<std::size_t>((t.flip_site - 3) % 3)].push_back(t);
    for (auto &g : groups) {
        std::sort(g.begin(), g.end(),
                  [](const HamTerm &a, const HamTerm &b) { return a.flip_site < b.flip_site; });
    }
    return groups;
}

} // namespace qgol
