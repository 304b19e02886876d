#pragma once

// Chain geometry, the activity rule and the projected-flip term structure
// shared by the dense backend, the MPS backend and the classical automaton.
//
// Sites are numbered 1..L throughout the public API. Only sites 3..L-2 carry
// a flip term; the two outermost sites on each end are frozen but still act
// as neighbors of interior sites.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qgol {

/// Occupation counts for which a flip term is switched on.
inline constexpr std::array<int, 2> kActiveCounts{2, 3};

inline constexpr bool count_is_active(int count) noexcept {
    return count == kActiveCounts[0] || count == kActiveCounts[1];
}

class LatticeSpec {
  public:
    static constexpr int kMinSites = 5;

    /// Throws LatticeTooSmall for L < 5.
    explicit LatticeSpec(int num_sites);

    int size() const noexcept { return num_sites_; }
    int first_flip_site() const noexcept { return 3; }
    int last_flip_site() const noexcept { return num_sites_ - 2; }
    bool is_flip_site(int site) const noexcept {
        return site >= first_flip_site() && site <= last_flip_site();
    }
    int mirror(int site) const noexcept { return num_sites_ + 1 - site; }

    friend bool operator==(const LatticeSpec &, const LatticeSpec &) = default;

  private:
    int num_sites_;
};

/// Classical bit string; bits[k] is the occupation of site k+1.
struct ClassicalConfig {
    std::vector<std::uint8_t> bits;

    ClassicalConfig() = default;
    explicit ClassicalConfig(std::vector<std::uint8_t> b) : bits(std::move(b)) {}

    /// Parses a string of '0'/'1' characters, site 1 first.
    static ClassicalConfig from_string(std::string_view text);
    static ClassicalConfig all_dead(int num_sites);
    static ClassicalConfig all_alive(int num_sites);

    int size() const noexcept { return static_cast<int>(bits.size()); }
    /// 1-based access.
    int at(int site) const { return bits.at(static_cast<std::size_t>(site - 1)); }
    int alive_count() const noexcept;
    ClassicalConfig mirrored() const;
    std::string to_string() const;
    /// Packs into a basis index with site 1 as the least significant bit.
    std::uint64_t to_index() const;

    friend bool operator==(const ClassicalConfig &, const ClassicalConfig &) = default;
};

/// One summand of the Hamiltonian: a flip on `flip_site` gated by the
/// projector onto neighbor configurations holding exactly 2 or 3 ones.
struct HamTerm {
    int flip_site;
    std::array<int, 4> neighbor_sites;

    /// Bitmask of the neighbor sites in the dense basis-index convention.
    std::uint64_t neighbor_mask() const noexcept;
    std::uint64_t flip_mask() const noexcept { return std::uint64_t{1} << (flip_site - 1); }

    friend bool operator==(const HamTerm &, const HamTerm &) = default;
};

/// Returns (i-2, i-1, i+1, i+2); throws InvalidFlipSite unless 3 <= i <= L-2.
std::array<int, 4> neighbor_indices(const LatticeSpec &spec, int site);

/// True iff the four neighbors of `site` hold exactly 2 or 3 alive cells.
bool is_active(const ClassicalConfig &config, int site);

/// The L-4 terms, ordered by flip site.
std::vector<HamTerm> build_terms(const LatticeSpec &spec);

/// Splits terms into three groups by flip site mod 3 (group 0 starts at
/// site 3). Terms in one group are at least three sites apart and commute.
std::array<std::vector<HamTerm>, 3> sublattice_partition(const std::vector<HamTerm> &terms);

} // namespace qgol
