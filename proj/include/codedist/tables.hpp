#pragma once

#include <cstdint>
#include <vector>

#include "codedist/code.hpp"
#include "codedist/enumerate.hpp"

namespace codedist {

/// Weights indexed by the CoordSpace encoding of a vector space; scalar-invariant, entry 0 is 0.
struct WeightTable {
    CoordSpace space;
    std::vector<std::uint8_t> weight;

    std::uint8_t operator[](std::uint64_t x) const noexcept { return weight[x]; }
    std::size_t max() const noexcept;
};

/// wt(x G) over the coefficient space F_q^k.
WeightTable codeword_table(const LinearCode& code, Budget& budget);
/// Coset-leader weights over the syndrome space F_q^{N-k}, by breadth-first search from the zero coset
/// with the weight-1 vectors as steps.
WeightTable coset_leader_table(const LinearCode& code, Budget& budget);
/// Every vector of V; refused above 2^20 entries.
WeightTable ambient_table(const Ambient& ambient, Budget& budget);

inline constexpr std::uint64_t kAmbientTableLimit = std::uint64_t{1} << 20;

}  // namespace codedist
