#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "codedist/tables.hpp"

namespace codedist {

enum class SearchStrategy { automatic, enumerate, threshold };

const char* strategy_name(SearchStrategy s) noexcept;

struct SubspaceOptimum {
    std::size_t value = 0;
    /// RREF basis of one optimal subspace, rows in the table's coordinates.
    Matrix basis;
    SearchStrategy used = SearchStrategy::enumerate;
};

/// max over i-dimensional subspaces U of the table's space of min(cap, min_{u in U, u != 0} table[u]).
/// Enumeration visits RREF bases in canonical order and keeps the first maximizer; the threshold strategy
/// runs a depth-first search for a subspace inside {table >= t}, t descending from cap.
SubspaceOptimum max_min_subspace(const WeightTable& table, std::size_t i, std::size_t cap, Budget& budget,
                                 SearchStrategy strategy = SearchStrategy::automatic);

/// Minimum of table over the nonzero span of the given rows (codes), stopping early once it is <= floor.
std::size_t span_min(const WeightTable& table, const std::vector<std::uint64_t>& rows, std::size_t floor = 0);

/// Estimated weight evaluations of the enumeration strategy.
std::uint64_t enumeration_cost(std::size_t dim, std::size_t i, std::uint64_t q);

/// Maximum of d_min(D) over i-dimensional D containing the code, enumerating D's codewords against a full
/// table of V (no coset-leader table involved).
SubspaceOptimum direct_supercode_search(const LinearCode& code, const WeightTable& ambient, std::size_t i,
                                        Budget& budget);

}  // namespace codedist
