#pragma once

#include <cstdint>
#include <optional>

#include "gdecomp/decomposition.hpp"
#include "gdecomp/graph.hpp"

namespace gdecomp {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

struct SearchOptions {
  /// Copy placements allowed before giving up.
  std::uint64_t budget = kDefaultSearchBudget;
  /// Worker threads; > 1 splits the tree two levels below the root.
  int jobs = 1;
  /// Maximum number of labeled copies to tabulate.
  std::size_t copy_cap = 2'000'000;
};

enum class SearchStatus { Found, Exhausted, BudgetExhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::BudgetExhausted;
  /// Verified certificate when status == Found.
  std::optional<Decomposition> certificate;
  std::uint64_t nodes = 0;
};

/// Depth-first search for a partition of mK_n into copies of g.
///
/// Residual multiplicities are kept per pair. The first copy is the
/// template itself (any solution can be relabeled so). After that the search
/// always extends the pair of least positive residual, ties going to the
/// lexicographically smallest pair, and fills it with a non-decreasing run
/// of copies in lexicographic order of their permutation images, so each
/// multiset of copies is visited once. Exhausted is reported only after the
/// whole tree has been explored.
///
/// Throws InvalidArgument if m < 1, m > kMaxMultiplicity, g has no edges or
/// e does not divide m n(n-1)/2.
SearchOutcome exact_multicover_search(const SimpleGraph& g, int m, const SearchOptions& options = {});

}  // namespace gdecomp
