#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gdecomp/graph.hpp"
#include "gdecomp/permutation.hpp"

namespace gdecomp {

/// Node limit shared by the refinement-and-individualization searches below.
/// Exceeding it throws BudgetExceeded.
inline constexpr std::uint64_t kDefaultIsoBudget = 50'000'000;

/// Canonical labeling: vertex v of the input goes to labeling[v], and
/// graph == input.relabeled(labeling). Two graphs are isomorphic iff their
/// canonical graphs are equal.
struct CanonicalForm {
  SimpleGraph graph;
  Permutation labeling;
};

CanonicalForm canonical_form(const SimpleGraph& g, std::uint64_t budget = kDefaultIsoBudget);

/// Some bijection phi with g.relabeled(phi) == h, if one exists.
std::optional<Permutation> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                            std::uint64_t budget = kDefaultIsoBudget);

bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h,
                   std::uint64_t budget = kDefaultIsoBudget);

/// |Aut(g)| as a product of stabilizer-chain orbit lengths.
BigInt automorphism_order(const SimpleGraph& g, std::uint64_t budget = kDefaultIsoBudget);

struct CliqueIndependence {
  int clique_number = 0;
  int independence_number = 0;
};

/// Exact clique and independence numbers by branch and bound.
CliqueIndependence clique_and_independence(const SimpleGraph& g,
                                           std::uint64_t budget = kDefaultIsoBudget);

int clique_number(const SimpleGraph& g, std::uint64_t budget = kDefaultIsoBudget);

/// One embedding per distinct labeled copy of g on its own vertex set, in
/// lexicographic order of the permutation images; exactly n!/|Aut(g)| of
/// them. Throws BudgetExceeded once more than `cap` copies are found.
std::vector<Embedding> enumerate_embeddings(const SimpleGraph& g, std::size_t cap = 2'000'000);

}  // namespace gdecomp
