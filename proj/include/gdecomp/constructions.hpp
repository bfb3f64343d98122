#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gdecomp/decomposition.hpp"
#include "gdecomp/graph.hpp"
#include "gdecomp/permutation.hpp"

namespace gdecomp {

/// K_n (n odd, n >= 3) as (n-1)/2 Hamiltonian cycles of cycle:n: the
/// zig-zag 0, 1, -1, 2, -2, ... on Z_{n-1} closed through the hub n-1,
/// rotated (n-1)/2 times.
Decomposition walecki_odd(int n);

/// 2K_n (n even, n >= 4) as n-1 Hamiltonian cycles of cycle:n.
///
/// A seed cycle H0 splits into perfect matchings M1, M2. K_n - M1 comes from
/// the odd construction on n-1 points with the extra vertex spliced into the
/// distance-(n-2)/2 edge of every cycle, which leaves exactly M1 uncovered;
/// K_n - M2 is its image under the rotation of H0 taking M1 onto M2. H0
/// itself closes the cover.
Decomposition walecki_even(int n);

/// Hamiltonian cycles on n points (n >= 4 even) covering K_n minus the
/// perfect matching {x, x+(n-2)/2} (x < (n-2)/2) plus {n-2, n-1}.
Decomposition walecki_minus_matching(int n);

/// A drawing of G on Z_{n-1} together with a fixed point (host vertex n-1,
/// "infinity"), whose n-1 rotations cover mK_n.
///
/// Rotating a finite edge at distance d < (n-1)/2 covers each pair of that
/// distance once over a full turn, so each such class needs exactly m base
/// edges. When n-1 is even the class d = (n-1)/2 has only (n-1)/2 pairs and
/// each base edge covers them twice, so it needs m/2 edges. Edges at
/// infinity cover every {inf, x} once per edge, so inf needs degree m.
struct CyclicBase {
  int n = 0;
  int multiplicity = 0;
  /// Template vertex v is drawn on host vertex drawing.image[v].
  Embedding drawing;
  /// Base edges on host labels, sorted.
  std::vector<Edge> base_edges;
  /// Distance class (1 .. floor((n-1)/2)) -> number of base edges.
  std::map<int, int> distance_counts;
  int infinity_degree = 0;
};

/// Builds the base record for a drawing of g and reports whether it meets
/// the count conditions above; `why` receives the first violated one.
CyclicBase make_cyclic_base(const SimpleGraph& g, int m, const Embedding& drawing);
bool cyclic_base_valid(const CyclicBase& base, std::string* why = nullptr);

/// Wraps an explicit base edge list (host labels) as a drawing of g.
/// Throws InvalidArgument if the edges do not form a copy of g.
CyclicBase cyclic_base_from_edges(const SimpleGraph& g, int m, const std::vector<Edge>& edges);

enum class BaseSearchStatus { Found, NotFound, BudgetExhausted };

struct BaseSearchOutcome {
  BaseSearchStatus status = BaseSearchStatus::NotFound;
  std::optional<CyclicBase> base;
  std::uint64_t nodes = 0;
  /// With count_all: distinct base edge sets up to rotation.
  std::size_t solutions = 0;
};

/// Backtracking over drawings of g on Z_{n-1} + inf under the distance
/// class capacities. Vertices are placed in order of decreasing degree; the
/// first finite vertex goes to 0 (rotations are equivalent). Throws
/// InvalidArgument unless 2e = mn.
BaseSearchOutcome cyclic_base_search(const SimpleGraph& g, int m, std::uint64_t budget,
                                     bool count_all = false);

/// Copy i is the base rotated by i. Throws Error if the result does not
/// verify.
Decomposition develop(const SimpleGraph& g, const CyclicBase& base);

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

struct OrbitCover {
  PermutationGens group;
  std::vector<Embedding> orbit;
  int multiplicity = 0;
};

struct OrbitResult {
  OrbitCover cover;
  Decomposition certificate;
};

/// Orbit of the identity copy of g under the generated group. If every pair
/// is covered equally often (say m times) the orbit is an m-fold cover.
///
/// Throws InvalidArgument for a degree mismatch or non-uniform coverage
/// (naming two pairs with different counts), BudgetExceeded past `cap`.
OrbitResult orbit_construction(const SimpleGraph& g, const PermutationGens& gens,
                               std::size_t cap = kDefaultOrbitCap);

/// PSL(2,p) on the projective line {0..p-1, inf = p}: x -> x+1 and x -> -1/x.
PermutationGens psl2_generators(int p);

/// The rotation i -> i+1 on Z_{n-1}, fixing n-1.
PermutationGens cyclic_fixing_generators(int n);

}  // namespace gdecomp
