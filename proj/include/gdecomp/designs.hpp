#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdecomp/arithmetic.hpp"
#include "gdecomp/decomposition.hpp"
#include "gdecomp/graph.hpp"

namespace gdecomp {

/// 2-(v, k, lambda) parameters with replication number r = lambda(v-1)/(k-1)
/// and block count b = lambda v(v-1)/(k(k-1)).
struct DesignParams {
  long long v = 0;
  long long k = 0;
  long long lambda = 0;
  Rational r;
  Rational b;
};

struct NecessaryReport {
  DesignParams params;
  bool r_integral = false;
  bool b_integral = false;
  /// b >= v.
  bool fisher = false;
  bool pass = false;
  /// One line per failed condition.
  std::vector<std::string> reasons;
};

/// Integrality of r and b, and Fisher's inequality. Passing does not imply
/// existence. Throws InvalidArgument unless v > k >= 2 and lambda >= 1.
NecessaryReport design_necessary(long long v, long long k, long long lambda);

struct CliquePartition {
  int k = 0;
  /// Sorted vertex sets.
  std::vector<std::vector<int>> cliques;
};

/// Checks that the k-cliques partition the edge set of g.
bool clique_partition_valid(const SimpleGraph& g, const CliquePartition& p,
                            std::string* why = nullptr);

enum class CliqueSearchStatus { Found, NotFound, BudgetExhausted };

struct CliqueSearchOutcome {
  CliqueSearchStatus status = CliqueSearchStatus::NotFound;
  std::optional<CliquePartition> partition;
  std::uint64_t nodes = 0;
};

/// Backtracking over k-cliques through the lexicographically first
/// uncovered edge. Throws InvalidArgument unless k >= 3 and k(k-1)/2
/// divides e.
CliqueSearchOutcome clique_partition(const SimpleGraph& g, int k, std::uint64_t budget);

/// If E(G) splits into k-cliques, a partition of lambda K_n into copies of
/// G yields a 2-(n, k, lambda) design, so a failed necessary condition
/// shows lambda is not in M(G). Throws InvalidArgument if the partition is
/// invalid or k = n.
NecessaryReport clique_obstruction(const SimpleGraph& g, long long lambda,
                                   const CliquePartition& partition);

/// Blocks over points 0..v-1. When `resolution` is non-empty it holds the
/// parallel class of each block; blocks of one class are contiguous.
struct Design {
  int v = 0;
  int k = 0;
  int lambda = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> resolution;

  bool resolvable() const { return !resolution.empty(); }
  int class_count() const { return resolution.empty() ? 0 : resolution.back() + 1; }
  bool operator==(const Design&) const = default;
};

/// Block sizes, point ranges, the pair count lambda for every pair, b, and
/// (when resolved) that every class partitions the points.
VerifyResult verify_design(const Design& d);

/// Template forms a design can be read from.
enum class CliqueTemplate { None, CliquePlusIsolated, SpanningCliques };

/// Recognizes one k-clique plus isolated vertices, or disjoint k-cliques
/// covering every vertex; k is written through `k` when non-null.
CliqueTemplate classify_clique_template(const SimpleGraph& g, int* k = nullptr);

/// Each copy's clique images become blocks. For spanning cliques each copy
/// is a parallel class. The certificate must verify.
Design decomposition_to_design(const Decomposition& cert);

/// The inverse: a resolvable design with classes spanning the points gives
/// copies of cliques:k,v/k (one per class); otherwise copies of
/// cliqueplus:k,v (one per block).
Decomposition design_to_decomposition(const Design& d);

/// AG(2, q) for prime q. Point (x, y) is x*q + y. Classes 0..q-1 hold the
/// lines y = ax + c of slope a, class q the verticals.
Design affine_plane(int q);

/// Pairs parallel classes (0,1), (2,3), ... of a resolvable 2-(q^2, q, 1)
/// design. For a pair (A, B) lattice vertex i*q+j goes to the point where
/// line i of A meets line j of B, so rows land on A and columns on B. Throws
/// InvalidArgument for even q or an input that is not such a design.
Decomposition lattice_from_affine_plane(const Design& plane);

// Design file:
//   %gdecomp-design v1
//   <v> <k> <lambda> <b>
//   class <i>        (optional, before the blocks of class i)
//   <k points>       (b lines, sorted)
inline constexpr std::string_view kDesignHeader = "%gdecomp-design v1";

Design parse_design(std::string_view text);
std::string format_design(const Design& d);

}  // namespace gdecomp
