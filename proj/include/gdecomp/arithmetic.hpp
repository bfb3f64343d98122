#pragma once

#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "gdecomp/graph.hpp"

namespace gdecomp {

using Rational = boost::rational<long long>;

/// Divisibility data of a template. Every m in M(G) is a multiple of m1.
struct ArithmeticProfile {
  long long n = 0;
  long long e = 0;
  /// gcd of the vertex degrees; isolated vertices contribute gcd(0, x) = x.
  long long d = 0;
  /// e / gcd(e, n(n-1)/2)
  long long edge_factor = 0;
  /// d / gcd(d, n-1)
  long long degree_factor = 0;
  long long m1 = 0;
};

ArithmeticProfile m1_lower_bound(const SimpleGraph& g);

/// m (n(n-1)/2 - e) / e, exactly. m lies in M(G) iff this value lies in
/// M(complement G); a fractional value therefore rules m out. Throws
/// InvalidArgument for complete templates.
Rational complement_transfer(const SimpleGraph& g, long long m);

/// 2 (n-2)! e / |Aut(G)|, which always lies in M(G).
BigInt exist_member_value(const SimpleGraph& g);

/// 2 r e / (n(n-1)) for a 2-transitive group in which G has r images.
/// Throws InvalidArgument when the value is not integral.
long long two_transitive_value(long long e, long long n, long long r);

/// M(K_{1,n-1}) = 2N for n > 2.
bool star_membership(int n, long long m);

/// True iff g is K_{1,n-1} with n > 2, up to labeling.
bool is_star(const SimpleGraph& g);

enum class EmbeddingVerdict { InfeasibleAtOne, Inconclusive };

struct SelfEmbeddingReport {
  EmbeddingVerdict verdict = EmbeddingVerdict::Inconclusive;
  int clique_number = 0;
  int independence_number = 0;
};

/// At m = 1 two copies are edge-disjoint, so G must embed in its
/// complement; omega(G) > alpha(G) forbids that.
SelfEmbeddingReport self_embedding_obstruction(const SimpleGraph& g);

/// Additive closure of a set of known members, restricted to [1, bound].
/// m0 and the exceptions are relative to the supplied members: an upper
/// approximation of the true modulus and a within-bound view of F.
struct SemigroupSummary {
  std::vector<long long> members_found;
  long long m0 = 0;
  std::vector<long long> closure;
  std::vector<long long> exceptions_in_bound;
  long long bound = 0;
};

SemigroupSummary semigroup_closure(std::span<const long long> members, long long bound);

/// m0 / m1; throws InvalidArgument unless m1 divides m0.
long long partition_index(long long m0, long long m1);

}  // namespace gdecomp
