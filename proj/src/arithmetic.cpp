#include "gdecomp/arithmetic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gdecomp/error.hpp"
#include "gdecomp/isomorphism.hpp"

namespace gdecomp {

ArithmeticProfile m1_lower_bound(const SimpleGraph& g) {
  require_template(g);
  ArithmeticProfile p;
  p.n = g.order();
  p.e = static_cast<long long>(g.size());
  for (int v = 0; v < g.order(); ++v) p.d = std::gcd(p.d, static_cast<long long>(g.degree(v)));
  const auto pairs = static_cast<long long>(pair_count(g.order()));
  p.edge_factor = p.e / std::gcd(p.e, pairs);
  p.degree_factor = p.d / std::gcd(p.d, p.n - 1);
  p.m1 = std::lcm(p.edge_factor, p.degree_factor);
  return p;
}

Rational complement_transfer(const SimpleGraph& g, long long m) {
  require_template(g);
  if (m < 1) throw InvalidArgument("multiplicity must be positive");
  if (g.is_complete()) throw InvalidArgument("complement of a complete graph has no edges");
  const auto pairs = static_cast<long long>(pair_count(g.order()));
  const auto e = static_cast<long long>(g.size());
  return Rational(m * (pairs - e), e);
}

BigInt exist_member_value(const SimpleGraph& g) {
  require_template(g);
  BigInt numerator = 2 * static_cast<unsigned long long>(g.size());
  for (int i = 2; i <= g.order() - 2; ++i) numerator *= i;
  const BigInt aut = automorphism_order(g);
  if (numerator % aut != 0)
    throw Error("2(n-2)!e/|Aut(G)| is not integral; automorphism count is wrong");
  return numerator / aut;
}

long long two_transitive_value(long long e, long long n, long long r) {
  if (e < 1 || n < 2 || r < 1) throw InvalidArgument("e, r must be positive and n >= 2");
  const long long numerator = 2 * r * e;
  const long long denominator = n * (n - 1);
  if (numerator % denominator != 0)
    throw InvalidArgument("2re = " + std::to_string(numerator) + " is not divisible by n(n-1) = " +
                          std::to_string(denominator) + "; r is not a valid image count");
  return numerator / denominator;
}

bool star_membership(int n, long long m) {
  if (n <= 2) throw InvalidArgument("star membership needs n > 2");
  if (m < 1) throw InvalidArgument("multiplicity must be positive");
  return m % 2 == 0;
}

bool is_star(const SimpleGraph& g) {
  const int n = g.order();
  if (n <= 2 || g.size() != static_cast<std::size_t>(n - 1)) return false;
  int centres = 0;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1)
      ++centres;
    else if (g.degree(v) != 1)
      return false;
  }
  return centres == 1;
}

SelfEmbeddingReport self_embedding_obstruction(const SimpleGraph& g) {
  require_template(g);
  SelfEmbeddingReport r;
  if (g.is_complete()) return r;
  const auto ci = clique_and_independence(g);
  r.clique_number = ci.clique_number;
  r.independence_number = ci.independence_number;
  if (r.clique_number > r.independence_number) r.verdict = EmbeddingVerdict::InfeasibleAtOne;
  return r;
}

SemigroupSummary semigroup_closure(std::span<const long long> members, long long bound) {
  if (members.empty()) throw InvalidArgument("semigroup closure needs at least one member");
  SemigroupSummary s;
  s.members_found.assign(members.begin(), members.end());
  std::sort(s.members_found.begin(), s.members_found.end());
  s.members_found.erase(std::unique(s.members_found.begin(), s.members_found.end()),
                        s.members_found.end());
  if (s.members_found.front() < 1) throw InvalidArgument("members must be positive");
  if (bound < s.members_found.back())
    throw InvalidArgument("bound must be at least the largest member");
  s.bound = bound;
  for (auto m : s.members_found) s.m0 = std::gcd(s.m0, m);

  std::vector<char> reach(static_cast<std::size_t>(bound) + 1, 0);
  reach[0] = 1;
  for (long long x = 1; x <= bound; ++x)
    for (auto a : s.members_found) {
      if (a > x) break;
      if (reach[x - a]) {
        reach[x] = 1;
        break;
      }
    }
  for (long long x = 1; x <= bound; ++x) {
    if (reach[x])
      s.closure.push_back(x);
    else if (x % s.m0 == 0)
      s.exceptions_in_bound.push_back(x);
  }
  return s;
}

long long partition_index(long long m0, long long m1) {
  if (m0 < 1 || m1 < 1) throw InvalidArgument("m0 and m1 must be positive");
  if (m0 % m1 != 0)
    throw InvalidArgument("m1 = " + std::to_string(m1) + " does not divide m0 = " +
                          std::to_string(m0) + "; the report is inconsistent");
  return m0 / m1;
}

}  // namespace gdecomp
