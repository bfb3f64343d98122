#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "gdecomp/arithmetic.hpp"
#include "gdecomp/builtin.hpp"
#include "gdecomp/error.hpp"
#include "gdecomp/search.hpp"
#include "oracle.hpp"

using namespace gdecomp;

namespace {

SimpleGraph named(const char* name) { return builtin_from_name(name); }

}  // namespace

TEST_CASE("m1 lower bound") {
  const auto tp = named("trianglependants");
  CHECK(m1_lower_bound(tp).m1 == 2);
  CHECK(m1_lower_bound(complement(tp)).m1 == 6);
  CHECK(m1_lower_bound(named("triangular:6")).m1 == 4);
  CHECK(m1_lower_bound(named("cycle:6")).m1 == 2);
  CHECK(m1_lower_bound(named("cycle:7")).m1 == 1);
  CHECK(m1_lower_bound(named("complete:5")).m1 == 1);

  const auto p = m1_lower_bound(named("petersen"));
  CHECK(p.n == 10);
  CHECK(p.e == 15);
  CHECK(p.d == 3);
  CHECK(p.edge_factor == 1);
  CHECK(p.degree_factor == 1);

  // Isolated vertices do not force d = 0.
  const auto cp = m1_lower_bound(named("cliqueplus:3,5"));
  CHECK(cp.d == 2);
  CHECK(cp.m1 == std::lcm(3 / std::gcd(3, 10), 2 / std::gcd(2, 4)));
}

TEST_CASE("m1 divides every multiplicity found by exhaustive search") {
  for (int n = 2; n <= 5; ++n)
    for (const auto& g : oracle::nonisomorphic_graphs(n)) {
      const auto m1 = m1_lower_bound(g).m1;
      for (int m = 1; m <= 2; ++m)
        if (oracle::is_member(g, m)) CHECK(m % m1 == 0);
    }
}

TEST_CASE("complement transfer") {
  CHECK(complement_transfer(named("petersen"), 1) == Rational(2));
  CHECK(complement_transfer(named("trianglependants"), 4) == Rational(6));
  CHECK(complement_transfer(named("trianglependants"), 1) == Rational(3, 2));
  CHECK_THROWS_AS(complement_transfer(named("complete:5"), 1), InvalidArgument);

  for (const char* name : {"petersen", "trianglependants", "cycle:6", "star:5", "lattice:3"}) {
    const auto g = named(name);
    const auto h = complement(g);
    for (int m = 1; m <= 12; ++m) {
      const auto t = complement_transfer(g, m);
      if (t.denominator() != 1) continue;
      CHECK(complement_transfer(h, t.numerator()) == Rational(m));
    }
  }
}

TEST_CASE("existence value") {
  for (int n = 2; n <= 12; ++n) CHECK(exist_member_value(builtin("complete", std::vector<int>{n})) == 1);
  CHECK(exist_member_value(named("petersen")) == 10080);
  CHECK(exist_member_value(named("petersen")) == 2 * 40320 * 15 / 120);
  CHECK(exist_member_value(named("cycle:5")) == 6);
  CHECK(exist_member_value(named("trianglependants")) == 2 * 24 * 6 / 6);
  CHECK(exist_member_value(named("shrikhande")) > 0);
}

TEST_CASE("two-transitive value") {
  CHECK(two_transitive_value(15, 10, 6) == 2);
  CHECK(two_transitive_value(6, 6, 10) == 4);
  CHECK(two_transitive_value(60, 15, 7) == 4);
  CHECK(two_transitive_value(105, 21, 2880) == 1440);
  CHECK_THROWS_AS(two_transitive_value(15, 10, 5), InvalidArgument);
}

TEST_CASE("stars") {
  CHECK(!star_membership(4, 1));
  CHECK(star_membership(4, 2));
  CHECK(star_membership(7, 6));
  CHECK(!star_membership(7, 3));
  CHECK(is_star(named("star:4")));
  CHECK(is_star(named("star:4").relabeled(std::vector<int>{3, 0, 1, 2})));
  CHECK(!is_star(named("star:2")));
  CHECK(!is_star(named("cycle:4")));
  CHECK(!is_star(named("cliqueplus:2,4")));
}

TEST_CASE("star membership agrees with exhaustive search") {
  for (int n = 3; n <= 6; ++n) {
    const auto s = builtin("star", std::vector<int>{n});
    for (int m = 1; m <= 4; ++m) {
      if (!required_copy_count(s, m)) continue;
      CAPTURE(n);
      CAPTURE(m);
      const auto r = exact_multicover_search(s, m, {.budget = 50'000'000});
      REQUIRE(r.status != SearchStatus::BudgetExhausted);
      CHECK((r.status == SearchStatus::Found) == star_membership(n, m));
    }
  }
}

TEST_CASE("self-embedding obstruction") {
  auto r = self_embedding_obstruction(named("triangular:5"));
  CHECK(r.verdict == EmbeddingVerdict::InfeasibleAtOne);
  CHECK(r.clique_number == 4);
  CHECK(r.independence_number == 2);
  for (int l = 4; l <= 9; ++l)
    CHECK(self_embedding_obstruction(builtin("triangular", std::vector<int>{l})).verdict ==
          EmbeddingVerdict::InfeasibleAtOne);
  CHECK(self_embedding_obstruction(named("cycle:5")).verdict == EmbeddingVerdict::Inconclusive);
  r = self_embedding_obstruction(named("star:4"));
  CHECK(r.verdict == EmbeddingVerdict::Inconclusive);
  CHECK(r.clique_number == 2);
  CHECK(r.independence_number == 3);
  CHECK(self_embedding_obstruction(named("complete:5")).verdict == EmbeddingVerdict::Inconclusive);
}

TEST_CASE("semigroup closure") {
  auto s = semigroup_closure(std::vector<long long>{2, 3}, 10);
  CHECK(s.m0 == 1);
  CHECK(s.exceptions_in_bound == std::vector<long long>{1});

  s = semigroup_closure(std::vector<long long>{6, 10}, 30);
  CHECK(s.m0 == 2);
  CHECK(s.exceptions_in_bound == std::vector<long long>{2, 4, 8, 14});

  s = semigroup_closure(std::vector<long long>{4}, 40);
  CHECK(s.m0 == 4);
  CHECK(s.exceptions_in_bound.empty());
  CHECK(s.closure.size() == 10);
}

TEST_CASE("semigroup closure against brute force") {
  const std::vector<std::vector<long long>> inputs{{3, 5}, {4, 6, 9}, {7}, {6, 10, 15}, {5, 8, 12}, {2}};
  for (const auto& members : inputs) {
    const long long bound = 60;
    const auto s = semigroup_closure(members, bound);
    CHECK(s.closure == oracle::closure(members, bound));
    long long g = 0;
    for (auto m : members) g = std::gcd(g, m);
    CHECK(s.m0 == g);
    std::vector<long long> missing;
    for (long long x = g; x <= bound; x += g)
      if (!std::binary_search(s.closure.begin(), s.closure.end(), x)) missing.push_back(x);
    CHECK(s.exceptions_in_bound == missing);
    for (auto a : s.closure) {
      CHECK(a % s.m0 == 0);
      for (auto b : s.closure)
        if (a + b <= bound) CHECK(std::binary_search(s.closure.begin(), s.closure.end(), a + b));
    }
  }
}

TEST_CASE("partition index") {
  CHECK(partition_index(4, 2) == 2);
  CHECK(partition_index(6, 6) == 1);
  CHECK(partition_index(2, 2) == 1);
  CHECK_THROWS_AS(partition_index(3, 2), InvalidArgument);
}
