#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gdecomp/builtin.hpp"
#include "gdecomp/constructions.hpp"
#include "gdecomp/designs.hpp"
#include "gdecomp/formats.hpp"
#include "gdecomp/isomorphism.hpp"
#include "gdecomp/membership.hpp"
#include "gdecomp/spectral.hpp"
#include "oracle.hpp"

using namespace gdecomp;

namespace {

constexpr std::uint64_t kExhaustive = 2'000'000'000;

std::vector<SimpleGraph> small_templates() {
  std::vector<SimpleGraph> out;
  for (int n = 2; n <= 5; ++n)
    for (auto& g : oracle::nonisomorphic_graphs(n)) out.push_back(std::move(g));
  return out;
}

// Member certificates for every small template at m <= 3.
const std::vector<Decomposition>& small_certificates() {
  static const auto certs = [] {
    std::vector<Decomposition> out;
    for (const auto& g : small_templates())
      for (int m = 1; m <= 3; ++m) {
        const auto v = decide_membership(g, m, {.budget = kExhaustive});
        if (v.status == MembershipStatus::Member) out.push_back(*v.certificate);
      }
    return out;
  }();
  return certs;
}

Permutation shuffled(int n, std::mt19937& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("the small template corpus") {
  std::vector<std::size_t> counts(6, 0);
  for (const auto& g : small_templates()) ++counts[g.order()];
  CHECK(counts[2] == 1);
  CHECK(counts[3] == 3);
  CHECK(counts[4] == 10);
  CHECK(counts[5] == 33);
}

TEST_CASE("decide_membership agrees with the naive oracle") {
  int members = 0, non_members = 0;
  for (const auto& g : small_templates())
    for (int m = 1; m <= 3; ++m) {
      CAPTURE(format_graph(g));
      CAPTURE(m);
      const auto v = decide_membership(g, m, {.budget = kExhaustive});
      REQUIRE(v.status != MembershipStatus::Unknown);
      const bool expected = oracle::is_member(g, m);
      CHECK((v.status == MembershipStatus::Member) == expected);
      if (v.status == MembershipStatus::Member) {
        ++members;
        CHECK(verify(*v.certificate));
        CHECK(v.certificate->multiplicity == m);
      } else {
        ++non_members;
        if (v.reason == NonMemberReason::Divisibility) CHECK(m % m1_lower_bound(g).m1 != 0);
      }
    }
  CHECK(members + non_members == 47 * 3);
}

TEST_CASE("search alone agrees with the naive oracle") {
  for (const auto& g : small_templates())
    for (int m = 1; m <= 3; ++m) {
      if (!required_copy_count(g, m)) continue;
      CAPTURE(format_graph(g));
      CAPTURE(m);
      const auto r = exact_multicover_search(g, m, {.budget = kExhaustive});
      REQUIRE(r.status != SearchStatus::BudgetExhausted);
      CHECK((r.status == SearchStatus::Found) == oracle::is_member(g, m));
    }
}

TEST_CASE("superimposed certificates verify") {
  std::mt19937 rng(7);
  const auto& certs = small_certificates();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < certs.size(); ++i)
    for (std::size_t j = i; j < certs.size(); ++j) {
      const auto& a = certs[i];
      const auto& b = certs[j];
      if (a.templ.order() != b.templ.order() || !is_isomorphic(a.templ, b.templ)) continue;
      const auto s = superimpose(a, b);
      CHECK(s.multiplicity == a.multiplicity + b.multiplicity);
      CHECK(verify(s));

      // b moved onto a relabeled template.
      const auto sigma = shuffled(b.templ.order(), rng);
      Decomposition moved{b.templ.relabeled(sigma), b.multiplicity, {}};
      const auto inv = inverse(sigma);
      for (const auto& c : b.copies) moved.copies.push_back({compose(c.image, inv)});
      REQUIRE(verify(moved));
      CHECK(verify(superimpose(a, moved)));
      ++checked;
    }
  CHECK(checked > 40);

  const std::vector<Decomposition> larger{walecki_odd(7), walecki_even(8),
                                          lattice_from_affine_plane(affine_plane(5))};
  for (const auto& d : larger) CHECK(verify(superimpose(d, d)));
}

TEST_CASE("spectral verdicts never contradict a certificate") {
  std::vector<Decomposition> corpus = small_certificates();
  for (int n = 3; n <= 15; n += 2) corpus.push_back(walecki_odd(n));
  for (int n = 4; n <= 14; n += 2) corpus.push_back(walecki_even(n));
  for (int q : {3, 5, 7}) corpus.push_back(lattice_from_affine_plane(affine_plane(q)));
  const auto p = builtin_from_name("petersen");
  corpus.push_back(develop(p, *cyclic_base_search(p, 3, 1'000'000).base));
  corpus.push_back(orbit_construction(builtin_from_name("trianglependants"), psl2_generators(5)).certificate);
  for (int pr : {5, 7}) {
    corpus.push_back(orbit_construction(builtin("cycle", std::vector<int>{pr + 1}), psl2_generators(pr)).certificate);
  }
  const auto lat = builtin_from_name("lattice:3");
  corpus.push_back(develop(lat, *cyclic_base_search(lat, 4, 10'000'000).base));
  corpus.push_back(*exact_multicover_search(lat, 1).certificate);

  std::size_t regular = 0;
  for (const auto& d : corpus) {
    REQUIRE(verify(d));
    const auto& g = d.templ;
    if (!g.is_regular() || !g.is_connected() || g.degree(0) == 0) continue;
    if ((static_cast<long long>(d.multiplicity) * (g.order() - 1)) % g.degree(0) != 0) continue;
    CAPTURE(format_graph(g));
    CHECK(schwenk_obstruction(g, d.multiplicity).verdict == SpectralVerdict::Inconclusive);
    // The complement side of the same partition.
    if (!g.is_complete()) {
      const auto c = complement_certificate(d);
      const auto& h = c.templ;
      if (h.is_connected() && h.degree(0) > 0 && c.multiplicity > 0 &&
          (static_cast<long long>(c.multiplicity) * (h.order() - 1)) % h.degree(0) == 0)
        CHECK(schwenk_obstruction(h, c.multiplicity).verdict == SpectralVerdict::Inconclusive);
    }
    ++regular;
  }
  CHECK(regular > 20);
}

TEST_CASE("complement duality on small templates") {
  std::size_t checked = 0;
  for (const auto& d : small_certificates()) {
    if (d.templ.is_complete()) continue;
    const auto t = complement_transfer(d.templ, d.multiplicity);
    REQUIRE(t.denominator() == 1);
    const auto c = complement_certificate(d);
    CHECK(c.multiplicity == t.numerator());
    CHECK(verify(c));
    CHECK(complement_certificate(c) == d);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("clique obstruction never contradicts a certificate") {
  for (const auto& d : small_certificates()) {
    const auto& g = d.templ;
    for (int k = 3; k < g.order(); ++k) {
      if (g.size() % (k * (k - 1) / 2) != 0) continue;
      const auto r = clique_partition(g, k, 1'000'000);
      if (r.status != CliqueSearchStatus::Found) continue;
      CHECK(clique_obstruction(g, d.multiplicity, *r.partition).pass);
    }
  }
}
