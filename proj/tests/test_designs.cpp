#include <doctest.h>

#include <algorithm>

#include "gdecomp/builtin.hpp"
#include "gdecomp/designs.hpp"
#include "gdecomp/error.hpp"
#include "gdecomp/isomorphism.hpp"
#include "gdecomp/search.hpp"

using namespace gdecomp;

namespace {

SimpleGraph triangular(int l) { return builtin("triangular", std::vector<int>{l}); }

Decomposition searched(const char* name, int m) {
  const auto r = exact_multicover_search(builtin_from_name(name), m);
  REQUIRE(r.status == SearchStatus::Found);
  return *r.certificate;
}

bool mentions(const NecessaryReport& r, const std::string& text) {
  return std::any_of(r.reasons.begin(), r.reasons.end(),
                     [&](const std::string& s) { return s.find(text) != std::string::npos; });
}

}  // namespace

TEST_CASE("necessary design conditions") {
  auto r = design_necessary(21, 6, 4);
  CHECK(r.pass);
  CHECK(r.params.b == Rational(56));
  CHECK(r.params.r == Rational(16));
  CHECK(r.reasons.empty());

  r = design_necessary(10, 4, 1);
  CHECK(!r.pass);
  CHECK(!r.b_integral);
  CHECK(r.params.b == Rational(15, 2));
  CHECK(mentions(r, "b = 15/2 is not an integer"));

  r = design_necessary(21, 6, 1);
  CHECK(!r.pass);
  CHECK(r.r_integral);
  CHECK(r.b_integral);
  CHECK(!r.fisher);
  CHECK(mentions(r, "b = 14 < v = 21"));

  CHECK(design_necessary(9, 3, 1).pass);
  CHECK(design_necessary(7, 3, 1).pass);
  CHECK_THROWS_AS(design_necessary(3, 3, 1), InvalidArgument);
  CHECK_THROWS_AS(design_necessary(5, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(design_necessary(5, 2, 0), InvalidArgument);
}

TEST_CASE("Fisher count for triangular graphs") {
  for (long long l = 4; l <= 12; ++l) {
    CAPTURE(l);
    const auto r = design_necessary(l * (l - 1) / 2, l - 1, 1);
    CHECK(!r.pass);
    // b = l(l+1)/4 whenever integral
    if (r.b_integral) CHECK(r.params.b == Rational(l * (l + 1) / 4));
    CHECK(r.params.b < Rational(l * (l - 1) / 2));
  }
}

TEST_CASE("clique partitions") {
  auto r = clique_partition(triangular(5), 4, 1'000'000);
  REQUIRE(r.status == CliqueSearchStatus::Found);
  CHECK(r.partition->cliques.size() == 5);
  CHECK(clique_partition_valid(triangular(5), *r.partition));

  r = clique_partition(builtin_from_name("lattice:3"), 3, 1'000'000);
  REQUIRE(r.status == CliqueSearchStatus::Found);
  CHECK(r.partition->cliques.size() == 6);

  CHECK(clique_partition(builtin_from_name("petersen"), 3, 1'000'000).status == CliqueSearchStatus::NotFound);
  CHECK_THROWS_AS(clique_partition(builtin_from_name("petersen"), 2, 1000), InvalidArgument);
  CHECK_THROWS_AS(clique_partition(builtin_from_name("petersen"), 4, 1000), InvalidArgument);

  CliquePartition bogus{3, {{0, 1, 2}}};
  std::string why;
  CHECK(!clique_partition_valid(builtin_from_name("lattice:3"), bogus, &why));
  CHECK(!why.empty());
}

TEST_CASE("clique obstruction on triangular graphs") {
  for (int l = 4; l <= 12; ++l) {
    CAPTURE(l);
    const auto g = triangular(l);
    const auto r = clique_partition(g, l - 1, 10'000'000);
    REQUIRE(r.status == CliqueSearchStatus::Found);
    CHECK(r.partition->cliques.size() == static_cast<std::size_t>(l));
    const auto rep = clique_obstruction(g, 1, *r.partition);
    CHECK(!rep.pass);
  }
  const auto t5 = triangular(5);
  const auto r5 = clique_obstruction(t5, 1, *clique_partition(t5, 4, 1000).partition);
  CHECK(!r5.b_integral);
  const auto t7 = triangular(7);
  const auto r7 = clique_obstruction(t7, 1, *clique_partition(t7, 6, 100000).partition);
  CHECK(r7.b_integral);
  CHECK(!r7.fisher);
}

TEST_CASE("clique obstruction passes on members") {
  const auto l3 = builtin_from_name("lattice:3");
  const auto p = *clique_partition(l3, 3, 1000).partition;
  CHECK(clique_obstruction(l3, 1, p).pass);
  // lambda = 4 for T(6) is a member, so no evidence may be reported.
  const auto t6 = triangular(6);
  CHECK(clique_obstruction(t6, 4, *clique_partition(t6, 5, 100000).partition).pass);
  CHECK_THROWS_AS(clique_obstruction(l3, 1, CliquePartition{3, {{0, 1, 2}}}), InvalidArgument);
}

TEST_CASE("template classification") {
  int k = 0;
  CHECK(classify_clique_template(builtin_from_name("cliques:3,3"), &k) == CliqueTemplate::SpanningCliques);
  CHECK(k == 3);
  CHECK(classify_clique_template(builtin_from_name("cliqueplus:4,7"), &k) == CliqueTemplate::CliquePlusIsolated);
  CHECK(k == 4);
  CHECK(classify_clique_template(builtin_from_name("complete:3")) == CliqueTemplate::SpanningCliques);
  CHECK(classify_clique_template(builtin_from_name("cycle:5")) == CliqueTemplate::None);
  CHECK(classify_clique_template(builtin_from_name("trianglependants")) == CliqueTemplate::None);
}

TEST_CASE("decompositions to designs") {
  const auto cert = searched("cliques:3,3", 1);
  const auto d = decomposition_to_design(cert);
  CHECK(d.v == 9);
  CHECK(d.k == 3);
  CHECK(d.lambda == 1);
  CHECK(d.blocks.size() == 12);
  CHECK(d.resolvable());
  CHECK(d.class_count() == 4);
  CHECK(verify_design(d));

  const auto back = design_to_decomposition(d);
  CHECK(is_isomorphic(back.templ, cert.templ));
  CHECK(verify(back));
  CHECK(parse_design(format_design(d)) == d);

  const auto k3 = decomposition_to_design(searched("cliqueplus:3,3", 1));
  CHECK(k3.blocks.size() == 1);
  CHECK(verify_design(k3));

  const auto one_factor = decomposition_to_design(searched("cliques:2,2", 1));
  CHECK(one_factor.resolvable());
  CHECK(one_factor.class_count() == 3);
  CHECK(one_factor.blocks.size() == 6);

  const auto fano = decomposition_to_design(searched("cliqueplus:3,7", 1));
  CHECK(!fano.resolvable());
  CHECK(fano.blocks.size() == 7);
  const auto fano_back = design_to_decomposition(fano);
  CHECK(fano_back.copies.size() == 7);
  CHECK(verify(fano_back));

  CHECK_THROWS_AS(decomposition_to_design(searched("cycle:5", 1)), InvalidArgument);
}

TEST_CASE("design verification") {
  Design d{4, 2, 1, {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}}, {0, 0, 1, 1, 2, 2}};
  CHECK(verify_design(d));
  auto dup = d;
  dup.blocks[1] = {0, 1};
  CHECK(!verify_design(dup));
  auto badclass = d;
  badclass.resolution = {0, 1, 1, 0, 2, 2};
  CHECK(!verify_design(badclass));
  auto range = d;
  range.blocks[0] = {0, 4};
  CHECK(!verify_design(range));
}

TEST_CASE("affine planes and lattice graphs") {
  for (int q : {2, 3, 5, 7}) {
    const auto plane = affine_plane(q);
    CHECK(plane.v == q * q);
    CHECK(plane.blocks.size() == static_cast<std::size_t>(q * (q + 1)));
    CHECK(plane.class_count() == q + 1);
    CHECK(verify_design(plane));
  }
  for (int q : {3, 5, 7}) {
    CAPTURE(q);
    const auto cert = lattice_from_affine_plane(affine_plane(q));
    CHECK(cert.multiplicity == 1);
    CHECK(cert.copies.size() == static_cast<std::size_t>((q + 1) / 2));
    CHECK(verify(cert));
    const auto lat = builtin("lattice", std::vector<int>{q});
    for (const auto& c : cert.copies) CHECK(is_isomorphic(lat, cert.templ.relabeled(c.image)));
  }
  CHECK_THROWS_AS(lattice_from_affine_plane(affine_plane(2)), InvalidArgument);
  CHECK_THROWS_AS(affine_plane(4), InvalidArgument);

  auto broken = affine_plane(3);
  broken.blocks[0].swap(broken.blocks[3]);
  CHECK_THROWS_AS(lattice_from_affine_plane(broken), InvalidArgument);
}

TEST_CASE("design files") {
  const auto d = affine_plane(3);
  const auto text = format_design(d);
  CHECK(text.starts_with("%gdecomp-design v1\n9 3 1 12\nclass 0\n"));
  CHECK(parse_design(text) == d);
  const std::string plain = "%gdecomp-design v1\n3 2 1 3\n0 1\n0 2\n1 2\n";
  const auto tri = parse_design(plain);
  CHECK(!tri.resolvable());
  CHECK(format_design(tri) == plain);
  CHECK_THROWS_AS(parse_design("%gdecomp-design v1\n3 2 1 3\n0 1\n0 2\n"), ParseError);
  CHECK_THROWS_AS(parse_design("%gdecomp-design v1\n3 2 1 1\n0 5\n"), ParseError);
}
