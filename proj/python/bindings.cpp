#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gdecomp/arithmetic.hpp"
#include "gdecomp/builtin.hpp"
#include "gdecomp/cli.hpp"
#include "gdecomp/constructions.hpp"
#include "gdecomp/decomposition.hpp"
#include "gdecomp/designs.hpp"
#include "gdecomp/error.hpp"
#include "gdecomp/formats.hpp"
#include "gdecomp/isomorphism.hpp"
#include "gdecomp/membership.hpp"
#include "gdecomp/search.hpp"
#include "gdecomp/spectral.hpp"

namespace py = pybind11;
using namespace gdecomp;

namespace {

py::int_ to_py(const BigInt& x) {
  std::ostringstream s;
  s << x;
  return py::int_(py::str(s.str()));
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

std::vector<std::pair<int, int>> edge_pairs(const SimpleGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<Edge> to_edges(const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> out;
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}

std::vector<Permutation> images(const Decomposition& d) {
  std::vector<Permutation> out;
  for (const auto& c : d.copies) out.push_back(c.image);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Decompositions of mK_n into copies of a graph";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", error.ptr());

  py::class_<SimpleGraph>(m, "Graph")
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             return SimpleGraph(n, to_edges(edges));
           }),
           py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &SimpleGraph::order)
      .def_property_readonly("e", &SimpleGraph::size)
      .def_property_readonly("edges", &edge_pairs)
      .def("degree", &SimpleGraph::degree)
      .def("degrees", &SimpleGraph::degrees)
      .def("adjacent", &SimpleGraph::adjacent)
      .def("is_regular", &SimpleGraph::is_regular)
      .def("is_connected", &SimpleGraph::is_connected)
      .def("relabeled", [](const SimpleGraph& g, const std::vector<int>& image) {
        if (!is_permutation_of(image, g.order())) throw InvalidArgument("not a permutation");
        return g.relabeled(image);
      })
      .def(py::self == py::self)
      .def("__repr__", [](const SimpleGraph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", e=" + std::to_string(g.size()) + ")";
      });

  m.def("builtin", [](const std::string& name) { return builtin_from_name(name); }, py::arg("name"));
  m.def("builtin_families", &builtin_families);
  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); });
  m.def("format_graph", &format_graph);
  m.def("complement", &complement);
  m.def("automorphism_order", [](const SimpleGraph& g) { return to_py(automorphism_order(g)); });
  m.def("is_isomorphic", [](const SimpleGraph& a, const SimpleGraph& b) { return is_isomorphic(a, b); });
  m.def("find_isomorphism",
        [](const SimpleGraph& a, const SimpleGraph& b) { return find_isomorphism(a, b); });
  m.def("clique_and_independence", [](const SimpleGraph& g) {
    const auto r = clique_and_independence(g);
    return std::make_pair(r.clique_number, r.independence_number);
  });
  m.def("embedding_count", [](const SimpleGraph& g) { return enumerate_embeddings(g).size(); });

  py::class_<ArithmeticProfile>(m, "ArithmeticProfile")
      .def_readonly("n", &ArithmeticProfile::n)
      .def_readonly("e", &ArithmeticProfile::e)
      .def_readonly("d", &ArithmeticProfile::d)
      .def_readonly("edge_factor", &ArithmeticProfile::edge_factor)
      .def_readonly("degree_factor", &ArithmeticProfile::degree_factor)
      .def_readonly("m1", &ArithmeticProfile::m1);
  m.def("m1_lower_bound", &m1_lower_bound);
  m.def("complement_transfer",
        [](const SimpleGraph& g, long long k) { return fraction(complement_transfer(g, k)); });
  m.def("exist_member_value", [](const SimpleGraph& g) { return to_py(exist_member_value(g)); });
  m.def("two_transitive_value", &two_transitive_value, py::arg("e"), py::arg("n"), py::arg("r"));
  m.def("star_membership", &star_membership, py::arg("n"), py::arg("m"));
  m.def("self_embedding_infeasible", [](const SimpleGraph& g) {
    return self_embedding_obstruction(g).verdict == EmbeddingVerdict::InfeasibleAtOne;
  });
  m.def("semigroup_closure", [](const std::vector<long long>& members, long long bound) {
    const auto s = semigroup_closure(members, bound);
    py::dict d;
    d["m0"] = s.m0;
    d["closure"] = s.closure;
    d["exceptions"] = s.exceptions_in_bound;
    return d;
  });
  m.def("partition_index", &partition_index);

  py::class_<Decomposition>(m, "Decomposition")
      .def(py::init([](const SimpleGraph& g, int mult, const std::vector<Permutation>& copies) {
             Decomposition d{g, mult, {}};
             for (const auto& p : copies) d.copies.push_back({p});
             return d;
           }),
           py::arg("template"), py::arg("multiplicity"), py::arg("copies"))
      .def_readonly("template", &Decomposition::templ)
      .def_readonly("multiplicity", &Decomposition::multiplicity)
      .def_property_readonly("copies", &images)
      .def("__len__", [](const Decomposition& d) { return d.copies.size(); });
  m.def("verify", [](const Decomposition& d) {
    const auto r = verify(d);
    return std::make_pair(r.ok, r.diagnostic);
  });
  m.def("superimpose", &superimpose);
  m.def("complement_certificate", &complement_certificate);
  m.def("parse_certificate", [](const std::string& t) { return parse_certificate(t); });
  m.def("format_certificate", &format_certificate);

  m.def(
      "search",
      [](const SimpleGraph& g, int mult, std::uint64_t budget, int jobs) {
        SearchOptions o;
        o.budget = budget;
        o.jobs = jobs;
        const auto r = [&] {
          py::gil_scoped_release release;
          return exact_multicover_search(g, mult, o);
        }();
        const char* status = r.status == SearchStatus::Found       ? "found"
                             : r.status == SearchStatus::Exhausted ? "exhausted"
                                                                   : "budget";
        return py::make_tuple(status, r.certificate, r.nodes);
      },
      py::arg("graph"), py::arg("m"), py::arg("budget") = kDefaultSearchBudget, py::arg("jobs") = 1);

  py::class_<MembershipVerdict>(m, "MembershipVerdict")
      .def_property_readonly("status", [](const MembershipVerdict& v) { return to_string(v.status); })
      .def_readonly("method", &MembershipVerdict::method)
      .def_property_readonly("reason",
                             [](const MembershipVerdict& v) -> py::object {
                               if (!v.reason) return py::none();
                               return py::str(to_string(*v.reason));
                             })
      .def_readonly("detail", &MembershipVerdict::detail)
      .def_readonly("certificate", &MembershipVerdict::certificate)
      .def_readonly("nodes", &MembershipVerdict::nodes)
      .def("__repr__", &render_verdict);

  auto options = [](const std::string& methods, std::uint64_t budget) {
    MembershipOptions o;
    o.methods = parse_methods(methods) | kArithmetic;
    o.budget = budget;
    return o;
  };
  m.def(
      "decide_membership",
      [options](const SimpleGraph& g, int mult, std::uint64_t budget, const std::string& methods) {
        return decide_membership(g, mult, options(methods, budget));
      },
      py::arg("graph"), py::arg("m"), py::arg("budget") = kDefaultSearchBudget,
      py::arg("methods") = "all");

  py::class_<ModulusReport>(m, "ModulusReport")
      .def_property_readonly("m1", [](const ModulusReport& r) { return r.profile.m1; })
      .def_readonly("m0_estimate", &ModulusReport::m0_estimate)
      .def_readonly("m0_certified", &ModulusReport::m0_certified)
      .def_readonly("exceptions_proved", &ModulusReport::exceptions_proved)
      .def_readonly("exceptions_unknown", &ModulusReport::exceptions_unknown)
      .def_readonly("partition_index", &ModulusReport::partition_index)
      .def_property_readonly("statuses",
                             [](const ModulusReport& r) {
                               std::vector<std::string> out;
                               for (const auto& row : r.rows) out.push_back(to_string(row.verdict.status));
                               return out;
                             })
      .def("render", &render_modulus_report);
  m.def(
      "compute_modulus",
      [options](const SimpleGraph& g, int bound, std::uint64_t budget, const std::string& methods) {
        return compute_modulus(g, bound, options(methods, budget));
      },
      py::arg("graph"), py::arg("bound") = 8, py::arg("budget") = kDefaultSearchBudget,
      py::arg("methods") = "all");

  m.def("walecki_odd", &walecki_odd);
  m.def("walecki_even", &walecki_even);
  m.def(
      "cyclic_base",
      [](const SimpleGraph& g, int mult, std::uint64_t budget) -> py::object {
        const auto r = cyclic_base_search(g, mult, budget);
        if (!r.base) return py::none();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : r.base->base_edges) edges.emplace_back(e.u, e.v);
        return py::cast(edges);
      },
      py::arg("graph"), py::arg("m"), py::arg("budget") = 1'000'000);
  m.def("develop_base", [](const SimpleGraph& g, int mult, const std::vector<std::pair<int, int>>& edges) {
    return develop(g, cyclic_base_from_edges(g, mult, to_edges(edges)));
  });
  m.def("orbit_construction", [](const SimpleGraph& g, int degree, const std::vector<Permutation>& gens) {
    return orbit_construction(g, PermutationGens{degree, gens}).certificate;
  });
  m.def("psl2_generators", [](int p) { return psl2_generators(p).generators; });

  py::class_<SchwenkReport>(m, "SchwenkReport")
      .def_readonly("t", &SchwenkReport::t)
      .def_property_readonly("infeasible",
                             [](const SchwenkReport& r) { return r.verdict == SpectralVerdict::Infeasible; })
      .def_readonly("certified", &SchwenkReport::certified)
      .def_property_readonly("forced",
                             [](const SchwenkReport& r) {
                               std::vector<double> out;
                               for (const auto& row : r.rows)
                                 if (row.obstructs) out.push_back(row.forced);
                               return out;
                             })
      .def("render", &format_schwenk_report);
  m.def("spectrum", [](const SimpleGraph& g) {
    std::vector<std::pair<double, int>> out;
    for (const auto& c : spectrum(g).clusters) out.emplace_back(c.value, c.multiplicity);
    return out;
  });
  m.def("schwenk_obstruction", &schwenk_obstruction);

  m.def("design_necessary", [](long long v, long long k, long long lambda) {
    const auto r = design_necessary(v, k, lambda);
    return py::make_tuple(r.pass, r.reasons);
  });
  m.def("clique_partition", [](const SimpleGraph& g, int k, std::uint64_t budget) -> py::object {
    const auto r = clique_partition(g, k, budget);
    if (r.status == CliqueSearchStatus::BudgetExhausted) throw BudgetExceeded("clique search", r.nodes);
    if (!r.partition) return py::none();
    return py::cast(r.partition->cliques);
  }, py::arg("graph"), py::arg("k"), py::arg("budget") = kDefaultSearchBudget);

  py::class_<Design>(m, "Design")
      .def_readonly("v", &Design::v)
      .def_readonly("k", &Design::k)
      .def_readonly("lam", &Design::lambda)
      .def_readonly("blocks", &Design::blocks)
      .def_property_readonly("class_count", &Design::class_count);
  m.def("affine_plane", &affine_plane);
  m.def("lattice_from_affine_plane", &lattice_from_affine_plane);
  m.def("decomposition_to_design", &decomposition_to_design);
  m.def("verify_design", [](const Design& d) { return verify_design(d).ok; });
  m.def("format_design", &format_design);
  m.def("parse_design", [](const std::string& t) { return parse_design(t); });
}
