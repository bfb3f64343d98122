#include "gdecomp/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>
#include <sstream>

#include "gdecomp/arithmetic.hpp"
#include "gdecomp/constructions.hpp"
#include "gdecomp/designs.hpp"
#include "gdecomp/error.hpp"
#include "gdecomp/formats.hpp"
#include "gdecomp/spectral.hpp"

namespace gdecomp {
namespace {

// Input trouble that is the caller's fault; reported with exit 64.
struct InputError : Error {
  using Error::Error;
};

std::string with_source(const std::string& source, const std::exception& e) {
  return source + ": " + e.what();
}

std::string load(const std::string& path) {
  try {
    return read_text_file(path);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

SimpleGraph load_graph(const std::string& arg) {
  try {
    if (std::filesystem::is_regular_file(arg)) return parse_graph(read_text_file(arg));
    return parse_graph(arg);
  } catch (const Error& e) {
    throw InputError(with_source(arg, e));
  }
}

template <class Parser>
auto load_with(const std::string& path, Parser parse) {
  const auto text = load(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw InputError(with_source(path, e));
  }
}

std::string join(const std::vector<long long>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

std::string show(const Rational& x) {
  return x.denominator() == 1 ? std::to_string(x.numerator())
                              : std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

int exit_for(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Member: return kExitOk;
    case MembershipStatus::NonMember: return kExitNo;
    case MembershipStatus::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

struct Globals {
  std::uint64_t budget = kDefaultSearchBudget;
  int bound = 8;
  int jobs = 1;
};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    if (const char* env = std::getenv("GDECOMP_BUDGET")) {
      try {
        g_.budget = std::stoull(env);
      } catch (const std::exception&) {
        err_ << "error: GDECOMP_BUDGET is not a number\n";
        return kExitUsage;
      }
    }
    CLI::App app{"Decompositions of mK_n into copies of a graph"};
    app.name("gdecomp");
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--budget", g_.budget, "search node budget (default 10^7, env GDECOMP_BUDGET)");
    app.add_option("--bound", g_.bound, "modulus scan bound (default 8)")->check(CLI::Range(1, kMaxMultiplicity));
    app.add_option("--jobs", g_.jobs, "worker threads for the search")->check(CLI::Range(1, 256));
    setup(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out_ << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    try {
      return action_();
    } catch (const InputError& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    } catch (const InvalidArgument& e) {
      err_ << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

 private:
  void on(CLI::App* cmd, std::function<int()> f) {
    cmd->callback([this, f] { action_ = f; });
  }

  MembershipOptions membership_options() const {
    MembershipOptions o;
    o.methods = methods_.empty() ? kAllMethods : (parse_methods(methods_) | kArithmetic);
    o.budget = g_.budget;
    o.jobs = g_.jobs;
    if (!gens_path_.empty()) o.generators = load_with(gens_path_, parse_generators);
    return o;
  }

  void emit(const std::string& text) {
    if (output_.empty()) {
      out_ << text;
    } else {
      write_text_file(output_, text);
      out_ << "wrote " << output_ << "\n";
    }
  }

  void setup(CLI::App& app) {
    auto* c = app.add_subcommand("m1", "divisibility bound m1 and its ingredients");
    c->add_option("graph", graph_, "graph file or builtin name")->required();
    on(c, [this] { return cmd_m1(); });

    c = app.add_subcommand("member", "decide whether m is in M(G)");
    c->add_option("graph", graph_, "graph file or builtin name")->required();
    c->add_option("-m,--multiplicity", m_, "multiplicity")->required()->check(CLI::Range(1, kMaxMultiplicity));
    c->add_option("--method", methods_, "comma list of arithmetic,spectral,search,cyclic,orbit");
    c->add_option("--gens", gens_path_, "generators file for the orbit method");
    c->add_option("-o,--output", output_, "certificate output path");
    on(c, [this] { return cmd_member(); });

    c = app.add_subcommand("verify", "check a certificate");
    c->add_option("certificate", input_, "certificate file")->required();
    on(c, [this] { return cmd_verify(); });

    c = app.add_subcommand("modulus", "scan m = 1..bound");
    c->add_option("graph", graph_, "graph file or builtin name")->required();
    c->add_option("--method", methods_, "comma list of methods");
    c->add_option("--gens", gens_path_, "generators file for the orbit method");
    on(c, [this] { return cmd_modulus(); });

    c = app.add_subcommand("spectral", "eigenspace obstruction for a regular template");
    c->add_option("graph", graph_, "graph file or builtin name")->required();
    c->add_option("-m,--multiplicity", m_, "multiplicity")->required()->check(CLI::Range(1, kMaxMultiplicity));
    on(c, [this] { return cmd_spectral(); });

    c = app.add_subcommand("walecki", "Hamiltonian cycle decomposition of K_n (odd n) or 2K_n (even n)");
    c->add_option("n", n_, "number of vertices")->required()->check(CLI::Range(3, 4096));
    c->add_option("-o,--output", output_, "certificate output path");
    on(c, [this] { return cmd_walecki(); });

    c = app.add_subcommand("cyclic", "cyclic development on Z_{n-1} plus a fixed point");
    c->add_option("graph", graph_, "graph file or builtin name")->required();
    c->add_option("-m,--multiplicity", m_, "multiplicity")->required()->check(CLI::Range(1, kMaxMultiplicity));
    c->add_option("--base", base_path_, "graph file with the base drawing (host labels, infinity = n-1)");
    c->add_flag("--count", count_, "count all bases up to rotation");
    c->add_option("-o,--output", output_, "certificate output path");
    on(c, [this] { return cmd_cyclic(); });

    c = app.add_subcommand("orbit", "orbit of G under a permutation group");
    c->add_option("graph", graph_, "graph file or builtin name")->required();
    auto* gens = c->add_option("--gens", gens_path_, "generators file");
    auto* psl = c->add_option("--psl2", p_, "PSL(2,p) on {0..p-1, inf = p}");
    auto* rot = c->add_flag("--rotation", rotation_, "rotation of Z_{n-1} fixing n-1");
    gens->excludes(psl)->excludes(rot);
    psl->excludes(rot);
    c->add_option("-o,--output", output_, "certificate output path");
    on(c, [this] { return cmd_orbit(); });

    auto* d = app.add_subcommand("design", "2-design checks and conversions");
    d->require_subcommand(1);
    c = d->add_subcommand("check", "necessary conditions for a 2-(v,k,lambda) design");
    c->add_option("v", v_)->required();
    c->add_option("k", k_)->required();
    c->add_option("lambda", lambda_)->required();
    on(c, [this] { return cmd_design_check(); });
    c = d->add_subcommand("verify", "check a design file");
    c->add_option("design", input_, "design file")->required();
    on(c, [this] { return cmd_design_verify(); });
    c = d->add_subcommand("from-cert", "design carried by a clique-template certificate");
    c->add_option("certificate", input_, "certificate file")->required();
    c->add_option("-o,--output", output_, "design output path");
    on(c, [this] { return cmd_design_from_cert(); });
    c = d->add_subcommand("to-cert", "certificate carried by a design");
    c->add_option("design", input_, "design file")->required();
    c->add_option("-o,--output", output_, "certificate output path");
    on(c, [this] { return cmd_design_to_cert(); });
    c = d->add_subcommand("affine", "the affine plane AG(2,q), q prime");
    c->add_option("q", q_)->required()->check(CLI::Range(2, 1000));
    c->add_option("-o,--output", output_, "design output path");
    on(c, [this] { return cmd_design_affine(); });
    c = d->add_subcommand("lattice", "copies of L_2(q) covering K_{q^2} from an affine plane");
    c->add_option("design", input_, "design file")->required();
    c->add_option("-o,--output", output_, "certificate output path");
    on(c, [this] { return cmd_design_lattice(); });

    c = app.add_subcommand("cliques", "partition E(G) into k-cliques");
    c->add_option("graph", graph_, "graph file or builtin name")->required();
    c->add_option("-k", k_, "clique size")->required();
    c->add_option("--lambda", lambda_, "also test the design condition for this multiplicity");
    on(c, [this] { return cmd_cliques(); });

    c = app.add_subcommand("complement", "complement a graph or a certificate");
    c->add_option("input", input_, "graph, builtin name or certificate")->required();
    c->add_option("-m,--multiplicity", m_, "print the transferred multiplicity instead");
    c->add_option("-o,--output", output_, "output path");
    on(c, [this] { return cmd_complement(); });

    c = app.add_subcommand("convert", "rewrite a graph, certificate, design or generators file canonically");
    c->add_option("input", input_, "input file or builtin name")->required();
    c->add_option("-o,--output", output_, "output path");
    on(c, [this] { return cmd_convert(); });
  }

  int cmd_m1() {
    const auto g = load_graph(graph_);
    const auto p = m1_lower_bound(g);
    out_ << "n = " << p.n << ", e = " << p.e << ", d = " << p.d << "\n"
         << "edge factor = " << p.edge_factor << ", degree factor = " << p.degree_factor << "\n"
         << "m1 = " << p.m1 << "\n";
    return kExitOk;
  }

  int cmd_member() {
    const auto g = load_graph(graph_);
    const auto v = decide_membership(g, m_, membership_options());
    out_ << "m = " << m_ << ": " << render_verdict(v) << "\n";
    if (v.certificate && !output_.empty()) {
      write_text_file(output_, format_certificate(*v.certificate));
      out_ << "wrote " << output_ << "\n";
    }
    return exit_for(v.status);
  }

  int cmd_verify() {
    const auto cert = load_with(input_, parse_certificate);
    if (const auto r = verify(cert); !r) {
      out_ << "fail: " << r.diagnostic << "\n";
      return kExitNo;
    }
    out_ << "ok: " << cert.copies.size() << " copies of a graph with n = " << cert.templ.order()
         << ", e = " << cert.templ.size() << " cover " << cert.multiplicity << "K_" << cert.templ.order()
         << "\n";
    return kExitOk;
  }

  int cmd_modulus() {
    const auto g = load_graph(graph_);
    out_ << render_modulus_report(compute_modulus(g, g_.bound, membership_options()));
    return kExitOk;
  }

  int cmd_spectral() {
    const auto g = load_graph(graph_);
    const auto p = m1_lower_bound(g);
    if (m_ % p.m1 != 0) {
      out_ << "NonMember (divisibility): m1 = " << p.m1 << " does not divide " << m_ << "\n";
      return kExitNo;
    }
    const auto r = schwenk_obstruction(g, m_);
    out_ << format_schwenk_report(r);
    return r.verdict == SpectralVerdict::Infeasible ? kExitNo : kExitOk;
  }

  int cmd_walecki() {
    const auto d = n_ % 2 ? walecki_odd(n_) : walecki_even(n_);
    if (!output_.empty()) {
      write_text_file(output_, format_certificate(d));
      out_ << "wrote " << output_ << "\n";
    }
    out_ << d.copies.size() << " Hamiltonian cycles cover " << d.multiplicity << "K_" << n_
         << " (verified)\n";
    if (output_.empty()) out_ << format_certificate(d);
    return kExitOk;
  }

  int cmd_cyclic() {
    const auto g = load_graph(graph_);
    const int inf = g.order() - 1;
    auto show_base = [&](const CyclicBase& b) {
      out_ << "base:";
      for (const auto& e : b.base_edges) {
        auto label = [&](int x) { return x == inf ? std::string("inf") : std::to_string(x); };
        out_ << " {" << label(e.u) << "," << label(e.v) << "}";
      }
      out_ << "\n";
    };
    auto finish = [&](const CyclicBase& b) {
      const auto d = develop(g, b);
      out_ << d.copies.size() << " copies cover " << d.multiplicity << "K_" << g.order() << " (verified)\n";
      if (!output_.empty()) {
        write_text_file(output_, format_certificate(d));
        out_ << "wrote " << output_ << "\n";
      }
      return kExitOk;
    };
    if (!base_path_.empty()) {
      const auto drawn = load_with(base_path_, [](const std::string& t) { return parse_graph(t); });
      if (drawn.order() != g.order()) throw InputError(base_path_ + ": vertex count differs from the template");
      const auto b = cyclic_base_from_edges(g, m_, std::vector<Edge>(drawn.edges().begin(), drawn.edges().end()));
      std::string why;
      if (!cyclic_base_valid(b, &why)) {
        out_ << "invalid base: " << why << "\n";
        return kExitNo;
      }
      show_base(b);
      return finish(b);
    }
    const auto r = cyclic_base_search(g, m_, g_.budget, count_);
    if (count_) out_ << "bases up to rotation: " << r.solutions << (r.status == BaseSearchStatus::BudgetExhausted ? " (budget exhausted, partial)" : "") << "\n";
    out_ << "nodes: " << r.nodes << "\n";
    if (r.status == BaseSearchStatus::BudgetExhausted && !r.base) {
      out_ << "Unknown: budget exhausted\n";
      return kExitUnknown;
    }
    if (!r.base) {
      out_ << "no cyclic base exists\n";
      return kExitNo;
    }
    show_base(*r.base);
    return finish(*r.base);
  }

  int cmd_orbit() {
    const auto g = load_graph(graph_);
    PermutationGens gens;
    if (!gens_path_.empty())
      gens = load_with(gens_path_, parse_generators);
    else if (p_ > 0)
      gens = psl2_generators(p_);
    else if (rotation_)
      gens = cyclic_fixing_generators(g.order());
    else
      throw InputError("orbit needs --gens, --psl2 or --rotation");
    try {
      const auto r = orbit_construction(g, gens);
      out_ << "orbit size " << r.cover.orbit.size() << ", every pair covered " << r.cover.multiplicity
           << " times (verified)\n";
      if (!output_.empty()) {
        write_text_file(output_, format_certificate(r.certificate));
        out_ << "wrote " << output_ << "\n";
      }
      return kExitOk;
    } catch (const BudgetExceeded& e) {
      out_ << "Unknown: " << e.what() << "\n";
      return kExitUnknown;
    } catch (const InvalidArgument& e) {
      out_ << "fail: " << e.what() << "\n";
      return kExitNo;
    }
  }

  int cmd_design_check() {
    const auto r = design_necessary(v_, k_, lambda_);
    out_ << "2-(" << v_ << "," << k_ << "," << lambda_ << "): r = " << show(r.params.r)
         << ", b = " << show(r.params.b) << "\n";
    if (r.pass) {
      out_ << "pass: necessary conditions hold\n";
      return kExitOk;
    }
    for (const auto& s : r.reasons) out_ << "fail: " << s << "\n";
    return kExitNo;
  }

  int cmd_design_verify() {
    const auto d = load_with(input_, parse_design);
    if (const auto r = verify_design(d); !r) {
      out_ << "fail: " << r.diagnostic << "\n";
      return kExitNo;
    }
    out_ << "ok: 2-(" << d.v << "," << d.k << "," << d.lambda << ") design with " << d.blocks.size()
         << " blocks";
    if (d.resolvable()) out_ << ", " << d.class_count() << " parallel classes";
    out_ << "\n";
    return kExitOk;
  }

  int cmd_design_from_cert() {
    const auto cert = load_with(input_, parse_certificate);
    emit(format_design(decomposition_to_design(cert)));
    return kExitOk;
  }

  int cmd_design_to_cert() {
    const auto d = load_with(input_, parse_design);
    emit(format_certificate(design_to_decomposition(d)));
    return kExitOk;
  }

  int cmd_design_affine() {
    emit(format_design(affine_plane(q_)));
    return kExitOk;
  }

  int cmd_design_lattice() {
    const auto d = load_with(input_, parse_design);
    emit(format_certificate(lattice_from_affine_plane(d)));
    return kExitOk;
  }

  int cmd_cliques() {
    const auto g = load_graph(graph_);
    const auto r = clique_partition(g, k_, g_.budget);
    if (r.status == CliqueSearchStatus::BudgetExhausted) {
      out_ << "Unknown: budget exhausted after " << r.nodes << " nodes\n";
      return kExitUnknown;
    }
    if (!r.partition) {
      out_ << "no partition into " << k_ << "-cliques\n";
      return kExitNo;
    }
    out_ << r.partition->cliques.size() << " cliques of size " << k_ << ":\n";
    for (const auto& c : r.partition->cliques) {
      for (std::size_t i = 0; i < c.size(); ++i) out_ << (i ? " " : "") << c[i];
      out_ << "\n";
    }
    if (lambda_ < 1) return kExitOk;
    const auto o = clique_obstruction(g, lambda_, *r.partition);
    if (o.pass) {
      out_ << "lambda = " << lambda_ << ": 2-(" << g.order() << "," << k_ << "," << lambda_
           << ") design conditions hold\n";
      return kExitOk;
    }
    out_ << "lambda = " << lambda_ << " is not in M(G):";
    for (const auto& s : o.reasons) out_ << " " << s << ";";
    out_ << "\n";
    return kExitNo;
  }

  int cmd_complement() {
    const bool is_cert = std::filesystem::is_regular_file(input_) &&
                         load(input_).rfind(std::string(kCertHeader), 0) == 0;
    if (is_cert) {
      const auto cert = load_with(input_, parse_certificate);
      if (const auto r = verify(cert); !r) throw InputError(input_ + ": certificate does not verify: " + r.diagnostic);
      emit(format_certificate(complement_certificate(cert)));
      return kExitOk;
    }
    const auto g = load_graph(input_);
    if (m_ > 0) {
      const auto t = complement_transfer(g, m_);
      out_ << "m = " << m_ << " transfers to " << show(t) << " for the complement";
      out_ << (t.denominator() == 1 ? "\n" : " (not an integer, so m is not in M(G))\n");
      return kExitOk;
    }
    emit(format_graph(complement(g)));
    return kExitOk;
  }

  int cmd_convert() {
    if (!std::filesystem::is_regular_file(input_)) {
      emit(format_graph(load_graph(input_)));
      return kExitOk;
    }
    const auto text = load(input_);
    auto starts = [&](std::string_view h) { return text.rfind(std::string(h), 0) == 0; };
    if (starts(kCertHeader))
      emit(format_certificate(load_with(input_, parse_certificate)));
    else if (starts(kDesignHeader))
      emit(format_design(load_with(input_, parse_design)));
    else if (starts(kGensHeader))
      emit(format_generators(load_with(input_, parse_generators)));
    else
      emit(format_graph(load_graph(input_)));
    return kExitOk;
  }

  std::ostream& out_;
  std::ostream& err_;
  Globals g_;
  std::function<int()> action_;
  std::string graph_, input_, output_, methods_, gens_path_, base_path_;
  int m_ = 0, n_ = 0, q_ = 0, p_ = 0;
  long long v_ = 0, k_ = 0, lambda_ = 0;
  bool count_ = false, rotation_ = false;
};

}  // namespace

std::string render_verdict(const MembershipVerdict& v) {
  std::string s = to_string(v.status);
  if (v.status == MembershipStatus::Member) s += " (" + v.method + ")";
  if (v.reason) s += std::string(" (") + to_string(*v.reason) + ")";
  return s + ": " + v.detail;
}

std::string render_modulus_report(const ModulusReport& r) {
  std::ostringstream out;
  char line[64];
  std::snprintf(line, sizeof line, "%5s  %-9s  %-10s  ", "m", "status", "method");
  out << line << "evidence\n";
  for (const auto& row : r.rows) {
    const auto& v = row.verdict;
    std::snprintf(line, sizeof line, "%5d  %-9s  %-10s  ", row.m, to_string(v.status), v.method.c_str());
    out << line << v.detail << "\n";
  }
  out << "m1 = " << r.profile.m1 << "\n";
  if (r.m0_estimate == 0) {
    out << "no members found within bound " << r.bound << "\n";
    return out.str();
  }
  out << "m0 estimate = " << r.m0_estimate
      << (r.m0_certified ? " (certified)" : " (upper estimate: m0 divides it)") << "\n";
  auto all = r.exceptions_proved;
  all.insert(all.end(), r.exceptions_unknown.begin(), r.exceptions_unknown.end());
  std::sort(all.begin(), all.end());
  out << "F within bound " << r.bound << ": " << join(all) << " (proved " << join(r.exceptions_proved)
      << ", undecided " << join(r.exceptions_unknown) << ")\n";
  out << "partition index = " << *r.partition_index << (r.m0_certified ? "" : " (estimate)") << "\n";
  return out.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return Runner(out, err).run(args);
  } catch (const BudgetExceeded& e) {
    out << "Unknown: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gdecomp
