#include "gdecomp/designs.hpp"

#include <algorithm>
#include <sstream>

#include "gdecomp/builtin.hpp"
#include "gdecomp/error.hpp"
#include "text_reader.hpp"

namespace gdecomp {
namespace {

std::string show(const Rational& x) {
  return x.denominator() == 1 ? std::to_string(x.numerator())
                              : std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

// Vertex sets of the connected components with at least one edge.
std::vector<std::vector<int>> edge_components(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || g.degree(s) == 0) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (int w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

class CliqueSearch {
 public:
  CliqueSearch(const SimpleGraph& g, int k, std::uint64_t budget)
      : n_(g.order()), k_(k), budget_(budget), open_(static_cast<std::size_t>(n_) * n_, 0),
        remaining_(g.size()) {
    for (const auto& e : g.edges()) open_[idx(e.u, e.v)] = open_[idx(e.v, e.u)] = 1;
  }

  CliqueSearchOutcome run() {
    CliqueSearchOutcome out;
    try {
      if (dfs()) {
        out.status = CliqueSearchStatus::Found;
        out.partition = CliquePartition{k_, chosen_};
      }
    } catch (const BudgetExceeded&) {
      out.status = CliqueSearchStatus::BudgetExhausted;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + b; }
  bool open(int a, int b) const { return open_[idx(a, b)] != 0; }

  void toggle(const std::vector<int>& c, char value) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        open_[idx(c[i], c[j])] = open_[idx(c[j], c[i])] = value;
  }

  bool dfs() {
    if (remaining_ == 0) return true;
    int u = -1, v = -1;
    for (int a = 0; a < n_ && v < 0; ++a)
      for (int b = a + 1; b < n_; ++b)
        if (open(a, b)) {
          u = a;
          v = b;
          break;
        }
    std::vector<int> candidates;
    for (int w = 0; w < n_; ++w)
      if (w != u && w != v && open(u, w) && open(v, w)) candidates.push_back(w);
    std::vector<int> clique{u, v};
    return extend(clique, candidates, 0);
  }

  bool extend(std::vector<int>& clique, const std::vector<int>& cand, std::size_t from) {
    if (static_cast<int>(clique.size()) == k_) {
      if (++nodes_ > budget_) throw BudgetExceeded("clique partition search", nodes_);
      auto sorted = clique;
      std::sort(sorted.begin(), sorted.end());
      toggle(sorted, 0);
      remaining_ -= static_cast<std::size_t>(k_) * (k_ - 1) / 2;
      chosen_.push_back(sorted);
      if (dfs()) return true;
      chosen_.pop_back();
      remaining_ += static_cast<std::size_t>(k_) * (k_ - 1) / 2;
      toggle(sorted, 1);
      return false;
    }
    const std::size_t need = k_ - clique.size();
    for (std::size_t i = from; i + need <= cand.size(); ++i) {
      const int w = cand[i];
      bool ok = true;
      for (std::size_t j = 2; j < clique.size() && ok; ++j) ok = open(clique[j], w);
      if (!ok) continue;
      clique.push_back(w);
      const bool found = extend(clique, cand, i + 1);
      clique.pop_back();
      if (found) return true;
    }
    return false;
  }

  int n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<char> open_;
  std::size_t remaining_;
  std::vector<std::vector<int>> chosen_;
};

}  // namespace

NecessaryReport design_necessary(long long v, long long k, long long lambda) {
  if (!(v > k && k >= 2 && lambda >= 1))
    throw InvalidArgument("design parameters need v > k >= 2 and lambda >= 1");
  NecessaryReport rep;
  rep.params = {v, k, lambda, Rational(lambda * (v - 1), k - 1),
                Rational(lambda * v * (v - 1), k * (k - 1))};
  rep.r_integral = rep.params.r.denominator() == 1;
  rep.b_integral = rep.params.b.denominator() == 1;
  rep.fisher = rep.params.b >= Rational(v);
  if (!rep.r_integral) rep.reasons.push_back("r = " + show(rep.params.r) + " is not an integer");
  if (!rep.b_integral) rep.reasons.push_back("b = " + show(rep.params.b) + " is not an integer");
  if (!rep.fisher)
    rep.reasons.push_back("Fisher's inequality fails: b = " + show(rep.params.b) + " < v = " +
                          std::to_string(v));
  rep.pass = rep.reasons.empty();
  return rep;
}

bool clique_partition_valid(const SimpleGraph& g, const CliquePartition& p, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  const int n = g.order();
  if (p.k < 2) return fail("clique size must be at least 2");
  std::vector<int> cover(pair_count(n), 0);
  for (const auto& c : p.cliques) {
    if (static_cast<int>(c.size()) != p.k) return fail("clique of the wrong size");
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] < 0 || c[i] >= n) return fail("clique vertex out of range");
      if (i && c[i] <= c[i - 1]) return fail("clique vertices must be sorted and distinct");
    }
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (!g.adjacent(c[i], c[j]))
          return fail("{" + std::to_string(c[i]) + "," + std::to_string(c[j]) + "} is not an edge");
        ++cover[pair_index(n, c[i], c[j])];
      }
  }
  for (const auto& e : g.edges())
    if (cover[pair_index(n, e.u, e.v)] != 1)
      return fail("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} covered " +
                  std::to_string(cover[pair_index(n, e.u, e.v)]) + " times");
  return true;
}

CliqueSearchOutcome clique_partition(const SimpleGraph& g, int k, std::uint64_t budget) {
  require_template(g);
  if (k < 3) throw InvalidArgument("clique size must be at least 3");
  const auto per = static_cast<std::size_t>(k) * (k - 1) / 2;
  if (g.size() % per != 0)
    throw InvalidArgument("k(k-1)/2 = " + std::to_string(per) + " does not divide e = " +
                          std::to_string(g.size()));
  return CliqueSearch(g, k, budget).run();
}

NecessaryReport clique_obstruction(const SimpleGraph& g, long long lambda,
                                   const CliquePartition& partition) {
  std::string why;
  if (!clique_partition_valid(g, partition, &why)) throw InvalidArgument("invalid clique partition: " + why);
  if (partition.k >= g.order()) throw InvalidArgument("the template is a single spanning clique");
  return design_necessary(g.order(), partition.k, lambda);
}

VerifyResult verify_design(const Design& d) {
  auto fail = [](std::string msg) { return VerifyResult{false, std::move(msg)}; };
  if (d.k < 2 || d.v < d.k || d.lambda < 1) return fail("need v >= k >= 2 and lambda >= 1");
  const long long num = static_cast<long long>(d.lambda) * d.v * (d.v - 1);
  const long long den = static_cast<long long>(d.k) * (d.k - 1);
  if (num % den != 0 || static_cast<long long>(d.blocks.size()) != num / den)
    return fail("block count " + std::to_string(d.blocks.size()) + " does not match lambda v(v-1)/(k(k-1))");
  std::vector<int> cover(pair_count(d.v), 0);
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const auto& blk = d.blocks[b];
    if (static_cast<int>(blk.size()) != d.k) return fail("block " + std::to_string(b) + " has the wrong size");
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (blk[i] < 0 || blk[i] >= d.v) return fail("block " + std::to_string(b) + " has a point out of range");
      if (i && blk[i] <= blk[i - 1]) return fail("block " + std::to_string(b) + " is not sorted and distinct");
    }
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) ++cover[pair_index(d.v, blk[i], blk[j])];
  }
  for (std::size_t q = 0; q < cover.size(); ++q)
    if (cover[q] != d.lambda) {
      const auto p = pair_at(d.v, q);
      return fail("pair {" + std::to_string(p.u) + "," + std::to_string(p.v) + "} lies in " +
                  std::to_string(cover[q]) + " blocks, expected " + std::to_string(d.lambda));
    }
  if (d.resolvable()) {
    if (d.resolution.size() != d.blocks.size()) return fail("resolution does not cover every block");
    std::vector<int> seen(d.v, -1);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
      const int c = d.resolution[b];
      const int prev = b ? d.resolution[b - 1] : -1;
      if (c != prev && c != prev + 1) return fail("parallel classes must be numbered consecutively");
      for (int x : d.blocks[b]) {
        if (seen[x] == c) return fail("class " + std::to_string(c) + " repeats point " + std::to_string(x));
        seen[x] = c;
      }
    }
    for (int c = 0; c < d.class_count(); ++c)
      if (std::count(d.resolution.begin(), d.resolution.end(), c) * d.k != d.v)
        return fail("class " + std::to_string(c) + " does not partition the points");
  }
  return {true, {}};
}

CliqueTemplate classify_clique_template(const SimpleGraph& g, int* k) {
  const auto comps = edge_components(g);
  if (comps.empty()) return CliqueTemplate::None;
  const auto size = comps.front().size();
  std::size_t covered = 0;
  for (const auto& c : comps) {
    if (c.size() != size) return CliqueTemplate::None;
    for (int v : c)
      if (static_cast<std::size_t>(g.degree(v)) != size - 1) return CliqueTemplate::None;
    covered += c.size();
  }
  if (k) *k = static_cast<int>(size);
  if (covered == static_cast<std::size_t>(g.order())) return CliqueTemplate::SpanningCliques;
  return comps.size() == 1 ? CliqueTemplate::CliquePlusIsolated : CliqueTemplate::None;
}

Design decomposition_to_design(const Decomposition& cert) {
  if (auto v = verify(cert); !v) throw InvalidArgument("certificate does not verify: " + v.diagnostic);
  int k = 0;
  const auto form = classify_clique_template(cert.templ, &k);
  if (form == CliqueTemplate::None)
    throw InvalidArgument("template is neither one clique plus isolated vertices nor disjoint spanning cliques");
  const auto comps = edge_components(cert.templ);
  Design d{cert.templ.order(), k, cert.multiplicity, {}, {}};
  for (std::size_t c = 0; c < cert.copies.size(); ++c)
    for (const auto& comp : comps) {
      std::vector<int> blk;
      for (int v : comp) blk.push_back(cert.copies[c].image[v]);
      std::sort(blk.begin(), blk.end());
      d.blocks.push_back(std::move(blk));
      if (form == CliqueTemplate::SpanningCliques) d.resolution.push_back(static_cast<int>(c));
    }
  if (auto v = verify_design(d); !v) throw Error("internal error: derived design fails: " + v.diagnostic);
  return d;
}

Decomposition design_to_decomposition(const Design& d) {
  if (auto v = verify_design(d); !v) throw InvalidArgument("not a design: " + v.diagnostic);
  Decomposition out;
  out.multiplicity = d.lambda;
  if (d.resolvable()) {
    out.templ = builtin("cliques", std::vector<int>{d.k, d.v / d.k});
    for (int c = 0; c < d.class_count(); ++c) {
      Permutation p;
      for (std::size_t b = 0; b < d.blocks.size(); ++b)
        if (d.resolution[b] == c) p.insert(p.end(), d.blocks[b].begin(), d.blocks[b].end());
      out.copies.push_back({std::move(p)});
    }
  } else {
    out.templ = builtin("cliqueplus", std::vector<int>{d.k, d.v});
    for (const auto& blk : d.blocks) {
      Permutation p = blk;
      for (int x = 0; x < d.v; ++x)
        if (!std::binary_search(blk.begin(), blk.end(), x)) p.push_back(x);
      out.copies.push_back({std::move(p)});
    }
  }
  if (auto v = verify(out); !v) throw Error("internal error: design certificate fails: " + v.diagnostic);
  return out;
}

Design affine_plane(int q) {
  if (!is_prime(q)) throw InvalidArgument("affine planes are built for prime q only");
  Design d{q * q, q, 1, {}, {}};
  for (int a = 0; a < q; ++a)
    for (int c = 0; c < q; ++c) {
      std::vector<int> line;
      for (int x = 0; x < q; ++x) line.push_back(x * q + (a * x + c) % q);
      std::sort(line.begin(), line.end());
      d.blocks.push_back(std::move(line));
      d.resolution.push_back(a);
    }
  for (int c = 0; c < q; ++c) {
    std::vector<int> line;
    for (int y = 0; y < q; ++y) line.push_back(c * q + y);
    d.blocks.push_back(std::move(line));
    d.resolution.push_back(q);
  }
  return d;
}

Decomposition lattice_from_affine_plane(const Design& plane) {
  if (auto v = verify_design(plane); !v) throw InvalidArgument("not a design: " + v.diagnostic);
  const int q = plane.k;
  if (plane.lambda != 1 || plane.v != q * q || !plane.resolvable() || plane.class_count() != q + 1)
    throw InvalidArgument("input is not a resolvable 2-(q^2, q, 1) design with q+1 parallel classes");
  if (q % 2 == 0)
    throw InvalidArgument("q = " + std::to_string(q) + " is even: its " + std::to_string(q + 1) +
                          " parallel classes cannot be paired");
  // line_of[c][x]: index within class c of the line through x.
  std::vector<std::vector<int>> line_of(q + 1, std::vector<int>(plane.v, -1));
  std::vector<int> next(q + 1, 0);
  for (std::size_t b = 0; b < plane.blocks.size(); ++b) {
    const int c = plane.resolution[b];
    for (int x : plane.blocks[b]) line_of[c][x] = next[c];
    ++next[c];
  }
  Decomposition out{builtin("lattice", std::vector<int>{q}), 1, {}};
  for (int pair = 0; pair < (q + 1) / 2; ++pair) {
    const auto& a = line_of[2 * pair];
    const auto& b = line_of[2 * pair + 1];
    Permutation p(plane.v, -1);
    for (int x = 0; x < plane.v; ++x) p[a[x] * q + b[x]] = x;
    out.copies.push_back({std::move(p)});
  }
  if (auto v = verify(out); !v) throw Error("internal error: lattice cover fails: " + v.diagnostic);
  return out;
}

Design parse_design(std::string_view text) {
  detail::TextReader in(text);
  if (in.next("a header") != kDesignHeader)
    in.fail("expected header '" + std::string(kDesignHeader) + "'");
  const auto counts = in.integers(in.next("'<v> <k> <lambda> <b>'"), 4);
  const long long limit = 1 << 20;
  for (auto c : counts)
    if (c < 0 || c > limit) in.fail("design parameter out of range");
  Design d{static_cast<int>(counts[0]), static_cast<int>(counts[1]), static_cast<int>(counts[2]), {}, {}};
  if (d.k < 1 || d.k > d.v) in.fail("block size must lie in [1, v]");
  const auto b = static_cast<std::size_t>(counts[3]);
  int current = -1;
  bool classes = false;
  while (!in.done()) {
    const auto line = in.next("a block");
    if (line.substr(0, 5) == "class") {
      if (!d.blocks.empty() && !classes) in.fail("class marker after unclassified blocks");
      if (classes && (d.resolution.empty() || d.resolution.back() != current))
        in.fail("class " + std::to_string(current) + " has no blocks");
      const auto id = in.keyword(line, "class", 1)[0];
      if (id != current + 1) in.fail("expected class " + std::to_string(current + 1));
      current = static_cast<int>(id);
      classes = true;
      continue;
    }
    if (d.blocks.size() == b) in.fail("more than " + std::to_string(b) + " blocks");
    const auto pts = in.integers(line, static_cast<std::size_t>(d.k));
    std::vector<int> blk;
    for (auto x : pts) {
      if (x < 0 || x >= d.v) in.fail("point " + std::to_string(x) + " out of range");
      if (!blk.empty() && x <= blk.back()) in.fail("block points must be strictly increasing");
      blk.push_back(static_cast<int>(x));
    }
    d.blocks.push_back(std::move(blk));
    if (classes) d.resolution.push_back(current);
  }
  if (d.blocks.size() != b)
    throw ParseError(in.line_number() + 1, "expected " + std::to_string(b) + " blocks, found " +
                                               std::to_string(d.blocks.size()));
  if (classes && (d.resolution.empty() || d.resolution.back() != current))
    throw ParseError(in.line_number(), "class " + std::to_string(current) + " has no blocks");
  return d;
}

std::string format_design(const Design& d) {
  std::ostringstream out;
  out << kDesignHeader << '\n' << d.v << ' ' << d.k << ' ' << d.lambda << ' ' << d.blocks.size() << '\n';
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    if (d.resolvable() && (b == 0 || d.resolution[b] != d.resolution[b - 1]))
      out << "class " << d.resolution[b] << '\n';
    for (std::size_t i = 0; i < d.blocks[b].size(); ++i) out << (i ? " " : "") << d.blocks[b][i];
    out << '\n';
  }
  return out.str();
}

}  // namespace gdecomp
