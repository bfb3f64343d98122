#include "gdecomp/constructions.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_map>

#include "gdecomp/builtin.hpp"
#include "gdecomp/error.hpp"
#include "gdecomp/isomorphism.hpp"

namespace gdecomp {
namespace {

// 0, 1, -1, 2, -2, ... on Z_{2k}; consecutive differences are 1, 2, ..., 2k-1.
std::vector<int> zigzag(int k) {
  const int mod = 2 * k;
  std::vector<int> z{0};
  for (int t = 1; static_cast<int>(z.size()) < mod; ++t) {
    z.push_back(t % mod);
    if (static_cast<int>(z.size()) < mod) z.push_back((mod - t) % mod);
  }
  return z;
}

Decomposition checked(Decomposition d, const char* what) {
  if (auto v = verify(d); !v)
    throw Error(std::string("internal error: ") + what + " does not verify: " + v.diagnostic);
  return d;
}

int cyclic_distance(int a, int b, int mod) {
  const int d = std::abs(a - b) % mod;
  return std::min(d, mod - d);
}

// Number of base edges a distance class must hold, or -1 if unsatisfiable.
int required_count(int d, int n, int m) {
  const int mod = n - 1;
  if (mod % 2 == 0 && 2 * d == mod) return m % 2 == 0 ? m / 2 : -1;
  return m;
}

}  // namespace

Decomposition walecki_odd(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("walecki_odd needs odd n >= 3");
  const int k = (n - 1) / 2;
  const int hub = n - 1;
  const auto z = zigzag(k);
  Decomposition d{builtin("cycle", std::vector<int>{n}), 1, {}};
  for (int i = 0; i < k; ++i) {
    Permutation p{hub};
    for (int x : z) p.push_back((x + i) % (2 * k));
    d.copies.push_back({std::move(p)});
  }
  return checked(std::move(d), "odd Walecki construction");
}

Decomposition walecki_minus_matching(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("walecki_minus_matching needs even n >= 4");
  const int j = (n - 2) / 2;
  const int inf = n - 2, extra = n - 1;
  const auto z = zigzag(j);
  // Uses every pair except the matching below, each exactly once; checked
  // by the caller through the even construction.
  Decomposition d{builtin("cycle", std::vector<int>{n}), 1, {}};
  for (int i = 0; i < j; ++i) {
    Permutation p{inf};
    for (int t = 0; t < 2 * j; ++t) {
      if (t == j) p.push_back(extra);
      p.push_back((z[t] + i) % (2 * j));
    }
    d.copies.push_back({std::move(p)});
  }
  return d;
}

Decomposition walecki_even(int n) {
  if (n < 4 || n % 2 != 0) throw InvalidArgument("walecki_even needs even n >= 4");
  const int j = (n - 2) / 2;
  // M1 = {t, t+j} for t < j, plus {n-2, n-1}; H0 walks a0 b0 a1 b1 ...
  std::vector<int> a, b;
  for (int t = 0; t < j; ++t) {
    a.push_back(t);
    b.push_back(t + j);
  }
  a.push_back(n - 2);
  b.push_back(n - 1);
  const int edges = j + 1;
  // Rotation along H0 by one step: a_t -> b_t, b_t -> a_{t+1}; maps M1 onto M2.
  Permutation sigma(n);
  for (int t = 0; t < edges; ++t) {
    sigma[a[t]] = b[t];
    sigma[b[t]] = a[(t + 1) % edges];
  }
  const auto first = walecki_minus_matching(n);
  Decomposition d{first.templ, 2, first.copies};
  for (const auto& c : first.copies) d.copies.push_back({compose(sigma, c.image)});
  Permutation h0;
  for (int t = 0; t < edges; ++t) {
    h0.push_back(a[t]);
    h0.push_back(b[t]);
  }
  d.copies.push_back({std::move(h0)});
  return checked(std::move(d), "even Walecki construction");
}

CyclicBase make_cyclic_base(const SimpleGraph& g, int m, const Embedding& drawing) {
  const int n = g.order();
  if (n < 3) throw InvalidArgument("cyclic development needs n >= 3");
  if (!is_permutation_of(drawing.image, n)) throw InvalidArgument("drawing is not a permutation");
  CyclicBase base;
  base.n = n;
  base.multiplicity = m;
  base.drawing = drawing;
  const int inf = n - 1;
  for (int d = 1; d <= (n - 1) / 2; ++d) base.distance_counts[d] = 0;
  for (const auto& e : g.edges()) {
    const int x = drawing.image[e.u], y = drawing.image[e.v];
    base.base_edges.push_back({std::min(x, y), std::max(x, y)});
    if (x == inf || y == inf)
      ++base.infinity_degree;
    else
      ++base.distance_counts[cyclic_distance(x, y, n - 1)];
  }
  std::sort(base.base_edges.begin(), base.base_edges.end());
  return base;
}

bool cyclic_base_valid(const CyclicBase& base, std::string* why) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  if (base.infinity_degree != base.multiplicity)
    return fail("infinity has degree " + std::to_string(base.infinity_degree) + ", need " +
                std::to_string(base.multiplicity));
  for (const auto& [d, count] : base.distance_counts) {
    const int need = required_count(d, base.n, base.multiplicity);
    if (need < 0) return fail("distance class " + std::to_string(d) + " needs an even multiplicity");
    if (count != need)
      return fail("distance class " + std::to_string(d) + " has " + std::to_string(count) +
                  " edges, need " + std::to_string(need));
  }
  return true;
}

CyclicBase cyclic_base_from_edges(const SimpleGraph& g, int m, const std::vector<Edge>& edges) {
  const SimpleGraph drawn(g.order(), edges);
  const auto phi = find_isomorphism(g, drawn);
  if (!phi) throw InvalidArgument("base edges do not form a copy of the template");
  return make_cyclic_base(g, m, Embedding{*phi});
}

Decomposition develop(const SimpleGraph& g, const CyclicBase& base) {
  const int n = base.n;
  if (g.order() != n) throw InvalidArgument("base and template sizes differ");
  std::string why;
  if (!cyclic_base_valid(base, &why)) throw Error("invalid cyclic base: " + why);
  const int inf = n - 1;
  Decomposition d{g, base.multiplicity, {}};
  for (int i = 0; i < n - 1; ++i) {
    Permutation p(n);
    for (int v = 0; v < n; ++v) {
      const int x = base.drawing.image[v];
      p[v] = x == inf ? inf : (x + i) % (n - 1);
    }
    d.copies.push_back({std::move(p)});
  }
  if (auto v = verify(d); !v) throw Error("developed base does not verify: " + v.diagnostic);
  return d;
}

namespace {

class BaseSearch {
 public:
  BaseSearch(const SimpleGraph& g, int m, std::uint64_t budget, bool count_all)
      : g_(g), n_(g.order()), m_(m), budget_(budget), count_all_(count_all),
        pos_(n_, -1), used_(n_, 0), capacity_((n_ - 1) / 2 + 1, 0) {
    for (int d = 1; d <= (n_ - 1) / 2; ++d) capacity_[d] = required_count(d, n_, m_);
  }

  BaseSearchOutcome run() {
    BaseSearchOutcome out;
    // Any half-distance class demanding an impossible count kills the search.
    for (int d = 1; d < static_cast<int>(capacity_.size()); ++d)
      if (capacity_[d] < 0) {
        out.status = BaseSearchStatus::NotFound;
        return out;
      }
    std::vector<int> rest(n_);
    for (int v = 0; v < n_; ++v) rest[v] = v;
    std::stable_sort(rest.begin(), rest.end(),
                     [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
    try {
      for (int hub : rest) {
        if (g_.degree(hub) != m_) continue;
        order_ = {hub};
        for (int v : rest)
          if (v != hub) order_.push_back(v);
        pos_[hub] = n_ - 1;
        used_[n_ - 1] = 1;
        const bool stop = dfs(1);
        pos_[hub] = -1;
        used_[n_ - 1] = 0;
        if (stop) break;
      }
    } catch (const BudgetExceeded&) {
      out.status = BaseSearchStatus::BudgetExhausted;
    }
    out.nodes = nodes_;
    out.solutions = distinct_.size();
    if (first_) {
      out.base = *first_;
      if (out.status != BaseSearchStatus::BudgetExhausted || !count_all_)
        out.status = BaseSearchStatus::Found;
    } else if (out.status != BaseSearchStatus::BudgetExhausted) {
      out.status = BaseSearchStatus::NotFound;
    }
    return out;
  }

 private:
  // Returns true to stop the whole search.
  bool dfs(std::size_t idx) {
    if (idx == order_.size()) return record();
    const int v = order_[idx];
    const int mod = n_ - 1;
    for (int x = 0; x < mod; ++x) {
      if (idx == 1 && x != 0) break;
      if (used_[x]) continue;
      if (++nodes_ > budget_) throw BudgetExceeded("cyclic base search", nodes_);
      std::vector<int> taken;
      bool ok = true;
      for (int u : g_.neighbors(v)) {
        if (pos_[u] < 0 || pos_[u] == n_ - 1) continue;
        const int d = cyclic_distance(x, pos_[u], mod);
        if (capacity_[d] == 0) {
          ok = false;
          break;
        }
        --capacity_[d];
        taken.push_back(d);
      }
      if (ok) {
        pos_[v] = x;
        used_[x] = 1;
        const bool stop = dfs(idx + 1);
        pos_[v] = -1;
        used_[x] = 0;
        if (stop) return true;
      }
      for (int d : taken) ++capacity_[d];
    }
    return false;
  }

  bool record() {
    auto base = make_cyclic_base(g_, m_, Embedding{pos_});
    if (!cyclic_base_valid(base)) return false;
    if (!first_) first_ = base;
    if (!count_all_) return true;
    // Canonical representative of the rotation class of the edge set.
    std::vector<Edge> best;
    const int mod = n_ - 1;
    for (int i = 0; i < mod; ++i) {
      std::vector<Edge> rotated;
      for (const auto& e : base.base_edges) {
        auto shift = [&](int x) { return x == mod ? mod : (x + i) % mod; };
        const int a = shift(e.u), b = shift(e.v);
        rotated.push_back({std::min(a, b), std::max(a, b)});
      }
      std::sort(rotated.begin(), rotated.end());
      if (best.empty() || rotated < best) best = std::move(rotated);
    }
    distinct_.insert(std::move(best));
    return false;
  }

  const SimpleGraph& g_;
  int n_;
  int m_;
  std::uint64_t budget_;
  bool count_all_;
  std::uint64_t nodes_ = 0;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::vector<char> used_;
  std::vector<int> capacity_;
  std::optional<CyclicBase> first_;
  std::set<std::vector<Edge>> distinct_;
};

}  // namespace

BaseSearchOutcome cyclic_base_search(const SimpleGraph& g, int m, std::uint64_t budget,
                                     bool count_all) {
  require_template(g);
  if (m < 1) throw InvalidArgument("multiplicity must be positive");
  if (g.order() < 3) throw InvalidArgument("cyclic development needs n >= 3");
  if (2 * static_cast<long long>(g.size()) != static_cast<long long>(m) * g.order())
    throw InvalidArgument("cyclic development needs 2e = mn, but 2e = " +
                          std::to_string(2 * g.size()) + " and mn = " +
                          std::to_string(static_cast<long long>(m) * g.order()));
  return BaseSearch(g, m, budget, count_all).run();
}

OrbitResult orbit_construction(const SimpleGraph& g, const PermutationGens& gens, std::size_t cap) {
  require_template(g);
  gens.validate();
  const int n = g.order();
  if (gens.degree != n)
    throw InvalidArgument("generators act on " + std::to_string(gens.degree) +
                          " points but the template has " + std::to_string(n) + " vertices");
  std::unordered_map<PairSet, std::size_t, PairSetHash> seen;
  std::vector<Embedding> orbit{{identity_permutation(n)}};
  seen.emplace(image_pairs(g, orbit.front().image), 0);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& s : gens.generators) {
      auto q = compose(s, orbit[head].image);
      auto [it, fresh] = seen.emplace(image_pairs(g, q), orbit.size());
      if (!fresh) continue;
      if (orbit.size() >= cap)
        throw BudgetExceeded("orbit exceeds " + std::to_string(cap) + " copies", orbit.size());
      orbit.push_back({std::move(q)});
    }
  }
  std::vector<long long> cover(pair_count(n), 0);
  for (const auto& c : orbit)
    for (const auto& e : g.edges()) ++cover[pair_index(n, c.image[e.u], c.image[e.v])];
  for (std::size_t q = 1; q < cover.size(); ++q) {
    if (cover[q] != cover[0]) {
      const auto p0 = pair_at(n, 0), p1 = pair_at(n, q);
      throw InvalidArgument("orbit of size " + std::to_string(orbit.size()) +
                            " covers unevenly: pair {" + std::to_string(p0.u) + "," +
                            std::to_string(p0.v) + "} " + std::to_string(cover[0]) +
                            " times, pair {" + std::to_string(p1.u) + "," + std::to_string(p1.v) +
                            "} " + std::to_string(cover[q]) + " times");
    }
  }
  const int m = static_cast<int>(cover.empty() ? 0 : cover[0]);
  if (m > kMaxMultiplicity) throw InvalidArgument("orbit multiplicity too large");
  OrbitResult r{{gens, orbit, m}, {g, m, orbit}};
  r.certificate = checked(std::move(r.certificate), "orbit cover");
  return r;
}

PermutationGens psl2_generators(int p) {
  if (p < 2) throw InvalidArgument("PSL(2,p) needs a prime p");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidArgument("PSL(2,p) needs a prime p");
  auto inv = [p](int x) {
    for (int y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return 0;
  };
  const int inf = p;
  Permutation shift(p + 1), flip(p + 1);
  for (int x = 0; x < p; ++x) {
    shift[x] = (x + 1) % p;
    flip[x] = x == 0 ? inf : (p - inv(x)) % p;
  }
  shift[inf] = inf;
  flip[inf] = 0;
  return {p + 1, {shift, flip}};
}

PermutationGens cyclic_fixing_generators(int n) {
  if (n < 2) throw InvalidArgument("need n >= 2");
  Permutation r(n);
  for (int i = 0; i < n - 1; ++i) r[i] = (i + 1) % (n - 1);
  r[n - 1] = n - 1;
  return {n, {r}};
}

}  // namespace gdecomp
