#include "gdecomp/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "gdecomp/error.hpp"

namespace gdecomp {
namespace {

class NodeCounter {
 public:
  NodeCounter(std::uint64_t budget, const char* what) : budget_(budget), what_(what) {}
  void tick() {
    if (++used_ > budget_)
      throw BudgetExceeded(std::string(what_) + ": node budget of " + std::to_string(budget_) +
                               " exhausted",
                           used_);
  }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t budget_;
  const char* what_;
};

// Splits colour classes by the multiset of neighbour colours until stable.
// Colours come back as ranks 0..k-1 whose order depends only on the
// isomorphism type of the coloured graph. Returns k.
int refine(const SimpleGraph& g, std::vector<int>& color) {
  const int n = g.order();
  std::vector<std::vector<int>> key(n);
  std::vector<int> order(n);
  int cells = -1;
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& k = key[v];
      k.clear();
      k.push_back(color[v]);
      for (int w : g.neighbors(v)) k.push_back(color[w]);
      std::sort(k.begin() + 1, k.end());
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return key[a] < key[b]; });
    int rank = -1;
    for (int i = 0; i < n; ++i) {
      if (i == 0 || key[order[i]] != key[order[i - 1]]) ++rank;
      color[order[i]] = rank;
    }
    if (rank + 1 == cells || rank + 1 == n) return rank + 1;
    cells = rank + 1;
  }
}

// Moves v ahead of the rest of its colour class.
void individualize(std::vector<int>& color, int v) {
  const int c = color[v];
  for (int x = 0; x < static_cast<int>(color.size()); ++x)
    if (color[x] > c || (color[x] == c && x != v)) ++color[x];
}

// Same for a vertex on each side of a doubled graph.
void individualize_pair(std::vector<int>& color, int v, int w) {
  const int c = color[v];
  for (int x = 0; x < static_cast<int>(color.size()); ++x)
    if (color[x] > c || (color[x] == c && x != v && x != w)) ++color[x];
}

bool balanced(const std::vector<int>& color, int n) {
  std::vector<int> diff(color.size() + 1, 0);
  for (int x = 0; x < n; ++x) ++diff[color[x]];
  for (int x = n; x < 2 * n; ++x) --diff[color[x]];
  return std::all_of(diff.begin(), diff.end(), [](int d) { return d == 0; });
}

// Searches for an isomorphism between the two halves of `doubled` (vertices
// 0..n-1 and n..2n-1) respecting the initial colouring.
std::optional<Permutation> match(const SimpleGraph& doubled, int n, std::vector<int> color,
                                 NodeCounter& nodes) {
  nodes.tick();
  const int cells = refine(doubled, color);
  if (!balanced(color, n)) return std::nullopt;
  if (cells == n) {
    std::vector<int> by_color(n);
    for (int w = n; w < 2 * n; ++w) by_color[color[w]] = w - n;
    Permutation phi(n);
    for (int v = 0; v < n; ++v) phi[v] = by_color[color[v]];
    for (int a = 0; a < n; ++a)
      for (int b : doubled.neighbors(a))
        if (!doubled.adjacent(phi[a] + n, phi[b] + n)) return std::nullopt;
    return phi;
  }
  std::vector<int> count(cells, 0);
  for (int v = 0; v < n; ++v) ++count[color[v]];
  int target = 0;
  while (count[target] < 2) ++target;
  int v = 0;
  while (color[v] != target) ++v;
  for (int w = n; w < 2 * n; ++w) {
    if (color[w] != target) continue;
    auto next = color;
    individualize_pair(next, v, w);
    if (auto phi = match(doubled, n, std::move(next), nodes)) return phi;
  }
  return std::nullopt;
}

// Tree walk shared by the canonical labeling and the automorphism count.
class IndividualizationTree {
 public:
  IndividualizationTree(const SimpleGraph& g, std::uint64_t budget, const char* what)
      : g_(g), n_(g.order()), doubled_(disjoint_union(g, g)), nodes_(budget, what) {}

  NodeCounter& nodes() { return nodes_; }

  // Smallest colour class with more than one vertex, ascending; empty when
  // the colouring is discrete.
  std::vector<int> target_cell(const std::vector<int>& color, int cells) const {
    std::vector<int> count(cells, 0);
    for (int v = 0; v < n_; ++v) ++count[color[v]];
    int target = 0;
    while (target < cells && count[target] < 2) ++target;
    std::vector<int> cell;
    if (target == cells) return cell;
    for (int v = 0; v < n_; ++v)
      if (color[v] == target) cell.push_back(v);
    return cell;
  }

  // Orbits on `cell` of the automorphisms preserving the refined colouring
  // (i.e. fixing every individualized vertex). Each orbit's first element is
  // its smallest vertex. With first_only, stops after the orbit of cell[0].
  std::vector<std::vector<int>> cell_orbits(const std::vector<int>& color,
                                            const std::vector<int>& cell, bool first_only) {
    std::vector<int> orbit_of(n_, -1);
    std::vector<Permutation> gens;
    std::vector<std::vector<int>> orbits;
    auto close = [&](int id) {
      for (std::size_t i = 0; i < orbits[id].size(); ++i) {
        for (const auto& s : gens) {
          const int y = s[orbits[id][i]];
          if (orbit_of[y] < 0) {
            orbit_of[y] = id;
            orbits[id].push_back(y);
          }
        }
      }
    };
    for (int r : cell) {
      if (orbit_of[r] >= 0) continue;
      const int id = static_cast<int>(orbits.size());
      orbits.push_back({r});
      orbit_of[r] = id;
      close(id);
      auto left = color;
      individualize(left, r);
      for (int w : cell) {
        if (orbit_of[w] >= 0) continue;
        auto right = color;
        individualize(right, w);
        std::vector<int> both(left);
        both.insert(both.end(), right.begin(), right.end());
        if (auto phi = match(doubled_, n_, std::move(both), nodes_)) {
          gens.push_back(std::move(*phi));
          close(id);
        }
      }
      std::sort(orbits[id].begin(), orbits[id].end());
      if (first_only) break;
    }
    return orbits;
  }

  void explore_canonical(std::vector<int> color) {
    nodes_.tick();
    const int cells = refine(g_, color);
    if (cells == n_) {
      std::vector<Edge> relabeled;
      relabeled.reserve(g_.size());
      for (const auto& e : g_.edges()) {
        auto a = color[e.u], b = color[e.v];
        relabeled.push_back({std::min(a, b), std::max(a, b)});
      }
      std::sort(relabeled.begin(), relabeled.end());
      if (!best_ || relabeled < *best_) {
        best_ = std::move(relabeled);
        best_labeling_ = color;
      }
      return;
    }
    const auto cell = target_cell(color, cells);
    for (const auto& orbit : cell_orbits(color, cell, false)) {
      auto next = color;
      individualize(next, orbit.front());
      explore_canonical(std::move(next));
    }
  }

  CanonicalForm canonical() {
    explore_canonical(std::vector<int>(n_, 0));
    return {SimpleGraph(n_, std::move(*best_)), std::move(best_labeling_)};
  }

  BigInt automorphism_order() {
    std::vector<int> color(n_, 0);
    BigInt order = 1;
    while (true) {
      nodes_.tick();
      const int cells = refine(g_, color);
      if (cells == n_) return order;
      const auto cell = target_cell(color, cells);
      const auto orbit = cell_orbits(color, cell, true).front();
      order *= static_cast<unsigned>(orbit.size());
      individualize(color, cell.front());
    }
  }

 private:
  const SimpleGraph& g_;
  int n_;
  SimpleGraph doubled_;
  NodeCounter nodes_;
  std::optional<std::vector<Edge>> best_;
  Permutation best_labeling_;
};

bool same_invariants(const SimpleGraph& g, const SimpleGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  auto dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  return dg == dh;
}

using Bits = std::vector<std::uint64_t>;

class MaxClique {
 public:
  MaxClique(const SimpleGraph& g, std::uint64_t budget)
      : n_(g.order()), words_((n_ + 63) / 64), adj_(n_, Bits(words_, 0)),
        nodes_(budget, "clique search") {
    for (const auto& e : g.edges()) {
      adj_[e.u][e.v >> 6] |= std::uint64_t{1} << (e.v & 63);
      adj_[e.v][e.u >> 6] |= std::uint64_t{1} << (e.u & 63);
    }
  }

  int solve() {
    Bits all(words_, 0);
    for (int v = 0; v < n_; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    expand(0, all);
    return best_;
  }

 private:
  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }
  static int lowest(const Bits& b) {
    for (std::size_t w = 0; w < b.size(); ++w)
      if (b[w]) return static_cast<int>(w * 64 + std::countr_zero(b[w]));
    return -1;
  }
  static void clear_bit(Bits& b, int v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  void expand(int size, Bits candidates) {
    nodes_.tick();
    if (empty(candidates)) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy colouring: colour classes are independent sets, so a clique
    // inside the candidates uses at most one vertex per class.
    std::vector<std::pair<int, int>> colored;
    Bits uncolored = candidates;
    int colors = 0;
    while (!empty(uncolored)) {
      ++colors;
      Bits q = uncolored;
      while (!empty(q)) {
        const int v = lowest(q);
        clear_bit(q, v);
        clear_bit(uncolored, v);
        for (std::size_t w = 0; w < q.size(); ++w) q[w] &= ~adj_[v][w];
        colored.emplace_back(v, colors);
      }
    }
    for (auto it = colored.rbegin(); it != colored.rend(); ++it) {
      const auto [v, c] = *it;
      if (size + c <= best_) return;
      Bits next(words_);
      for (std::size_t w = 0; w < next.size(); ++w) next[w] = candidates[w] & adj_[v][w];
      expand(size + 1, std::move(next));
      clear_bit(candidates, v);
    }
  }

  int n_;
  std::size_t words_;
  std::vector<Bits> adj_;
  NodeCounter nodes_;
  int best_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const SimpleGraph& g, std::uint64_t budget) {
  return IndividualizationTree(g, budget, "canonical labeling").canonical();
}

std::optional<Permutation> find_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                                            std::uint64_t budget) {
  if (!same_invariants(g, h)) return std::nullopt;
  NodeCounter nodes(budget, "isomorphism search");
  return match(disjoint_union(g, h), g.order(), std::vector<int>(2 * g.order(), 0), nodes);
}

bool is_isomorphic(const SimpleGraph& g, const SimpleGraph& h, std::uint64_t budget) {
  if (!same_invariants(g, h)) return false;
  return canonical_form(g, budget).graph == canonical_form(h, budget).graph;
}

BigInt automorphism_order(const SimpleGraph& g, std::uint64_t budget) {
  return IndividualizationTree(g, budget, "automorphism group").automorphism_order();
}

int clique_number(const SimpleGraph& g, std::uint64_t budget) {
  return MaxClique(g, budget).solve();
}

CliqueIndependence clique_and_independence(const SimpleGraph& g, std::uint64_t budget) {
  return {clique_number(g, budget), clique_number(complement(g), budget)};
}

std::vector<Embedding> enumerate_embeddings(const SimpleGraph& g, std::size_t cap) {
  const int n = g.order();
  std::vector<Permutation> gens;
  if (n >= 2) {
    auto swap01 = identity_permutation(n);
    std::swap(swap01[0], swap01[1]);
    gens.push_back(std::move(swap01));
    Permutation rotate(n);
    for (int i = 0; i < n; ++i) rotate[i] = (i + 1) % n;
    gens.push_back(std::move(rotate));
  }
  std::unordered_map<PairSet, std::size_t, PairSetHash> seen;
  std::vector<Permutation> reps{identity_permutation(n)};
  seen.emplace(image_pairs(g, reps.front()), 0);
  for (std::size_t head = 0; head < reps.size(); ++head) {
    for (const auto& s : gens) {
      auto q = compose(s, reps[head]);
      auto [it, fresh] = seen.emplace(image_pairs(g, q), reps.size());
      if (!fresh) continue;
      if (reps.size() >= cap)
        throw BudgetExceeded("more than " + std::to_string(cap) + " labeled copies", reps.size());
      reps.push_back(std::move(q));
    }
  }
  std::sort(reps.begin(), reps.end());
  std::vector<Embedding> out;
  out.reserve(reps.size());
  for (auto& p : reps) out.push_back({std::move(p)});
  return out;
}

}  // namespace gdecomp
