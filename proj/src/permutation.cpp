#include "gdecomp/permutation.hpp"

#include <bit>
#include <deque>
#include <numeric>
#include <string>

#include "gdecomp/error.hpp"

namespace gdecomp {

bool is_permutation_of(std::span<const int> p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(std::span<const int> outer, std::span<const int> inner) {
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

Permutation inverse(std::span<const int> p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

void PermutationGens::validate() const {
  if (degree < 1) throw InvalidArgument("generator degree must be positive");
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (!is_permutation_of(generators[i], degree))
      throw InvalidArgument("generator " + std::to_string(i) + " is not a permutation of 0.." +
                            std::to_string(degree - 1));
}

bool is_two_transitive(const PermutationGens& gens) {
  const int n = gens.degree;
  if (n < 2) return true;
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::deque<std::pair<int, int>> queue{{0, 1}};
  seen[1] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (const auto& g : gens.generators) {
      const int x = g[a], y = g[b];
      auto& s = seen[static_cast<std::size_t>(x) * n + y];
      if (!s) {
        s = 1;
        ++reached;
        queue.emplace_back(x, y);
      }
    }
  }
  return reached == static_cast<std::size_t>(n) * (n - 1);
}

std::size_t PairSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t PairSetHash::operator()(const PairSet& s) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (auto w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

PairSet image_pairs(const SimpleGraph& g, std::span<const int> image) {
  const int n = g.order();
  PairSet s(pair_count(n));
  for (const auto& e : g.edges()) s.set(pair_index(n, image[e.u], image[e.v]));
  return s;
}

}  // namespace gdecomp
