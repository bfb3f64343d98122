#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gdecomp {

using BigInt = boost::multiprecision::cpp_int;

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Number of unordered pairs on n points.
constexpr std::size_t pair_count(int n) noexcept {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * (n - 1) / 2;
}

/// Index of the unordered pair {u, v} in lexicographic order of (min, max).
constexpr std::size_t pair_index(int n, int u, int v) noexcept {
  if (u > v) std::swap(u, v);
  const auto uu = static_cast<std::size_t>(u);
  return uu * n - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

Edge pair_at(int n, std::size_t index);

/// Labeled simple graph on vertices 0..n-1. Immutable after construction.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Validates and sorts the edge list. Throws InvalidArgument on loops,
  /// duplicate edges or out-of-range endpoints. Pairs may be given in
  /// either orientation.
  SimpleGraph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool adjacent(int u, int v) const noexcept {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  int degree(int v) const noexcept {
    return static_cast<int>(neighbors_[v].size());
  }
  std::span<const int> neighbors(int v) const noexcept { return neighbors_[v]; }

  std::vector<int> degrees() const;
  bool is_complete() const noexcept { return size() == pair_count(n_); }
  bool is_regular() const noexcept;
  bool is_connected() const;

  /// Image of the graph under vertex map i -> image[i].
  SimpleGraph relabeled(std::span<const int> image) const;

  bool operator==(const SimpleGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> neighbors_;
};

SimpleGraph complement(const SimpleGraph& g);

/// Disjoint union; vertices of b are shifted by a.order().
SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b);

/// Throws InvalidArgument unless g can serve as a decomposition template
/// (at least one edge).
void require_template(const SimpleGraph& g);

}  // namespace gdecomp
