#include "gdecomp/graph.hpp"

#include <algorithm>
#include <string>

#include "gdecomp/error.hpp"

namespace gdecomp {

Edge pair_at(int n, std::size_t index) {
  int u = 0;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + static_cast<int>(index)};
}

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw InvalidArgument("graph must have at least one vertex");
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n)
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                            "} has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw InvalidArgument("loop at vertex " + std::to_string(e.u));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InvalidArgument("duplicate edge {" + std::to_string(dup->u) + "," +
                          std::to_string(dup->v) + "}");
  edges_ = std::move(edges);
  adj_.assign(static_cast<std::size_t>(n) * n, 0);
  neighbors_.resize(n);
  for (const auto& e : edges_) {
    adj_[static_cast<std::size_t>(e.u) * n + e.v] = 1;
    adj_[static_cast<std::size_t>(e.v) * n + e.u] = 1;
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

bool SimpleGraph::is_regular() const noexcept {
  for (int v = 1; v < n_; ++v)
    if (degree(v) != degree(0)) return false;
  return true;
}

bool SimpleGraph::is_connected() const {
  std::vector<char> seen(n_, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : neighbors_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> image) const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({image[e.u], image[e.v]});
  return SimpleGraph(n_, std::move(out));
}

SimpleGraph complement(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<Edge> out;
  out.reserve(pair_count(n) - g.size());
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.push_back({u, v});
  return SimpleGraph(n, std::move(out));
}

SimpleGraph disjoint_union(const SimpleGraph& a, const SimpleGraph& b) {
  std::vector<Edge> out(a.edges().begin(), a.edges().end());
  const int shift = a.order();
  for (const auto& e : b.edges()) out.push_back({e.u + shift, e.v + shift});
  return SimpleGraph(a.order() + b.order(), std::move(out));
}

void require_template(const SimpleGraph& g) {
  if (g.size() == 0)
    throw InvalidArgument("a decomposition template needs at least one edge");
}

}  // namespace gdecomp
