#include "gdecomp/builtin.hpp"

#include <charconv>
#include <string>

#include "gdecomp/error.hpp"

namespace gdecomp {
namespace {

void expect_params(std::string_view family, std::span<const int> params, std::size_t count) {
  if (params.size() != count)
    throw InvalidArgument(std::string(family) + " takes " + std::to_string(count) +
                          " parameter(s), got " + std::to_string(params.size()));
}

void expect_at_least(std::string_view what, int value, int minimum) {
  if (value < minimum)
    throw InvalidArgument(std::string(what) + " must be at least " + std::to_string(minimum));
}

std::vector<Edge> clique_edges(int first, int k) {
  std::vector<Edge> out;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) out.push_back({first + a, first + b});
  return out;
}

SimpleGraph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return SimpleGraph(10, std::move(e));
}

SimpleGraph triangular(int l) {
  std::vector<std::pair<int, int>> pts;
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) pts.emplace_back(a, b);
  const int n = static_cast<int>(pts.size());
  std::vector<Edge> e;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      auto [a, b] = pts[x];
      auto [c, d] = pts[y];
      if (a == c || a == d || b == c || b == d) e.push_back({x, y});
    }
  return SimpleGraph(n, std::move(e));
}

SimpleGraph lattice(int q) {
  std::vector<Edge> e;
  for (int x = 0; x < q * q; ++x)
    for (int y = x + 1; y < q * q; ++y)
      if (x / q == y / q || x % q == y % q) e.push_back({x, y});
  return SimpleGraph(q * q, std::move(e));
}

SimpleGraph shrikhande() {
  std::vector<Edge> e;
  const int shifts[3][2] = {{1, 0}, {0, 1}, {1, 1}};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (const auto& s : shifts) {
        const int x = 4 * a + b;
        const int y = 4 * ((a + s[0]) % 4) + (b + s[1]) % 4;
        e.push_back({x, y});
      }
  return SimpleGraph(16, std::move(e));
}

}  // namespace

SimpleGraph builtin(std::string_view family, std::span<const int> params) {
  if (family == "petersen") {
    expect_params(family, params, 0);
    return petersen();
  }
  if (family == "trianglependants") {
    expect_params(family, params, 0);
    return SimpleGraph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 5}, {2, 4}});
  }
  if (family == "shrikhande") {
    expect_params(family, params, 0);
    return shrikhande();
  }
  if (family == "cycle") {
    expect_params(family, params, 1);
    const int n = params[0];
    expect_at_least("cycle length", n, 3);
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return SimpleGraph(n, std::move(e));
  }
  if (family == "star") {
    expect_params(family, params, 1);
    const int n = params[0];
    expect_at_least("star order", n, 2);
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return SimpleGraph(n, std::move(e));
  }
  if (family == "complete") {
    expect_params(family, params, 1);
    expect_at_least("complete graph order", params[0], 2);
    return SimpleGraph(params[0], clique_edges(0, params[0]));
  }
  if (family == "triangular") {
    expect_params(family, params, 1);
    expect_at_least("triangular parameter", params[0], 3);
    return triangular(params[0]);
  }
  if (family == "lattice") {
    expect_params(family, params, 1);
    expect_at_least("lattice side", params[0], 2);
    return lattice(params[0]);
  }
  if (family == "cliques") {
    expect_params(family, params, 2);
    const int k = params[0], s = params[1];
    expect_at_least("clique size", k, 2);
    expect_at_least("clique count", s, 1);
    std::vector<Edge> e;
    for (int t = 0; t < s; ++t) {
      auto c = clique_edges(t * k, k);
      e.insert(e.end(), c.begin(), c.end());
    }
    return SimpleGraph(k * s, std::move(e));
  }
  if (family == "cliqueplus") {
    expect_params(family, params, 2);
    const int k = params[0], n = params[1];
    expect_at_least("clique size", k, 2);
    if (n < k) throw InvalidArgument("cliqueplus needs N >= K");
    return SimpleGraph(n, clique_edges(0, k));
  }
  throw InvalidArgument("unknown graph family '" + std::string(family) + "'");
}

SimpleGraph builtin_from_name(std::string_view name) {
  const auto colon = name.find(':');
  const auto family = name.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    auto rest = name.substr(colon + 1);
    while (true) {
      const auto comma = rest.find(',');
      const auto token = rest.substr(0, comma);
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty())
        throw InvalidArgument("bad parameter '" + std::string(token) + "' in '" +
                              std::string(name) + "'");
      params.push_back(value);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return builtin(family, params);
}

std::vector<std::string> builtin_families() {
  return {"petersen", "cycle", "star", "complete", "triangular", "lattice",
          "cliques", "cliqueplus", "trianglependants", "shrikhande"};
}

}  // namespace gdecomp
