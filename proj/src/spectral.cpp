#include "gdecomp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Dense>

#include "gdecomp/error.hpp"

namespace gdecomp {
namespace {

Eigen::MatrixXd adjacency(const SimpleGraph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) a(e.u, e.v) = a(e.v, e.u) = 1.0;
  return a;
}

std::string number(double x) {
  char buf[32];
  if (std::abs(x - std::round(x)) < kObstructionMargin)
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(x)));
  else
    std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

int exact_nullity(const SimpleGraph& g, long long theta) {
  const int n = g.order();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) {
    a[i][i] = -theta;
    for (int j : g.neighbors(i)) a[i][j] = 1;
  }
  // Bareiss elimination; every division is exact.
  BigInt prev = 1;
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = rank;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) continue;
    std::swap(a[pivot], a[rank]);
    for (int i = rank + 1; i < n; ++i) {
      for (int j = col + 1; j < n; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return n - rank;
}

SpectrumSummary spectrum(const SimpleGraph& g) {
  const int n = g.order();
  SpectrumSummary s;
  if (n == 0) return s;
  const auto a = adjacency(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const double scale = std::max(1.0, a.norm());
  for (int i = 0; i < n; ++i) {
    const double residual = (a * vectors.col(i) - values(i) * vectors.col(i)).norm();
    if (residual > kEigenTolerance * scale)
      throw Error("eigenpair residual " + std::to_string(residual) + " exceeds tolerance");
  }
  for (int i = n - 1; i >= 0; --i) {
    if (i < n - 1 && values(i + 1) - values(i) < kClusterGap) {
      auto& c = s.clusters.back();
      c.value = (c.value * c.multiplicity + values(i)) / (c.multiplicity + 1);
      ++c.multiplicity;
    } else {
      s.clusters.push_back({values(i), 1, std::nullopt});
    }
  }
  int certified = 0;
  for (auto& c : s.clusters) {
    const double r = std::round(c.value);
    if (std::abs(c.value - r) > kClusterGap) continue;
    const auto theta = static_cast<long long>(r);
    if (exact_nullity(g, theta) == c.multiplicity) {
      c.exact = theta;
      c.value = static_cast<double>(theta);
      certified += c.multiplicity;
    }
  }
  s.integral = certified == n;
  return s;
}

SchwenkReport schwenk_obstruction(const SimpleGraph& g, int m) {
  require_template(g);
  if (!g.is_regular()) throw InvalidArgument("spectral obstruction needs a regular template");
  if (!g.is_connected()) throw InvalidArgument("spectral obstruction needs a connected template");
  if (m < 1) throw InvalidArgument("multiplicity must be positive");
  SchwenkReport r;
  r.n = g.order();
  r.k = g.degree(0);
  r.m = m;
  const long long copies = static_cast<long long>(m) * (r.n - 1);
  if (copies % r.k != 0)
    throw InvalidArgument("t = m(n-1)/k = " + std::to_string(copies) + "/" + std::to_string(r.k) +
                          " is not an integer");
  r.t = copies / r.k;

  const auto spec = spectrum(g);
  // Connected and k-regular: the top cluster is k, simple, spanned by the
  // all-ones vector; the rest lives in its complement.
  for (std::size_t i = 1; i < spec.clusters.size(); ++i) {
    const auto& c = spec.clusters[i];
    SchwenkRow row;
    row.theta = c.exact ? static_cast<double>(*c.exact) : c.value;
    row.f = c.multiplicity;
    row.intersection_bound = (r.n - 1) - (r.t - 1) * (r.n - 1 - row.f);
    row.forced = -m - static_cast<double>(r.t - 1) * row.theta;
    if (spec.integral) {
      const long long forced = -m - (r.t - 1) * *c.exact;
      row.forced_is_eigenvalue = std::any_of(spec.clusters.begin(), spec.clusters.end(),
                                             [&](const EigenCluster& x) { return *x.exact == forced; });
      row.exact = true;
    } else {
      row.forced_is_eigenvalue =
          std::any_of(spec.clusters.begin(), spec.clusters.end(), [&](const EigenCluster& x) {
            return std::abs(x.value - row.forced) <= kObstructionMargin;
          });
    }
    row.obstructs = row.intersection_bound > 0 && !row.forced_is_eigenvalue;
    if (row.obstructs) {
      r.verdict = SpectralVerdict::Infeasible;
      r.certified = r.certified || row.exact;
    }
    r.rows.push_back(row);
  }
  return r;
}

std::string format_schwenk_report(const SchwenkReport& r) {
  std::string out = "n = " + std::to_string(r.n) + ", k = " + std::to_string(r.k) +
                    ", m = " + std::to_string(r.m) + ", t = " + std::to_string(r.t) + "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%12s %4s %8s %12s  %s\n", "theta", "f", "bound", "forced",
                "result");
  out += line;
  for (const auto& row : r.rows) {
    const char* result = row.intersection_bound <= 0 ? "no common eigenvector"
                         : row.forced_is_eigenvalue  ? "forced value is an eigenvalue"
                                                     : "obstruction";
    std::snprintf(line, sizeof line, "%12s %4d %8lld %12s  %s%s\n", number(row.theta).c_str(),
                  row.f, row.intersection_bound, number(row.forced).c_str(), result,
                  row.exact ? " (exact)" : "");
    out += line;
  }
  out += std::string("verdict: ") +
         (r.verdict == SpectralVerdict::Infeasible
              ? (r.certified ? "infeasible (certified)" : "infeasible")
              : "inconclusive") +
         "\n";
  return out;
}

}  // namespace gdecomp
