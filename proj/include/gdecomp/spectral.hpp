#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdecomp/graph.hpp"

namespace gdecomp {

/// Residual bound on every computed eigenpair, relative to max(1, |A|).
inline constexpr double kEigenTolerance = 1e-10;
/// Sorted eigenvalues closer than this share a cluster.
inline constexpr double kClusterGap = 1e-6;
/// A forced value must be farther than this from every eigenvalue.
inline constexpr double kObstructionMargin = 1e-6;

struct EigenCluster {
  double value = 0;
  int multiplicity = 0;
  /// Set when the cluster rounds to an integer whose eigenspace, computed
  /// by exact elimination, has exactly this dimension.
  std::optional<long long> exact;
};

struct SpectrumSummary {
  /// Sorted by decreasing eigenvalue.
  std::vector<EigenCluster> clusters;
  double tolerance = kClusterGap;
  /// Every cluster is exact, so the spectrum is known without rounding.
  bool integral = false;
};

SpectrumSummary spectrum(const SimpleGraph& g);

/// Dimension of the kernel of A - theta I, by fraction-free elimination.
int exact_nullity(const SimpleGraph& g, long long theta);

enum class SpectralVerdict { Infeasible, Inconclusive };

struct SchwenkRow {
  double theta = 0;
  int f = 0;
  /// (n-1) - (t-1)(n-1-f): a lower bound on the dimension of the common
  /// theta-eigenspace of t-1 copies inside the all-ones complement.
  long long intersection_bound = 0;
  /// -m - (t-1) theta, the eigenvalue the last copy must then have.
  double forced = 0;
  bool forced_is_eigenvalue = true;
  /// theta, f and the eigenvalue test above are exact integer facts.
  bool exact = false;
  bool obstructs = false;
};

struct SchwenkReport {
  int n = 0;
  int k = 0;
  int m = 0;
  /// Copies in a hypothetical partition: m(n-1)/k.
  long long t = 0;
  std::vector<SchwenkRow> rows;
  SpectralVerdict verdict = SpectralVerdict::Inconclusive;
  /// Infeasible and witnessed by an exact row.
  bool certified = false;
};

/// If t-1 copies share an eigenvector x for theta orthogonal to the all-ones
/// vector, then, since the t adjacency matrices sum to m(J - I), the last
/// copy has A x = (-m - (t-1) theta) x. When that value is not an eigenvalue
/// of G no partition of mK_n exists.
///
/// Throws InvalidArgument unless g is k-regular (k >= 1) and connected and
/// m(n-1)/k is a positive integer.
SchwenkReport schwenk_obstruction(const SimpleGraph& g, int m);

/// Table with one line per eigenvalue other than k.
std::string format_schwenk_report(const SchwenkReport& r);

}  // namespace gdecomp
