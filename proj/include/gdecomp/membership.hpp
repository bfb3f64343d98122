#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gdecomp/arithmetic.hpp"
#include "gdecomp/decomposition.hpp"
#include "gdecomp/graph.hpp"
#include "gdecomp/permutation.hpp"
#include "gdecomp/search.hpp"

namespace gdecomp {

/// Bit flags for the deciding methods. The arithmetic tests (divisibility,
/// stars, complete templates, self-embedding at m = 1) always run.
enum Method : unsigned {
  kArithmetic = 1u << 0,
  kSpectral = 1u << 1,
  kSearch = 1u << 2,
  kCyclic = 1u << 3,
  kOrbit = 1u << 4,
  kAllMethods = kArithmetic | kSpectral | kSearch | kCyclic | kOrbit,
};

/// Parses a comma-separated list such as "cyclic,search". Throws
/// InvalidArgument on unknown names.
unsigned parse_methods(const std::string& list);

enum class MembershipStatus { Member, NonMember, Unknown };

enum class NonMemberReason { Divisibility, Star, EmbeddingObstruction, Spectral, ExhaustedSearch };

const char* to_string(MembershipStatus s);
const char* to_string(NonMemberReason r);

struct MembershipVerdict {
  MembershipStatus status = MembershipStatus::Unknown;
  /// What settled it: "arithmetic", "star", "complete", "embedding",
  /// "spectral", "cyclic", "orbit", "search", "closure", or "none".
  std::string method = "none";
  std::optional<NonMemberReason> reason;
  /// One-line human-readable evidence.
  std::string detail;
  /// Verified, for Member.
  std::optional<Decomposition> certificate;
  std::uint64_t nodes = 0;
};

struct MembershipOptions {
  unsigned methods = kAllMethods;
  std::uint64_t budget = kDefaultSearchBudget;
  int jobs = 1;
  /// Used by the orbit method; without it that method is skipped.
  std::optional<PermutationGens> generators;
};

/// Arithmetic, then (when enabled) spectral, cyclic, orbit and search.
/// Every Member verdict carries a certificate that has passed verify().
MembershipVerdict decide_membership(const SimpleGraph& g, int m, const MembershipOptions& options = {});

struct ModulusRow {
  int m = 0;
  MembershipVerdict verdict;
};

struct ModulusReport {
  ArithmeticProfile profile;
  int bound = 0;
  std::vector<ModulusRow> rows;
  /// Present when at least one member was found.
  std::optional<SemigroupSummary> semigroup;
  /// gcd of the members found (0 if none). The true m0 divides it.
  long long m0_estimate = 0;
  /// m0_estimate is proved exact: it equals m1 (which divides m0), or the
  /// template is a star and it equals 2.
  bool m0_certified = false;
  /// Multiples of m0_estimate in [1, bound] that are not members, split by
  /// whether non-membership was proved.
  std::vector<long long> exceptions_proved;
  std::vector<long long> exceptions_unknown;
  /// m0_estimate / m1; exact when m0_certified.
  std::optional<long long> partition_index;
};

/// Decides m = 1..bound. A sum a + b of two members found earlier is
/// settled by superimposing their certificates instead of searching.
ModulusReport compute_modulus(const SimpleGraph& g, int bound, const MembershipOptions& options = {});

}  // namespace gdecomp
