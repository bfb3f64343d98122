#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdecomp/graph.hpp"
#include "gdecomp/permutation.hpp"

namespace gdecomp {

/// Largest multiplicity the search and certificate code will handle.
inline constexpr int kMaxMultiplicity = 1 << 15;

/// Certificate that mK_n splits into the listed permutation images of the
/// template.
struct Decomposition {
  SimpleGraph templ;
  int multiplicity = 0;
  std::vector<Embedding> copies;

  bool operator==(const Decomposition&) const = default;
};

struct VerifyResult {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const noexcept { return ok; }
};

/// Number of copies a partition of mK_n into copies of g must use, if the
/// count is integral.
std::optional<std::size_t> required_copy_count(const SimpleGraph& g, long long m);

/// Recounts pair coverage from scratch: every pair must be covered exactly
/// `multiplicity` times and the copy count must match. On failure the
/// diagnostic names the first violated pair (or the malformed copy).
VerifyResult verify(const Decomposition& cert);

/// Concatenates two certificates on isomorphic templates into one at the
/// summed multiplicity; b's copies are re-expressed on a's template.
/// Throws InvalidArgument if the templates are not isomorphic.
Decomposition superimpose(const Decomposition& a, const Decomposition& b);

/// The same permutations applied to the complementary template, at
/// multiplicity |copies| - m. Throws InvalidArgument if the template is
/// complete.
Decomposition complement_certificate(const Decomposition& cert);

/// Puts mK_n together from m copies of the complete template.
Decomposition trivial_complete_decomposition(const SimpleGraph& complete, int m);

}  // namespace gdecomp
