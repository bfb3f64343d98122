#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gdecomp/graph.hpp"

namespace gdecomp {

using Permutation = std::vector<int>;

bool is_permutation_of(std::span<const int> p, int n);
Permutation identity_permutation(int n);
/// (outer o inner)(i) = outer[inner[i]].
Permutation compose(std::span<const int> outer, std::span<const int> inner);
Permutation inverse(std::span<const int> p);

/// Template vertex i is placed on host vertex image[i]. Template and host
/// share the vertex count, so every embedding is a full permutation.
struct Embedding {
  Permutation image;
  auto operator<=>(const Embedding&) const = default;
};

/// Generators of a permutation group of the given degree.
struct PermutationGens {
  int degree = 0;
  std::vector<Permutation> generators;

  /// Throws InvalidArgument if some generator is not a bijection on 0..degree-1.
  void validate() const;
};

/// True iff the generated group is transitive on ordered pairs of distinct
/// points.
bool is_two_transitive(const PermutationGens& gens);

/// Fixed-width bitset over the unordered pairs of an n-set.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1; }

  bool intersects(const PairSet& other) const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }
  std::size_t count() const noexcept;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  auto operator<=>(const PairSet&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct PairSetHash {
  std::size_t operator()(const PairSet& s) const noexcept;
};

/// Pair set covered by the image of g under the permutation.
PairSet image_pairs(const SimpleGraph& g, std::span<const int> image);

}  // namespace gdecomp
