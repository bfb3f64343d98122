#include "gdecomp/decomposition.hpp"

#include "gdecomp/error.hpp"
#include "gdecomp/isomorphism.hpp"

namespace gdecomp {

std::optional<std::size_t> required_copy_count(const SimpleGraph& g, long long m) {
  if (g.size() == 0 || m < 1) return std::nullopt;
  const auto total = static_cast<unsigned long long>(m) * pair_count(g.order());
  if (total % g.size() != 0) return std::nullopt;
  return static_cast<std::size_t>(total / g.size());
}

VerifyResult verify(const Decomposition& cert) {
  const auto& g = cert.templ;
  const int n = g.order();
  if (g.size() == 0) return {false, "template has no edges"};
  if (cert.multiplicity < 1 || cert.multiplicity > kMaxMultiplicity)
    return {false, "multiplicity " + std::to_string(cert.multiplicity) + " out of range"};
  const auto expected = required_copy_count(g, cert.multiplicity);
  if (!expected)
    return {false, "e = " + std::to_string(g.size()) + " does not divide m*n(n-1)/2"};
  if (cert.copies.size() != *expected)
    return {false, "expected " + std::to_string(*expected) + " copies, found " +
                       std::to_string(cert.copies.size())};

  std::vector<long long> cover(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t i = 0; i < cert.copies.size(); ++i) {
    const auto& p = cert.copies[i].image;
    if (!is_permutation_of(p, n))
      return {false, "copy " + std::to_string(i) + " is not a permutation of 0.." +
                         std::to_string(n - 1)};
    for (const auto& e : g.edges()) {
      const int a = std::min(p[e.u], p[e.v]);
      const int b = std::max(p[e.u], p[e.v]);
      ++cover[static_cast<std::size_t>(a) * n + b];
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto c = cover[static_cast<std::size_t>(a) * n + b];
      if (c != cert.multiplicity)
        return {false, "pair {" + std::to_string(a) + "," + std::to_string(b) + "} covered " +
                           std::to_string(c) + " times, expected " +
                           std::to_string(cert.multiplicity)};
    }
  return {true, {}};
}

Decomposition superimpose(const Decomposition& a, const Decomposition& b) {
  Decomposition out{a.templ, a.multiplicity + b.multiplicity, a.copies};
  if (out.multiplicity > kMaxMultiplicity)
    throw InvalidArgument("superimposed multiplicity exceeds " + std::to_string(kMaxMultiplicity));
  if (a.templ == b.templ) {
    out.copies.insert(out.copies.end(), b.copies.begin(), b.copies.end());
    return out;
  }
  // b's copy q sends b-vertex y to q[y]; with phi: a -> b, q o phi places a.
  const auto phi = find_isomorphism(a.templ, b.templ);
  if (!phi) throw InvalidArgument("cannot superimpose certificates on non-isomorphic templates");
  for (const auto& copy : b.copies) out.copies.push_back({compose(copy.image, *phi)});
  return out;
}

Decomposition complement_certificate(const Decomposition& cert) {
  if (cert.templ.is_complete())
    throw InvalidArgument("complement of a complete template has no edges");
  const auto l = static_cast<int>(cert.copies.size());
  return {complement(cert.templ), l - cert.multiplicity, cert.copies};
}

Decomposition trivial_complete_decomposition(const SimpleGraph& complete, int m) {
  if (!complete.is_complete()) throw InvalidArgument("template is not complete");
  return {complete, m,
          std::vector<Embedding>(static_cast<std::size_t>(m),
                                 Embedding{identity_permutation(complete.order())})};
}

}  // namespace gdecomp
