#include "gdecomp/membership.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "gdecomp/constructions.hpp"
#include "gdecomp/error.hpp"
#include "gdecomp/spectral.hpp"

namespace gdecomp {
namespace {

MembershipVerdict member(std::string method, Decomposition cert, std::string detail,
                         std::uint64_t nodes = 0) {
  if (auto v = verify(cert); !v)
    throw Error("internal error: " + method + " certificate does not verify: " + v.diagnostic);
  MembershipVerdict out;
  out.status = MembershipStatus::Member;
  out.method = std::move(method);
  out.detail = std::to_string(cert.copies.size()) + " copies" + (detail.empty() ? "" : ", " + detail);
  out.certificate = std::move(cert);
  out.nodes = nodes;
  return out;
}

MembershipVerdict non_member(std::string method, NonMemberReason reason, std::string detail,
                             std::uint64_t nodes = 0) {
  MembershipVerdict out;
  out.status = MembershipStatus::NonMember;
  out.method = std::move(method);
  out.reason = reason;
  out.detail = std::move(detail);
  out.nodes = nodes;
  return out;
}

// Stars centred at each vertex, m/2 times each.
Decomposition star_certificate(const SimpleGraph& g, int m) {
  const int n = g.order();
  int centre = 0;
  while (g.degree(centre) != n - 1) ++centre;
  Decomposition d{g, m, {}};
  for (int c = 0; c < n; ++c) {
    auto p = identity_permutation(n);
    std::swap(p[centre], p[c]);
    for (int i = 0; i < m / 2; ++i) d.copies.push_back({p});
  }
  return d;
}

Decomposition repeat(const Decomposition& base, int times) {
  Decomposition d = base;
  for (int i = 1; i < times; ++i) d = superimpose(d, base);
  return d;
}

}  // namespace

unsigned parse_methods(const std::string& list) {
  static const std::map<std::string, unsigned> names{{"arithmetic", kArithmetic},
                                                     {"spectral", kSpectral},
                                                     {"search", kSearch},
                                                     {"cyclic", kCyclic},
                                                     {"orbit", kOrbit},
                                                     {"all", kAllMethods}};
  unsigned out = 0;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto it = names.find(item);
    if (it == names.end()) throw InvalidArgument("unknown method '" + item + "'");
    out |= it->second;
  }
  if (out == 0) throw InvalidArgument("no methods given");
  return out;
}

const char* to_string(MembershipStatus s) {
  switch (s) {
    case MembershipStatus::Member: return "Member";
    case MembershipStatus::NonMember: return "NonMember";
    case MembershipStatus::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(NonMemberReason r) {
  switch (r) {
    case NonMemberReason::Divisibility: return "divisibility";
    case NonMemberReason::Star: return "star";
    case NonMemberReason::EmbeddingObstruction: return "embedding-obstruction";
    case NonMemberReason::Spectral: return "spectral";
    case NonMemberReason::ExhaustedSearch: return "exhausted-search";
  }
  return "?";
}

MembershipVerdict decide_membership(const SimpleGraph& g, int m, const MembershipOptions& options) {
  require_template(g);
  if (m < 1 || m > kMaxMultiplicity)
    throw InvalidArgument("multiplicity must lie in [1, " + std::to_string(kMaxMultiplicity) + "]");
  const int n = g.order();

  const auto profile = m1_lower_bound(g);
  if (m % profile.m1 != 0)
    return non_member("arithmetic", NonMemberReason::Divisibility,
                      "m1 = " + std::to_string(profile.m1) + " does not divide " + std::to_string(m));
  if (g.is_complete()) return member("complete", trivial_complete_decomposition(g, m), "");
  if (is_star(g)) {
    if (!star_membership(n, m))
      return non_member("star", NonMemberReason::Star, "stars need an even multiplicity");
    return member("star", star_certificate(g, m), "each centre carries " + std::to_string(m / 2));
  }
  if (m == 1) {
    const auto r = self_embedding_obstruction(g);
    if (r.verdict == EmbeddingVerdict::InfeasibleAtOne)
      return non_member("embedding", NonMemberReason::EmbeddingObstruction,
                        "clique number " + std::to_string(r.clique_number) +
                            " exceeds independence number " + std::to_string(r.independence_number));
  }

  std::uint64_t nodes = 0;
  std::vector<std::string> notes;
  if ((options.methods & kSpectral) && g.is_regular() && g.is_connected()) {
    const auto r = schwenk_obstruction(g, m);
    if (r.verdict == SpectralVerdict::Infeasible) {
      for (const auto& row : r.rows)
        if (row.obstructs) {
          std::ostringstream s;
          s << "theta = " << row.theta << ", f = " << row.f << ": forced eigenvalue " << row.forced
            << (row.exact ? " (certified)" : "");
          return non_member("spectral", NonMemberReason::Spectral, s.str());
        }
    }
    notes.push_back("spectral inconclusive");
  }
  if ((options.methods & kCyclic) && n >= 3 &&
      2 * static_cast<long long>(g.size()) == static_cast<long long>(m) * n) {
    const auto r = cyclic_base_search(g, m, options.budget);
    nodes += r.nodes;
    if (r.status == BaseSearchStatus::Found)
      return member("cyclic", develop(g, *r.base), "base found in " + std::to_string(r.nodes) + " nodes",
                    nodes);
    notes.push_back(r.status == BaseSearchStatus::NotFound ? "no cyclic base" : "cyclic budget exhausted");
  }
  if ((options.methods & kOrbit) && options.generators) {
    try {
      const auto r = orbit_construction(g, *options.generators);
      if (m % r.cover.multiplicity == 0)
        return member("orbit", repeat(r.certificate, m / r.cover.multiplicity),
                      "orbit of " + std::to_string(r.cover.orbit.size()) + " at m = " +
                          std::to_string(r.cover.multiplicity),
                      nodes);
      notes.push_back("orbit gives m = " + std::to_string(r.cover.multiplicity));
    } catch (const Error& e) {
      notes.push_back(std::string("orbit: ") + e.what());
    }
  }
  if (options.methods & kSearch) {
    try {
      SearchOptions so;
      so.budget = options.budget;
      so.jobs = options.jobs;
      const auto r = exact_multicover_search(g, m, so);
      nodes += r.nodes;
      if (r.status == SearchStatus::Found)
        return member("search", *r.certificate, std::to_string(r.nodes) + " nodes", nodes);
      if (r.status == SearchStatus::Exhausted)
        return non_member("search", NonMemberReason::ExhaustedSearch,
                          "search tree exhausted after " + std::to_string(r.nodes) + " nodes", nodes);
      notes.push_back("search budget exhausted after " + std::to_string(r.nodes) + " nodes");
    } catch (const BudgetExceeded& e) {
      notes.push_back(std::string("search: ") + e.what());
    }
  }
  MembershipVerdict out;
  out.nodes = nodes;
  for (std::size_t i = 0; i < notes.size(); ++i) out.detail += (i ? "; " : "") + notes[i];
  if (out.detail.empty()) out.detail = "no applicable method";
  return out;
}

ModulusReport compute_modulus(const SimpleGraph& g, int bound, const MembershipOptions& options) {
  require_template(g);
  if (bound < 1 || bound > kMaxMultiplicity) throw InvalidArgument("bound must lie in [1, 32768]");
  ModulusReport rep;
  rep.profile = m1_lower_bound(g);
  rep.bound = bound;
  std::map<int, const Decomposition*> found;
  rep.rows.reserve(bound);
  for (int m = 1; m <= bound; ++m) {
    std::optional<MembershipVerdict> v;
    for (const auto& [a, cert_a] : found) {
      if (2 * a > m) break;
      const auto b = found.find(m - a);
      if (b == found.end()) continue;
      v = member("closure", superimpose(*cert_a, *b->second),
                 std::to_string(a) + " + " + std::to_string(m - a));
      break;
    }
    if (!v) v = decide_membership(g, m, options);
    rep.rows.push_back({m, std::move(*v)});
    if (rep.rows.back().verdict.status == MembershipStatus::Member)
      found[m] = &*rep.rows.back().verdict.certificate;
  }

  std::vector<long long> members;
  for (const auto& [m, cert] : found) members.push_back(m);
  if (members.empty()) return rep;
  rep.semigroup = semigroup_closure(members, bound);
  rep.m0_estimate = rep.semigroup->m0;
  // The star rule settles every odd m at once, so 2 is exact there.
  rep.m0_certified = rep.m0_estimate == rep.profile.m1 || (is_star(g) && rep.m0_estimate == 2);
  rep.partition_index = partition_index(rep.m0_estimate, rep.profile.m1);
  for (const auto& row : rep.rows) {
    if (row.m % rep.m0_estimate != 0 || row.verdict.status == MembershipStatus::Member) continue;
    (row.verdict.status == MembershipStatus::NonMember ? rep.exceptions_proved : rep.exceptions_unknown)
        .push_back(row.m);
  }
  return rep;
}

}  // namespace gdecomp
