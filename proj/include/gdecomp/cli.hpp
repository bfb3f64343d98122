#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gdecomp/membership.hpp"

namespace gdecomp {

inline constexpr int kExitOk = 0;
/// NonMember, Infeasible, failed verification or check.
inline constexpr int kExitNo = 1;
/// Unknown: a budget ran out.
inline constexpr int kExitUnknown = 2;
/// Bad command line or unreadable input.
inline constexpr int kExitUsage = 64;

/// Runs one command; args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One row per m (status, method, evidence) and a footer with m1, the m0
/// estimate, the exceptions found within the bound and the partition index.
std::string render_modulus_report(const ModulusReport& report);

/// "Member (search): 6 copies, 14009 nodes" and the like.
std::string render_verdict(const MembershipVerdict& v);

}  // namespace gdecomp
