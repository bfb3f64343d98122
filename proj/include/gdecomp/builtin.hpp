#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gdecomp/graph.hpp"

namespace gdecomp {

/// Builtin graph families and their vertex labelings.
///
///   petersen            outer 5-cycle 0..4, spokes i--i+5, inner pentagram
///                       5+i -- 5+(i+2 mod 5)
///   cycle:N   (N >= 3)  i -- i+1 mod N
///   star:N    (N >= 2)  centre 0, leaves 1..N-1
///   complete:N (N >= 2)
///   triangular:L (L >= 3)  vertices are the 2-subsets {a<b} of 0..L-1 in
///                       lexicographic order; adjacent iff they meet
///   lattice:Q (Q >= 2)  vertex i*Q+j is cell (i,j); adjacent iff same row
///                       or same column
///   cliques:K,S         clique t on vertices t*K .. t*K+K-1, for t < S
///   cliqueplus:K,N      clique on 0..K-1 plus N-K isolated vertices
///   trianglependants    triangle 0,1,2 with pendant edges 0--3, 1--5, 2--4;
///                       with infinity = 5 its automorphism group lies inside
///                       PSL(2,5) acting on the projective line over Z_5
///   shrikhande          Cayley graph of Z_4 x Z_4, (a,b) -> 4a+b, connection
///                       set {+-(1,0), +-(0,1), +-(1,1)}
SimpleGraph builtin(std::string_view family, std::span<const int> params);

/// Parses "family" or "family:p1,p2" and builds it. Throws InvalidArgument
/// for unknown families or invalid parameters.
SimpleGraph builtin_from_name(std::string_view name);

/// Names accepted by builtin_from_name, without parameters.
std::vector<std::string> builtin_families();

}  // namespace gdecomp
