#pragma once

#include <string>
#include <string_view>

#include "gdecomp/decomposition.hpp"
#include "gdecomp/graph.hpp"
#include "gdecomp/permutation.hpp"

namespace gdecomp {

// Text formats. All emitters are byte-deterministic and end every line with
// '\n'; all parsers throw ParseError carrying a 1-based line number.
//
// Graph file:
//   %gdecomp-graph v1
//   <n> <e>
//   <u> <v>          (e lines, 0 <= u < v < n, strictly increasing)
//
// Generators file:
//   %gdecomp-gens v1
//   <n> <g>
//   <n images>       (g lines)
//
// Certificate file:
//   %gdecomp-cert v1
//   graph <n> <e>
//   <u> <v>          (e lines, as in the graph file)
//   multiplicity <m>
//   copies <l>
//   <n images>       (l lines)
//   end

inline constexpr std::string_view kGraphHeader = "%gdecomp-graph v1";
inline constexpr std::string_view kGensHeader = "%gdecomp-gens v1";
inline constexpr std::string_view kCertHeader = "%gdecomp-cert v1";

struct GraphParseOptions {
  /// Accept e = 0; templates reject it.
  bool allow_empty = false;
};

/// Contents of a graph file, or a builtin name such as "cycle:5".
SimpleGraph parse_graph(std::string_view text, GraphParseOptions options = {});
std::string format_graph(const SimpleGraph& g);

PermutationGens parse_generators(std::string_view text);
std::string format_generators(const PermutationGens& gens);

/// Parses the structure only; run verify() to check coverage.
Decomposition parse_certificate(std::string_view text);
std::string format_certificate(const Decomposition& cert);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view contents);

}  // namespace gdecomp
