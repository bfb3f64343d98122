#include "gdecomp/formats.hpp"

#include <fstream>
#include <sstream>

#include "gdecomp/builtin.hpp"
#include "gdecomp/error.hpp"
#include "text_reader.hpp"

namespace gdecomp {
namespace {

using detail::TextReader;

int checked_int(const TextReader& in, long long value, long long lo, long long hi,
                const char* what) {
  if (value < lo || value > hi)
    in.fail(std::string(what) + " " + std::to_string(value) + " out of range [" +
            std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return static_cast<int>(value);
}

// Reads "<n> <e>"-style counts already split, then e edge lines.
SimpleGraph read_edges(TextReader& in, long long n_raw, long long e_raw, bool allow_empty) {
  const int n = checked_int(in, n_raw, 1, 1 << 16, "vertex count");
  const auto max_e = static_cast<long long>(pair_count(n));
  checked_int(in, e_raw, 0, max_e, "edge count");
  if (e_raw == 0 && !allow_empty) in.fail("template graph has no edges");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(e_raw));
  for (long long i = 0; i < e_raw; ++i) {
    const auto line = in.next("an edge line");
    const auto uv = in.integers(line, 2);
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n)
      in.fail("vertex index out of range 0.." + std::to_string(n - 1));
    if (uv[0] == uv[1]) in.fail("loop edge at vertex " + std::to_string(uv[0]));
    if (uv[0] > uv[1]) in.fail("edge endpoints must satisfy u < v");
    const Edge e{static_cast<int>(uv[0]), static_cast<int>(uv[1])};
    if (!edges.empty()) {
      if (e == edges.back()) in.fail("duplicate edge");
      if (e < edges.back()) in.fail("edges must be sorted lexicographically");
    }
    edges.push_back(e);
  }
  return SimpleGraph(n, std::move(edges));
}

Permutation read_permutation(TextReader& in, int n) {
  const auto line = in.next("a permutation line");
  const auto values = in.integers(line, static_cast<std::size_t>(n));
  Permutation p(values.begin(), values.end());
  if (!is_permutation_of(p, n)) in.fail("not a permutation of 0.." + std::to_string(n - 1));
  return p;
}

void expect_header(TextReader& in, std::string_view header) {
  if (in.next("a header") != header) in.fail("expected header '" + std::string(header) + "'");
}

void expect_end(const TextReader& in) {
  if (!in.done()) throw ParseError(in.line_number() + 1, "unexpected trailing content");
}

void append_edges(std::ostringstream& out, const SimpleGraph& g) {
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void append_permutation(std::ostringstream& out, const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
  out << '\n';
}

}  // namespace

SimpleGraph parse_graph(std::string_view text, GraphParseOptions options) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = text.find_first_not_of(kSpace);
  if (first == std::string_view::npos) throw ParseError(1, "empty graph description");
  if (text[first] != '%') {
    const auto last = text.find_last_not_of(kSpace);
    return builtin_from_name(text.substr(first, last - first + 1));
  }
  TextReader in(text);
  expect_header(in, kGraphHeader);
  const auto counts = in.integers(in.next("'<n> <e>'"), 2);
  auto g = read_edges(in, counts[0], counts[1], options.allow_empty);
  expect_end(in);
  return g;
}

std::string format_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << kGraphHeader << '\n' << g.order() << ' ' << g.size() << '\n';
  append_edges(out, g);
  return out.str();
}

PermutationGens parse_generators(std::string_view text) {
  TextReader in(text);
  expect_header(in, kGensHeader);
  const auto counts = in.integers(in.next("'<n> <g>'"), 2);
  PermutationGens gens;
  gens.degree = checked_int(in, counts[0], 1, 1 << 16, "degree");
  const int count = checked_int(in, counts[1], 0, 1 << 20, "generator count");
  for (int i = 0; i < count; ++i) gens.generators.push_back(read_permutation(in, gens.degree));
  expect_end(in);
  return gens;
}

std::string format_generators(const PermutationGens& gens) {
  std::ostringstream out;
  out << kGensHeader << '\n' << gens.degree << ' ' << gens.generators.size() << '\n';
  for (const auto& g : gens.generators) append_permutation(out, g);
  return out.str();
}

Decomposition parse_certificate(std::string_view text) {
  TextReader in(text);
  expect_header(in, kCertHeader);
  const auto counts = in.keyword(in.next("'graph <n> <e>'"), "graph", 2);
  Decomposition cert;
  cert.templ = read_edges(in, counts[0], counts[1], false);
  cert.multiplicity = checked_int(
      in, in.keyword(in.next("'multiplicity <m>'"), "multiplicity", 1)[0], 1, kMaxMultiplicity,
      "multiplicity");
  const int l = checked_int(in, in.keyword(in.next("'copies <l>'"), "copies", 1)[0], 0,
                            1 << 26, "copy count");
  cert.copies.reserve(static_cast<std::size_t>(l));
  for (int i = 0; i < l; ++i) cert.copies.push_back({read_permutation(in, cert.templ.order())});
  if (in.next("'end'") != "end") in.fail("expected 'end'");
  expect_end(in);
  return cert;
}

std::string format_certificate(const Decomposition& cert) {
  std::ostringstream out;
  out << kCertHeader << '\n'
      << "graph " << cert.templ.order() << ' ' << cert.templ.size() << '\n';
  append_edges(out, cert.templ);
  out << "multiplicity " << cert.multiplicity << '\n' << "copies " << cert.copies.size() << '\n';
  for (const auto& c : cert.copies) append_permutation(out, c.image);
  out << "end\n";
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace gdecomp
