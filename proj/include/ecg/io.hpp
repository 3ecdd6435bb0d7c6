#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "ecg/errors.hpp"
#include "ecg/graph.hpp"

// ECG text format:
//   line 1:        ECG 1
//   line 2:        <n>
//   lines 3..n+1:  row i holds c(i,i+1) ... c(i,n), space-separated integers
// '#' starts a comment to end of line; blank lines are ignored.

namespace ecg {

namespace detail {

// Next line that still has content after comment stripping; updates line_no.
inline bool next_content_line(std::istream& in, std::string& out, int& line_no) {
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") != std::string::npos) {
      out = raw;
      return true;
    }
  }
  return false;
}

inline std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

inline long long parse_int(const std::string& tok, int line_no) {
  long long value = 0;
  auto [ptr, err] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (err != std::errc{} || ptr != tok.data() + tok.size())
    throw parse_error("expected a non-negative integer, got '" + tok + "'", line_no);
  return value;
}

}  // namespace detail

inline EdgeColoredGraph read_graph(std::istream& in) {
  int line_no = 0;
  std::string line;

  if (!detail::next_content_line(in, line, line_no))
    throw parse_error("missing header", line_no + 1);
  if (auto toks = detail::tokens_of(line); toks.size() != 2 || toks[0] != "ECG" || toks[1] != "1")
    throw parse_error("malformed header, expected 'ECG 1'", line_no);

  if (!detail::next_content_line(in, line, line_no))
    throw parse_error("missing vertex count", line_no + 1);
  const auto n_toks = detail::tokens_of(line);
  if (n_toks.size() != 1) throw parse_error("expected a single vertex count", line_no);
  const long long n = detail::parse_int(n_toks[0], line_no);
  if (n < 3) throw parse_error("vertex count must be >= 3", line_no);
  if (n > 100000) throw parse_error("vertex count out of supported range", line_no);

  EdgeColoredGraph g(static_cast<int>(n));
  for (int i = 0; i < n - 1; ++i) {
    if (!detail::next_content_line(in, line, line_no))
      throw parse_error("unexpected end of file inside color rows", line_no + 1);
    const auto toks = detail::tokens_of(line);
    const std::size_t want = static_cast<std::size_t>(n - 1 - i);
    if (toks.size() != want)
      throw parse_error("row " + std::to_string(i + 1) + " expects " + std::to_string(want) +
                            " colors, got " + std::to_string(toks.size()),
                        line_no);
    for (std::size_t k = 0; k < want; ++k) {
      const long long c = detail::parse_int(toks[k], line_no);
      if (c > 0xFFFFFFFFll) throw parse_error("color does not fit in 32 bits", line_no);
      g.set_color(i, i + 1 + static_cast<int>(k), static_cast<Color>(c));
    }
  }
  if (detail::next_content_line(in, line, line_no))
    throw parse_error("unexpected trailing content", line_no);
  return g;
}

inline void write_graph(const EdgeColoredGraph& g, std::ostream& out) {
  out << "ECG 1\n" << g.n() << '\n';
  for (int i = 0; i < g.n() - 1; ++i) {
    for (int j = i + 1; j < g.n(); ++j) {
      if (j > i + 1) out << ' ';
      out << g.color(i, j);
    }
    out << '\n';
  }
}

inline std::string to_ecg_string(const EdgeColoredGraph& g) {
  std::ostringstream ss;
  write_graph(g, ss);
  return ss.str();
}

inline EdgeColoredGraph from_ecg_string(const std::string& s) {
  std::istringstream ss(s);
  return read_graph(ss);
}

inline EdgeColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  return read_graph(in);
}

inline void write_graph_file(const EdgeColoredGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw input_error("cannot open file for writing: " + path);
  write_graph(g, out);
  if (!out) throw input_error("write failed: " + path);
}

}  // namespace ecg
