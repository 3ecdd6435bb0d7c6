#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ecg/errors.hpp"

namespace ecg {

using Vertex = int;           // 0-based internally; 1-based in files and reports
using Color = std::uint32_t;  // opaque: only equality carries meaning

// Complete graph on n >= 3 vertices with one color per unordered pair.
// Immutable once filled; safe to share across threads.
class EdgeColoredGraph {
 public:
  explicit EdgeColoredGraph(int n, Color fill = 0) : n_(n) {
    if (n < 3) throw input_error("EdgeColoredGraph: n must be >= 3");
    colors_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, fill);
  }

  // `colors` in row-major edge order (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1).
  static EdgeColoredGraph from_edge_colors(int n, const std::vector<Color>& colors) {
    EdgeColoredGraph g(n);
    if (colors.size() != g.colors_.size())
      throw input_error("from_edge_colors: expected " + std::to_string(g.colors_.size()) +
                        " colors, got " + std::to_string(colors.size()));
    g.colors_ = colors;
    return g;
  }

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(colors_.size()); }

  Color color(Vertex i, Vertex j) const {
    if (i > j) std::swap(i, j);
    return colors_[index(i, j)];
  }

  void set_color(Vertex i, Vertex j, Color c) {
    if (i > j) std::swap(i, j);
    colors_[index(i, j)] = c;
  }

  // Row-major edge order, matching the ECG file layout.
  const std::vector<Color>& edge_colors() const { return colors_; }

  bool operator==(const EdgeColoredGraph&) const = default;

 private:
  std::size_t index(Vertex i, Vertex j) const {
    assert(0 <= i && i < j && j < n_);
    return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  int n_;
  std::vector<Color> colors_;  // upper triangle, row-major
};

inline void check_vertex(const EdgeColoredGraph& g, Vertex v, const char* who) {
  if (v < 0 || v >= g.n())
    throw input_error(std::string(who) + ": vertex " + std::to_string(v + 1) + " out of range");
}

// Unordered triple of distinct vertices, stored ascending.
struct Triangle {
  std::array<Vertex, 3> v;

  Triangle(Vertex a, Vertex b, Vertex c) : v{a, b, c} {
    std::sort(v.begin(), v.end());
    if (v[0] == v[1] || v[1] == v[2]) throw input_error("Triangle: vertices must be distinct");
  }

  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }

  bool shares_vertex(const Triangle& o) const {
    return contains(o.v[0]) || contains(o.v[1]) || contains(o.v[2]);
  }

  auto operator<=>(const Triangle&) const = default;
};

inline bool is_monochromatic(const EdgeColoredGraph& g, const Triangle& t) {
  const Color c = g.color(t.v[0], t.v[1]);
  return g.color(t.v[0], t.v[2]) == c && g.color(t.v[1], t.v[2]) == c;
}

inline bool is_rainbow(const EdgeColoredGraph& g, const Triangle& t) {
  const Color a = g.color(t.v[0], t.v[1]);
  const Color b = g.color(t.v[0], t.v[2]);
  const Color c = g.color(t.v[1], t.v[2]);
  return a != b && a != c && b != c;
}

// d^c(v): number of distinct colors on edges at v.
inline int color_degree(const EdgeColoredGraph& g, Vertex v) {
  check_vertex(g, v, "color_degree");
  std::vector<Color> cs;
  cs.reserve(g.n() - 1);
  for (Vertex u = 0; u < g.n(); ++u)
    if (u != v) cs.push_back(g.color(v, u));
  std::sort(cs.begin(), cs.end());
  return static_cast<int>(std::unique(cs.begin(), cs.end()) - cs.begin());
}

inline int min_color_degree(const EdgeColoredGraph& g) {
  int best = g.n();
  for (Vertex v = 0; v < g.n(); ++v) best = std::min(best, color_degree(g, v));
  return best;
}

// All monochromatic triangles, in lexicographic order.
inline std::vector<Triangle> monochromatic_triangles(const EdgeColoredGraph& g) {
  std::vector<Triangle> out;
  for (Vertex i = 0; i < g.n(); ++i)
    for (Vertex j = i + 1; j < g.n(); ++j) {
      const Color c = g.color(i, j);
      for (Vertex k = j + 1; k < g.n(); ++k)
        if (g.color(i, k) == c && g.color(j, k) == c) out.emplace_back(i, j, k);
    }
  return out;
}

// Unordered pairs of distinct monochromatic triangles sharing at least one
// vertex. Sharing a vertex is the operative notion: the |W3(C)| <= l/2 bound
// needs the triangles pairwise vertex-disjoint, not merely edge-disjoint.
inline std::vector<std::pair<Triangle, Triangle>> joint_pairs_among(
    const std::vector<Triangle>& mono) {
  std::vector<std::pair<Triangle, Triangle>> out;
  for (std::size_t i = 0; i < mono.size(); ++i)
    for (std::size_t j = i + 1; j < mono.size(); ++j)
      if (mono[i].shares_vertex(mono[j])) out.emplace_back(mono[i], mono[j]);
  return out;
}

inline std::vector<std::pair<Triangle, Triangle>> joint_monochromatic_pairs(
    const EdgeColoredGraph& g) {
  return joint_pairs_among(monochromatic_triangles(g));
}

struct HypothesisReport {
  int min_color_degree = 0;
  // Threshold (n+1)/2 kept as an exact rational; the comparison below is
  // 2 * min_color_degree >= n + 1, never floating point.
  int threshold_num = 0;
  int threshold_den = 2;
  std::vector<Triangle> mono_triangles;
  std::vector<std::pair<Triangle, Triangle>> joint_pairs;
  bool satisfies = false;
};

inline bool meets_degree_threshold(const EdgeColoredGraph& g) {
  return 2 * min_color_degree(g) >= g.n() + 1;
}

inline HypothesisReport check_hypotheses(const EdgeColoredGraph& g) {
  HypothesisReport r;
  r.min_color_degree = min_color_degree(g);
  r.threshold_num = g.n() + 1;
  r.threshold_den = 2;
  r.mono_triangles = monochromatic_triangles(g);
  r.joint_pairs = joint_pairs_among(r.mono_triangles);
  r.satisfies = 2 * r.min_color_degree >= g.n() + 1 && r.joint_pairs.empty();
  return r;
}

// Relabel colors in first-use order (restricted growth form). Two colorings
// are equal up to color renaming iff their normalized sequences match.
inline std::vector<Color> rgs_normalized(const std::vector<Color>& colors) {
  std::vector<Color> out;
  out.reserve(colors.size());
  std::vector<std::pair<Color, Color>> seen;  // (original, relabeled); few colors, linear scan
  for (Color c : colors) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == c; });
    if (it == seen.end()) {
      seen.emplace_back(c, static_cast<Color>(seen.size()));
      out.push_back(seen.back().second);
    } else {
      out.push_back(it->second);
    }
  }
  return out;
}

inline std::string canonical_key(const EdgeColoredGraph& g) {
  std::string s;
  for (Color c : rgs_normalized(g.edge_colors())) {
    if (!s.empty()) s += ',';
    s += std::to_string(c);
  }
  return s;
}

}  // namespace ecg
