#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "ecg/errors.hpp"
#include "ecg/graph.hpp"

namespace ecg {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Exactly uniform draw in [0, bound) by rejection; mt19937_64 output is
// pinned by the standard, so streams are identical across platforms.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % bound;
  std::uint64_t r = rng();
  while (r >= limit) r = rng();
  return r % bound;
}

}  // namespace detail

// One coloring of K_n, uniform over {0..color_budget-1} per edge. Element
// `index` of the stream for `seed` is a pure function of (seed, index), so
// sweeps can partition work by index and stay deterministic.
inline EdgeColoredGraph random_coloring(int n, int color_budget, std::uint64_t seed,
                                        std::uint64_t index = 0) {
  if (n < 3) throw input_error("random_coloring: n must be >= 3");
  if (color_budget < 1) throw input_error("random_coloring: color budget must be >= 1");
  std::mt19937_64 rng(detail::splitmix64(detail::splitmix64(seed) ^ index));
  EdgeColoredGraph g(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      g.set_color(i, j, static_cast<Color>(detail::bounded(rng, color_budget)));
  return g;
}

// Every coloring of K_n exactly once up to color relabeling: restricted
// growth sequences over the edge list (0,1),(0,2),...,(n-2,n-1), i.e. the
// first use of color k appears only after all colors below k. With a budget
// of at least edge_count the count is the Bell number of the edge count.
class CanonicalEnumerator {
 public:
  CanonicalEnumerator(int n, int color_budget) : n_(n), budget_(color_budget) {
    if (n < 3) throw input_error("CanonicalEnumerator: n must be >= 3");
    if (color_budget < 1) throw input_error("CanonicalEnumerator: color budget must be >= 1");
    m_ = n * (n - 1) / 2;
    a_.assign(m_, 0);
  }

  std::optional<EdgeColoredGraph> next() {
    if (done_) return std::nullopt;
    if (first_) {
      first_ = false;
      return EdgeColoredGraph::from_edge_colors(n_, a_);
    }
    // prefix_max[i] = max of a_[0..i-1]
    std::vector<Color> prefix_max(m_, 0);
    for (int i = 1; i < m_; ++i) prefix_max[i] = std::max(prefix_max[i - 1], a_[i - 1]);
    for (int i = m_ - 1; i >= 1; --i) {
      if (a_[i] <= prefix_max[i] && a_[i] + 1 < static_cast<Color>(budget_)) {
        ++a_[i];
        std::fill(a_.begin() + i + 1, a_.end(), 0);
        return EdgeColoredGraph::from_edge_colors(n_, a_);
      }
    }
    done_ = true;
    return std::nullopt;
  }

 private:
  int n_, budget_, m_ = 0;
  std::vector<Color> a_;
  bool first_ = true, done_ = false;
};

// Infinite stream wrapper over random_coloring.
class RandomEnumerator {
 public:
  RandomEnumerator(int n, int color_budget, std::uint64_t seed)
      : n_(n), budget_(color_budget), seed_(seed) {
    if (n < 3) throw input_error("RandomEnumerator: n must be >= 3");
    if (color_budget < 1) throw input_error("RandomEnumerator: color budget must be >= 1");
  }

  std::optional<EdgeColoredGraph> next() { return random_coloring(n_, budget_, seed_, index_++); }

 private:
  int n_, budget_;
  std::uint64_t seed_, index_ = 0;
};

enum class GenMode { exhaustive_canonical, random_uniform };

struct GenSpec {
  int n = 0;
  GenMode mode = GenMode::exhaustive_canonical;
  int color_budget = 1;
  std::uint64_t seed = 0;
};

// Single-consumer stream of graphs; independent streams may run in parallel.
class GraphStream {
 public:
  explicit GraphStream(const GenSpec& spec)
      : impl_(spec.mode == GenMode::exhaustive_canonical
                  ? Impl(CanonicalEnumerator(spec.n, spec.color_budget))
                  : Impl(RandomEnumerator(spec.n, spec.color_budget, spec.seed))) {}

  std::optional<EdgeColoredGraph> next() {
    return std::visit([](auto& e) { return e.next(); }, impl_);
  }

 private:
  using Impl = std::variant<CanonicalEnumerator, RandomEnumerator>;
  Impl impl_;
};

}  // namespace ecg
