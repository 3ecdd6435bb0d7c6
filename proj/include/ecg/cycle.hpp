#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ecg/errors.hpp"
#include "ecg/graph.hpp"

namespace ecg {

// Ordered vertex sequence read cyclically: at(k) wraps mod length, so the
// paper's v_{k+l} / v_{k-l} arithmetic is direct.
class CycleView {
 public:
  explicit CycleView(std::vector<Vertex> vs) : v_(std::move(vs)) {
    if (v_.size() < 3) throw input_error("CycleView: need at least 3 vertices");
    std::vector<Vertex> s = v_;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw input_error("CycleView: repeated vertex");
    if (s.front() < 0) throw input_error("CycleView: negative vertex id");
  }

  int length() const { return static_cast<int>(v_.size()); }

  Vertex at(int k) const {
    const int l = length();
    k %= l;
    if (k < 0) k += l;
    return v_[k];
  }

  const std::vector<Vertex>& vertices() const { return v_; }

  bool contains(Vertex x) const { return std::find(v_.begin(), v_.end(), x) != v_.end(); }

  int position_of(Vertex x) const {
    auto it = std::find(v_.begin(), v_.end(), x);
    return it == v_.end() ? -1 : static_cast<int>(it - v_.begin());
  }

  CycleView rotated_to_front(Vertex x) const {
    const int p = position_of(x);
    if (p < 0) throw input_error("CycleView: vertex not on cycle");
    std::vector<Vertex> out;
    out.reserve(v_.size());
    for (int k = 0; k < length(); ++k) out.push_back(at(p + k));
    return CycleView(std::move(out));
  }

  // Canonical form: smallest vertex first, then the smaller of its two
  // neighbors. Rotations and reflections of a cycle share one canonical form.
  CycleView canonical() const {
    const int l = length();
    const int p = static_cast<int>(std::min_element(v_.begin(), v_.end()) - v_.begin());
    const int step = at(p + 1) < at(p - 1) ? 1 : -1;
    std::vector<Vertex> out;
    out.reserve(v_.size());
    for (int k = 0; k < l; ++k) out.push_back(at(p + step * k));
    return CycleView(std::move(out));
  }

  // Comma-separated 1-based vertex list, e.g. "1,2,3,4".
  std::string to_string() const {
    std::string s;
    for (Vertex x : v_) {
      if (!s.empty()) s += ',';
      s += std::to_string(x + 1);
    }
    return s;
  }

  bool operator==(const CycleView&) const = default;
  bool operator<(const CycleView& o) const { return v_ < o.v_; }

 private:
  std::vector<Vertex> v_;
};

}  // namespace ecg
