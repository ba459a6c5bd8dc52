#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permutation.hpp"
#include "subset.hpp"

namespace positroids {

// Structure of a +-1 lattice path: step s (1-based) goes up when s is in
// up_steps, down otherwise. Heights are prefix sums, heights[0] = 0.
struct PathAnalysis {
  int length = 0;
  Mask up_steps = 0;
  std::vector<int> heights;                     // heights[s] after step s
  std::vector<int> peaks;                       // s with step s up, step s+1 down
  std::vector<int> peak_heights;                // heights[s] for each peak s
  std::vector<std::pair<int, int>> below_segments;  // maximal negative excursions
  std::vector<int> saw_lengths;                 // runs of height-1 peaks spaced by 2
  bool is_dyck = false;
};

inline PathAnalysis analyze_path(Mask up_steps, int length) {
  if (length < 0 || length > kMaxGround) throw std::invalid_argument("analyze_path: bad length");
  if (up_steps & ~full_mask(length)) throw std::invalid_argument("analyze_path: up step out of range");
  PathAnalysis a;
  a.length = length;
  a.up_steps = up_steps;
  a.heights.assign(static_cast<std::size_t>(length) + 1, 0);
  bool nonneg = true;
  for (int s = 1; s <= length; ++s) {
    a.heights[static_cast<std::size_t>(s)] =
        a.heights[static_cast<std::size_t>(s) - 1] + (has_element(up_steps, s) ? 1 : -1);
    if (a.heights[static_cast<std::size_t>(s)] < 0) nonneg = false;
  }
  a.is_dyck = nonneg && length % 2 == 0 && a.heights[static_cast<std::size_t>(length)] == 0;
  for (int s = 1; s < length; ++s) {
    if (has_element(up_steps, s) && !has_element(up_steps, s + 1)) {
      a.peaks.push_back(s);
      a.peak_heights.push_back(a.heights[static_cast<std::size_t>(s)]);
    }
  }
  // A negative excursion starts when the height first drops below the axis
  // and ends at the step that brings it back (or at the end of the path).
  for (int s = 1; s <= length; ++s) {
    if (a.heights[static_cast<std::size_t>(s)] < 0 && a.heights[static_cast<std::size_t>(s) - 1] == 0) {
      int b = s;
      while (b < length && a.heights[static_cast<std::size_t>(b)] != 0) ++b;
      a.below_segments.emplace_back(s, b);
      s = b;
    }
  }
  for (std::size_t p = 0; p < a.peaks.size();) {
    if (a.peak_heights[p] != 1) {
      ++p;
      continue;
    }
    std::size_t q = p;
    while (q + 1 < a.peaks.size() && a.peak_heights[q + 1] == 1 &&
           a.peaks[q + 1] == a.peaks[q] + 2)
      ++q;
    a.saw_lengths.push_back(static_cast<int>(q - p) + 1);
    p = q + 1;
  }
  return a;
}

// Path of length 2n staying weakly above the axis and ending on it.
class DyckPath {
 public:
  DyckPath() = default;

  DyckPath(int half, Mask up_steps) : half_(half), ups_(up_steps) {
    const PathAnalysis a = analyze_path(up_steps, 2 * half);
    if (!a.is_dyck) throw std::invalid_argument("DyckPath: path dips below the axis or is unbalanced");
  }

  int half() const { return half_; }
  int length() const { return 2 * half_; }
  Mask up_steps() const { return ups_; }

  PathAnalysis analyze() const { return analyze_path(ups_, 2 * half_); }

  std::string to_word() const {
    std::string s;
    for (int i = 1; i <= 2 * half_; ++i) s += has_element(ups_, i) ? 'U' : 'D';
    return s;
  }

  static DyckPath from_word(std::string_view word) {
    if (word.size() % 2 != 0) throw std::invalid_argument("DyckPath: odd word length");
    Mask ups = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] == 'U' || word[i] == 'u')
        ups |= bit_of(static_cast<int>(i) + 1);
      else if (word[i] != 'D' && word[i] != 'd')
        throw std::invalid_argument("DyckPath: word letters must be U or D");
    }
    return DyckPath(static_cast<int>(word.size() / 2), ups);
  }

  bool operator==(const DyckPath&) const = default;

 private:
  int half_ = 0;
  Mask ups_ = 0;
};

// Replace every negative excursion [a, b] of the balanced path with up-steps
// at a, a+2, ..., b-1: a run of height-one teeth sitting on the axis. The
// result never dips below the axis.
inline DyckPath standardize(Mask subset, int n) {
  if (popcount(subset) != n) throw std::invalid_argument("standardize: subset size must equal half length");
  const PathAnalysis a = analyze_path(subset, 2 * n);
  Mask ups = subset;
  for (const auto& [lo, hi] : a.below_segments) {
    for (int s = lo; s <= hi; ++s) ups &= ~bit_of(s);
    for (int s = lo; s < hi; s += 2) ups |= bit_of(s);
  }
  return DyckPath(n, ups);
}

// Path attached to a 123-avoiding permutation: walk down the left-to-right
// minima i_1 < ... < i_k, writing w(i_{t-1}) - w(i_t) up-steps and then
// i_{t+1} - i_t down-steps, with w(i_0) = i_{k+1} = n + 1.
inline DyckPath krattenthaler(const Permutation& w) {
  if (!avoids_123(w))
    throw std::domain_error("krattenthaler: defined only for 123-avoiding permutations");
  const int n = w.size();
  std::vector<int> minima;
  int best = std::numeric_limits<int>::max();
  for (int i = 1; i <= n; ++i) {
    if (w(i) < best) {
      minima.push_back(i);
      best = w(i);
    }
  }
  Mask ups = 0;
  int pos = 0;
  int prev_value = n + 1;
  for (std::size_t t = 0; t < minima.size(); ++t) {
    const int i = minima[t];
    for (int r = 0; r < prev_value - w(i); ++r) ups |= bit_of(++pos);
    const int next_pos = (t + 1 < minima.size()) ? minima[t + 1] : n + 1;
    pos += next_pos - i;
    prev_value = w(i);
  }
  if (pos != 2 * n) throw std::logic_error("krattenthaler: word length mismatch");
  return DyckPath(n, ups);
}

template <typename F>
inline void for_each_dyck_path(int n, F&& f) {
  if (n < 0 || 2 * n > kMaxGround) throw std::invalid_argument("for_each_dyck_path: bad half size");
  Mask ups = 0;
  auto rec = [&](auto&& self, int step, int height, int ups_used) -> void {
    if (step > 2 * n) {
      f(DyckPath(n, ups));
      return;
    }
    if (ups_used < n) {
      ups |= bit_of(step);
      self(self, step + 1, height + 1, ups_used + 1);
      ups &= ~bit_of(step);
    }
    if (height > 0) self(self, step + 1, height - 1, ups_used);
  };
  rec(rec, 1, 0, 0);
}

// Height of the initial run of up-steps (equivalently of the first peak).
inline int initial_rise(const DyckPath& d) {
  int a = 0;
  while (a < d.length() && has_element(d.up_steps(), a + 1)) ++a;
  return a;
}

// Number of times the path touches the axis after the start.
inline int axis_returns(const DyckPath& d) {
  const PathAnalysis a = d.analyze();
  int b = 0;
  for (int s = 1; s <= d.length(); ++s)
    if (a.heights[static_cast<std::size_t>(s)] == 0) ++b;
  return b;
}

}  // namespace positroids
