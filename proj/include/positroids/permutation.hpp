#pragma once

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catalan.hpp"

namespace positroids {

namespace detail {

// Shared tokenizer for one-line words: bare digits are single entries,
// parenthesized groups hold multi-digit entries, commas are separators.
// "645312", "(10)9643(15)1" and "6,4,5,3,1,2" all parse.
inline std::vector<int> parse_word_text(std::string_view text) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (c == '(') {
      std::size_t j = i + 1;
      int value = 0;
      bool any = false;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
        value = value * 10 + (text[j] - '0');
        any = true;
        ++j;
      }
      if (!any || j >= text.size() || text[j] != ')')
        throw std::invalid_argument("word parse: unbalanced parenthesized entry");
      out.push_back(value);
      i = j + 1;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Bare digits: each one is its own entry unless the whole text is a
      // comma-separated list, in which case digits group per token.
      if (text.find(',') != std::string_view::npos) {
        std::size_t j = i;
        int value = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
          value = value * 10 + (text[j] - '0');
          ++j;
        }
        out.push_back(value);
        i = j;
      } else {
        out.push_back(c - '0');
        ++i;
      }
      continue;
    }
    throw std::invalid_argument("word parse: unexpected character");
  }
  if (out.empty()) throw std::invalid_argument("word parse: empty word");
  return out;
}

inline std::string format_word(const std::vector<int>& entries) {
  std::string s;
  for (int e : entries) {
    if (e >= 0 && e <= 9) {
      s += static_cast<char>('0' + e);
    } else {
      s += '(';
      s += std::to_string(e);
      s += ')';
    }
  }
  return s;
}

}  // namespace detail

// One-line permutation of [n]; one-indexed so entries()[i-1] = w(i).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<int> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i) + 1)
        throw std::invalid_argument("Permutation: entries are not a rearrangement of 1..n");
  }

  static Permutation identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
  }

  // n, n-1, ..., 1: the longest element.
  static Permutation reversal(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) e[static_cast<std::size_t>(i) - 1] = n - i + 1;
    return Permutation(std::move(e));
  }

  // 2, 3, ..., n, 1: cyclic rotation used when spinning subsets of a cycle.
  static Permutation rotation(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) e[static_cast<std::size_t>(i) - 1] = i + 1;
    e[static_cast<std::size_t>(n) - 1] = 1;
    return Permutation(std::move(e));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  Permutation inverse() const {
    std::vector<int> e(entries_.size());
    for (int i = 1; i <= size(); ++i) e[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(e));
  }

  // Composition acting on positions: (a.after(b))(i) = a(b(i)).
  Permutation after(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("Permutation::after: size mismatch");
    std::vector<int> e(entries_.size());
    for (int i = 1; i <= size(); ++i) e[static_cast<std::size_t>(i) - 1] = (*this)(other(i));
    return Permutation(std::move(e));
  }

  long long inversions() const {
    long long count = 0;
    for (int i = 1; i <= size(); ++i)
      for (int j = i + 1; j <= size(); ++j)
        if ((*this)(i) > (*this)(j)) ++count;
    return count;
  }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  std::string to_string() const { return detail::format_word(entries_); }

  static Permutation parse(std::string_view text) {
    return Permutation(detail::parse_word_text(text));
  }

 private:
  std::vector<int> entries_;
};

// Word with distinct positive entries, not necessarily a permutation of [n].
class InjectiveWord {
 public:
  InjectiveWord() = default;

  explicit InjectiveWord(std::vector<int> entries) : entries_(std::move(entries)) {
    std::vector<int> sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() < 1)
      throw std::invalid_argument("InjectiveWord: entries must be positive");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("InjectiveWord: entries must be distinct");
  }

  explicit InjectiveWord(const Permutation& w) : entries_(w.entries()) {}

  int size() const { return static_cast<int>(entries_.size()); }
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const InjectiveWord&) const = default;

  std::string to_string() const { return detail::format_word(entries_); }

  static InjectiveWord parse(std::string_view text) {
    return InjectiveWord(detail::parse_word_text(text));
  }

 private:
  std::vector<int> entries_;
};

// Prefix-sort comparison: u <= v iff for every j the sorted first j entries of
// u are entrywise <= the sorted first j entries of v.
inline bool bruhat_leq(const std::vector<int>& u, const std::vector<int>& v) {
  if (u.size() != v.size()) throw std::invalid_argument("bruhat_leq: length mismatch");
  std::vector<int> su, sv;
  su.reserve(u.size());
  sv.reserve(v.size());
  for (std::size_t j = 0; j < u.size(); ++j) {
    su.insert(std::upper_bound(su.begin(), su.end(), u[j]), u[j]);
    sv.insert(std::upper_bound(sv.begin(), sv.end(), v[j]), v[j]);
    for (std::size_t i = 0; i <= j; ++i)
      if (su[i] > sv[i]) return false;
  }
  return true;
}

inline bool bruhat_leq(const Permutation& u, const Permutation& v) {
  return bruhat_leq(u.entries(), v.entries());
}

inline bool bruhat_leq(const InjectiveWord& u, const InjectiveWord& v) {
  return bruhat_leq(u.entries(), v.entries());
}

inline bool bruhat_leq(const Permutation& u, const InjectiveWord& v) {
  return bruhat_leq(u.entries(), v.entries());
}

// Does w contain p as a (classical) pattern? Backtracking over increasing
// position choices; each new choice is checked against all previous ones.
inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  const int n = w.size();
  const int k = p.size();
  if (k > n) throw std::invalid_argument("contains_pattern: pattern longer than word");
  if (k == 0) return true;
  std::vector<int> chosen;  // values picked so far
  chosen.reserve(static_cast<std::size_t>(k));

  auto consistent = [&](int value, int slot) {
    for (int s = 0; s < slot; ++s)
      if ((chosen[static_cast<std::size_t>(s)] < value) != (p(s + 1) < p(slot + 1))) return false;
    return true;
  };

  auto rec = [&](auto&& self, int slot, int start) -> bool {
    if (slot == k) return true;
    for (int pos = start; pos <= n - (k - slot - 1); ++pos) {
      const int value = w(pos);
      if (!consistent(value, slot)) continue;
      chosen.push_back(value);
      if (self(self, slot + 1, pos + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(rec, 0, 1);
}

// Linear-time test for an increasing subsequence of length three.
inline bool avoids_123(const Permutation& w) {
  int low = std::numeric_limits<int>::max();       // smallest value seen
  int mid = std::numeric_limits<int>::max();       // smallest value with something below it before
  for (int i = 1; i <= w.size(); ++i) {
    const int x = w(i);
    if (x > mid) return false;
    if (x > low) mid = std::min(mid, x);
    low = std::min(low, x);
  }
  return true;
}

// Position classes: left-to-right minima that are not right-to-left maxima,
// right-to-left maxima that are not left-to-right minima, anti-fixed points
// (w(i) = n-i+1, always both or neither), and the maximal runs of the latter.
struct PositionClasses {
  std::vector<int> only_minima;               // L
  std::vector<int> only_maxima;               // R
  std::vector<int> anti_fixed;                // A
  std::vector<std::pair<int, int>> runs;      // maximal intervals [a, b] inside A
};

inline PositionClasses classify_positions(const Permutation& w) {
  const int n = w.size();
  std::vector<bool> is_min(static_cast<std::size_t>(n) + 1, false);
  std::vector<bool> is_max(static_cast<std::size_t>(n) + 1, false);
  int best = std::numeric_limits<int>::max();
  for (int i = 1; i <= n; ++i) {
    if (w(i) < best) {
      is_min[static_cast<std::size_t>(i)] = true;
      best = w(i);
    }
  }
  best = std::numeric_limits<int>::min();
  for (int i = n; i >= 1; --i) {
    if (w(i) > best) {
      is_max[static_cast<std::size_t>(i)] = true;
      best = w(i);
    }
  }
  PositionClasses out;
  std::vector<bool> anti(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    anti[static_cast<std::size_t>(i)] = (w(i) == n - i + 1);
    if (anti[static_cast<std::size_t>(i)]) {
      out.anti_fixed.push_back(i);
    } else if (is_min[static_cast<std::size_t>(i)] && !is_max[static_cast<std::size_t>(i)]) {
      out.only_minima.push_back(i);
    } else if (is_max[static_cast<std::size_t>(i)] && !is_min[static_cast<std::size_t>(i)]) {
      out.only_maxima.push_back(i);
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (!anti[static_cast<std::size_t>(i)]) continue;
    int j = i;
    while (j + 1 <= n && anti[static_cast<std::size_t>(j) + 1]) ++j;
    out.runs.emplace_back(i, j);
    i = j;
  }
  return out;
}

// Product of Catalan numbers C_{len+1} over the maximal anti-fixed runs.
inline long long catalan_weight(const Permutation& w) {
  long long g = 1;
  for (const auto& [a, b] : classify_positions(w).runs) g = checked_mul(g, catalan(b - a + 2));
  return g;
}

template <typename F>
inline void for_each_permutation(int n, F&& f) {
  std::vector<int> e(static_cast<std::size_t>(n));
  std::iota(e.begin(), e.end(), 1);
  do {
    f(Permutation(e));
  } while (std::next_permutation(e.begin(), e.end()));
}

inline std::vector<Permutation> permutations_avoiding_123(int n) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) {
    if (avoids_123(w)) out.push_back(w);
  });
  return out;
}

}  // namespace positroids
