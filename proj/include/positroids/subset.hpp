#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace positroids {

// Subsets of a ground set {1, ..., m}, m <= 64: element x lives at bit x-1.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

inline Mask bit_of(int x) {
  if (x < 1 || x > kMaxGround) throw std::invalid_argument("subset element out of range");
  return Mask{1} << (x - 1);
}

inline bool has_element(Mask m, int x) { return (m & bit_of(x)) != 0; }

inline int popcount(Mask m) { return std::popcount(m); }

// {a, a+1, ..., b}; empty when b < a.
inline Mask interval_mask(int a, int b) {
  Mask m = 0;
  for (int x = std::max(a, 1); x <= b; ++x) m |= bit_of(x);
  return m;
}

inline Mask full_mask(int m) {
  if (m < 0 || m > kMaxGround) throw std::invalid_argument("ground size out of range");
  return m == 0 ? Mask{0} : (m == 64 ? ~Mask{0} : (Mask{1} << m) - 1);
}

inline Mask mask_from_elements(const std::vector<int>& elems) {
  Mask m = 0;
  for (int x : elems) {
    const Mask b = bit_of(x);
    if (m & b) throw std::invalid_argument("mask_from_elements: repeated element");
    m |= b;
  }
  return m;
}

inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    const int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

// "2,5,6,8"; "" is the empty set.
inline std::string format_subset(Mask m) {
  std::string s = "{";
  bool first = true;
  for (int x : elements_of(m)) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(x);
  }
  s += '}';
  return s;
}

inline Mask parse_subset(std::string_view text) {
  std::vector<int> elems;
  int value = 0;
  bool in_number = false;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      value = value * 10 + (c - '0');
      in_number = true;
    } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
      if (in_number) elems.push_back(value);
      value = 0;
      in_number = false;
    } else {
      throw std::invalid_argument("parse_subset: unexpected character");
    }
  }
  if (in_number) elems.push_back(value);
  return mask_from_elements(elems);
}

// Order subsets by their ascending element lists, shortlex on the sequences.
inline bool lex_subset_less(Mask a, Mask b) {
  while (a && b) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return b != 0;
}

// Visit all size-k subsets of {1..m} in increasing numeric (Gosper) order.
template <typename F>
inline void for_each_subset_of_size(int m, int k, F&& f) {
  if (k < 0 || m < 0 || m > kMaxGround) throw std::invalid_argument("for_each_subset_of_size: bad arguments");
  if (k > m) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  const Mask limit = full_mask(m);
  Mask v = (Mask{1} << k) - 1;
  while (true) {
    f(v);
    // Gosper's hack: next-larger word with the same popcount.
    const Mask c = v & (~v + 1);
    const Mask r = v + c;
    if (r > limit || r < v) break;
    v = (((r ^ v) >> 2) / c) | r;
    if (v > limit) break;
  }
}

// Total order on {1..2n} spiraling out from the centre:
// n+1, n, n+2, n-1, ..., 2n, 1.
struct PrecOrder {
  int n = 0;
  std::vector<int> rank_of;  // rank_of[x] in 1..2n, smaller = earlier
  std::vector<int> by_rank;  // by_rank[r] = element of rank r
};

inline PrecOrder prec_order(int n) {
  if (n < 1 || 2 * n > kMaxGround) throw std::invalid_argument("prec_order: bad half size");
  PrecOrder ord;
  ord.n = n;
  ord.rank_of.assign(static_cast<std::size_t>(2 * n) + 1, 0);
  ord.by_rank.assign(static_cast<std::size_t>(2 * n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    ord.by_rank[static_cast<std::size_t>(2 * k - 1)] = n + k;
    ord.by_rank[static_cast<std::size_t>(2 * k)] = n - k + 1;
  }
  for (int r = 1; r <= 2 * n; ++r) ord.rank_of[static_cast<std::size_t>(ord.by_rank[static_cast<std::size_t>(r)])] = r;
  return ord;
}

// Elements of m listed from earliest to latest in the spiral order.
inline std::vector<int> prec_sort(Mask m, const PrecOrder& ord) {
  std::vector<int> out;
  for (int r = 1; r <= 2 * ord.n; ++r) {
    const int x = ord.by_rank[static_cast<std::size_t>(r)];
    if (has_element(m, x)) out.push_back(x);
  }
  return out;
}

inline int prec_min(Mask m, const PrecOrder& ord) {
  for (int r = 1; r <= 2 * ord.n; ++r) {
    const int x = ord.by_rank[static_cast<std::size_t>(r)];
    if (has_element(m, x)) return x;
  }
  throw std::invalid_argument("prec_min: empty set");
}

inline int prec_max(Mask m, const PrecOrder& ord) {
  for (int r = 2 * ord.n; r >= 1; --r) {
    const int x = ord.by_rank[static_cast<std::size_t>(r)];
    if (has_element(m, x)) return x;
  }
  throw std::invalid_argument("prec_max: empty set");
}

// First j spiral ranks shifted by a set X = {x_1 < ... < x_k} inside [n]:
// the mirror pair {n - x_i + 1} and {n + x_i} for i <= j.
inline Mask z_segment(Mask x_set, int j, int n) {
  const std::vector<int> xs = elements_of(x_set);
  if (j < 0 || j > static_cast<int>(xs.size())) throw std::invalid_argument("z_segment: bad depth");
  Mask out = 0;
  for (int i = 0; i < j; ++i) {
    const int x = xs[static_cast<std::size_t>(i)];
    if (x < 1 || x > n) throw std::invalid_argument("z_segment: set not inside [n]");
    out |= bit_of(n - x + 1);
    out |= bit_of(n + x);
  }
  return out;
}

// I is dominated by J (same size) when J agrees with I on everything that is
// spiral-at-most the spiral-max of I; equivalently J refines I outward.
inline bool diamond_leq(Mask i_set, Mask j_set, const PrecOrder& ord) {
  if (popcount(i_set) != popcount(j_set)) throw std::invalid_argument("diamond_leq: size mismatch");
  if (i_set == 0) return true;
  const int top_rank = ord.rank_of[static_cast<std::size_t>(prec_max(i_set, ord))];
  Mask early = 0;
  for (int r = 1; r <= top_rank; ++r) early |= bit_of(ord.by_rank[static_cast<std::size_t>(r)]);
  return (j_set & i_set) == (j_set & early);
}

}  // namespace positroids
