#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dyck.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "set_family.hpp"
#include "subset.hpp"
#include "transversal.hpp"

namespace positroids {

// Membership word of an n-subset I of [2n]: entries above n sit at the
// position they point to (value x at position x - n), and the entries of I
// that are at most n fill the remaining positions in decreasing order.
// I belongs to the interval positroid of w exactly when w <= this word.
inline InjectiveWord membership_word(Mask subset, int n) {
  if (popcount(subset) != n || (subset & ~full_mask(2 * n)))
    throw std::invalid_argument("membership_word: need an n-subset of [2n]");
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  std::vector<int> small;
  for (int x : elements_of(subset)) {
    if (x > n)
      word[static_cast<std::size_t>(x - n) - 1] = x;
    else
      small.push_back(x);
  }
  std::sort(small.rbegin(), small.rend());
  std::size_t next = 0;
  for (auto& entry : word)
    if (entry == 0) entry = small[next++];
  return InjectiveWord(std::move(word));
}

// Largest permutation in S_n lying below the word in the prefix-sort order:
// keep entry v(j) when v(j) <= n - j + #{i <= j : v(i) <= v(j)}, then fill
// the freed positions with the unused values of [n] in decreasing order.
inline Permutation meet_with_reversal(const InjectiveWord& v, int n) {
  if (v.size() != n) throw std::invalid_argument("meet_with_reversal: word length must be n");
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int j = 1; j <= n; ++j) {
    int below = 0;
    for (int i = 1; i <= j; ++i)
      if (v(i) <= v(j)) ++below;
    if (v(j) <= n - j + below) {
      entries[static_cast<std::size_t>(j) - 1] = v(j);
      if (v(j) > n || used[static_cast<std::size_t>(v(j))])
        throw std::logic_error("meet_with_reversal: kept entries are not a partial permutation");
      used[static_cast<std::size_t>(v(j))] = true;
    }
  }
  int fill = n;
  for (auto& entry : entries) {
    if (entry != 0) continue;
    while (used[static_cast<std::size_t>(fill)]) --fill;
    entry = fill;
    used[static_cast<std::size_t>(fill)] = true;
  }
  return Permutation(std::move(entries));
}

// Same permutation computed by the shortcut available for membership words:
// keep v(j) exactly when v(j) <= n - j + 1.
inline Permutation maximal_permutation(Mask subset, int n) {
  const InjectiveWord v = membership_word(subset, n);
  std::vector<int> entries(static_cast<std::size_t>(n), 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int j = 1; j <= n; ++j) {
    if (v(j) <= n - j + 1) {
      entries[static_cast<std::size_t>(j) - 1] = v(j);
      used[static_cast<std::size_t>(v(j))] = true;
    }
  }
  int fill = n;
  for (auto& entry : entries) {
    if (entry != 0) continue;
    while (used[static_cast<std::size_t>(fill)]) --fill;
    entry = fill;
    used[static_cast<std::size_t>(fill)] = true;
  }
  return Permutation(std::move(entries));
}

inline bool positroid_member(const Permutation& w, Mask subset) {
  return bruhat_leq(w.entries(), membership_word(subset, w.size()).entries());
}

// Bases of the interval positroid of the reversal permutation in S_k, cut out
// by the inequalities #(I cap [k-j+1, k+j]) >= j for all j in [k].
inline SetFamily reversal_positroid_by_cuts(int k) {
  if (k < 1 || 2 * k > kMaxGround) throw std::invalid_argument("reversal_positroid_by_cuts: bad size");
  std::vector<Mask> members;
  for_each_subset_of_size(2 * k, k, [&](Mask m) {
    for (int j = 1; j <= k; ++j)
      if (popcount(m & interval_mask(k - j + 1, k + j)) < j) return;
    members.push_back(m);
  });
  return family_from_members(2 * k, std::move(members));
}

// Column relabeling between path steps and ground-set elements: step 2k maps
// to n + k and step 2k + 1 maps to n - k + 1, for steps in [2, 2n+1]. This
// lists the spiral order by rank.
inline int catalan_column_map(int step, int n) {
  if (step < 2 || step > 2 * n + 1) throw std::invalid_argument("catalan_column_map: step out of range");
  return step % 2 == 0 ? n + step / 2 : n - (step - 1) / 2 + 1;
}

// Same family built from paths: drop the forced first up-step of each path
// with half length n + 1 and push the remaining up-steps through the column
// relabeling.
inline SetFamily reversal_positroid_by_paths(int n) {
  if (n < 1 || 2 * n + 2 > kMaxGround) throw std::invalid_argument("reversal_positroid_by_paths: bad size");
  std::vector<Mask> members;
  for_each_dyck_path(n + 1, [&](const DyckPath& d) {
    Mask m = 0;
    for (int s : elements_of(d.up_steps()))
      if (s != 1) m |= bit_of(catalan_column_map(s, n));
    members.push_back(m);
  });
  return family_from_members(2 * n, std::move(members));
}

// Image of the first j elements of K = {x_1 < ... < x_k} under mirroring into
// both halves of [2n]: the columns n - x_i + 1 and n + x_i for i <= j.
// (Defined in subset.hpp as z_segment.)

// Copy of the size-k reversal positroid living on the mirrored columns of K:
// push each basis through the increasing bijection [2k] -> z_segment(K, k, n).
inline SetFamily embedded_catalan_family(Mask k_set, int n) {
  const int k = popcount(k_set);
  if (k == 0) throw std::invalid_argument("embedded_catalan_family: empty position set");
  const std::vector<int> target = elements_of(z_segment(k_set, k, n));
  const SetFamily base = reversal_positroid_by_cuts(k);
  std::vector<Mask> members;
  members.reserve(base.members.size());
  for (Mask m : base.members) {
    Mask image = 0;
    for (int t : elements_of(m)) image |= bit_of(target[static_cast<std::size_t>(t) - 1]);
    members.push_back(image);
  }
  return family_from_members(2 * n, std::move(members));
}

// The leftover piece of the interval positroid of v after removing every
// positroid strictly above it: a direct sum of embedded reversal positroids
// over the runs of anti-fixed points, one fixed set of values at the
// minima-only positions, and one fixed set of shifted maxima-only positions.
// Empty when v has an increasing subsequence of length three.
inline SetFamily decomposition_piece(const Permutation& v) {
  const int n = v.size();
  if (!avoids_123(v)) return SetFamily{2 * n, {}};
  const PositionClasses cls = classify_positions(v);
  std::vector<SetFamily> parts;
  Mask minima_values = 0;
  for (int i : cls.only_minima) minima_values |= bit_of(v(i));
  Mask maxima_shifted = 0;
  for (int i : cls.only_maxima) maxima_shifted |= bit_of(n + i);
  parts.push_back(SetFamily{2 * n, {minima_values}});
  parts.push_back(SetFamily{2 * n, {maxima_shifted}});
  for (const auto& [a, b] : cls.runs) parts.push_back(embedded_catalan_family(interval_mask(a, b), n));
  return direct_sum(parts);
}

// Support pattern presenting the leftover piece as a transversal matroid:
// minima-only rows see one value column, maxima-only rows see one shifted
// column, and the j-th row of an anti-fixed run sees its mirrored columns.
inline SupportPattern piece_pattern(const Permutation& v) {
  const int n = v.size();
  if (!avoids_123(v))
    throw std::domain_error("piece_pattern: defined only for 123-avoiding permutations");
  const PositionClasses cls = classify_positions(v);
  std::vector<Mask> support(static_cast<std::size_t>(n), 0);
  for (int i : cls.only_minima) support[static_cast<std::size_t>(i) - 1] = bit_of(v(i));
  for (int i : cls.only_maxima) support[static_cast<std::size_t>(i) - 1] = bit_of(n + i);
  for (const auto& [a, b] : cls.runs) {
    const Mask run = interval_mask(a, b);
    for (int i = a; i <= b; ++i)
      support[static_cast<std::size_t>(i) - 1] = z_segment(run, i - a + 1, n);
  }
  return make_pattern(n, 2 * n, std::move(support));
}

enum class PwStrategy {
  VWordFilter,  // scan all n-subsets, keep those whose membership word dominates w
  QUnion,       // assemble the leftover pieces of all 123-avoiding words above w
};

inline SetFamily positroid_bases(const Permutation& w, PwStrategy strategy = PwStrategy::VWordFilter,
                                 int max_n = 7) {
  const int n = w.size();
  if (n > max_n)
    throw resource_error("positroid_bases: size " + std::to_string(n) + ", bound is " +
                         std::to_string(max_n));
  std::vector<Mask> members;
  if (strategy == PwStrategy::VWordFilter) {
    for_each_subset_of_size(2 * n, n, [&](Mask m) {
      if (positroid_member(w, m)) members.push_back(m);
    });
  } else {
    for (const Permutation& v : permutations_avoiding_123(n)) {
      if (!bruhat_leq(w, v)) continue;
      const SetFamily piece = decomposition_piece(v);
      members.insert(members.end(), piece.members.begin(), piece.members.end());
    }
  }
  return family_from_members(2 * n, std::move(members));
}

// Window of values f(1..2n) with f(j + 2n) = f(j) + 2n and j <= f(j) <= j + 2n:
// the first half rises by n, the second half carries the permutation shifted
// up by a full period.
struct AffinePermutation {
  int period = 0;
  std::vector<int> window;

  long long operator()(long long j) const {
    long long shift = 0;
    long long pos = j;
    while (pos < 1) {
      pos += period;
      shift -= period;
    }
    while (pos > period) {
      pos -= period;
      shift += period;
    }
    return window[static_cast<std::size_t>(pos) - 1] + shift;
  }

  bool operator==(const AffinePermutation&) const = default;

  std::string to_string() const { return detail::format_word(window); }
};

inline AffinePermutation bounded_affine_permutation(const Permutation& w) {
  const int n = w.size();
  AffinePermutation f;
  f.period = 2 * n;
  f.window.resize(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) f.window[static_cast<std::size_t>(i) - 1] = i + n;
  for (int i = n + 1; i <= 2 * n; ++i) f.window[static_cast<std::size_t>(i) - 1] = w(i - n) + 2 * n;
  return f;
}

// State of the ball-throwing schedule just before time i: the landing times
// (relative to i) of balls thrown at the previous period that are still
// airborne. Always an n-subset of [2n] for windows coming from
// bounded_affine_permutation.
inline std::vector<Mask> juggling_states(const AffinePermutation& f) {
  const int period = f.period;
  std::vector<Mask> states;
  states.reserve(static_cast<std::size_t>(period));
  for (int i = 1; i <= period; ++i) {
    Mask state = 0;
    for (long long j = i - period; j <= i - 1; ++j) {
      const long long landing = f(j);
      if (landing >= i) state |= bit_of(static_cast<int>(landing - i + 1));
    }
    states.push_back(state);
  }
  return states;
}

// Componentwise comparison of equal-size subsets through their sorted lists.
inline bool gale_leq(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) throw std::invalid_argument("gale_leq: size mismatch");
  const std::vector<int> xs = elements_of(a);
  const std::vector<int> ys = elements_of(b);
  for (std::size_t t = 0; t < xs.size(); ++t)
    if (xs[t] > ys[t]) return false;
  return true;
}

inline Mask rotate_subset(Mask subset, int amount, int period) {
  Mask out = 0;
  for (int x : elements_of(subset)) {
    int shifted = (x - 1 + amount) % period;
    if (shifted < 0) shifted += period;
    out |= bit_of(shifted + 1);
  }
  return out;
}

// Membership via the schedule route: I belongs to the positroid exactly when
// every cyclic rotation of I dominates the matching juggling state.
inline bool positroid_member_by_juggling(const Permutation& w, Mask subset) {
  const int n = w.size();
  if (popcount(subset) != n || (subset & ~full_mask(2 * n)))
    throw std::invalid_argument("positroid_member_by_juggling: need an n-subset of [2n]");
  const std::vector<Mask> states = juggling_states(bounded_affine_permutation(w));
  for (int i = 1; i <= 2 * n; ++i)
    if (!gale_leq(states[static_cast<std::size_t>(i) - 1], rotate_subset(subset, -(i - 1), 2 * n)))
      return false;
  return true;
}

// Mirror every element x to ground + 1 - x.
inline SetFamily reflect_family(const SetFamily& fam) {
  return relabel(fam, Permutation::reversal(fam.ground));
}

// Reflecting the ground set carries the positroid of w to the positroid of
// this permutation.
inline Permutation conjugate_by_reversal(const Permutation& w) {
  const Permutation w0 = Permutation::reversal(w.size());
  return w0.after(w.inverse()).after(w0);
}

// Swap the two halves of [2n]: x <-> x + n.
inline Permutation block_swap_permutation(int n) {
  std::vector<int> e(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= n; ++i) {
    e[static_cast<std::size_t>(i) - 1] = i + n;
    e[static_cast<std::size_t>(i + n) - 1] = i;
  }
  return Permutation(std::move(e));
}

}  // namespace positroids
