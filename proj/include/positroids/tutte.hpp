#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bivariate_poly.hpp"
#include "dyck.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "positroid.hpp"
#include "set_family.hpp"
#include "subset.hpp"

namespace positroids {

// Cheapest n-set meeting I in at least r elements, greedily in spiral order:
// the r spiral-smallest elements of I, topped up with the spiral-smallest
// elements not already chosen.
inline Mask rank_witness_set(Mask subset, int r, int n, const PrecOrder& ord) {
  if (r < 0 || r > n || r > popcount(subset))
    throw std::invalid_argument("rank_witness_set: depth out of range");
  Mask witness = 0;
  int taken = 0;
  for (int x : prec_sort(subset, ord)) {
    if (taken == r) break;
    witness |= bit_of(x);
    ++taken;
  }
  int filled = 0;
  for (int rank = 1; rank <= 2 * n && filled < n - r; ++rank) {
    const int x = ord.by_rank[static_cast<std::size_t>(rank)];
    if (!has_element(witness, x)) {
      witness |= bit_of(x);
      ++filled;
    }
  }
  return witness;
}

inline Permutation rank_witness_permutation(Mask subset, int r, int n) {
  return maximal_permutation(rank_witness_set(subset, r, n, prec_order(n)), n);
}

// Matroid rank of an arbitrary column set in the interval positroid of w:
// the largest r whose witness set is itself a basis.
inline int positroid_rank(const Permutation& w, Mask subset) {
  const int n = w.size();
  if (subset & ~full_mask(2 * n)) throw std::invalid_argument("positroid_rank: subset outside [2n]");
  const PrecOrder ord = prec_order(n);
  for (int r = std::min(n, popcount(subset)); r >= 1; --r)
    if (positroid_member(w, rank_witness_set(subset, r, n, ord))) return r;
  return 0;
}

// Path statistics read off a subset directly. initial_segment counts how far
// the spiral order stays inside the set; return_count counts the depths j at
// which the mirrored window [n-j+2, n+j] holds exactly j-1 elements (the
// associated path returns to the axis there); complement_final_segment
// measures the spiral tail avoided by the set.
struct SubsetStats {
  int initial_segment = 0;
  int return_count = 0;
  int complement_final_segment = 0;
};

inline SubsetStats subset_stats(Mask subset, int n) {
  if (subset & ~full_mask(2 * n)) throw std::invalid_argument("subset_stats: subset outside [2n]");
  const PrecOrder ord = prec_order(n);
  SubsetStats st;
  for (int rank = 1; rank <= 2 * n; ++rank) {
    if (!has_element(subset, ord.by_rank[static_cast<std::size_t>(rank)])) break;
    ++st.initial_segment;
  }
  for (int j = 1; j <= n; ++j)
    if (popcount(subset & interval_mask(n - j + 2, n + j)) == j - 1) ++st.return_count;
  for (int rank = 2 * n; rank >= 1; --rank) {
    if (has_element(subset, ord.by_rank[static_cast<std::size_t>(rank)])) break;
    ++st.complement_final_segment;
  }
  return st;
}

// Tutte polynomial of the size-n reversal positroid, summed over paths with
// half length n + 1: x^(first peak height - 1) * y^(axis returns - 1).
inline BivariatePoly catalan_tutte(int n) {
  if (n < 0) throw std::invalid_argument("catalan_tutte: negative size");
  BivariatePoly total;
  for_each_dyck_path(n + 1, [&](const DyckPath& d) {
    total += BivariatePoly::monomial(initial_rise(d) - 1, axis_returns(d) - 1);
  });
  return total;
}

// Same polynomial summed over the positroid itself with the subset
// statistics as exponents.
inline BivariatePoly catalan_tutte_by_stats(int n) {
  BivariatePoly total;
  for (Mask m : reversal_positroid_by_cuts(n).members) {
    const SubsetStats st = subset_stats(m, n);
    total += BivariatePoly::monomial(st.initial_segment, st.return_count);
  }
  return total;
}

// Factor contributed by one run of anti-fixed points: the full polynomial
// when the run is everything, one variable specialized to 1 when the run
// misses an end of [n], and the plain basis count when it misses both.
inline BivariatePoly run_tutte_factor(Mask run, int n) {
  const std::vector<int> xs = elements_of(run);
  const int k = static_cast<int>(xs.size());
  if (k == 0 || xs.back() - xs.front() + 1 != k || xs.front() < 1 || xs.back() > n)
    throw std::invalid_argument("run_tutte_factor: need a nonempty interval inside [n]");
  const bool touches_low = xs.front() == 1;
  const bool touches_high = xs.back() == n;
  const BivariatePoly t = catalan_tutte(k);
  if (touches_low && touches_high) return t;
  if (touches_low) return t.substitute_y(1);
  if (touches_high) return t.substitute_x(1);
  return BivariatePoly::constant(t.evaluate(1, 1));
}

// Product of the run factors of a 123-avoiding permutation.
inline BivariatePoly run_tutte_product(const Permutation& v) {
  if (!avoids_123(v))
    throw std::domain_error("run_tutte_product: defined only for 123-avoiding permutations");
  BivariatePoly total = BivariatePoly::constant(1);
  for (const auto& [a, b] : classify_positions(v).runs)
    total *= run_tutte_factor(interval_mask(a, b), v.size());
  return total;
}

// Closed form for the Tutte polynomial of the interval positroid of w: the
// full reversal factor plus the corrected sum of run products over all
// 123-avoiding words strictly between w and the reversal.
inline BivariatePoly positroid_tutte(const Permutation& w) {
  const int n = w.size();
  const Permutation w0 = Permutation::reversal(n);
  BivariatePoly total = run_tutte_product(w0);
  const BivariatePoly corrector =
      BivariatePoly::constant(1) -
      (BivariatePoly::x() - BivariatePoly::constant(1)) * (BivariatePoly::y() - BivariatePoly::constant(1));
  BivariatePoly middle;
  for (const Permutation& v : permutations_avoiding_123(n))
    if (v != w0 && bruhat_leq(w, v)) middle += run_tutte_product(v);
  total += corrector * middle;
  return total;
}

// Signed sum of Tutte polynomials over everything above w, inclusion
// exclusion style.
inline BivariatePoly bruhat_alternating_tutte_sum(const Permutation& w) {
  const int n = w.size();
  BivariatePoly total;
  const long long base_length = w.inversions();
  for_each_permutation(n, [&](const Permutation& v) {
    if (!bruhat_leq(w, v)) return;
    const BivariatePoly t = positroid_tutte(v);
    if ((v.inversions() - base_length) % 2 == 0)
      total += t;
    else
      total -= t;
  });
  return total;
}

// What the signed sum collapses to: the full reversal polynomial at the top,
// the corrected run product for other 123-avoiding words, zero otherwise.
inline BivariatePoly expected_alternating_sum(const Permutation& w) {
  const int n = w.size();
  if (w == Permutation::reversal(n)) return catalan_tutte(n);
  if (!avoids_123(w)) return BivariatePoly();
  const BivariatePoly corrector =
      BivariatePoly::constant(1) -
      (BivariatePoly::x() - BivariatePoly::constant(1)) * (BivariatePoly::y() - BivariatePoly::constant(1));
  return corrector * run_tutte_product(w);
}

}  // namespace positroids
