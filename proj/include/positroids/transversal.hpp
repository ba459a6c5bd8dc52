#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bivariate_poly.hpp"
#include "errors.hpp"
#include "permutation.hpp"
#include "set_family.hpp"
#include "subset.hpp"

namespace positroids {

// Zero/nonzero support of a rows x cols matrix whose nonzero entries are
// generic: row_support[i] holds the columns where row i+1 is nonzero.
struct SupportPattern {
  int rows = 0;
  int cols = 0;
  std::vector<Mask> row_support;

  bool star_at(int row, int col) const {
    return has_element(row_support[static_cast<std::size_t>(row) - 1], col);
  }

  bool operator==(const SupportPattern&) const = default;

  // One line per row, entries '*' or '0' separated by single spaces.
  std::string to_grid() const {
    std::string s;
    for (int r = 1; r <= rows; ++r) {
      for (int c = 1; c <= cols; ++c) {
        if (c > 1) s += ' ';
        s += star_at(r, c) ? '*' : '0';
      }
      s += '\n';
    }
    return s;
  }

  static SupportPattern from_grid(std::string_view text) {
    SupportPattern p;
    Mask current = 0;
    int col = 0;
    bool row_started = false;
    auto end_row = [&] {
      if (!row_started) return;
      if (p.rows == 0) {
        p.cols = col;
      } else if (col != p.cols) {
        throw std::invalid_argument("from_grid: ragged rows");
      }
      p.row_support.push_back(current);
      ++p.rows;
      current = 0;
      col = 0;
      row_started = false;
    };
    for (char c : text) {
      if (c == '\n') {
        end_row();
      } else if (c == '*' || c == '0') {
        ++col;
        row_started = true;
        if (c == '*') current |= bit_of(col);
      } else if (c != ' ' && c != '\t' && c != '\r') {
        throw std::invalid_argument("from_grid: entries must be '*' or '0'");
      }
    }
    end_row();
    return p;
  }
};

inline SupportPattern make_pattern(int rows, int cols, std::vector<Mask> row_support) {
  if (rows < 0 || cols < 0 || cols > kMaxGround) throw std::invalid_argument("make_pattern: bad dimensions");
  if (static_cast<int>(row_support.size()) != rows)
    throw std::invalid_argument("make_pattern: row count mismatch");
  for (Mask m : row_support)
    if (m & ~full_mask(cols)) throw std::invalid_argument("make_pattern: support outside columns");
  return SupportPattern{rows, cols, std::move(row_support)};
}

// n x 2n pattern whose row i is supported on the column interval
// [w(i), i + n].
inline SupportPattern interval_pattern(const Permutation& w) {
  const int n = w.size();
  std::vector<Mask> support;
  support.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) support.push_back(interval_mask(w(i), i + n));
  return make_pattern(n, 2 * n, std::move(support));
}

namespace detail {

// One augmenting-path pass of bipartite matching: try to match column c.
inline bool try_augment(const SupportPattern& s, int c, std::vector<int>& row_owner,
                        std::vector<bool>& visited) {
  for (int r = 1; r <= s.rows; ++r) {
    if (visited[static_cast<std::size_t>(r)] || !s.star_at(r, c)) continue;
    visited[static_cast<std::size_t>(r)] = true;
    if (row_owner[static_cast<std::size_t>(r)] == 0 ||
        try_augment(s, row_owner[static_cast<std::size_t>(r)], row_owner, visited)) {
      row_owner[static_cast<std::size_t>(r)] = c;
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Rank of the column set in the matroid presented by the pattern: the largest
// number of chosen columns matchable to distinct rows through stars. Generic
// nonzero entries make matchability and linear independence coincide.
inline int rank_of(const SupportPattern& s, Mask columns) {
  if (columns & ~full_mask(s.cols)) throw std::invalid_argument("rank_of: column out of range");
  std::vector<int> row_owner(static_cast<std::size_t>(s.rows) + 1, 0);
  int rank = 0;
  for (int c : elements_of(columns)) {
    std::vector<bool> visited(static_cast<std::size_t>(s.rows) + 1, false);
    if (detail::try_augment(s, c, row_owner, visited)) ++rank;
  }
  return rank;
}

// All maximum-size matchable column sets. Guarded by a row bound because the
// scan is over all (cols choose rank) subsets.
inline SetFamily enumerate_bases(const SupportPattern& s, int max_rows = 7) {
  if (s.rows > max_rows)
    throw resource_error("enumerate_bases: pattern has " + std::to_string(s.rows) +
                         " rows, bound is " + std::to_string(max_rows));
  const int rank = rank_of(s, full_mask(s.cols));
  std::vector<Mask> bases;
  const bool full = rank == s.rows;
  for_each_subset_of_size(s.cols, rank, [&](Mask candidate) {
    if (full) {
      for (int r = 1; r <= s.rows; ++r)
        if ((s.row_support[static_cast<std::size_t>(r) - 1] & candidate) == 0) return;
    }
    if (rank_of(s, candidate) == rank) bases.push_back(candidate);
  });
  return family_from_members(s.cols, std::move(bases));
}

// Column sets of size exactly rows admitting a transversal that uses every
// row. Unlike enumerate_bases this is empty when the pattern does not have
// full row rank.
inline SetFamily full_transversal_sets(const SupportPattern& s, int max_rows = 7) {
  if (s.rows > max_rows)
    throw resource_error("full_transversal_sets: pattern has " + std::to_string(s.rows) +
                         " rows, bound is " + std::to_string(max_rows));
  std::vector<Mask> out;
  if (rank_of(s, full_mask(s.cols)) == s.rows) {
    for_each_subset_of_size(s.cols, s.rows, [&](Mask candidate) {
      for (int r = 1; r <= s.rows; ++r)
        if ((s.row_support[static_cast<std::size_t>(r) - 1] & candidate) == 0) return;
      if (rank_of(s, candidate) == s.rows) out.push_back(candidate);
    });
  }
  return family_from_members(s.cols, std::move(out));
}

// Corank-nullity sum over all column subsets, expanded into x and y.
inline BivariatePoly tutte_by_rank(const SupportPattern& s, int max_ground = 16) {
  if (s.cols > max_ground)
    throw resource_error("tutte_by_rank: pattern has " + std::to_string(s.cols) +
                         " columns, bound is " + std::to_string(max_ground));
  const int rank = rank_of(s, full_mask(s.cols));
  // counts[a][b] = number of subsets with corank a and nullity b
  std::vector<std::vector<long long>> counts(
      static_cast<std::size_t>(rank) + 1,
      std::vector<long long>(static_cast<std::size_t>(s.cols) + 1, 0));
  const Mask all = full_mask(s.cols);
  for (Mask sub = 0;; ++sub) {
    const int rk = rank_of(s, sub);
    ++counts[static_cast<std::size_t>(rank - rk)][static_cast<std::size_t>(popcount(sub) - rk)];
    if (sub == all) break;
  }
  const BivariatePoly xm1 = BivariatePoly::x() - BivariatePoly::constant(1);
  const BivariatePoly ym1 = BivariatePoly::y() - BivariatePoly::constant(1);
  BivariatePoly result;
  BivariatePoly xpow = BivariatePoly::constant(1);
  for (int a = 0; a <= rank; ++a) {
    BivariatePoly ypow = BivariatePoly::constant(1);
    for (int b = 0; b <= s.cols; ++b) {
      const long long c = counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (c != 0) result += xpow * ypow * BivariatePoly::constant(c);
      ypow *= ym1;
    }
    xpow *= xm1;
  }
  return result;
}

// Bases of the dual matroid: complements of bases within the ground set.
inline SetFamily dual_family(const SetFamily& fam) {
  if (fam.members.empty()) throw std::invalid_argument("dual_family: empty family");
  const Mask all = full_mask(fam.ground);
  std::vector<Mask> out;
  out.reserve(fam.members.size());
  for (Mask m : fam.members) out.push_back(all & ~m);
  return family_from_members(fam.ground, std::move(out));
}

// Ground-set bijection carrying one basis family onto the other, if any.
// Pruned backtracking: candidate images must preserve per-element basis
// counts and pairwise co-occurrence counts; a full relabel check confirms.
inline std::optional<Permutation> find_isomorphism(const SetFamily& from, const SetFamily& to,
                                                   int max_ground = 12) {
  if (from.ground != to.ground) throw std::invalid_argument("find_isomorphism: ground size mismatch");
  const int g = from.ground;
  if (g > max_ground)
    throw resource_error("find_isomorphism: ground size " + std::to_string(g) + ", bound is " +
                         std::to_string(max_ground));
  if (from.members.size() != to.members.size()) return std::nullopt;

  auto degree = [](const SetFamily& f, int x) {
    long long d = 0;
    for (Mask m : f.members)
      if (has_element(m, x)) ++d;
    return d;
  };
  auto pair_count = [](const SetFamily& f, int x, int y) {
    long long d = 0;
    const Mask need = bit_of(x) | bit_of(y);
    for (Mask m : f.members)
      if ((m & need) == need) ++d;
    return d;
  };

  std::vector<long long> deg_from(static_cast<std::size_t>(g) + 1), deg_to(static_cast<std::size_t>(g) + 1);
  for (int x = 1; x <= g; ++x) {
    deg_from[static_cast<std::size_t>(x)] = degree(from, x);
    deg_to[static_cast<std::size_t>(x)] = degree(to, x);
  }

  std::vector<int> image(static_cast<std::size_t>(g) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(g) + 1, false);

  auto rec = [&](auto&& self, int x) -> bool {
    if (x > g) {
      std::vector<int> entries(static_cast<std::size_t>(g));
      for (int i = 1; i <= g; ++i) entries[static_cast<std::size_t>(i) - 1] = image[static_cast<std::size_t>(i)];
      return relabel(from, Permutation(entries)) == to;
    }
    for (int y = 1; y <= g; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      if (deg_from[static_cast<std::size_t>(x)] != deg_to[static_cast<std::size_t>(y)]) continue;
      bool ok = true;
      for (int x2 = 1; x2 < x && ok; ++x2)
        if (pair_count(from, x2, x) != pair_count(to, image[static_cast<std::size_t>(x2)], y)) ok = false;
      if (!ok) continue;
      image[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = true;
      if (self(self, x + 1)) return true;
      used[static_cast<std::size_t>(y)] = false;
      image[static_cast<std::size_t>(x)] = 0;
    }
    return false;
  };

  if (!rec(rec, 1)) return std::nullopt;
  std::vector<int> entries(static_cast<std::size_t>(g));
  for (int i = 1; i <= g; ++i) entries[static_cast<std::size_t>(i) - 1] = image[static_cast<std::size_t>(i)];
  return Permutation(entries);
}

// Column compression on a pattern: in every row with a star in column i and
// none in column j, the star moves from i to j. Per-row star counts are
// preserved.
inline SupportPattern shift_pattern(int i, int j, const SupportPattern& s) {
  if (i < 1 || i > s.cols || j < 1 || j > s.cols || i == j)
    throw std::invalid_argument("shift_pattern: bad column pair");
  SupportPattern out = s;
  for (Mask& row : out.row_support)
    if (has_element(row, i) && !has_element(row, j)) row = (row & ~bit_of(i)) | bit_of(j);
  return out;
}

}  // namespace positroids
