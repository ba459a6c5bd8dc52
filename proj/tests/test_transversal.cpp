#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <stdexcept>
#include <vector>

#include "positroids/errors.hpp"
#include "positroids/permutation.hpp"
#include "positroids/transversal.hpp"

using namespace positroids;

namespace {

SupportPattern pattern_of(int rows, int cols, const std::vector<std::vector<int>>& supports) {
  std::vector<Mask> masks;
  for (const auto& s : supports) masks.push_back(mask_from_elements(s));
  return make_pattern(rows, cols, std::move(masks));
}

}  // namespace

TEST_CASE("support patterns") {
  const SupportPattern p = pattern_of(2, 4, {{2, 3}, {1, 2, 3, 4}});
  CHECK(p.star_at(1, 2));
  CHECK_FALSE(p.star_at(1, 1));
  CHECK(p.to_grid() == "0 * * 0\n* * * *\n");
  CHECK(SupportPattern::from_grid(p.to_grid()) == p);
  CHECK(SupportPattern::from_grid("*0\n 0 *  \n") == pattern_of(2, 2, {{1}, {2}}));
  CHECK_THROWS_AS(SupportPattern::from_grid("* 0\n*\n"), std::invalid_argument);
  CHECK_THROWS_AS(SupportPattern::from_grid("* x\n"), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern(1, 2, {mask_from_elements({3})}), std::invalid_argument);
  CHECK_THROWS_AS(make_pattern(2, 2, {Mask{0}}), std::invalid_argument);
}

TEST_CASE("interval pattern of a permutation") {
  // Row i is supported on the column interval [w(i), i+n].
  const SupportPattern p = interval_pattern(Permutation::parse("21"));
  CHECK(p.rows == 2);
  CHECK(p.cols == 4);
  CHECK(p.row_support[0] == interval_mask(2, 3));
  CHECK(p.row_support[1] == interval_mask(1, 4));
}

TEST_CASE("matching rank") {
  const SupportPattern p = pattern_of(3, 4, {{1, 2}, {1, 2}, {3}});
  CHECK(rank_of(p, full_mask(4)) == 3);
  CHECK(rank_of(p, mask_from_elements({1, 2})) == 2);
  CHECK(rank_of(p, mask_from_elements({1})) == 1);
  CHECK(rank_of(p, mask_from_elements({4})) == 0);
  CHECK(rank_of(p, 0) == 0);

  // Three rows squeezed through two columns: rank stalls at 2.
  const SupportPattern q = pattern_of(3, 3, {{1, 2}, {1, 2}, {1, 2}});
  CHECK(rank_of(q, full_mask(3)) == 2);

  SECTION("rank is monotone and submodular") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int cols = 4 + static_cast<int>(rng() % 4);
      const int rows = 1 + static_cast<int>(rng() % 4);
      std::vector<Mask> supports;
      for (int r = 0; r < rows; ++r) {
        Mask m = rng() & full_mask(cols);
        if (!m) m = bit_of(1 + static_cast<int>(rng() % cols));
        supports.push_back(m);
      }
      const SupportPattern s = make_pattern(rows, cols, supports);
      const Mask a = rng() & full_mask(cols);
      const Mask b = rng() & full_mask(cols);
      CHECK(rank_of(s, a & b) <= rank_of(s, a));
      CHECK(rank_of(s, a) <= rank_of(s, a | b));
      CHECK(rank_of(s, a | b) + rank_of(s, a & b) <= rank_of(s, a) + rank_of(s, b));
      CHECK(rank_of(s, a) <= popcount(a));
      CHECK(rank_of(s, a) <= rows);
    }
  }
}

TEST_CASE("basis enumeration") {
  const SetFamily bases = enumerate_bases(interval_pattern(Permutation::parse("21")));
  CHECK(bases.size() == 5);
  CHECK(bases.contains(mask_from_elements({1, 2})));
  CHECK(bases.contains(mask_from_elements({2, 4})));
  CHECK_FALSE(bases.contains(mask_from_elements({1, 4})));

  // Bases of any transversal pattern satisfy exchange.
  CHECK(check_basis_exchange(bases));

  // A rank-deficient pattern still has bases, of the smaller size.
  const SetFamily small = enumerate_bases(pattern_of(3, 3, {{1, 2}, {1, 2}, {1, 2}}));
  CHECK(small.size() == 1);
  CHECK(small.contains(mask_from_elements({1, 2})));

  CHECK_THROWS_AS(enumerate_bases(pattern_of(1, 2, {{1, 2}}), 0), resource_error);
}

TEST_CASE("row-saturating column sets") {
  // Unlike bases, these must cover every row, and there are rows-many slots
  // plus free columns to fill out the set size.
  const SupportPattern p = pattern_of(2, 4, {{2, 3}, {1, 2, 3, 4}});
  const SetFamily full = full_transversal_sets(p);
  for (Mask m : full.members) {
    CHECK(popcount(m) == 2);
    CHECK(rank_of(p, m) == 2);
  }
  CHECK(full == enumerate_bases(p));  // equal when rank == rows == set size

  // Rank-deficient pattern: no column set saturates all three rows.
  const SetFamily none = full_transversal_sets(pattern_of(3, 3, {{1, 2}, {1, 2}, {1, 2}}));
  CHECK(none.size() == 0);
}

TEST_CASE("corank-nullity polynomial") {
  // A pattern with a single row starred everywhere on two columns is a
  // two-point rank-one uniform matroid.
  const BivariatePoly t = tutte_by_rank(pattern_of(1, 2, {{1, 2}}));
  CHECK(t == BivariatePoly::x() + BivariatePoly::y());

  // A coloop alone: x. A loop alone: y.
  CHECK(tutte_by_rank(pattern_of(1, 1, {{1}})) == BivariatePoly::x());
  const SupportPattern loop = pattern_of(1, 2, {{1}});
  CHECK(tutte_by_rank(loop) == BivariatePoly::x() * BivariatePoly::y());

  CHECK_THROWS_AS(tutte_by_rank(pattern_of(1, 2, {{1, 2}}), 1), resource_error);

  SECTION("evaluation at (1,1) counts bases, at (2,2) counts all subsets") {
    const SupportPattern p = interval_pattern(Permutation::parse("321"));
    const BivariatePoly t2 = tutte_by_rank(p);
    CHECK(t2.evaluate(1, 1) == static_cast<long long>(enumerate_bases(p).size()));
    CHECK(t2.evaluate(2, 2) == 64);  // 2^6 subsets of the ground set
  }
}

TEST_CASE("dual family") {
  const SetFamily bases = enumerate_bases(interval_pattern(Permutation::parse("21")));
  const SetFamily dual = dual_family(bases);
  CHECK(dual.size() == bases.size());
  CHECK(dual.contains(mask_from_elements({3, 4})));   // complement of {1,2}
  CHECK(check_basis_exchange(dual));
  CHECK(dual_family(dual) == bases);
  CHECK_THROWS_AS(dual_family(SetFamily{3, {}}), std::invalid_argument);
}

TEST_CASE("relabeling isomorphism search") {
  const SetFamily bases = enumerate_bases(interval_pattern(Permutation::parse("21")));
  SECTION("identity when families match") {
    const auto iso = find_isomorphism(bases, bases);
    REQUIRE(iso.has_value());
    CHECK(relabel(bases, *iso) == bases);
  }
  SECTION("detects a shuffled copy") {
    const Permutation sigma = Permutation::parse("3142");
    const auto iso = find_isomorphism(bases, relabel(bases, sigma));
    REQUIRE(iso.has_value());
    CHECK(relabel(bases, *iso) == relabel(bases, sigma));
  }
  SECTION("reports failure when counts differ") {
    const SetFamily other = family_from_members(4, {mask_from_elements({1, 2})});
    CHECK_FALSE(find_isomorphism(bases, other).has_value());
  }
  SECTION("ground size mismatch is a usage error") {
    CHECK_THROWS_AS(find_isomorphism(bases, SetFamily{3, {}}), std::invalid_argument);
  }
}

TEST_CASE("column shifts on patterns") {
  // A star moves from column i to column j in rows where j is unstarred.
  const SupportPattern p = pattern_of(2, 3, {{1, 2}, {1}});
  const SupportPattern s = shift_pattern(1, 3, p);
  CHECK(s.row_support[0] == mask_from_elements({2, 3}));
  CHECK(s.row_support[1] == mask_from_elements({3}));
  // Rows already starred at j keep both stars minus nothing: no move.
  const SupportPattern q = pattern_of(1, 3, {{1, 3}});
  CHECK(shift_pattern(1, 3, q) == q);
  // Per-row star counts never change.
  for (int r = 0; r < 2; ++r) CHECK(popcount(s.row_support[r]) == popcount(p.row_support[r]));
}
