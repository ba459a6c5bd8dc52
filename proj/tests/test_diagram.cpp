#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "positroids/catalan.hpp"
#include "positroids/diagram.hpp"
#include "positroids/positroid.hpp"

using namespace positroids;

TEST_CASE("inversion diagrams") {
  using Cells = std::vector<std::pair<int, int>>;
  CHECK(rothe_diagram(Permutation::parse("31524")) ==
        Cells{{1, 1}, {1, 2}, {3, 2}, {3, 4}});
  CHECK(rothe_diagram(Permutation::identity(4)).empty());
  CHECK(rothe_diagram(Permutation::parse("21")) == Cells{{1, 1}});

  SECTION("cell count equals the inversion count") {
    for_each_permutation(5, [&](const Permutation& w) {
      CHECK(static_cast<long long>(rothe_diagram(w).size()) == w.inversions());
    });
  }
}

TEST_CASE("diagram patterns") {
  const SupportPattern p = diagram_pattern(Permutation::parse("31524"));
  CHECK(p.rows == 5);
  CHECK(p.cols == 10);
  CHECK(p.row_support[0] == mask_from_elements({3, 4, 5, 6}));
  CHECK(p.row_support[1] == mask_from_elements({1, 2, 3, 4, 5, 7}));
  CHECK(p.row_support[2] == mask_from_elements({1, 3, 5, 8}));
  CHECK(p.row_support[3] == mask_from_elements({1, 2, 3, 4, 5, 9}));
  CHECK(p.row_support[4] == mask_from_elements({1, 2, 3, 4, 5, 10}));

  // The identity block keeps every row matchable on its own column.
  for_each_permutation(4, [&](const Permutation& w) {
    CHECK(rank_of(diagram_pattern(w), full_mask(8)) == 4);
  });
}

TEST_CASE("diagram matroid bases") {
  // No inversions, no removed cells: every 2-subset of the four columns works.
  CHECK(diagram_matroid_bases(Permutation::identity(2)).size() == 6);
  CHECK(diagram_matroid_bases(Permutation::parse("21")).size() == 5);
  CHECK(check_basis_exchange(diagram_matroid_bases(Permutation::parse("31524"))));
  CHECK_THROWS_AS(diagram_matroid_bases(Permutation::identity(8)), resource_error);
}

TEST_CASE("column compression toward the diagram") {
  const Permutation w21 = Permutation::parse("21");
  SECTION("support-level equality fails even for a single inversion") {
    // Compression preserves per-row star counts, so it cannot erase the
    // diagram cell deficit; the patterns differ at a concrete cell.
    const SupportPattern shifted = permutation_shift_pattern(w21, interval_pattern(w21));
    const SupportPattern target = diagram_pattern(w21);
    CHECK(shifted != target);
    CHECK(shifted.star_at(2, 3) != target.star_at(2, 3));
  }

  SECTION("basis-level equality holds for a single inversion") {
    const SupportPattern shifted = permutation_shift_pattern(w21, interval_pattern(w21));
    CHECK(full_transversal_sets(shifted) == full_transversal_sets(diagram_pattern(w21)));
  }

  SECTION("family compression matches pattern compression on bases") {
    for_each_permutation(3, [&](const Permutation& w) {
      const SetFamily by_family = permutation_shift_family(w, positroid_bases(w));
      const SetFamily by_pattern =
          full_transversal_sets(permutation_shift_pattern(w, interval_pattern(w)));
      CHECK(by_family == by_pattern);
    });
  }

  CHECK_THROWS_AS(permutation_shift_pattern(w21, interval_pattern(Permutation::parse("321"))),
                  std::invalid_argument);
  CHECK_THROWS_AS(permutation_shift_family(w21, SetFamily{6, {}}), std::invalid_argument);
}

TEST_CASE("conjecture surveys") {
  SECTION("basis count observation") {
    const ConjectureReport r = check_conjecture(Conjecture::BasisCount, 4);
    CHECK(r.checked == 24);
    CHECK(r.agreements == 24);
    CHECK(r.failures.empty());
  }

  SECTION("tutte polynomial observation") {
    const ConjectureReport r = check_conjecture(Conjecture::TuttePolynomial, 3);
    CHECK(r.checked == 6);
    CHECK(r.agreements == 6);
  }

  SECTION("shift observation") {
    const ConjectureReport r = check_conjecture(Conjecture::ShiftEquality, 4);
    CHECK(r.agreements == r.checked);
  }

  SECTION("isomorphism observation stays trivial below pattern length") {
    const ConjectureReport r = check_conjecture(Conjecture::Isomorphism, 3);
    CHECK(r.checked == 6);
    CHECK(r.agreements == 6);
  }

  SECTION("failures are reported, never thrown") {
    // Whatever the outcome, the report structure stays well formed.
    const ConjectureReport r = check_conjecture(Conjecture::BasisCount, 1);
    CHECK(r.checked == 1);
    CHECK(r.agreements + static_cast<long long>(r.failures.size()) == r.checked);
  }

  CHECK_THROWS_AS(check_conjecture(Conjecture::BasisCount, 9), resource_error);
  CHECK_THROWS_AS(check_conjecture(Conjecture::Isomorphism, 6), resource_error);
  CHECK_THROWS_AS(check_conjecture(Conjecture::BasisCount, 0), resource_error);
}
