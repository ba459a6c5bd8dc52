#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"
#include "positroid.hpp"
#include "set_family.hpp"
#include "subset.hpp"
#include "transversal.hpp"
#include "tutte.hpp"

namespace positroids {

// Cells (i, w(j)) with i < j and w(i) > w(j), in row-major order.
inline std::vector<std::pair<int, int>> rothe_diagram(const Permutation& w) {
  const int n = w.size();
  std::vector<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) cells.emplace_back(i, w(j));
  std::sort(cells.begin(), cells.end());
  return cells;
}

// n x 2n pattern [A | identity]: the left block has stars everywhere off the
// diagram cells, the right block is the identity.
inline SupportPattern diagram_pattern(const Permutation& w) {
  const int n = w.size();
  std::vector<Mask> support(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    support[static_cast<std::size_t>(i) - 1] = interval_mask(1, n) | bit_of(n + i);
  for (const auto& [i, j] : rothe_diagram(w))
    support[static_cast<std::size_t>(i) - 1] &= ~bit_of(j);
  return make_pattern(n, 2 * n, std::move(support));
}

inline SetFamily diagram_matroid_bases(const Permutation& w, int max_n = 7) {
  if (w.size() > max_n)
    throw resource_error("diagram_matroid_bases: size " + std::to_string(w.size()) +
                         ", bound is " + std::to_string(max_n));
  return enumerate_bases(diagram_pattern(w), max_n);
}

// shift_{n+1 -> w(1)} first, then shift_{n+2 -> w(2)}, and so on: the column
// compressions that push the interval pattern toward the diagram pattern.
inline SupportPattern permutation_shift_pattern(const Permutation& w, SupportPattern s) {
  const int n = w.size();
  if (s.cols != 2 * n) throw std::invalid_argument("permutation_shift_pattern: column count mismatch");
  for (int k = 1; k <= n; ++k) s = shift_pattern(n + k, w(k), s);
  return s;
}

inline SetFamily permutation_shift_family(const Permutation& w, SetFamily fam) {
  const int n = w.size();
  if (fam.ground != 2 * n) throw std::invalid_argument("permutation_shift_family: ground size mismatch");
  for (int k = 1; k <= n; ++k) fam = shift_family(n + k, w(k), fam);
  return fam;
}

enum class Conjecture {
  BasisCount,       // diagram matroid has as many bases as the weight sum predicts
  Isomorphism,      // diagram and interval matroids isomorphic iff w avoids 21354
  TuttePolynomial,  // their Tutte polynomials agree
  ShiftEquality,    // shifting the interval bases yields exactly the diagram bases
};

struct ConjectureCheck {
  std::string permutation;
  bool holds = false;
  std::string detail;
};

struct ConjectureReport {
  Conjecture conjecture = Conjecture::BasisCount;
  int n = 0;
  long long checked = 0;
  long long agreements = 0;
  std::vector<ConjectureCheck> failures;  // observations, never asserted
};

namespace detail {

inline long long predicted_basis_count(const Permutation& w) {
  long long total = 0;
  for (const Permutation& v : permutations_avoiding_123(w.size()))
    if (bruhat_leq(w, v)) total = checked_add(total, catalan_weight(v));
  return total;
}

}  // namespace detail

// Survey one statement over the whole symmetric group of the given size.
// Failures are collected and reported, not asserted: these are open
// statements being observed, not invariants.
inline ConjectureReport check_conjecture(Conjecture which, int n, int max_n = 0) {
  if (max_n <= 0) max_n = which == Conjecture::Isomorphism ? 5 : 6;
  if (n < 1 || n > max_n)
    throw resource_error("check_conjecture: size " + std::to_string(n) + ", bound is " +
                         std::to_string(max_n));
  ConjectureReport report;
  report.conjecture = which;
  report.n = n;
  const Permutation pattern_21354 = Permutation::parse("21354");
  for_each_permutation(n, [&](const Permutation& w) {
    ++report.checked;
    bool holds = false;
    std::string detail;
    switch (which) {
      case Conjecture::BasisCount: {
        const long long actual = static_cast<long long>(diagram_matroid_bases(w).size());
        const long long predicted = detail::predicted_basis_count(w);
        holds = actual == predicted;
        if (!holds)
          detail = "bases " + std::to_string(actual) + ", predicted " + std::to_string(predicted);
        break;
      }
      case Conjecture::Isomorphism: {
        const bool avoids =
            n < 5 ? true : !contains_pattern(w, pattern_21354);
        const bool isomorphic =
            find_isomorphism(diagram_matroid_bases(w), positroid_bases(w), 2 * n).has_value();
        holds = isomorphic == avoids;
        if (!holds)
          detail = std::string(isomorphic ? "isomorphic" : "not isomorphic") + " but pattern " +
                   (avoids ? "avoided" : "present");
        break;
      }
      case Conjecture::TuttePolynomial: {
        const BivariatePoly diagram_tutte = tutte_by_rank(diagram_pattern(w), 2 * n);
        const BivariatePoly interval_tutte = positroid_tutte(w);
        holds = diagram_tutte == interval_tutte;
        if (!holds)
          detail = "diagram " + diagram_tutte.to_string() + ", interval " + interval_tutte.to_string();
        break;
      }
      case Conjecture::ShiftEquality: {
        const SetFamily shifted = permutation_shift_family(w, positroid_bases(w));
        const SetFamily diagram = diagram_matroid_bases(w);
        holds = shifted == diagram;
        if (!holds) detail = "shifted bases differ from diagram bases";
        break;
      }
    }
    if (holds) {
      ++report.agreements;
    } else {
      report.failures.push_back(ConjectureCheck{w.to_string(), false, detail});
    }
  });
  return report;
}

}  // namespace positroids
