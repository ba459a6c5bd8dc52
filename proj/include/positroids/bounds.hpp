#pragma once

namespace positroids {

// Size limits for the expensive operations. Defaults are mirrored in
// config/bounds.json; the CLI can override them from a JSON file.
struct Bounds {
  int enumerate_max_n = 7;        // family enumeration over n-subsets of [2n]
  int tutte_max_ground = 16;      // rank-sum Tutte scan over all column subsets
  int iso_max_ground = 12;        // isomorphism search ground size
  int theorem_suite_max_n = 5;
  int conjecture_suite_max_n = 6;
  int conjecture_iso_max_n = 5;   // isomorphism conjecture is costlier, separate cap
  int identity_suite_max_n = 9;
};

}  // namespace positroids
