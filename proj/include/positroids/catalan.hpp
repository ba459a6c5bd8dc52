#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace positroids {

// Exact integer helpers. All counting in this library fits comfortably in
// signed 64 bits at desk scale; overflow is detected, never wrapped.

inline long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

// Catalan numbers C_0, C_1, ... for as long as they fit in 64 bits (through
// C_35). Built once from the convolution recurrence.
inline const std::vector<long long>& catalan_table() {
  static const std::vector<long long> table = [] {
    std::vector<long long> t{1};
    for (;;) {
      unsigned __int128 next = 0;
      const std::size_t k = t.size();
      for (std::size_t i = 0; i < k; ++i)
        next += static_cast<unsigned __int128>(t[i]) * static_cast<unsigned __int128>(t[k - 1 - i]);
      if (next > static_cast<unsigned __int128>(std::numeric_limits<long long>::max())) break;
      t.push_back(static_cast<long long>(next));
    }
    return t;
  }();
  return table;
}

inline long long catalan(int k) {
  if (k < 0) throw std::invalid_argument("catalan: negative index");
  const auto& t = catalan_table();
  if (static_cast<std::size_t>(k) >= t.size())
    throw std::overflow_error("catalan: value does not fit in 64 bits");
  return t[static_cast<std::size_t>(k)];
}

inline long long binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned __int128>(n - k + i);
    r /= static_cast<unsigned __int128>(i);
    if (r > static_cast<unsigned __int128>(std::numeric_limits<long long>::max()))
      throw std::overflow_error("binomial: value does not fit in 64 bits");
  }
  return static_cast<long long>(r);
}

}  // namespace positroids
