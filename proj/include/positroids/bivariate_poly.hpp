#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "catalan.hpp"

namespace positroids {

// Polynomial in x and y with 64-bit integer coefficients; every coefficient
// operation is overflow-checked.
class BivariatePoly {
 public:
  BivariatePoly() = default;

  static BivariatePoly constant(long long c) {
    BivariatePoly p;
    if (c != 0) p.coeffs_[{0, 0}] = c;
    return p;
  }

  static BivariatePoly monomial(int dx, int dy, long long c = 1) {
    if (dx < 0 || dy < 0) throw std::invalid_argument("monomial: negative degree");
    BivariatePoly p;
    if (c != 0) p.coeffs_[{dx, dy}] = c;
    return p;
  }

  static BivariatePoly x() { return monomial(1, 0); }
  static BivariatePoly y() { return monomial(0, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  long long coefficient(int dx, int dy) const {
    const auto it = coeffs_.find({dx, dy});
    return it == coeffs_.end() ? 0 : it->second;
  }

  BivariatePoly& operator+=(const BivariatePoly& o) {
    for (const auto& [deg, c] : o.coeffs_) add_term(deg.first, deg.second, c);
    return *this;
  }

  BivariatePoly& operator-=(const BivariatePoly& o) {
    for (const auto& [deg, c] : o.coeffs_) add_term(deg.first, deg.second, checked_mul(c, -1));
    return *this;
  }

  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }

  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly r;
    for (const auto& [da, ca] : a.coeffs_)
      for (const auto& [db, cb] : b.coeffs_)
        r.add_term(da.first + db.first, da.second + db.second, checked_mul(ca, cb));
    return r;
  }

  BivariatePoly& operator*=(const BivariatePoly& o) { return *this = *this * o; }

  bool operator==(const BivariatePoly&) const = default;

  long long evaluate(long long x_val, long long y_val) const {
    long long total = 0;
    for (const auto& [deg, c] : coeffs_) {
      long long term = c;
      for (int i = 0; i < deg.first; ++i) term = checked_mul(term, x_val);
      for (int i = 0; i < deg.second; ++i) term = checked_mul(term, y_val);
      total = checked_add(total, term);
    }
    return total;
  }

  BivariatePoly substitute_x(long long x_val) const {
    BivariatePoly r;
    for (const auto& [deg, c] : coeffs_) {
      long long term = c;
      for (int i = 0; i < deg.first; ++i) term = checked_mul(term, x_val);
      r.add_term(0, deg.second, term);
    }
    return r;
  }

  BivariatePoly substitute_y(long long y_val) const {
    BivariatePoly r;
    for (const auto& [deg, c] : coeffs_) {
      long long term = c;
      for (int i = 0; i < deg.second; ++i) term = checked_mul(term, y_val);
      r.add_term(deg.first, 0, term);
    }
    return r;
  }

  // (dx, dy, coefficient) in ascending degree order.
  std::vector<std::tuple<int, int, long long>> triples() const {
    std::vector<std::tuple<int, int, long long>> out;
    out.reserve(coeffs_.size());
    for (const auto& [deg, c] : coeffs_) out.emplace_back(deg.first, deg.second, c);
    return out;
  }

  // Terms ordered by x-degree descending, then y-degree ascending:
  // "x^2 + x + xy + y + y^2".
  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, long long>> terms(coeffs_.begin(), coeffs_.end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      if (a.first.first != b.first.first) return a.first.first > b.first.first;
      return a.first.second < b.first.second;
    });
    std::string s;
    bool first = true;
    for (const auto& [deg, c] : terms) {
      const long long abs_c = c < 0 ? -c : c;
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      const bool has_vars = deg.first > 0 || deg.second > 0;
      if (abs_c != 1 || !has_vars) s += std::to_string(abs_c);
      if (deg.first > 0) {
        s += 'x';
        if (deg.first > 1) s += '^' + std::to_string(deg.first);
      }
      if (deg.second > 0) {
        s += 'y';
        if (deg.second > 1) s += '^' + std::to_string(deg.second);
      }
    }
    return s;
  }

 private:
  void add_term(int dx, int dy, long long c) {
    if (c == 0) return;
    const auto key = std::make_pair(dx, dy);
    const auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
      coeffs_[key] = c;
    } else {
      it->second = checked_add(it->second, c);
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  std::map<std::pair<int, int>, long long> coeffs_;
};

}  // namespace positroids
