#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "permutation.hpp"
#include "subset.hpp"

namespace positroids {

// A collection of subsets of {1..ground}, stored sorted by element lists so
// that equality and serialization are canonical.
struct SetFamily {
  int ground = 0;
  std::vector<Mask> members;

  bool contains(Mask m) const {
    return std::binary_search(members.begin(), members.end(), m, lex_subset_less);
  }

  std::size_t size() const { return members.size(); }

  bool operator==(const SetFamily&) const = default;
};

inline SetFamily family_from_members(int ground, std::vector<Mask> members) {
  if (ground < 0 || ground > kMaxGround) throw std::invalid_argument("family ground size out of range");
  const Mask limit = full_mask(ground);
  for (Mask m : members)
    if (m & ~limit) throw std::invalid_argument("family member leaves the ground set");
  std::sort(members.begin(), members.end(), lex_subset_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return SetFamily{ground, std::move(members)};
}

// {{2,3},{1,2,3,4}} -> [[2,3],[1,2,3,4]] with members in canonical order.
inline std::string family_to_json(const SetFamily& fam) {
  std::string s = "[";
  bool first_member = true;
  for (Mask m : fam.members) {
    if (!first_member) s += ',';
    first_member = false;
    s += '[';
    bool first_elem = true;
    for (int x : elements_of(m)) {
      if (!first_elem) s += ',';
      first_elem = false;
      s += std::to_string(x);
    }
    s += ']';
  }
  s += ']';
  return s;
}

// Members become unions of one member from each summand; ground sets and the
// supports must be disjoint.
inline SetFamily direct_sum(const std::vector<SetFamily>& parts) {
  Mask used = 0;
  int ground = 0;
  for (const SetFamily& p : parts) {
    Mask support = 0;
    for (Mask m : p.members) support |= m;
    if (support & used)
      throw std::domain_error("direct_sum: summand supports overlap on element " +
                              std::to_string(std::countr_zero(support & used) + 1));
    used |= support;
    ground = std::max(ground, p.ground);
  }
  std::vector<Mask> acc{Mask{0}};
  for (const SetFamily& p : parts) {
    if (p.members.empty()) return SetFamily{ground, {}};
    std::vector<Mask> next;
    next.reserve(acc.size() * p.members.size());
    for (Mask a : acc)
      for (Mask b : p.members) next.push_back(a | b);
    acc = std::move(next);
  }
  return family_from_members(ground, std::move(acc));
}

// One compression step on a single set: replace i by j when i is present,
// j absent, and the result is both different from the input (always true
// here) and outside the blocking family.
inline Mask shift_set(int i, int j, Mask m, const SetFamily& blocking) {
  if (!has_element(m, i) || has_element(m, j)) return m;
  const Mask shifted = (m & ~bit_of(i)) | bit_of(j);
  if (blocking.contains(shifted)) return m;
  return shifted;
}

// Apply the i -> j compression to every member simultaneously. A member moves
// exactly when the moved set is not already in the family. Two members may
// never land on the same set; that would silently merge them.
inline SetFamily shift_family(int i, int j, const SetFamily& fam) {
  std::vector<Mask> out;
  out.reserve(fam.members.size());
  for (Mask m : fam.members) out.push_back(shift_set(i, j, m, fam));
  std::sort(out.begin(), out.end(), lex_subset_less);
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("shift_family: two members collided");
  return SetFamily{fam.ground, std::move(out)};
}

// Rename every element x to sigma(x); sigma must act on the whole ground set.
inline SetFamily relabel(const SetFamily& fam, const Permutation& sigma) {
  if (sigma.size() != fam.ground) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Mask> out;
  out.reserve(fam.members.size());
  for (Mask m : fam.members) {
    Mask r = 0;
    for (int x : elements_of(m)) r |= bit_of(sigma(x));
    out.push_back(r);
  }
  return family_from_members(fam.ground, std::move(out));
}

// All members the same size, and for A, B and x in A \ B there is y in B \ A
// with A - x + y in the family.
inline bool check_basis_exchange(const SetFamily& fam) {
  if (fam.members.empty()) return false;
  const int k = popcount(fam.members.front());
  for (Mask m : fam.members)
    if (popcount(m) != k) return false;
  for (Mask a : fam.members) {
    for (Mask b : fam.members) {
      Mask a_only = a & ~b;
      while (a_only) {
        const Mask x = a_only & (~a_only + 1);
        bool found = false;
        Mask b_only = b & ~a;
        while (b_only && !found) {
          const Mask y = b_only & (~b_only + 1);
          if (fam.contains((a & ~x) | y)) found = true;
          b_only &= b_only - 1;
        }
        if (!found) return false;
        a_only &= a_only - 1;
      }
    }
  }
  return true;
}

}  // namespace positroids
