#pragma once

#include "ccc/group.hpp"

namespace ccc {

// Normal subgroup H with verified-cyclic quotient G/H. Fixes the generating
// coset Ht (t_rep is the canonically smallest element of G lying in any
// generating coset) and the coset-exponent map, i.e. the discrete log of gH
// relative to Ht. Immutable after construction; the group must outlive it.
struct QuotientData {
  const FiniteGroup* group = nullptr;
  std::vector<int> h_members;  // ascending ids
  std::vector<char> in_h;      // indexed by element id
  std::vector<int> h_generators;
  int quotient_order = 1;
  int t_rep = 0;
  std::vector<int> exponent_of;  // element id -> exponent in [0, quotient_order)

  bool contains_h(int id) const { return in_h[id] != 0; }
};

// Verifies that h_members is a normal subgroup with cyclic quotient and
// builds the exponent map. NotNormal / QuotientNotCyclic.
QuotientData cyclic_quotient(const FiniteGroup& g, std::vector<int> h_members);

// The coset exponent shared by all members of a class (classes lie inside
// single cosets because the quotient is abelian).
int class_exponent(const QuotientData& q, const ConjugacyClass& c);

// Ht^m generates G/H exactly when gcd(m, n) = 1.
bool is_generating_exponent(const QuotientData& q, int m);

}  // namespace ccc
