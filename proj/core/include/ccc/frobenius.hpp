#pragma once

#include "ccc/relation.hpp"

namespace ccc {

// True iff every G-class inside H other than the identity class is split.
// NotPrimeIndex unless the quotient order is prime.
bool all_nonidentity_classes_split(const QuotientData& q, const ClassSet& cs);

// Direct fixed-point-freeness: every t outside H centralizes nothing of H
// but the identity. NotNormal when H is not normal.
bool is_frobenius_with_kernel(const FiniteGroup& g, const std::vector<int>& h_members);

// Ascending chain Z_0 = 1 <= Z_1 <= ... of the upper central series of the
// subgroup on the given members, computed until it stabilizes.
std::vector<std::vector<int>> upper_central_series(const FiniteGroup& g,
                                                   const std::vector<int>& members);

struct FrobeniusReport {
  bool all_nonidentity_split = false;
  bool is_frobenius = false;
  int complement_order = 0;
  bool fixed_point_free_checked = false;
  bool complement_torsion_ok = false;  // t^p = 1 for every t outside H
  bool kernel_nilpotent = false;
  std::vector<int> upper_central_series_sizes;
};

// Both sides of the split-iff-Frobenius equivalence computed independently;
// EquivalenceFailure signals a bug. When Frobenius holds the kernel is
// additionally checked nilpotent via the upper central series.
FrobeniusReport proposition3_check(const QuotientData& q, const ClassSet& cs);

// Exploration of the weakened hypothesis: every non-central class of G
// split. Reporting only; nothing is asserted beyond internal consistency.
struct WeakenedSplitReport {
  bool hypothesis_holds = false;
  bool kernel_nilpotent = false;
};
WeakenedSplitReport weakened_split_report(const QuotientData& q, const ClassSet& cs);

}  // namespace ccc
