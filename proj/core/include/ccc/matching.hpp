#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ccc/relation.hpp"

namespace ccc {

// Rectangular 0/1 incidence between a left and a right vertex list.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool at(int r, int c) const {
    std::size_t idx = static_cast<std::size_t>(r) * cols_ + c;
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
  }
  void set(int r, int c, bool v = true);

private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Incidence of a class relation restricted to the given id lists.
BitMatrix restrict_relation(const ClassRelation& rel, std::span<const int> left,
                            std::span<const int> right);

// Maximum bipartite matching by augmenting paths with canonical-order vertex
// scans; deterministic. Returns (row, col) pairs in row order.
std::vector<std::pair<int, int>> max_matching(const BitMatrix& adj);

struct HallViolation {
  std::vector<int> subset_rows;
  int r = 0;  // subset size
  int s = 0;  // neighbourhood size
};

// Hall-condition audit: s >= r for every audited subset of rows. All
// 2^rows - 1 subsets when rows <= subset_cap (cap at most 24); otherwise all
// singletons and pairs plus seeded random subsets.
struct HallAuditReport {
  bool pass = true;
  bool exhaustive = true;
  long long subsets_audited = 0;
  int worst_r = 0, worst_s = 0;  // subset minimizing s - r
  std::vector<int> worst_subset_rows;
  std::vector<HallViolation> violations;
};

HallAuditReport hall_audit(const BitMatrix& adj, int subset_cap = 18,
                           std::uint64_t seed = 0, int random_samples = 10000);

struct MatchedPair {
  int left_class = 0;
  int right_class = 0;
  ClassPairWitness witness;
};

struct ClassMatching {
  int coset_x = 0;
  std::vector<MatchedPair> pairs;
  bool verified = false;
};

// Perfect commuting-matching between the non-split classes of Ht^x and the
// classes of the generating coset Ht, each pair carrying a verified
// commuting witness. MatchingIncomplete or CountMismatch signal bugs: the
// theorem guarantees both.
ClassMatching theorem1_matching(const FiniteGroup& g, const ClassSet& cs,
                                const ClassRelation& rel, const QuotientData& q,
                                int x_exponent);

// Smallest positive c with c = i (mod p) and gcd(c, group_order) = 1.
long long find_coprime_residue(long long group_order, long long p, long long i);

// Class bijection induced by g -> g^c for gcd(c, |G|) = 1 (NotCoprime
// otherwise). Whole-group form returns image class per class id; the coset
// form restricts to the classes of Ht^x, pairing them with classes of
// Ht^(cx mod n), and verifies the coset placement.
std::vector<int> power_map_classes(const FiniteGroup& g, const ClassSet& cs, long long c);
std::vector<std::pair<int, int>> power_map_class_bijection(const FiniteGroup& g,
                                                           const ClassSet& cs,
                                                           const QuotientData& q,
                                                           long long c, int x_exponent);

struct CommutingTuple {
  std::vector<int> class_ids;  // class_ids[m] lies in Ht^m
  std::vector<int> reps;       // pairwise commuting representatives
};

struct Theorem2Partition {
  std::vector<long long> c_exponents;  // c_2 .. c_{p-1}
  std::vector<CommutingTuple> tuples;
};

// The prime-index partition of the non-split classes, built from the
// theorem1_matching between H and Ht. NotPrimeIndex for composite quotients;
// PartitionDefect signals a bug.
Theorem2Partition theorem2_partition(const FiniteGroup& g, const ClassSet& cs,
                                     const ClassRelation& rel, const QuotientData& q);

// Experimental search for a perfect commuting-matching between the non-split
// classes of two arbitrary cosets. Reports what the search found; a miss
// only means "not found by this search".
struct ExplorationResult {
  int coset_x = 0, coset_y = 0;
  bool found = false;
  std::vector<MatchedPair> pairs;
};

ExplorationResult conjecture_explorer(const FiniteGroup& g, const ClassSet& cs,
                                      const ClassRelation& rel, const QuotientData& q,
                                      int x_exponent, int y_exponent);

}  // namespace ccc
