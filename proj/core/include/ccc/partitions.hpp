#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ccc/perm.hpp"

namespace ccc {

// Integer partition: weakly decreasing positive parts. operator< orders
// first by the partitioned number, then ascending-lexicographically on the
// parts vector; under that order every partition precedes its proper
// coarsenings, so "canonical minimum" tie-breaks pick the finest candidate.
// Note partitions(n) lists in the usual reverse-lexicographic order ((n)
// first, (1^n) last), which is a different, enumeration-only order.
class Partition {
public:
  Partition() = default;  // the empty partition of 0
  explicit Partition(std::vector<int> parts);
  static Partition parse(const std::string& text);  // "4+3+1"; "" is empty

  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.parts_ < b.parts_;
  }

private:
  std::vector<int> parts_;
  int n_ = 0;
};

void for_each_partition(int n, const std::function<void(const Partition&)>& fn);
std::vector<Partition> partitions(int n);  // reverse-lexicographic order

struct PartitionClass {
  bool in_p_even = false;  // even number of even parts
  bool in_d_o = false;     // parts odd and pairwise distinct
};
PartitionClass classify(const Partition& p);

// All partitions obtained by grouping equal-size parts and adding up each
// group, the input included; sorted ascending (so the input comes first).
std::vector<Partition> coarsenings(const Partition& p);

// Canonically smallest partition coarsening both, or nullopt. SizeMismatch
// when the arguments partition different numbers.
std::optional<Partition> common_coarsening(const Partition& a, const Partition& b);

// Brute-force truth of C^lambda ~ C^mu in Sym(n); n <= 8 (TooLarge above).
bool sym_commuting_oracle(int n, const Partition& lambda, const Partition& mu);

// Exhaustive check that the common-coarsening criterion matches the group
// oracle on every unordered pair; CrosscheckFailure signals a bug.
struct Prop1Report {
  int n = 0;
  long long pairs_checked = 0;
  bool consistent = false;
};
Prop1Report proposition1_crosscheck(int n);

struct PartitionCounts {
  long long p_even = 0, p_odd = 0, d_o = 0;
};
// The three counts for P(n); asserts p_even = p_odd + d_o.
PartitionCounts counting_identity(int n);

// Perfect matching P_even(n) \ D_o(n) -> P_odd(n) over the common-coarsening
// relation; each matched pair has a common coarsening. Purely combinatorial.
std::vector<std::pair<Partition, Partition>> sym_bijection_f(int n);

// The double-transposition counterexample: commuting x, y in Sym(4) such
// that no z has both acting as powers of z on each of its orbits. The
// control replaces y by x, for which z = x works.
struct Sym4Report {
  bool pair_commutes = false;
  bool witness_exists = false;          // expected false
  bool control_witness_exists = false;  // expected true
  int candidates_checked = 0;
};
Sym4Report sym4_counterexample();

}  // namespace ccc
