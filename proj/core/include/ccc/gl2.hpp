#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ccc/group.hpp"
#include "ccc/mat.hpp"
#include "ccc/partitions.hpp"

namespace ccc {

// Rational-canonical-form class data for GL_d(q): a partition lambda_f per
// monic irreducible polynomial f != t, with sum |lambda_f| deg f = d. Each
// part a of lambda_f is the exponent of an elementary divisor f^a.
struct GlClassParams {
  int d = 0;
  std::map<GfPoly, Partition> assignment;
};

void validate_params(const Gf& f, const GlClassParams& params);

// det = (-1)^d prod_f f(0)^{|lambda_f|}.
std::uint16_t class_determinant(const Gf& f, const GlClassParams& params);

// Split on restriction to SL_d(q): some prime divisor of q - 1 divides every
// part of every lambda_f. (The divisor is unrelated to the dimension d.)
bool gl_split_predicate(const Gf& f, const GlClassParams& params);

// The four class types of GL_2(q): scalars; single-eigenvalue
// non-semisimple; two distinct eigenvalues; eigenvalue-free.
enum class Gl2Type { A, B, C, D };
const char* gl2_type_name(Gl2Type t);

struct Gl2ClassRecord {
  Gl2Type type = Gl2Type::A;
  Mat rep;
  GlClassParams params;
  std::uint16_t det = 0;
};

struct Gl2Catalog {
  const Gf* field = nullptr;
  std::vector<Gl2ClassRecord> records;  // A block, then B, C, D; canonical within
  std::array<long long, 4> type_counts() const;
};

// Full class list with canonical representatives; counts are
// (q-1, q-1, (q-1)(q-2)/2, (q^2-q)/2).
Gl2Catalog gl2_class_catalog(int q);

// Classifies an invertible 2x2 matrix into the catalog: the record index of
// its conjugacy class.
int classify_gl2(const Gl2Catalog& cat, const Mat& m);

// The type-count table for the two cosets; EvenField for even q.
struct CosetTypeTable {
  int q = 0;
  std::array<long long, 4> sl{};   // (2, 2, (q-3)/2, (q-1)/2)
  std::array<long long, 4> cxi{};  // (0, 0, (q-1)/2, (q+1)/2)
};
CosetTypeTable coset_table(int q);

// The matching scheme between the non-split SL_2(q) classes and the
// determinant-xi coset: C with C and D with D as far as possible, leftovers
// paired with the two scalar classes. Witnesses are commuting realizations
// (simultaneous diagonal matrices for C, multiplication maps on a fixed
// basis of GF(q)[u] for D); every witness pair is verified by
// multiplication. For even q the problem is trivial (scalars meet every
// coset) and the result is flagged instead of populated.
struct SlCxiPair {
  int left_index = 0, right_index = 0;  // catalog record indexes
  Gl2Type left_type = Gl2Type::A, right_type = Gl2Type::A;
  Mat witness_left, witness_right;
};
struct SlCxiMatching {
  int q = 0;
  bool trivial_even = false;
  std::vector<SlCxiPair> pairs;
  bool verified = false;
};
SlCxiMatching sl2_cxi_matching(int q);

// Same-type classes commute via elements polynomial in each other; checks
// every same-type pair within SL union C_xi and, for types C and D, exhibits
// the interpolating polynomial both ways.
struct SameTypeReport {
  int q = 0;
  long long pairs_checked = 0;
  long long polynomials_exhibited = 0;
  bool ok = false;
};
SameTypeReport same_type_commute_check(int q);

// GL_4(2) counterexample: the unipotent classes of types (3,1) and (2,2)
// commute, yet no cyclic subalgebra of Mat_4(2) contains members of both.
struct Gl4Report {
  bool commuting_pair_found = false;
  std::string witness_x, witness_y;     // row-mask matrices as strings
  bool both_types_in_one_algebra = false;  // expected false
  bool control_same_type_found = false;    // (3,1) with (3,1): expected true
  long long z_scanned = 0;
};
Gl4Report gl4_counterexample();

// Brute-force GL_2(q) as an enumerated group, plus the members of a
// determinant coset.
FiniteGroup gl2_group(int q, int cap = kDefaultClosureCap);
std::vector<int> det_members(const FiniteGroup& g, std::uint16_t detval);

}  // namespace ccc
