#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ccc/quotient.hpp"

namespace ccc {

// Commuting pair of elements witnessing C ~ D.
struct ClassPairWitness {
  int class_c = 0, class_d = 0;
  int c = 0, d = 0;  // element ids, c in class_c, d in class_d, cd = dc
};

// Witness for C ~ D, or nullopt. Scans D in canonical element order against
// the fixed canonical representative of C; conjugation-invariance of the
// relation makes the one fixed representative sufficient.
std::optional<ClassPairWitness> classes_commute(const FiniteGroup& g,
                                                const ConjugacyClass& C,
                                                const ConjugacyClass& D);

// The commuting relation over class ids, cached as a bit-matrix. Symmetric
// and reflexive.
class ClassRelation {
public:
  ClassRelation() = default;
  explicit ClassRelation(int k);
  static ClassRelation commuting(const FiniteGroup& g, const ClassSet& cs);

  int count() const { return k_; }
  bool at(int i, int j) const {
    std::size_t idx = static_cast<std::size_t>(i) * k_ + j;
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
  }
  void set(int i, int j, bool v = true);

private:
  int k_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Split test via the H-conjugation orbit of the representative (primary
// route) and via coset coverage of the centralizer (an equivalent
// criterion); the two are crosschecked in the test suite.
bool is_split(const QuotientData& q, const ConjugacyClass& c);
bool is_split_by_centralizer(const QuotientData& q, const ConjugacyClass& c);

struct ClassCosetProfile {
  int exponent = 0;
  std::vector<int> class_ids;
  std::vector<char> split;  // parallel to class_ids
  int nonsplit_count = 0;
};

// One profile per coset exponent. Asserts the theorem-level facts: non-split
// counts agree across cosets and every class in a generating coset is
// non-split (CountMismatch on either signals a bug).
std::vector<ClassCosetProfile> coset_profiles(const QuotientData& q, const ClassSet& cs);

// Classes related to every class. Asserts each is a central singleton
// (NonCentralUniversalClass signals a bug).
std::vector<int> central_classes(const FiniteGroup& g, const ClassSet& cs,
                                 const ClassRelation& rel);

// DOT export: nodes labeled c<id>[coset=m,split=0|1,size=s], undirected
// edges, loops omitted. Without quotient data every class reports coset 0,
// split 0.
std::string relation_dot(const FiniteGroup& g, const ClassSet& cs,
                         const ClassRelation& rel, const QuotientData* q = nullptr);

}  // namespace ccc
