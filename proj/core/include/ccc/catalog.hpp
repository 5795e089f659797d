#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ccc/matching.hpp"
#include "ccc/quotient.hpp"

namespace ccc {

// One (G, H) pair of the built-in catalog. Pairs whose quotient is not
// cyclic (Q8 over its centre) are kept to exercise the error path and are
// skipped by the pair-level theorem checks.
struct CatalogEntry {
  std::string name;
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> h_members;
  bool cyclic_quotient_expected = true;
};

// Sym(n)/Alt(n) for n = 3..7, dihedral groups over their rotations for
// N = 3..12, cyclic chains, GL2(q)/SL2(q) for q in {3,4,5,7,9}, Alt(4)/V4,
// and Q8 over its centre.
std::vector<CatalogEntry> build_catalog();

// Per-entry analysis shared by the verification suite and the CLI: classes,
// the cached commuting relation, and the quotient data when available.
struct PairAnalysis {
  CatalogEntry entry;
  ClassSet classes;
  ClassRelation relation;
  std::optional<QuotientData> quotient;
};

PairAnalysis analyze_pair(const CatalogEntry& entry);

}  // namespace ccc
