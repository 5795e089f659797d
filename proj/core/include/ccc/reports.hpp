#pragma once

#include <optional>
#include <string>

#include "ccc/frobenius.hpp"
#include "ccc/gl2.hpp"
#include "ccc/matching.hpp"
#include "ccc/partitions.hpp"

namespace ccc {

enum class OutFormat { tsv, json, dot };
OutFormat parse_format(const std::string& text);

// Class table: id, rendered representative, size, coset exponent, split
// flag. Without quotient data the coset is 0 and nothing splits.
std::string classes_report(const FiniteGroup& g, const ClassSet& cs,
                           const QuotientData* q, OutFormat format);

// Commuting-class graph; DOT uses the export format of relation_dot.
std::string relation_report(const FiniteGroup& g, const ClassSet& cs,
                            const ClassRelation& rel, const QuotientData* q,
                            OutFormat format);

// {"coset_x": m, "pairs": [{"left_rep", "right_rep", "witness": [a, b]}],
//  "verified": bool}
std::string matching_json(const FiniteGroup& g, const ClassSet& cs,
                          const ClassMatching& m);

std::string theorem2_json(const FiniteGroup& g, const ClassSet& cs,
                          const QuotientData& q, const Theorem2Partition& part);

std::string coarsenings_report(const Partition& p, OutFormat format);
std::string common_coarsening_report(const Partition& a, const Partition& b,
                                     OutFormat format);

// One row per n: n, p_even, p_odd, d_o.
std::string sym_table_tsv(int max_n);
std::string sym_bijection_json(int n);

// The two-coset type-count table with a verified column.
std::string gl2_table_report(int q, OutFormat format);

std::string frobenius_json(const std::string& name, const FrobeniusReport& rep);

// One row per prime-index catalog pair: the report's flags as a TSV summary.
std::string frobenius_catalog_tsv();

std::string explore_json(const FiniteGroup& g, const ClassSet& cs,
                         const ExplorationResult& result);

std::string sl2_cxi_matching_json(const SlCxiMatching& m);

}  // namespace ccc
