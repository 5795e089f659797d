#include "ccc/reports.hpp"

#include <json.hpp>

#include "ccc/catalog.hpp"
#include "ccc/error.hpp"
#include "ccc/gf.hpp"

namespace ccc {

using nlohmann::json;

namespace {

// Two-space indentation everywhere so identical invocations stay
// byte-identical across runs.
std::string dump(const json& j) { return j.dump(2) + "\n"; }

json class_row(const FiniteGroup& g, const ConjugacyClass& c, const QuotientData* q) {
  json row;
  row["class"] = c.id;
  row["rep"] = g.render_element(c.rep);
  row["size"] = c.size();
  row["coset"] = q ? class_exponent(*q, c) : 0;
  row["split"] = q ? is_split(*q, c) : false;
  return row;
}

}  // namespace

OutFormat parse_format(const std::string& text) {
  if (text == "tsv") return OutFormat::tsv;
  if (text == "json") return OutFormat::json;
  if (text == "dot") return OutFormat::dot;
  fail(Errc::parse_error, "unknown format: " + text);
}

std::string classes_report(const FiniteGroup& g, const ClassSet& cs,
                           const QuotientData* q, OutFormat format) {
  if (format == OutFormat::json) {
    json out;
    out["order"] = g.order();
    out["classes"] = json::array();
    for (const ConjugacyClass& c : cs.classes)
      out["classes"].push_back(class_row(g, c, q));
    return dump(out);
  }
  require(format == OutFormat::tsv, Errc::parse_error,
          "classes supports tsv or json");
  std::string out = "class\trep\tsize\tcoset\tsplit\n";
  for (const ConjugacyClass& c : cs.classes) {
    out += std::to_string(c.id) + "\t" + g.render_element(c.rep) + "\t" +
           std::to_string(c.size()) + "\t" +
           std::to_string(q ? class_exponent(*q, c) : 0) + "\t" +
           ((q && is_split(*q, c)) ? "1" : "0") + "\n";
  }
  return out;
}

std::string relation_report(const FiniteGroup& g, const ClassSet& cs,
                            const ClassRelation& rel, const QuotientData* q,
                            OutFormat format) {
  if (format == OutFormat::dot) return relation_dot(g, cs, rel, q);
  if (format == OutFormat::json) {
    json out;
    out["classes"] = json::array();
    for (const ConjugacyClass& c : cs.classes)
      out["classes"].push_back(class_row(g, c, q));
    out["edges"] = json::array();
    for (int i = 0; i < cs.count(); ++i)
      for (int j = i + 1; j < cs.count(); ++j)
        if (rel.at(i, j)) out["edges"].push_back(json::array({i, j}));
    return dump(out);
  }
  std::string out = "left\tright\n";
  for (int i = 0; i < cs.count(); ++i)
    for (int j = i + 1; j < cs.count(); ++j)
      if (rel.at(i, j))
        out += std::to_string(i) + "\t" + std::to_string(j) + "\n";
  return out;
}

std::string matching_json(const FiniteGroup& g, const ClassSet& cs,
                          const ClassMatching& m) {
  json out;
  out["coset_x"] = m.coset_x;
  out["pairs"] = json::array();
  for (const MatchedPair& p : m.pairs) {
    json pair;
    pair["left_rep"] = g.render_element(cs.classes[p.left_class].rep);
    pair["right_rep"] = g.render_element(cs.classes[p.right_class].rep);
    pair["witness"] =
        json::array({g.render_element(p.witness.c), g.render_element(p.witness.d)});
    out["pairs"].push_back(std::move(pair));
  }
  out["verified"] = m.verified;
  return dump(out);
}

std::string theorem2_json(const FiniteGroup& g, const ClassSet& cs,
                          const QuotientData& q, const Theorem2Partition& part) {
  json out;
  out["p"] = q.quotient_order;
  out["c_exponents"] = part.c_exponents;
  out["tuples"] = json::array();
  for (const CommutingTuple& tuple : part.tuples) {
    json cell;
    cell["classes"] = json::array();
    cell["reps"] = json::array();
    for (std::size_t m = 0; m < tuple.class_ids.size(); ++m) {
      json cls;
      cls["class"] = tuple.class_ids[m];
      cls["coset"] = static_cast<int>(m);
      cls["rep"] = g.render_element(cs.classes[tuple.class_ids[m]].rep);
      cell["classes"].push_back(std::move(cls));
      cell["reps"].push_back(g.render_element(tuple.reps[m]));
    }
    out["tuples"].push_back(std::move(cell));
  }
  return dump(out);
}

std::string coarsenings_report(const Partition& p, OutFormat format) {
  std::vector<Partition> cs = coarsenings(p);
  if (format == OutFormat::json) {
    json out;
    out["partition"] = p.to_string();
    out["coarsenings"] = json::array();
    for (const Partition& c : cs) out["coarsenings"].push_back(c.to_string());
    return dump(out);
  }
  std::string out;
  for (const Partition& c : cs) out += c.to_string() + "\n";
  return out;
}

std::string common_coarsening_report(const Partition& a, const Partition& b,
                                     OutFormat format) {
  std::optional<Partition> common = common_coarsening(a, b);
  if (format == OutFormat::json) {
    json out;
    out["left"] = a.to_string();
    out["right"] = b.to_string();
    out["commute"] = common.has_value();
    if (common) out["witness"] = common->to_string();
    return dump(out);
  }
  return common ? common->to_string() + "\n" : "none\n";
}

std::string sym_table_tsv(int max_n) {
  std::string out = "n\tp_even\tp_odd\td_o\n";
  for (int n = 1; n <= max_n; ++n) {
    PartitionCounts c = counting_identity(n);
    out += std::to_string(n) + "\t" + std::to_string(c.p_even) + "\t" +
           std::to_string(c.p_odd) + "\t" + std::to_string(c.d_o) + "\n";
  }
  return out;
}

std::string sym_bijection_json(int n) {
  json out;
  out["n"] = n;
  out["pairs"] = json::array();
  for (const auto& [l, r] : sym_bijection_f(n)) {
    json pair;
    pair["left"] = l.to_string();
    pair["right"] = r.to_string();
    auto common = common_coarsening(l, r);
    require(common.has_value(), Errc::matching_incomplete,
            "matched partitions lack a common coarsening (bug)");
    pair["common_coarsening"] = common->to_string();
    out["pairs"].push_back(std::move(pair));
  }
  return dump(out);
}

std::string gl2_table_report(int q, OutFormat format) {
  CosetTypeTable table = coset_table(q);
  if (format == OutFormat::json) {
    json out;
    out["q"] = q;
    out["sl"] = table.sl;
    out["c_xi"] = table.cxi;
    out["verified"] = true;
    return dump(out);
  }
  auto row = [](const std::string& name, const std::array<long long, 4>& counts) {
    std::string out = name;
    for (long long c : counts) out += "\t" + std::to_string(c);
    return out + "\t1\n";
  };
  return "coset\tA\tB\tC\tD\tverified\n" + row("SL", table.sl) + row("C_xi", table.cxi);
}

std::string frobenius_json(const std::string& name, const FrobeniusReport& rep) {
  json out;
  out["pair"] = name;
  out["all_nonidentity_split"] = rep.all_nonidentity_split;
  out["is_frobenius"] = rep.is_frobenius;
  out["complement_order"] = rep.complement_order;
  out["fixed_point_free_witness_checked"] = rep.fixed_point_free_checked;
  out["complement_torsion_ok"] = rep.complement_torsion_ok;
  out["kernel_nilpotent"] = rep.kernel_nilpotent;
  out["upper_central_series_sizes"] = rep.upper_central_series_sizes;
  return dump(out);
}

std::string frobenius_catalog_tsv() {
  std::string out =
      "pair\tp\tall_nonidentity_split\tis_frobenius\tkernel_nilpotent\t"
      "complement_torsion_ok\n";
  for (const CatalogEntry& entry : build_catalog()) {
    if (!entry.cyclic_quotient_expected) continue;
    QuotientData q = cyclic_quotient(*entry.group, entry.h_members);
    auto factors = prime_factors(q.quotient_order);
    if (factors.size() != 1 || factors.front() != q.quotient_order) continue;
    ClassSet cs = conjugacy_classes(*entry.group);
    FrobeniusReport rep = proposition3_check(q, cs);
    out += entry.name + "\t" + std::to_string(q.quotient_order) + "\t" +
           (rep.all_nonidentity_split ? "1" : "0") + "\t" +
           (rep.is_frobenius ? "1" : "0") + "\t" +
           (rep.is_frobenius ? (rep.kernel_nilpotent ? "1" : "0") : "-") + "\t" +
           (rep.is_frobenius ? (rep.complement_torsion_ok ? "1" : "0") : "-") +
           "\n";
  }
  return out;
}

std::string explore_json(const FiniteGroup& g, const ClassSet& cs,
                         const ExplorationResult& result) {
  json out;
  out["experimental"] = true;
  out["note"] = "absence of a matching means: not found by this search";
  out["coset_x"] = result.coset_x;
  out["coset_y"] = result.coset_y;
  out["found"] = result.found;
  out["pairs"] = json::array();
  for (const MatchedPair& p : result.pairs) {
    json pair;
    pair["left_rep"] = g.render_element(cs.classes[p.left_class].rep);
    pair["right_rep"] = g.render_element(cs.classes[p.right_class].rep);
    pair["witness"] =
        json::array({g.render_element(p.witness.c), g.render_element(p.witness.d)});
    out["pairs"].push_back(std::move(pair));
  }
  return dump(out);
}

std::string sl2_cxi_matching_json(const SlCxiMatching& m) {
  json out;
  out["q"] = m.q;
  out["trivial_even_field"] = m.trivial_even;
  out["verified"] = m.verified;
  out["pairs"] = json::array();
  for (const SlCxiPair& p : m.pairs) {
    const Gf& f = p.witness_left.field();
    json pair;
    pair["left_index"] = p.left_index;
    pair["right_index"] = p.right_index;
    pair["left_type"] = gl2_type_name(p.left_type);
    pair["right_type"] = gl2_type_name(p.right_type);
    pair["left_char_poly"] = f.poly_string(p.witness_left.char_poly2());
    pair["right_char_poly"] = f.poly_string(p.witness_right.char_poly2());
    pair["witness"] =
        json::array({p.witness_left.to_string(), p.witness_right.to_string()});
    out["pairs"].push_back(std::move(pair));
  }
  return dump(out);
}

}  // namespace ccc
