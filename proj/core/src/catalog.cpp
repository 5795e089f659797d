#include "ccc/catalog.hpp"

#include "ccc/error.hpp"
#include "ccc/groupspec.hpp"

namespace ccc {

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](const std::string& base, const std::string& mod,
                 bool cyclic_expected = true) {
    BuiltPair built = build_group(parse_group_spec(base, mod));
    out.push_back(CatalogEntry{built.name, built.group, built.h_members,
                               cyclic_expected});
  };

  for (int n = 3; n <= 7; ++n) add("sym:" + std::to_string(n), "alt");
  for (int n = 3; n <= 12; ++n) add("dihedral:" + std::to_string(n), "rot");

  // Cyclic chains: prime and composite quotients, including the whole group
  // over the trivial subgroup.
  add("cyclic:4", "sub:2");
  add("cyclic:6", "sub:2");
  add("cyclic:6", "sub:3");
  add("cyclic:8", "sub:2");
  add("cyclic:9", "sub:3");
  add("cyclic:12", "sub:2");
  add("cyclic:2", "trivial");
  add("cyclic:3", "trivial");
  add("cyclic:5", "trivial");

  for (int q : {3, 4, 5, 7, 9}) add("gl2:" + std::to_string(q), "sl");

  add("alt:4", "v4");
  add("q8", "centre", /*cyclic_expected=*/false);
  return out;
}

PairAnalysis analyze_pair(const CatalogEntry& entry) {
  PairAnalysis out;
  out.entry = entry;
  out.classes = conjugacy_classes(*entry.group);
  out.relation = ClassRelation::commuting(*entry.group, out.classes);
  if (entry.cyclic_quotient_expected)
    out.quotient = cyclic_quotient(*entry.group, entry.h_members);
  return out;
}

}  // namespace ccc
