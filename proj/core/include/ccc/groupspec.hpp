#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ccc/group.hpp"

namespace ccc {

// Parsed form of the CLI group-spec strings:
//   sym:N  alt:N  alt-in-sym:N  dihedral:N  gl2:Q  sl2-in-gl2:Q  cyclic:N
//   q8  perm-file:PATH
// plus an optional normal-subgroup selector:
//   alt  sl  rot  centre  trivial  v4  sub:K
// The -in- forms are sugar for the base spec with the matching selector.
struct GroupSpec {
  std::string base;  // normalized, e.g. "sym:4"
  std::string mod;   // normalized selector or empty
};

GroupSpec parse_group_spec(const std::string& base, const std::string& mod = "");
std::string to_string(const GroupSpec& spec);

struct BuiltPair {
  std::shared_ptr<const FiniteGroup> group;
  std::vector<int> h_members;  // the whole group when no selector was given
  std::string name;
};

BuiltPair build_group(const GroupSpec& spec, int cap = kDefaultClosureCap);

// Assembled generator sets for the supported families.
std::vector<Element> sym_generators(int n);
std::vector<Element> alt_generators(int n);
std::vector<Element> dihedral_generators(int n);  // order 2n on n points
std::vector<Element> cyclic_generators(int n);
std::vector<Element> quaternion_generators();  // Q8 in its regular action

}  // namespace ccc
