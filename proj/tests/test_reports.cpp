#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ccc/error.hpp"
#include "ccc/frobenius.hpp"
#include "ccc/groupspec.hpp"
#include "ccc/reports.hpp"
#include "json_schema.hpp"

using namespace ccc;

#ifndef CCC_SCHEMA_DIR
#error "CCC_SCHEMA_DIR must point at the shipped schemas"
#endif

namespace {

const char* kSchemaDir = CCC_SCHEMA_DIR;

void check_schema(const std::string& name, const std::string& payload) {
  std::string err;
  bool ok = schema::validate_against(kSchemaDir, name, payload, &err);
  INFO(name, ": ", err);
  CHECK(ok);
}

struct Ctx {
  BuiltPair built;
  ClassSet classes;
  ClassRelation rel;
  QuotientData quotient;
};

Ctx make(const char* base, const char* mod = "") {
  Ctx ctx;
  ctx.built = build_group(parse_group_spec(base, mod));
  ctx.classes = conjugacy_classes(*ctx.built.group);
  ctx.rel = ClassRelation::commuting(*ctx.built.group, ctx.classes);
  ctx.quotient = cyclic_quotient(*ctx.built.group, ctx.built.h_members);
  return ctx;
}

}  // namespace

TEST_SUITE("reports") {

TEST_CASE("group specs round-trip through parse and print") {
  for (auto [base, mod] : std::vector<std::pair<const char*, const char*>>{
           {"sym:4", "alt"}, {"dihedral:6", "rot"}, {"cyclic:12", "sub:4"},
           {"gl2:5", "sl"}, {"q8", "centre"}, {"alt:4", "v4"}, {"sym:5", ""}}) {
    GroupSpec spec = parse_group_spec(base, mod);
    GroupSpec again = parse_group_spec(spec.base, spec.mod);
    CHECK(to_string(spec) == to_string(again));
  }
  CHECK(to_string(parse_group_spec("alt-in-sym:4")) == "sym:4 --mod alt");
  CHECK(to_string(parse_group_spec("sl2-in-gl2:5")) == "gl2:5 --mod sl");
}

TEST_CASE("group spec errors") {
  CHECK_THROWS_WITH_AS(parse_group_spec("sym:0"), doctest::Contains("ParseError"),
                       Error);
  CHECK_THROWS_AS(parse_group_spec("frobnicator:3"), Error);
  CHECK_THROWS_AS(parse_group_spec("sym:4", "sl"), Error);
  CHECK_THROWS_AS(parse_group_spec("cyclic:12", "sub:5"), Error);
  CHECK_THROWS_AS(parse_group_spec("alt-in-sym:4", "alt"), Error);
}

TEST_CASE("perm-file specs build the generated group") {
  const std::string path = "ccc_test_perms.txt";
  {
    std::ofstream out(path);
    out << "(0 1)\n\n(0 1 2)\n";
  }
  BuiltPair built = build_group(parse_group_spec("perm-file:" + path));
  CHECK(built.group->order() == 6);
  std::remove(path.c_str());
  CHECK_THROWS_AS(build_group(parse_group_spec("perm-file:does_not_exist.txt")),
                  Error);
}

TEST_CASE("classes TSV is byte-stable") {
  Ctx ctx = make("sym:3", "alt");
  std::string expected =
      "class\trep\tsize\tcoset\tsplit\n"
      "0\t()\t1\t0\t0\n"
      "1\t(1 2)\t3\t1\t0\n"
      "2\t(0 1 2)\t2\t0\t1\n";
  CHECK(classes_report(*ctx.built.group, ctx.classes, &ctx.quotient,
                       OutFormat::tsv) == expected);
}

TEST_CASE("JSON reports validate against the shipped schemas") {
  Ctx ctx = make("sym:4", "alt");
  const FiniteGroup& g = *ctx.built.group;

  check_schema("classes.schema.json",
               classes_report(g, ctx.classes, &ctx.quotient, OutFormat::json));
  check_schema("relation.schema.json",
               relation_report(g, ctx.classes, ctx.rel, &ctx.quotient,
                               OutFormat::json));
  ClassMatching m = theorem1_matching(g, ctx.classes, ctx.rel, ctx.quotient, 0);
  check_schema("matching.schema.json", matching_json(g, ctx.classes, m));
  Theorem2Partition part = theorem2_partition(g, ctx.classes, ctx.rel, ctx.quotient);
  check_schema("tuples.schema.json",
               theorem2_json(g, ctx.classes, ctx.quotient, part));
  FrobeniusReport rep = proposition3_check(ctx.quotient, ctx.classes);
  check_schema("frobenius.schema.json", frobenius_json(ctx.built.name, rep));
  ExplorationResult er =
      conjecture_explorer(g, ctx.classes, ctx.rel, ctx.quotient, 0, 1);
  check_schema("explore.schema.json", explore_json(g, ctx.classes, er));
  check_schema("sl2-matching.schema.json",
               sl2_cxi_matching_json(sl2_cxi_matching(5)));
  check_schema("bijection.schema.json", sym_bijection_json(5));
  check_schema("coarsenings.schema.json",
               coarsenings_report(Partition::parse("3+2+2+1"), OutFormat::json));
  check_schema("common-coarsening.schema.json",
               common_coarsening_report(Partition::parse("2+2"),
                                        Partition::parse("4"), OutFormat::json));
  check_schema("gl2-table.schema.json", gl2_table_report(7, OutFormat::json));
}

TEST_CASE("schema validator rejects malformed payloads") {
  std::string err;
  CHECK(!schema::validate_against(kSchemaDir, "matching.schema.json",
                                  "{\"coset_x\": 0}", &err));
  CHECK(!schema::validate_against(kSchemaDir, "matching.schema.json",
                                  "{\"coset_x\": 0, \"pairs\": [], "
                                  "\"verified\": true, \"extra\": 1}",
                                  &err));
  CHECK(!schema::validate_against(kSchemaDir, "matching.schema.json", "nope", &err));
}

TEST_CASE("sym table rows carry the counting identity") {
  std::string table = sym_table_tsv(6);
  CHECK(table.find("n\tp_even\tp_odd\td_o\n") == 0);
  CHECK(table.find("5\t4\t3\t1\n") != std::string::npos);
  CHECK(table.find("6\t6\t5\t1\n") != std::string::npos);
}

TEST_CASE("gl2 table TSV carries the verified column") {
  std::string table = gl2_table_report(5, OutFormat::tsv);
  CHECK(table ==
        "coset\tA\tB\tC\tD\tverified\n"
        "SL\t2\t2\t1\t2\t1\n"
        "C_xi\t0\t0\t2\t3\t1\n");
}

TEST_CASE("common coarsening TSV prints none when absent") {
  CHECK(common_coarsening_report(Partition::parse("2+1+1"), Partition::parse("4"),
                                 OutFormat::tsv) == "none\n");
  CHECK(common_coarsening_report(Partition::parse("2+2"), Partition::parse("4"),
                                 OutFormat::tsv) == "4\n");
}

}  // TEST_SUITE
