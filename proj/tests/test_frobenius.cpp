#include <doctest.h>

#include "ccc/error.hpp"
#include "ccc/frobenius.hpp"
#include "ccc/groupspec.hpp"

using namespace ccc;

namespace {

struct Ctx {
  BuiltPair built;
  ClassSet classes;
  QuotientData quotient;
};

Ctx make(const char* base, const char* mod) {
  Ctx ctx;
  ctx.built = build_group(parse_group_spec(base, mod));
  ctx.classes = conjugacy_classes(*ctx.built.group);
  ctx.quotient = cyclic_quotient(*ctx.built.group, ctx.built.h_members);
  return ctx;
}

}  // namespace

TEST_SUITE("frobenius") {

TEST_CASE("all non-identity classes split: Sym(3)/Alt(3) yes, Sym(4)/Alt(4) no") {
  Ctx s3 = make("sym:3", "alt");
  CHECK(all_nonidentity_classes_split(s3.quotient, s3.classes));
  Ctx s4 = make("sym:4", "alt");
  CHECK(!all_nonidentity_classes_split(s4.quotient, s4.classes));
  Ctx d5 = make("dihedral:5", "rot");
  CHECK(all_nonidentity_classes_split(d5.quotient, d5.classes));
}

TEST_CASE("direct fixed-point-freeness test") {
  Ctx s3 = make("sym:3", "alt");
  CHECK(is_frobenius_with_kernel(*s3.built.group, s3.quotient.h_members));
  Ctx s4 = make("sym:4", "alt");
  CHECK(!is_frobenius_with_kernel(*s4.built.group, s4.quotient.h_members));
  Ctx a4 = make("alt:4", "v4");
  CHECK(is_frobenius_with_kernel(*a4.built.group, a4.quotient.h_members));
}

TEST_CASE("non-normal kernels are rejected") {
  BuiltPair built = build_group(parse_group_spec("sym:3"));
  std::vector<int> seed{built.group->index_of(Perm::from_cycles(3, {{0, 1}}))};
  std::vector<int> h = subgroup_closure(*built.group, seed);
  CHECK_THROWS_WITH_AS(is_frobenius_with_kernel(*built.group, h),
                       doctest::Contains("NotNormal"), Error);
}

TEST_CASE("proposition 3 on positive and negative instances") {
  Ctx s3 = make("sym:3", "alt");
  FrobeniusReport r3 = proposition3_check(s3.quotient, s3.classes);
  CHECK(r3.all_nonidentity_split);
  CHECK(r3.is_frobenius);
  CHECK(r3.kernel_nilpotent);
  CHECK(r3.complement_torsion_ok);
  CHECK(r3.complement_order == 2);
  CHECK(r3.upper_central_series_sizes == std::vector<int>{1, 3});

  Ctx a4 = make("alt:4", "v4");
  FrobeniusReport r4 = proposition3_check(a4.quotient, a4.classes);
  CHECK(r4.is_frobenius);
  CHECK(r4.kernel_nilpotent);  // V4 is abelian
  CHECK(r4.upper_central_series_sizes == std::vector<int>{1, 4});

  Ctx s4 = make("sym:4", "alt");
  FrobeniusReport rs4 = proposition3_check(s4.quotient, s4.classes);
  CHECK(!rs4.all_nonidentity_split);
  CHECK(!rs4.is_frobenius);
}

TEST_CASE("dihedral groups: Frobenius exactly for odd rotation count") {
  for (int n = 3; n <= 9; ++n) {
    Ctx d = make(("dihedral:" + std::to_string(n)).c_str(), "rot");
    FrobeniusReport rep = proposition3_check(d.quotient, d.classes);
    CHECK(rep.is_frobenius == (n % 2 == 1));
  }
}

TEST_CASE("composite quotients are refused") {
  Ctx c8 = make("cyclic:8", "sub:2");
  CHECK_THROWS_WITH_AS(proposition3_check(c8.quotient, c8.classes),
                       doctest::Contains("NotPrimeIndex"), Error);
}

TEST_CASE("upper central series certifies nilpotency") {
  BuiltPair q8 = build_group(parse_group_spec("q8"));
  std::vector<int> all(q8.group->order());
  for (int i = 0; i < q8.group->order(); ++i) all[i] = i;
  auto series = upper_central_series(*q8.group, all);
  REQUIRE(series.size() == 3);
  CHECK(series[0].size() == 1);
  CHECK(series[1].size() == 2);  // the centre {1, -1}
  CHECK(series[2].size() == 8);

  BuiltPair s3 = build_group(parse_group_spec("sym:3"));
  std::vector<int> all3(s3.group->order());
  for (int i = 0; i < s3.group->order(); ++i) all3[i] = i;
  auto series3 = upper_central_series(*s3.group, all3);
  CHECK(series3.back().size() == 1);  // stalls at the trivial centre
}

TEST_CASE("weakened hypothesis: vacuous on abelian pairs, false for Sym(4)") {
  Ctx c6 = make("cyclic:6", "sub:3");
  WeakenedSplitReport w6 = weakened_split_report(c6.quotient, c6.classes);
  CHECK(w6.hypothesis_holds);  // no non-central classes at all
  CHECK(w6.kernel_nilpotent);

  Ctx s4 = make("sym:4", "alt");
  WeakenedSplitReport w4 = weakened_split_report(s4.quotient, s4.classes);
  CHECK(!w4.hypothesis_holds);
}

}  // TEST_SUITE
