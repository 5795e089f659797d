#include <doctest.h>

#include <set>

#include "ccc/error.hpp"
#include "ccc/gl2.hpp"

using namespace ccc;

TEST_SUITE("gl2") {

TEST_CASE("field construction picks the smallest modulus and primitive element") {
  const Gf& f3 = make_field(3, 1);
  CHECK(f3.q() == 3);
  CHECK(f3.xi() == 2);

  const Gf& f4 = make_field(2, 2);
  CHECK(f4.q() == 4);
  CHECK(f4.modulus() == GfPoly{1, 1, 1});  // t^2 + t + 1

  const Gf& f5 = make_field(5, 1);
  CHECK(f5.xi() == 2);

  const Gf& f9 = make_field(3, 2);
  CHECK(f9.modulus() == GfPoly{1, 0, 1});  // t^2 + 1

  CHECK_THROWS_WITH_AS(make_field(4, 1), doctest::Contains("NotPrime"), Error);
  CHECK_THROWS_WITH_AS(make_field(2, 17), doctest::Contains("TooLarge"), Error);
  CHECK_THROWS_WITH_AS(make_field_q(12), doctest::Contains("NotPrime"), Error);
}

TEST_CASE("field axioms hold exhaustively for q <= 49") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49}) {
    const Gf& f = make_field_q(q);
    for (int a = 0; a < q; ++a) {
      CHECK(f.add(static_cast<std::uint16_t>(a), f.neg(static_cast<std::uint16_t>(a))) == 0);
      if (a != 0)
        CHECK(f.mul(static_cast<std::uint16_t>(a), f.inv(static_cast<std::uint16_t>(a))) == 1);
      for (int b = 0; b < q; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    CHECK(f.mult_order(f.xi()) == q - 1);
  }
}

TEST_CASE("determinant formula on the three shapes of class data") {
  const Gf& f = make_field_q(7);
  GlClassParams scalar{2, {{GfPoly{f.neg(3), 1}, Partition({1, 1})}}};
  CHECK(class_determinant(f, scalar) == f.mul(3, 3));

  GlClassParams diag{2, {{GfPoly{f.neg(2), 1}, Partition({1})},
                         {GfPoly{f.neg(5), 1}, Partition({1})}}};
  CHECK(class_determinant(f, diag) == f.mul(2, 5));

  // Companion of an irreducible quadratic t^2 + c t + e has determinant e.
  GfPoly quad = f.monic_irreducibles(2).front();
  GlClassParams irr{2, {{quad, Partition({1})}}};
  CHECK(class_determinant(f, irr) == quad[0]);
}

TEST_CASE("determinant formula equals the matrix determinant on every catalog class") {
  for (int q : {2, 3, 4, 5, 7, 8, 9, 11}) {
    Gl2Catalog cat = gl2_class_catalog(q);
    for (const Gl2ClassRecord& r : cat.records) {
      CHECK(r.det == r.rep.det());
      CHECK(r.det == class_determinant(*cat.field, r.params));
    }
  }
}

TEST_CASE("split predicate by type") {
  const Gf& f7 = make_field_q(7);
  GlClassParams type_b{2, {{GfPoly{f7.neg(1), 1}, Partition({2})}}};
  CHECK(gl_split_predicate(f7, type_b));  // 2 divides q - 1 and the part 2

  GlClassParams type_c{2, {{GfPoly{f7.neg(1), 1}, Partition({1})},
                           {GfPoly{f7.neg(3), 1}, Partition({1})}}};
  CHECK(!gl_split_predicate(f7, type_c));  // no prime divides 1

  const Gf& f4 = make_field_q(4);
  GlClassParams even_b{2, {{GfPoly{1, 1}, Partition({2})}}};
  CHECK(!gl_split_predicate(f4, even_b));  // q - 1 = 3 does not divide 2
}

TEST_CASE("class parameter validation") {
  const Gf& f = make_field_q(5);
  GlClassParams wrong_total{2, {{GfPoly{f.neg(1), 1}, Partition({1})}}};
  CHECK_THROWS_AS(class_determinant(f, wrong_total), Error);
  GlClassParams t_key{2, {{GfPoly{0, 1}, Partition({1, 1})}}};
  CHECK_THROWS_AS(class_determinant(f, t_key), Error);
  GlClassParams reducible{2, {{GfPoly{4, 0, 1}, Partition({1})}}};  // t^2 - 1
  CHECK_THROWS_AS(class_determinant(f, reducible), Error);
}

TEST_CASE("catalog counts: q = 3 gives (2, 2, 1, 3), eight classes") {
  Gl2Catalog cat = gl2_class_catalog(3);
  CHECK(cat.type_counts() == std::array<long long, 4>{2, 2, 1, 3});
  CHECK(cat.records.size() == 8);
}

TEST_CASE("catalog counts: q = 5 gives 24 classes, q = 2 gives 3") {
  CHECK(gl2_class_catalog(5).records.size() == 24);
  Gl2Catalog cat2 = gl2_class_catalog(2);
  CHECK(cat2.type_counts() == std::array<long long, 4>{1, 1, 0, 1});
  CHECK(gl2_group(2).order() == 6);  // GL2(2) is Sym(3)
  CHECK(conjugacy_classes(gl2_group(2)).count() == 3);
}

TEST_CASE("catalog classes biject with brute-force classes for small q") {
  for (int q : {2, 3, 4, 5}) {
    Gl2Catalog cat = gl2_class_catalog(q);
    FiniteGroup g = gl2_group(q);
    ClassSet cs = conjugacy_classes(g);
    REQUIRE(cs.count() == static_cast<int>(cat.records.size()));
    std::set<int> images;
    for (const ConjugacyClass& c : cs.classes)
      images.insert(classify_gl2(cat, std::get<Mat>(g.element(c.rep))));
    CHECK(images.size() == cat.records.size());
  }
}

TEST_CASE("coset table at q = 3, 5, 7 and the even-field error") {
  CosetTypeTable t3 = coset_table(3);
  CHECK(t3.sl == std::array<long long, 4>{2, 2, 0, 1});
  CHECK(t3.cxi == std::array<long long, 4>{0, 0, 1, 2});
  CosetTypeTable t5 = coset_table(5);
  CHECK(t5.sl == std::array<long long, 4>{2, 2, 1, 2});
  CHECK(t5.cxi == std::array<long long, 4>{0, 0, 2, 3});
  CosetTypeTable t7 = coset_table(7);
  CHECK(t7.sl == std::array<long long, 4>{2, 2, 2, 3});
  CHECK(t7.cxi == std::array<long long, 4>{0, 0, 3, 4});
  CHECK_THROWS_WITH_AS(coset_table(4), doctest::Contains("EvenField"), Error);
}

TEST_CASE("SL2 <-> C_xi matching at q = 3: three pairs as the scheme says") {
  SlCxiMatching m = sl2_cxi_matching(3);
  REQUIRE(m.pairs.size() == 3);
  CHECK(m.verified);
  Gl2Catalog cat = gl2_class_catalog(3);
  int scalar_left = 0, type_d_pairs = 0;
  for (const SlCxiPair& p : m.pairs) {
    if (cat.records[p.left_index].type == Gl2Type::A) ++scalar_left;
    if (cat.records[p.left_index].type == Gl2Type::D &&
        cat.records[p.right_index].type == Gl2Type::D)
      ++type_d_pairs;
    CHECK(p.witness_left * p.witness_right == p.witness_right * p.witness_left);
  }
  CHECK(scalar_left == 2);
  CHECK(type_d_pairs == 1);
}

TEST_CASE("SL2 <-> C_xi matching sizes q and re-verified witnesses") {
  for (int q : {5, 7, 9, 11}) {
    SlCxiMatching m = sl2_cxi_matching(q);
    CHECK(m.verified);
    REQUIRE(static_cast<int>(m.pairs.size()) == q);
    for (const SlCxiPair& p : m.pairs)
      REQUIRE(p.witness_left * p.witness_right == p.witness_right * p.witness_left);
  }
}

TEST_CASE("even q is reported trivial instead of matched") {
  SlCxiMatching m = sl2_cxi_matching(4);
  CHECK(m.trivial_even);
  CHECK(m.pairs.empty());
  CHECK(m.verified);
}

TEST_CASE("same-type classes commute and are polynomial in each other") {
  for (int q : {3, 5, 7, 11}) {
    SameTypeReport rep = same_type_commute_check(q);
    CHECK(rep.ok);
    CHECK(rep.pairs_checked > 0);
    CHECK(rep.polynomials_exhibited > 0);
  }
}

TEST_CASE("GL4(2): commuting (3,1) and (2,2) unipotents, no shared cyclic algebra") {
  Gl4Report rep = gl4_counterexample();
  CHECK(rep.commuting_pair_found);
  CHECK(!rep.both_types_in_one_algebra);
  CHECK(rep.control_same_type_found);
  CHECK(rep.z_scanned == 65536);
  CHECK(!rep.witness_x.empty());
  CHECK(!rep.witness_y.empty());
}

TEST_CASE("determinant and inverse through the elimination path (dim 3)") {
  const Gf& f = make_field_q(7);
  Mat diag(f, 3);
  diag.set(0, 0, 2);
  diag.set(1, 1, 3);
  diag.set(2, 2, 4);
  CHECK(diag.det() == 24 % 7);

  // Permutation matrices: +1 for the 3-cycle, -1 for a transposition.
  Mat cyc(f, 3);
  cyc.set(0, 1, 1);
  cyc.set(1, 2, 1);
  cyc.set(2, 0, 1);
  CHECK(cyc.det() == 1);
  Mat swap(f, 3);
  swap.set(0, 1, 1);
  swap.set(1, 0, 1);
  swap.set(2, 2, 1);
  CHECK(swap.det() == f.neg(1));

  CHECK(cyc * cyc.inverse() == Mat::identity(f, 3));
  CHECK(diag.inverse() * diag == Mat::identity(f, 3));
}

TEST_CASE("matrix inverse and determinant sanity over GF(9)") {
  const Gf& f = make_field_q(9);
  Mat m = Mat::mat2(f, 3, 1, 7, 2);
  if (m.det() == 0) return;  // encoding-dependent; skip if singular
  Mat inv = m.inverse();
  CHECK(m * inv == Mat::identity(f, 2));
  CHECK_THROWS_WITH_AS(Mat::mat2(f, 0, 0, 0, 0).inverse(),
                       doctest::Contains("SingularMatrix"), Error);
}

}  // TEST_SUITE
