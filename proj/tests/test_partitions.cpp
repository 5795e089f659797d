#include <doctest.h>

#include <algorithm>
#include <random>

#include "ccc/error.hpp"
#include "ccc/groupspec.hpp"
#include "ccc/matching.hpp"
#include "ccc/partitions.hpp"

using namespace ccc;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

bool has(const std::vector<Partition>& set, const Partition& p) {
  return std::binary_search(set.begin(), set.end(), p);
}

}  // namespace

TEST_SUITE("sym_partitions") {

TEST_CASE("partition counts: p(0) = 1, p(5) = 7, p(10) = 42") {
  CHECK(partitions(0).size() == 1);
  CHECK(partitions(0).front().empty());
  CHECK(partitions(5).size() == 7);
  CHECK(partitions(10).size() == 42);
}

TEST_CASE("reverse-lexicographic enumeration order") {
  auto ps = partitions(6);
  CHECK(ps.front() == P({6}));
  CHECK(ps.back() == P({1, 1, 1, 1, 1, 1}));
  for (std::size_t i = 1; i < ps.size(); ++i)
    CHECK(ps[i - 1].parts() > ps[i].parts());
}

TEST_CASE("parse and print round-trip") {
  for (const char* text : {"", "1", "4+3+3+1", "2+2+2"}) {
    Partition p = Partition::parse(text);
    CHECK(p.to_string() == text);
    CHECK(Partition::parse(p.to_string()) == p);
  }
  CHECK(Partition::parse("3+1+4").parts() == std::vector<int>{4, 3, 1});
  CHECK_THROWS_AS(Partition::parse("3+"), Error);
  CHECK_THROWS_AS(Partition::parse("0"), Error);
}

TEST_CASE("classification: even part count and distinct odd parts") {
  CHECK(classify(P({2, 2, 1})).in_p_even);
  CHECK(!classify(P({2, 2, 1})).in_d_o);
  CHECK(classify(P({5, 3, 1})).in_p_even);
  CHECK(classify(P({5, 3, 1})).in_d_o);
  CHECK(classify(P({3, 1, 1})).in_p_even);
  CHECK(!classify(P({3, 1, 1})).in_d_o);  // repeated 1
  CHECK(!classify(P({4, 1})).in_p_even);
}

TEST_CASE("coarsenings of (4,3^4,1^2) include the two known examples") {
  auto cs = coarsenings(P({4, 3, 3, 3, 3, 1, 1}));
  CHECK(has(cs, P({12, 4, 2})));
  CHECK(has(cs, P({6, 4, 3, 3, 1, 1})));
  CHECK(has(cs, P({4, 3, 3, 3, 3, 1, 1})));
}

TEST_CASE("coarsenings of (1) and of single-level groupings only") {
  CHECK(coarsenings(P({1})) == std::vector<Partition>{P({1})});
  // One level of grouping: (2,1,1) reaches (2,2) but not (4), because 4
  // cannot be written as a sum of equal available parts.
  auto cs = coarsenings(P({2, 1, 1}));
  CHECK(cs == std::vector<Partition>{P({2, 1, 1}), P({2, 2})});
  CHECK(coarsenings(P({3, 1})) == std::vector<Partition>{P({3, 1})});
}

TEST_CASE("coarsenings preserve the total and contain the input") {
  for (int n = 1; n <= 9; ++n)
    for (const Partition& p : partitions(n)) {
      auto cs = coarsenings(p);
      CHECK(cs.front() == p);  // ascending order puts the finest first
      for (const Partition& c : cs) CHECK(c.n() == n);
    }
}

TEST_CASE("coarsening properties on random partitions of n = 20") {
  std::mt19937_64 rng(1);
  auto random_partition = [&](int n) {
    std::vector<int> parts;
    while (n > 0) {
      int part = 1 + static_cast<int>(rng() % n);
      parts.push_back(part);
      n -= part;
    }
    return Partition(parts);
  };
  for (int trial = 0; trial < 40; ++trial) {
    Partition a = random_partition(20);
    Partition b = random_partition(20);
    for (const Partition& c : coarsenings(a)) CHECK(c.n() == 20);
    CHECK(coarsenings(a).front() == a);
    auto ab = common_coarsening(a, b);
    auto ba = common_coarsening(b, a);
    REQUIRE(ab.has_value() == ba.has_value());
    if (ab) {
      CHECK(*ab == *ba);
      // The witness coarsens both sides.
      auto ca = coarsenings(a);
      auto cb = coarsenings(b);
      CHECK(std::binary_search(ca.begin(), ca.end(), *ab));
      CHECK(std::binary_search(cb.begin(), cb.end(), *ab));
    }
  }
}

TEST_CASE("common coarsening of a partition with itself is itself") {
  for (const Partition& p : partitions(7)) {
    auto c = common_coarsening(p, p);
    REQUIRE(c.has_value());
    CHECK(*c == p);
  }
}

TEST_CASE("frozen small cases of common_coarsening") {
  // (2,1,1) vs (4): the group oracle says transpositions do not commute
  // with 4-cycles in Sym(4), so there must be no common coarsening.
  CHECK(!common_coarsening(P({2, 1, 1}), P({4})));
  CHECK(!common_coarsening(P({2, 1, 1}), P({3, 1})));
  auto c = common_coarsening(P({2, 2}), P({4}));
  REQUIRE(c.has_value());
  CHECK(*c == P({4}));
  CHECK_THROWS_WITH_AS(common_coarsening(P({2, 1}), P({4})),
                       doctest::Contains("SizeMismatch"), Error);
}

TEST_CASE("common coarsening is symmetric, witness included") {
  for (const Partition& a : partitions(7))
    for (const Partition& b : partitions(7)) {
      auto ab = common_coarsening(a, b);
      auto ba = common_coarsening(b, a);
      CHECK(ab.has_value() == ba.has_value());
      if (ab) CHECK(*ab == *ba);
    }
}

TEST_CASE("group oracle: identity class commutes with everything") {
  for (const Partition& p : partitions(5))
    CHECK(sym_commuting_oracle(5, p, P({1, 1, 1, 1, 1})));
}

TEST_CASE("group oracle matches the frozen Sym(4) facts") {
  CHECK(!sym_commuting_oracle(4, P({2, 1, 1}), P({4})));
  CHECK(sym_commuting_oracle(4, P({2, 2}), P({4})));
}

TEST_CASE("group oracle caps at n = 8") {
  CHECK_THROWS_WITH_AS(sym_commuting_oracle(9, P({9}), P({9})),
                       doctest::Contains("TooLarge"), Error);
}

TEST_CASE("proposition 1 crosscheck pairs counted") {
  CHECK(proposition1_crosscheck(1).pairs_checked == 1);
  CHECK(proposition1_crosscheck(3).pairs_checked == 6);
  CHECK(proposition1_crosscheck(4).pairs_checked == 15);
  CHECK(proposition1_crosscheck(4).consistent);
}

TEST_CASE("counting identity small values") {
  PartitionCounts c5 = counting_identity(5);
  CHECK(c5.p_even == 4);
  CHECK(c5.p_odd == 3);
  CHECK(c5.d_o == 1);
  PartitionCounts c1 = counting_identity(1);
  CHECK(c1.p_even == 1);
  CHECK(c1.p_odd == 0);
  CHECK(c1.d_o == 1);
  PartitionCounts c2 = counting_identity(2);
  CHECK(c2.p_even == 1);
  CHECK(c2.p_odd == 1);
  CHECK(c2.d_o == 0);
}

TEST_CASE("bijection f at n = 2 pairs (1,1) with (2)") {
  auto pairs = sym_bijection_f(2);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].first == P({1, 1}));
  CHECK(pairs[0].second == P({2}));
}

TEST_CASE("bijection f at n = 4 matches {(1^4),(2,2)} into the odd side") {
  auto pairs = sym_bijection_f(4);
  REQUIRE(pairs.size() == 2);
  for (const auto& [l, r] : pairs) {
    CHECK((l == P({1, 1, 1, 1}) || l == P({2, 2})));
    CHECK((r == P({2, 1, 1}) || r == P({4})));
    CHECK(common_coarsening(l, r).has_value());
  }
}

TEST_CASE("bijection f sizes follow the counting identity") {
  for (int n : {5, 6, 9, 12}) {
    PartitionCounts c = counting_identity(n);
    CHECK(sym_bijection_f(n).size() ==
          static_cast<std::size_t>(c.p_even - c.d_o));
  }
}

TEST_CASE("bijection f and theorem 1 are both perfect on Sym(n)/Alt(n)") {
  for (int n = 3; n <= 7; ++n) {
    BuiltPair built = build_group(parse_group_spec("sym:" + std::to_string(n), "alt"));
    ClassSet cs = conjugacy_classes(*built.group);
    ClassRelation rel = ClassRelation::commuting(*built.group, cs);
    QuotientData q = cyclic_quotient(*built.group, built.h_members);
    ClassMatching m = theorem1_matching(*built.group, cs, rel, q, 0);
    CHECK(m.pairs.size() == sym_bijection_f(n).size());
  }
}

TEST_CASE("the double-transposition counterexample in Sym(4)") {
  Sym4Report rep = sym4_counterexample();
  CHECK(rep.pair_commutes);
  CHECK(!rep.witness_exists);
  CHECK(rep.control_witness_exists);
  CHECK(rep.candidates_checked == 24);
}

}  // TEST_SUITE
