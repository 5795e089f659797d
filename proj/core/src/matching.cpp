#include "ccc/matching.hpp"

#include <algorithm>
#include <random>

#include "ccc/error.hpp"
#include "ccc/gf.hpp"

namespace ccc {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  bits_.assign((static_cast<std::size_t>(rows) * cols + 63) / 64, 0);
}

void BitMatrix::set(int r, int c, bool v) {
  std::size_t idx = static_cast<std::size_t>(r) * cols_ + c;
  if (v)
    bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
  else
    bits_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
}

BitMatrix restrict_relation(const ClassRelation& rel, std::span<const int> left,
                            std::span<const int> right) {
  BitMatrix adj(static_cast<int>(left.size()), static_cast<int>(right.size()));
  for (int r = 0; r < adj.rows(); ++r)
    for (int c = 0; c < adj.cols(); ++c)
      if (rel.at(left[r], right[c])) adj.set(r, c);
  return adj;
}

namespace {

bool try_augment(const BitMatrix& adj, int row, std::vector<int>& match_col,
                 std::vector<char>& visited) {
  // Free columns first, in canonical order; displacement only when none is
  // free. On a complete relation this yields the identity pairing.
  for (int c = 0; c < adj.cols(); ++c)
    if (adj.at(row, c) && !visited[c] && match_col[c] < 0) {
      visited[c] = 1;
      match_col[c] = row;
      return true;
    }
  for (int c = 0; c < adj.cols(); ++c) {
    if (!adj.at(row, c) || visited[c]) continue;
    visited[c] = 1;
    if (try_augment(adj, match_col[c], match_col, visited)) {
      match_col[c] = row;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::pair<int, int>> max_matching(const BitMatrix& adj) {
  std::vector<int> match_col(adj.cols(), -1);
  for (int r = 0; r < adj.rows(); ++r) {
    std::vector<char> visited(adj.cols(), 0);
    try_augment(adj, r, match_col, visited);
  }
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < adj.cols(); ++c)
    if (match_col[c] >= 0) out.emplace_back(match_col[c], c);
  std::sort(out.begin(), out.end());
  return out;
}

HallAuditReport hall_audit(const BitMatrix& adj, int subset_cap,
                           std::uint64_t seed, int random_samples) {
  require(subset_cap >= 0 && subset_cap <= 24, Errc::invalid_argument,
          "exhaustive subset cap limited to 24 rows");
  HallAuditReport rep;
  const int rows = adj.rows();
  const int words = (adj.cols() + 63) / 64;
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(rows) * words, 0);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < adj.cols(); ++c)
      if (adj.at(r, c))
        nbr[static_cast<std::size_t>(r) * words + (c >> 6)] |= std::uint64_t{1}
                                                               << (c & 63);

  int worst_margin = adj.cols() + 1;
  std::vector<std::uint64_t> acc(words);
  auto audit_subset = [&](const std::vector<int>& subset) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int row : subset)
      for (int w = 0; w < words; ++w)
        acc[w] |= nbr[static_cast<std::size_t>(row) * words + w];
    const int r = static_cast<int>(subset.size());
    int s = 0;
    for (int w = 0; w < words; ++w) s += __builtin_popcountll(acc[w]);
    ++rep.subsets_audited;
    if (s - r < worst_margin) {
      worst_margin = s - r;
      rep.worst_r = r;
      rep.worst_s = s;
      rep.worst_subset_rows = subset;
    }
    if (s < r) {
      rep.pass = false;
      rep.violations.push_back(HallViolation{subset, r, s});
    }
  };

  if (rows == 0) return rep;
  std::vector<int> subset;
  if (rows <= subset_cap) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << rows); ++mask) {
      subset.clear();
      for (int row = 0; row < rows; ++row)
        if (mask >> row & 1) subset.push_back(row);
      audit_subset(subset);
    }
    return rep;
  }

  rep.exhaustive = false;
  for (int i = 0; i < rows; ++i) audit_subset({i});
  for (int i = 0; i < rows; ++i)
    for (int j = i + 1; j < rows; ++j) audit_subset({i, j});
  std::mt19937_64 rng(seed);
  for (int t = 0; t < random_samples; ++t) {
    // Each row joins with probability 1/2; empty draws are redrawn.
    subset.clear();
    while (subset.empty())
      for (int row = 0; row < rows; ++row)
        if (rng() & 1) subset.push_back(row);
    audit_subset(subset);
  }
  return rep;
}

namespace {

std::vector<int> nonsplit_classes_of_coset(const ClassSet& cs, const QuotientData& q,
                                           int exponent, std::vector<char>* split_flags) {
  std::vector<int> out;
  for (const ConjugacyClass& c : cs.classes) {
    if (class_exponent(q, c) != exponent) continue;
    bool split = is_split(q, c);
    if (split_flags) split_flags->push_back(split ? 1 : 0);
    if (!split) out.push_back(c.id);
  }
  return out;
}

std::vector<int> classes_of_coset(const ClassSet& cs, const QuotientData& q, int exponent) {
  std::vector<int> out;
  for (const ConjugacyClass& c : cs.classes)
    if (class_exponent(q, c) == exponent) out.push_back(c.id);
  return out;
}

ClassPairWitness verified_witness(const FiniteGroup& g, const ClassSet& cs,
                                  int left_class, int right_class) {
  auto w = classes_commute(g, cs.classes[left_class], cs.classes[right_class]);
  require(w.has_value(), Errc::matching_incomplete,
          "matched pair has no commuting witness (bug)");
  const Element& a = g.element(w->c);
  const Element& b = g.element(w->d);
  require(mul(a, b) == mul(b, a), Errc::crosscheck_failure,
          "witness pair does not commute (bug)");
  return *w;
}

}  // namespace

ClassMatching theorem1_matching(const FiniteGroup& g, const ClassSet& cs,
                                const ClassRelation& rel, const QuotientData& q,
                                int x_exponent) {
  require(x_exponent >= 0 && x_exponent < q.quotient_order, Errc::invalid_argument,
          "coset exponent out of range");
  const int t_exponent = q.quotient_order == 1 ? 0 : 1;
  std::vector<int> left = nonsplit_classes_of_coset(cs, q, x_exponent, nullptr);
  std::vector<int> right = classes_of_coset(cs, q, t_exponent);
  require(left.size() == right.size(), Errc::count_mismatch,
          "non-split classes of Hx and classes of Ht differ in number (bug)");

  BitMatrix adj = restrict_relation(rel, left, right);
  auto pairing = max_matching(adj);
  require(pairing.size() == left.size(), Errc::matching_incomplete,
          "no perfect matching found (bug: Theorem 1 guarantees one)");

  ClassMatching out;
  out.coset_x = x_exponent;
  for (auto [r, c] : pairing)
    out.pairs.push_back(MatchedPair{left[r], right[c],
                                    verified_witness(g, cs, left[r], right[c])});
  out.verified = true;
  return out;
}

long long find_coprime_residue(long long group_order, long long p, long long i) {
  require(p >= 2, Errc::invalid_argument, "p must be >= 2");
  require(i >= 1 && i < p, Errc::invalid_argument, "residue must lie in [1, p)");
  require(gcd_ll(i, p) == 1, Errc::invalid_argument,
          "residue shares a factor with p");
  // Existence for prime p | group_order follows from the CRT; the bound
  // keeps malformed input from scanning forever.
  for (long long c = i; c <= p * group_order + p; c += p)
    if (gcd_ll(c, group_order) == 1) return c;
  fail(Errc::invalid_argument, "no coprime residue found (malformed input)");
}

std::vector<int> power_map_classes(const FiniteGroup& g, const ClassSet& cs, long long c) {
  require(gcd_ll(c, g.order()) == 1, Errc::not_coprime,
          "exponent not coprime to the group order");
  std::vector<int> image(cs.count());
  std::vector<char> hit(cs.count(), 0);
  for (int i = 0; i < cs.count(); ++i) {
    image[i] = cs.class_of[g.power(cs.classes[i].rep, c)];
    require(!hit[image[i]], Errc::crosscheck_failure,
            "power map is not injective on classes (bug)");
    hit[image[i]] = 1;
  }
  return image;
}

std::vector<std::pair<int, int>> power_map_class_bijection(const FiniteGroup& g,
                                                           const ClassSet& cs,
                                                           const QuotientData& q,
                                                           long long c, int x_exponent) {
  std::vector<int> image = power_map_classes(g, cs, c);
  const int target = static_cast<int>((c % q.quotient_order) * x_exponent % q.quotient_order);
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < cs.count(); ++i) {
    if (class_exponent(q, cs.classes[i]) != x_exponent) continue;
    require(class_exponent(q, cs.classes[image[i]]) == target, Errc::crosscheck_failure,
            "power-map image lies in the wrong coset (bug)");
    out.emplace_back(i, image[i]);
  }
  return out;
}

Theorem2Partition theorem2_partition(const FiniteGroup& g, const ClassSet& cs,
                                     const ClassRelation& rel, const QuotientData& q) {
  const long long p = q.quotient_order;
  {
    auto factors = prime_factors(p);
    require(factors.size() == 1 && factors.front() == p, Errc::not_prime_index,
            "quotient order is not prime");
  }

  Theorem2Partition out;
  for (long long i = 2; i < p; ++i)
    out.c_exponents.push_back(find_coprime_residue(g.order(), p, i));

  ClassMatching base = theorem1_matching(g, cs, rel, q, 0);
  std::vector<char> used(cs.count(), 0);
  for (const MatchedPair& pair : base.pairs) {
    CommutingTuple tuple;
    tuple.class_ids = {pair.left_class, pair.right_class};
    tuple.reps = {pair.witness.c, pair.witness.d};
    for (long long ci : out.c_exponents) {
      int rep = g.power(pair.witness.d, ci);
      tuple.class_ids.push_back(cs.class_of[rep]);
      tuple.reps.push_back(rep);
    }
    for (std::size_t m = 0; m < tuple.class_ids.size(); ++m) {
      const ConjugacyClass& cls = cs.classes[tuple.class_ids[m]];
      require(class_exponent(q, cls) == static_cast<int>(m), Errc::partition_defect,
              "tuple class lies in the wrong coset (bug)");
      require(!is_split(q, cls), Errc::partition_defect,
              "tuple contains a split class (bug)");
      require(!used[cls.id], Errc::partition_defect,
              "tuples are not disjoint (bug)");
      used[cls.id] = 1;
    }
    for (std::size_t a = 0; a < tuple.reps.size(); ++a)
      for (std::size_t b = a + 1; b < tuple.reps.size(); ++b)
        require(g.mul(tuple.reps[a], tuple.reps[b]) ==
                    g.mul(tuple.reps[b], tuple.reps[a]),
                Errc::partition_defect, "tuple representatives do not commute (bug)");
    out.tuples.push_back(std::move(tuple));
  }

  // Coverage: every non-split class sits in exactly one tuple.
  for (const ConjugacyClass& cls : cs.classes)
    require(used[cls.id] == (is_split(q, cls) ? 0 : 1), Errc::partition_defect,
            "tuples do not cover exactly the non-split classes (bug)");
  return out;
}

ExplorationResult conjecture_explorer(const FiniteGroup& g, const ClassSet& cs,
                                      const ClassRelation& rel, const QuotientData& q,
                                      int x_exponent, int y_exponent) {
  require(x_exponent >= 0 && x_exponent < q.quotient_order &&
              y_exponent >= 0 && y_exponent < q.quotient_order,
          Errc::invalid_argument, "coset exponent out of range");
  std::vector<int> left = nonsplit_classes_of_coset(cs, q, x_exponent, nullptr);
  std::vector<int> right = nonsplit_classes_of_coset(cs, q, y_exponent, nullptr);

  ExplorationResult out;
  out.coset_x = x_exponent;
  out.coset_y = y_exponent;
  auto pairing = max_matching(restrict_relation(rel, left, right));
  out.found = left.size() == right.size() && pairing.size() == left.size();
  if (out.found)
    for (auto [r, c] : pairing)
      out.pairs.push_back(MatchedPair{left[r], right[c],
                                      verified_witness(g, cs, left[r], right[c])});
  return out;
}

}  // namespace ccc
