#include "ccc/frobenius.hpp"

#include <algorithm>

#include "ccc/error.hpp"
#include "ccc/gf.hpp"

namespace ccc {

namespace {

void require_prime_index(const QuotientData& q) {
  auto factors = prime_factors(q.quotient_order);
  require(factors.size() == 1 && factors.front() == q.quotient_order,
          Errc::not_prime_index, "quotient order is not prime");
}

}  // namespace

bool all_nonidentity_classes_split(const QuotientData& q, const ClassSet& cs) {
  require_prime_index(q);
  const FiniteGroup& g = *q.group;
  for (const ConjugacyClass& c : cs.classes) {
    if (c.rep == g.identity()) continue;
    if (!q.contains_h(c.rep)) continue;
    if (!is_split(q, c)) return false;
  }
  return true;
}

bool is_frobenius_with_kernel(const FiniteGroup& g, const std::vector<int>& h_members) {
  std::vector<char> in_h(g.order(), 0);
  for (int h : h_members) in_h[h] = 1;
  for (int gen : g.generators())
    for (int h : h_members)
      require(in_h[g.conjugate(h, gen)], Errc::not_normal, "subgroup is not normal");

  if (static_cast<int>(h_members.size()) == g.order()) return false;  // no complement
  for (int t = 0; t < g.order(); ++t) {
    if (in_h[t]) continue;
    for (int h : h_members) {
      if (h == g.identity()) continue;
      if (g.mul(t, h) == g.mul(h, t)) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> upper_central_series(const FiniteGroup& g,
                                                   const std::vector<int>& members) {
  std::vector<std::vector<int>> series;
  std::vector<char> in_z(g.order(), 0);
  in_z[g.identity()] = 1;
  series.push_back({g.identity()});
  for (;;) {
    // Z_{i+1} = {h : [h, k] in Z_i for all k in H}.
    std::vector<int> next;
    for (int h : members) {
      bool ok = true;
      for (int k : members) {
        int commutator = g.mul(g.mul(g.inverse(h), g.inverse(k)), g.mul(h, k));
        if (!in_z[commutator]) {
          ok = false;
          break;
        }
      }
      if (ok) next.push_back(h);
    }
    if (next.size() == series.back().size()) break;
    for (int h : next) in_z[h] = 1;
    series.push_back(std::move(next));
  }
  return series;
}

FrobeniusReport proposition3_check(const QuotientData& q, const ClassSet& cs) {
  require_prime_index(q);
  const FiniteGroup& g = *q.group;

  FrobeniusReport rep;
  rep.all_nonidentity_split = all_nonidentity_classes_split(q, cs);
  rep.is_frobenius = is_frobenius_with_kernel(g, q.h_members);
  rep.fixed_point_free_checked = true;
  rep.complement_order = q.quotient_order;
  require(rep.all_nonidentity_split == rep.is_frobenius, Errc::equivalence_failure,
          "split-iff-Frobenius equivalence fails (bug)");

  if (rep.is_frobenius) {
    // From the proof: t^p lies in H and commutes with nothing, so t^p = 1.
    rep.complement_torsion_ok = true;
    for (int t = 0; t < g.order(); ++t)
      if (!q.contains_h(t) && g.power(t, q.quotient_order) != g.identity())
        rep.complement_torsion_ok = false;

    auto series = upper_central_series(g, q.h_members);
    for (const auto& level : series)
      rep.upper_central_series_sizes.push_back(static_cast<int>(level.size()));
    rep.kernel_nilpotent = series.back().size() == q.h_members.size();
  }
  return rep;
}

WeakenedSplitReport weakened_split_report(const QuotientData& q, const ClassSet& cs) {
  const FiniteGroup& g = *q.group;
  WeakenedSplitReport rep;
  rep.hypothesis_holds = true;
  for (const ConjugacyClass& c : cs.classes) {
    if (c.size() == 1) continue;  // singleton classes are exactly the central ones
    if (!is_split(q, c)) {
      rep.hypothesis_holds = false;
      break;
    }
  }
  if (rep.hypothesis_holds) {
    auto series = upper_central_series(g, q.h_members);
    rep.kernel_nilpotent = series.back().size() == q.h_members.size();
  }
  return rep;
}

}  // namespace ccc
