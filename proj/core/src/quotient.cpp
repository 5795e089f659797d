#include "ccc/quotient.hpp"

#include <algorithm>
#include <numeric>

#include "ccc/error.hpp"
#include "ccc/gf.hpp"

namespace ccc {

QuotientData cyclic_quotient(const FiniteGroup& g, std::vector<int> h_members) {
  std::sort(h_members.begin(), h_members.end());
  h_members.erase(std::unique(h_members.begin(), h_members.end()), h_members.end());

  QuotientData q;
  q.group = &g;
  q.in_h.assign(g.order(), 0);
  for (int m : h_members) q.in_h[m] = 1;
  q.h_generators = subgroup_generators(g, h_members);
  require(subgroup_closure(g, q.h_generators) == h_members, Errc::invalid_argument,
          "h_members is not a subgroup");
  q.h_members = std::move(h_members);

  // Normality: conjugating H by the group generators must stay in H.
  for (int gen : g.generators())
    for (int h : q.h_members)
      require(q.in_h[g.conjugate(h, gen)], Errc::not_normal,
              "subgroup is not normal");

  // Coset decomposition in canonical order.
  const int n = g.order() / static_cast<int>(q.h_members.size());
  std::vector<int> coset_of(g.order(), -1);
  std::vector<int> coset_rep;
  for (int e = 0; e < g.order(); ++e) {
    if (coset_of[e] != -1) continue;
    int c = static_cast<int>(coset_rep.size());
    coset_rep.push_back(e);
    for (int h : q.h_members) coset_of[g.mul(h, e)] = c;
  }
  require(static_cast<int>(coset_rep.size()) == n, Errc::crosscheck_failure,
          "coset count mismatch");

  // Quotient is cyclic iff some coset has order n in G/H.
  auto coset_mul = [&](int a, int b) { return coset_of[g.mul(coset_rep[a], coset_rep[b])]; };
  const int h_coset = coset_of[g.identity()];
  auto coset_order = [&](int c) {
    int ord = 1, x = c;
    while (x != h_coset) {
      x = coset_mul(x, c);
      ++ord;
    }
    return ord;
  };
  std::vector<int> orders(n);
  int generating = -1;
  for (int c = 0; c < n; ++c) {
    orders[c] = coset_order(c);
    if (orders[c] == n && generating < 0) generating = c;
  }
  require(generating >= 0, Errc::quotient_not_cyclic,
          "quotient group is not cyclic");

  // t_rep: canonically smallest element lying in any generating coset. When
  // n = 1 the single coset H generates vacuously and t_rep is the identity.
  if (n == 1) {
    q.t_rep = g.identity();
  } else {
    q.t_rep = -1;
    for (int e = 0; e < g.order(); ++e)
      if (orders[coset_of[e]] == n) {
        q.t_rep = e;
        break;
      }
  }

  // Discrete log base the coset of t_rep.
  std::vector<int> exp_of_coset(n, -1);
  int x = h_coset;
  const int t_coset = coset_of[q.t_rep];
  for (int m = 0; m < n; ++m) {
    require(exp_of_coset[x] == -1, Errc::crosscheck_failure, "coset power cycle defect");
    exp_of_coset[x] = m;
    x = coset_mul(x, t_coset);
  }
  q.quotient_order = n;
  q.exponent_of.resize(g.order());
  for (int e = 0; e < g.order(); ++e) q.exponent_of[e] = exp_of_coset[coset_of[e]];
  return q;
}

int class_exponent(const QuotientData& q, const ConjugacyClass& c) {
  return q.exponent_of[c.rep];
}

bool is_generating_exponent(const QuotientData& q, int m) {
  return gcd_ll(m, q.quotient_order) == 1;
}

}  // namespace ccc
