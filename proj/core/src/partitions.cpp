#include "ccc/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "ccc/error.hpp"
#include "ccc/matching.hpp"
#include "ccc/relation.hpp"

namespace ccc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    require(p >= 1, Errc::invalid_argument, "partition parts must be positive");
  std::sort(parts_.rbegin(), parts_.rend());
  for (int p : parts_) n_ += p;
}

Partition Partition::parse(const std::string& text) {
  if (text.empty()) return Partition{};
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    require(std::isdigit(static_cast<unsigned char>(text[i])), Errc::parse_error,
            "bad partition string: " + text);
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    parts.push_back(v);
    if (i < text.size()) {
      require(text[i] == '+', Errc::parse_error, "bad partition string: " + text);
      ++i;
      require(i < text.size(), Errc::parse_error, "trailing '+': " + text);
    }
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(parts_[i]);
  }
  return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  require(n >= 0, Errc::invalid_argument, "n must be >= 0");
  std::vector<int> current;
  // Descending-first recursion yields reverse-lexicographic order.
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      fn(Partition(current));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

PartitionClass classify(const Partition& p) {
  PartitionClass out;
  int even_parts = 0;
  bool all_odd_distinct = true;
  const auto& parts = p.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] % 2 == 0) ++even_parts;
    if (parts[i] % 2 == 0 || (i + 1 < parts.size() && parts[i] == parts[i + 1]))
      all_odd_distinct = false;
  }
  out.in_p_even = even_parts % 2 == 0;
  out.in_d_o = all_odd_distinct;
  require(!out.in_d_o || out.in_p_even, Errc::crosscheck_failure,
          "distinct-odd partition with odd even-part count (impossible)");
  return out;
}

std::vector<Partition> coarsenings(const Partition& p) {
  // Each part of a coarsening is the sum of one group of equal parts: for
  // every distinct part size v with multiplicity m, a partition of m chooses
  // the group sizes, each group of j copies becoming one part j*v. (The
  // one-level grouping matters: merging unequal intermediate parts would
  // relate (2,1,1) to (4), which the regular-orbit argument rules out.)
  std::vector<std::pair<int, int>> groups;  // (part size, multiplicity)
  for (int part : p.parts()) {
    if (!groups.empty() && groups.back().first == part)
      ++groups.back().second;
    else
      groups.emplace_back(part, 1);
  }

  std::set<std::vector<int>> results;
  std::vector<int> acc;
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      std::vector<int> sorted = acc;
      std::sort(sorted.rbegin(), sorted.rend());
      results.insert(std::move(sorted));
      return;
    }
    auto [value, mult] = groups[g];
    for_each_partition(mult, [&](const Partition& grouping) {
      std::size_t before = acc.size();
      for (int j : grouping.parts()) acc.push_back(j * value);
      rec(g + 1);
      acc.resize(before);
    });
  };
  rec(0);

  std::vector<Partition> out;
  out.reserve(results.size());
  for (const auto& parts : results) out.push_back(Partition(parts));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Partition> common_coarsening(const Partition& a, const Partition& b) {
  require(a.n() == b.n(), Errc::size_mismatch,
          "partitions of different numbers have no common coarsening");
  std::vector<Partition> ca = coarsenings(a);
  std::vector<Partition> cb = coarsenings(b);
  std::vector<Partition> common;
  std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(),
                        std::back_inserter(common));
  if (common.empty()) return std::nullopt;
  return common.front();  // ascending order, so this is the canonical minimum
}

namespace {

// Shared brute-force context for one symmetric group.
struct SymContext {
  FiniteGroup group;
  ClassSet classes;
  ClassRelation rel;
  std::map<std::vector<int>, int> class_by_type;
};

SymContext make_sym_context(int n) {
  require(n >= 1, Errc::invalid_argument, "n must be >= 1");
  require(n <= 8, Errc::too_large, "group brute force is capped at Sym(8)");
  std::vector<Element> gens;
  if (n == 1) {
    gens.push_back(Perm(1));
  } else {
    gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    std::vector<unsigned> full(n);
    for (int i = 0; i < n; ++i) full[i] = static_cast<unsigned>(i);
    gens.push_back(Perm::from_cycles(n, {full}));
  }
  SymContext ctx{FiniteGroup::close(std::move(gens)), {}, {}, {}};
  ctx.classes = conjugacy_classes(ctx.group);
  ctx.rel = ClassRelation::commuting(ctx.group, ctx.classes);
  for (const ConjugacyClass& c : ctx.classes.classes)
    ctx.class_by_type[std::get<Perm>(ctx.group.element(c.rep)).cycle_type()] = c.id;
  return ctx;
}

}  // namespace

bool sym_commuting_oracle(int n, const Partition& lambda, const Partition& mu) {
  require(lambda.n() == n && mu.n() == n, Errc::size_mismatch,
          "partitions must partition n");
  SymContext ctx = make_sym_context(n);
  return ctx.rel.at(ctx.class_by_type.at(lambda.parts()),
                    ctx.class_by_type.at(mu.parts()));
}

Prop1Report proposition1_crosscheck(int n) {
  SymContext ctx = make_sym_context(n);
  std::vector<Partition> ps = partitions(n);
  std::vector<std::vector<Partition>> coarse;
  coarse.reserve(ps.size());
  for (const Partition& p : ps) coarse.push_back(coarsenings(p));

  Prop1Report rep;
  rep.n = n;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i; j < ps.size(); ++j) {
      std::vector<Partition> common;
      std::set_intersection(coarse[i].begin(), coarse[i].end(), coarse[j].begin(),
                            coarse[j].end(), std::back_inserter(common));
      bool combinatorial = !common.empty();
      bool group_truth = ctx.rel.at(ctx.class_by_type.at(ps[i].parts()),
                                    ctx.class_by_type.at(ps[j].parts()));
      require(combinatorial == group_truth, Errc::crosscheck_failure,
              "common-coarsening criterion disagrees with Sym(" + std::to_string(n) +
                  ") on " + ps[i].to_string() + " vs " + ps[j].to_string());
      ++rep.pairs_checked;
    }
  }
  rep.consistent = true;
  return rep;
}

PartitionCounts counting_identity(int n) {
  require(n >= 1, Errc::invalid_argument, "n must be >= 1");
  PartitionCounts counts;
  for_each_partition(n, [&](const Partition& p) {
    PartitionClass c = classify(p);
    if (c.in_p_even)
      ++counts.p_even;
    else
      ++counts.p_odd;
    if (c.in_d_o) ++counts.d_o;
  });
  require(counts.p_even == counts.p_odd + counts.d_o, Errc::crosscheck_failure,
          "counting identity p_even = p_odd + d_o fails at n = " + std::to_string(n));
  return counts;
}

std::vector<std::pair<Partition, Partition>> sym_bijection_f(int n) {
  require(n >= 1, Errc::invalid_argument, "n must be >= 1");
  require(n <= 40, Errc::too_large, "coarsening relation capped at n = 40");
  std::vector<Partition> left, right;
  for_each_partition(n, [&](const Partition& p) {
    PartitionClass c = classify(p);
    if (c.in_p_even && !c.in_d_o) left.push_back(p);
    if (!c.in_p_even) right.push_back(p);
  });
  std::vector<std::vector<Partition>> lcoarse, rcoarse;
  for (const Partition& p : left) lcoarse.push_back(coarsenings(p));
  for (const Partition& p : right) rcoarse.push_back(coarsenings(p));

  BitMatrix adj(static_cast<int>(left.size()), static_cast<int>(right.size()));
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t j = 0; j < right.size(); ++j) {
      bool related =
          std::ranges::any_of(lcoarse[i], [&](const Partition& nu) {
            return std::binary_search(rcoarse[j].begin(), rcoarse[j].end(), nu);
          });
      if (related) adj.set(static_cast<int>(i), static_cast<int>(j));
    }

  auto pairing = max_matching(adj);
  require(pairing.size() == left.size() && left.size() == right.size(),
          Errc::matching_incomplete,
          "no perfect matching Peven\\Do -> Podd (bug: existence is a theorem)");
  std::vector<std::pair<Partition, Partition>> out;
  for (auto [l, r] : pairing) out.emplace_back(left[l], right[r]);
  return out;
}

namespace {

// Does some power of z agree with target on every orbit of z? Powers may
// differ from orbit to orbit.
bool acts_as_powers_on_orbits(const Perm& target, const Perm& z) {
  for (const auto& orbit : z.cycles(true)) {
    Perm zp(z.degree());
    bool any = false;
    for (std::size_t a = 0; a < orbit.size(); ++a) {
      bool match = true;
      for (unsigned pt : orbit)
        if (target[pt] != zp[pt]) {
          match = false;
          break;
        }
      if (match) {
        any = true;
        break;
      }
      zp = zp * z;
    }
    if (!any) return false;
  }
  return true;
}

}  // namespace

Sym4Report sym4_counterexample() {
  const Perm x = Perm::from_cycles(4, {{0, 1}, {2, 3}});
  const Perm y = Perm::from_cycles(4, {{0, 2}, {1, 3}});
  Sym4Report rep;
  rep.pair_commutes = x * y == y * x;

  // Enumerate Sym(4) independently of the group machinery.
  std::vector<std::uint8_t> images{0, 1, 2, 3};
  do {
    Perm z(images);
    ++rep.candidates_checked;
    if (acts_as_powers_on_orbits(x, z) && acts_as_powers_on_orbits(y, z))
      rep.witness_exists = true;
    if (acts_as_powers_on_orbits(x, z))
      rep.control_witness_exists = true;
  } while (std::next_permutation(images.begin(), images.end()));
  return rep;
}

}  // namespace ccc
