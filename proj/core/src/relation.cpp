#include "ccc/relation.hpp"

#include <algorithm>

#include "ccc/error.hpp"

namespace ccc {

std::optional<ClassPairWitness> classes_commute(const FiniteGroup& g,
                                                const ConjugacyClass& C,
                                                const ConjugacyClass& D) {
  const Element& c = g.element(C.rep);
  for (int d : D.members) {
    const Element& de = g.element(d);
    if (mul(c, de) == mul(de, c))
      return ClassPairWitness{C.id, D.id, C.rep, d};
  }
  return std::nullopt;
}

ClassRelation::ClassRelation(int k) : k_(k) {
  bits_.assign((static_cast<std::size_t>(k) * k + 63) / 64, 0);
}

void ClassRelation::set(int i, int j, bool v) {
  std::size_t idx = static_cast<std::size_t>(i) * k_ + j;
  if (v)
    bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
  else
    bits_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
}

ClassRelation ClassRelation::commuting(const FiniteGroup& g, const ClassSet& cs) {
  ClassRelation rel(cs.count());
  for (int i = 0; i < cs.count(); ++i)
    for (int j = i; j < cs.count(); ++j)
      if (classes_commute(g, cs.classes[i], cs.classes[j])) {
        rel.set(i, j);
        rel.set(j, i);
      }
  return rel;
}

bool is_split(const QuotientData& q, const ConjugacyClass& c) {
  const FiniteGroup& g = *q.group;
  // Orbit of the representative under conjugation by H.
  std::vector<int> orbit{c.rep};
  std::vector<char> seen(g.order(), 0);
  seen[c.rep] = 1;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (int hg : q.h_generators) {
      int conj = g.conjugate(orbit[head], hg);
      if (!seen[conj]) {
        seen[conj] = 1;
        orbit.push_back(conj);
      }
    }
  }
  return static_cast<int>(orbit.size()) < c.size();
}

bool is_split_by_centralizer(const QuotientData& q, const ConjugacyClass& c) {
  const FiniteGroup& g = *q.group;
  // Non-split iff Cent_G(rep) meets every coset of H.
  std::vector<char> hit(q.quotient_order, 0);
  int covered = 0;
  for (int x = 0; x < g.order(); ++x) {
    if (g.mul(x, c.rep) != g.mul(c.rep, x)) continue;
    if (!hit[q.exponent_of[x]]) {
      hit[q.exponent_of[x]] = 1;
      if (++covered == q.quotient_order) return false;
    }
  }
  return true;
}

std::vector<ClassCosetProfile> coset_profiles(const QuotientData& q, const ClassSet& cs) {
  std::vector<ClassCosetProfile> out(q.quotient_order);
  for (int m = 0; m < q.quotient_order; ++m) out[m].exponent = m;
  for (const ConjugacyClass& c : cs.classes) {
    ClassCosetProfile& prof = out[class_exponent(q, c)];
    bool split = is_split(q, c);
    prof.class_ids.push_back(c.id);
    prof.split.push_back(split ? 1 : 0);
    if (!split) ++prof.nonsplit_count;
    if (split && is_generating_exponent(q, prof.exponent))
      fail(Errc::count_mismatch,
           "split class found in a generating coset (theorem violation)");
  }
  for (const ClassCosetProfile& prof : out)
    require(prof.nonsplit_count == out.front().nonsplit_count, Errc::count_mismatch,
            "non-split class counts differ between cosets (theorem violation)");
  return out;
}

std::vector<int> central_classes(const FiniteGroup& g, const ClassSet& cs,
                                 const ClassRelation& rel) {
  std::vector<int> out;
  for (int i = 0; i < cs.count(); ++i) {
    bool universal = true;
    for (int j = 0; j < cs.count(); ++j)
      if (!rel.at(i, j)) {
        universal = false;
        break;
      }
    if (!universal) continue;
    // The covering argument forces such a class to be a central singleton.
    const ConjugacyClass& c = cs.classes[i];
    bool central = c.size() == 1;
    for (int gen : g.generators())
      central = central && g.mul(c.rep, gen) == g.mul(gen, c.rep);
    require(central, Errc::non_central_universal_class,
            "universally commuting class is not central (bug)");
    out.push_back(i);
  }
  return out;
}

std::string relation_dot(const FiniteGroup&, const ClassSet& cs,
                         const ClassRelation& rel, const QuotientData* q) {
  std::string out = "graph commuting_classes {\n";
  for (const ConjugacyClass& c : cs.classes) {
    int coset = q ? class_exponent(*q, c) : 0;
    int split = q ? (is_split(*q, c) ? 1 : 0) : 0;
    out += "  c" + std::to_string(c.id) + " [label=\"c" + std::to_string(c.id) +
           "[coset=" + std::to_string(coset) + ",split=" + std::to_string(split) +
           ",size=" + std::to_string(c.size()) + "]\"];\n";
  }
  for (int i = 0; i < cs.count(); ++i)
    for (int j = i + 1; j < cs.count(); ++j)
      if (rel.at(i, j))
        out += "  c" + std::to_string(i) + " -- c" + std::to_string(j) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace ccc
