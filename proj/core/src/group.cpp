#include "ccc/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ccc/error.hpp"

namespace ccc {

FiniteGroup FiniteGroup::close(std::vector<Element> generators, int cap) {
  require(!generators.empty(), Errc::invalid_argument, "no generators given");
  for (const Element& e : generators)
    require(same_kind(e, generators.front()), Errc::kind_mismatch,
            "generators of mixed kind or degree");

  std::set<Element> seen(generators.begin(), generators.end());
  Element id = ccc::mul(generators.front(), inverse_of(generators.front()));
  seen.insert(id);
  std::deque<Element> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    Element cur = std::move(todo.front());
    todo.pop_front();
    for (const Element& gen : generators) {
      Element prod = ccc::mul(cur, gen);
      if (seen.insert(prod).second) {
        require(static_cast<int>(seen.size()) <= cap, Errc::cap_exceeded,
                "group closure exceeds cap " + std::to_string(cap));
        todo.push_back(std::move(prod));
      }
    }
  }

  FiniteGroup g;
  g.elements_.assign(seen.begin(), seen.end());  // std::set iterates sorted
  g.inverses_.resize(g.order());
  for (int i = 0; i < g.order(); ++i) {
    int inv = g.index_of(inverse_of(g.elements_[i]));
    require(inv >= 0, Errc::crosscheck_failure, "closure not inverse-closed");
    g.inverses_[i] = inv;
    if (is_identity(g.elements_[i])) g.identity_ = i;
  }
  require(g.identity_ >= 0, Errc::crosscheck_failure, "identity not found");
  for (const Element& e : generators) g.gens_.push_back(g.index_of(e));
  std::sort(g.gens_.begin(), g.gens_.end());
  g.gens_.erase(std::unique(g.gens_.begin(), g.gens_.end()), g.gens_.end());
  return g;
}

int FiniteGroup::index_of(const Element& e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || !(*it == e)) return -1;
  return static_cast<int>(it - elements_.begin());
}

int FiniteGroup::mul(int a, int b) const {
  int r = index_of(ccc::mul(elements_[a], elements_[b]));
  require(r >= 0, Errc::crosscheck_failure, "product left the enumerated group");
  return r;
}

int FiniteGroup::conjugate(int g, int x) const {
  return mul(mul(inverses_[x], g), x);
}

int FiniteGroup::power(int g, long long e) const {
  if (e < 0) {
    g = inverses_[g];
    e = -e;
  }
  int out = identity_;
  while (e) {
    if (e & 1) out = mul(out, g);
    g = mul(g, g);
    e >>= 1;
  }
  return out;
}

int FiniteGroup::element_order(int g) const {
  int ord = 1;
  int x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_perm_group() const {
  return std::holds_alternative<Perm>(elements_.front());
}

ClassSet conjugacy_classes(const FiniteGroup& g) {
  ClassSet out;
  out.class_of.assign(g.order(), -1);
  for (int e = 0; e < g.order(); ++e) {
    if (out.class_of[e] != -1) continue;
    // Orbit of e under conjugation by the generators.
    int cid = static_cast<int>(out.classes.size());
    std::vector<int> members{e};
    out.class_of[e] = cid;
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int gen : g.generators()) {
        int conj = g.conjugate(members[head], gen);
        if (out.class_of[conj] == -1) {
          out.class_of[conj] = cid;
          members.push_back(conj);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.classes.push_back(ConjugacyClass{cid, members.front(), std::move(members)});
  }
  // Element ids are canonical, so the first member of the first-discovered
  // class is the overall minimum; discovery order already sorts by rep.
  for (std::size_t i = 1; i < out.classes.size(); ++i)
    require(out.classes[i - 1].rep < out.classes[i].rep, Errc::crosscheck_failure,
            "classes not sorted by representative");
  return out;
}

std::vector<int> centralizer(const FiniteGroup& g, int e, std::span<const int> within) {
  std::vector<int> out;
  for (int x : within)
    if (g.mul(x, e) == g.mul(e, x)) out.push_back(x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> centralizer(const FiniteGroup& g, int e) {
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i) all[i] = i;
  return centralizer(g, e, all);
}

std::vector<int> centre(const FiniteGroup& g) {
  std::vector<int> out;
  for (int e = 0; e < g.order(); ++e) {
    bool central = true;
    for (int gen : g.generators())
      if (g.mul(e, gen) != g.mul(gen, e)) {
        central = false;
        break;
      }
    if (central) out.push_back(e);
  }
  return out;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, std::span<const int> seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{g.identity()};
  in[g.identity()] = 1;
  for (int s : seed)
    if (!in[s]) {
      in[s] = 1;
      members.push_back(s);
    }
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (int s : seed) {
      int prod = g.mul(members[head], s);
      if (!in[prod]) {
        in[prod] = 1;
        members.push_back(prod);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<int> subgroup_generators(const FiniteGroup& g, std::span<const int> members) {
  std::vector<int> gens;
  std::vector<int> closed{g.identity()};
  for (int m : members) {
    if (std::binary_search(closed.begin(), closed.end(), m)) continue;
    gens.push_back(m);
    closed = subgroup_closure(g, gens);
  }
  return gens;
}

bool is_subgroup(const FiniteGroup& g, std::span<const int> members) {
  if (members.empty()) return false;
  std::vector<int> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> gens = subgroup_generators(g, sorted);
  return subgroup_closure(g, gens) == sorted;
}

}  // namespace ccc
