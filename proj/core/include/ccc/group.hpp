#pragma once

#include <span>
#include <string>
#include <vector>

#include "ccc/element.hpp"

namespace ccc {

inline constexpr int kDefaultClosureCap = 250000;

// Fully enumerated finite group. Elements are stored in canonical sorted
// order, so element ids double as canonical ranks: the smaller id is the
// canonically smaller element. Immutable after construction.
class FiniteGroup {
public:
  // BFS closure of the generators; CapExceeded when the closure grows past
  // cap, KindMismatch when the generators are heterogeneous.
  static FiniteGroup close(std::vector<Element> generators,
                           int cap = kDefaultClosureCap);

  int order() const { return static_cast<int>(elements_.size()); }
  const Element& element(int id) const { return elements_[id]; }
  int identity() const { return identity_; }
  const std::vector<int>& generators() const { return gens_; }

  int index_of(const Element& e) const;  // -1 when absent
  int mul(int a, int b) const;
  int inverse(int a) const { return inverses_[a]; }
  int conjugate(int g, int x) const;  // x^-1 g x
  int power(int g, long long e) const;
  int element_order(int g) const;

  bool is_perm_group() const;
  std::string render_element(int id) const { return render(elements_[id]); }

private:
  std::vector<Element> elements_;
  std::vector<int> inverses_;
  std::vector<int> gens_;
  int identity_ = -1;
};

struct ConjugacyClass {
  int id = 0;
  int rep = 0;               // canonical minimum member
  std::vector<int> members;  // ascending element ids
  int size() const { return static_cast<int>(members.size()); }
};

struct ClassSet {
  std::vector<ConjugacyClass> classes;  // sorted by rep
  std::vector<int> class_of;            // element id -> class id
  int count() const { return static_cast<int>(classes.size()); }
};

// Conjugation orbits; classes partition the element set and are sorted by
// their canonical-minimum representatives.
ClassSet conjugacy_classes(const FiniteGroup& g);

// {x in within : xg = gx}, ascending ids. The one-argument form centralizes
// within the whole group.
std::vector<int> centralizer(const FiniteGroup& g, int e, std::span<const int> within);
std::vector<int> centralizer(const FiniteGroup& g, int e);

std::vector<int> centre(const FiniteGroup& g);

// Closure of seed inside g, as ascending ids.
std::vector<int> subgroup_closure(const FiniteGroup& g, std::span<const int> seed);

// A small generating set for a subgroup given by its full member list,
// chosen greedily in canonical order (deterministic).
std::vector<int> subgroup_generators(const FiniteGroup& g, std::span<const int> members);

bool is_subgroup(const FiniteGroup& g, std::span<const int> members);

}  // namespace ccc
