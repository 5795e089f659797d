#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ccc {

// Permutation of {0, ..., n-1} stored as its image sequence. Products
// compose left to right: (a * b) maps x to b[a[x]]. The canonical order on
// permutations of equal degree is lexicographic on the image sequence, which
// operator<=> implements directly.
class Perm {
public:
  Perm() = default;
  explicit Perm(unsigned degree);  // identity
  explicit Perm(std::vector<std::uint8_t> images);

  // Disjoint-cycle constructors; points are 0-based.
  static Perm from_cycles(unsigned degree,
                          const std::vector<std::vector<unsigned>>& cycles);
  // Parses "(0 1 2)(3 4)"; "()" is the identity. Degree is the larger of
  // min_degree and 1 + the largest point mentioned.
  static Perm parse_cycles(const std::string& text, unsigned min_degree = 0);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned x) const { return images_[x]; }

  bool is_identity() const;
  bool is_even() const;

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm extended(unsigned degree) const;  // same mapping, fixed new points

  // Cycle lengths in weakly decreasing order, fixed points included.
  std::vector<int> cycle_type() const;
  std::vector<std::vector<unsigned>> cycles(bool include_fixed = false) const;
  std::string cycle_string() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<std::uint8_t> images_;
};

}  // namespace ccc
