#pragma once

#include <array>
#include <compare>
#include <string>

#include "ccc/gf.hpp"

namespace ccc {

// Square matrix over a registry field, dimension <= 4. The canonical order
// compares dimension, field size, then entries row-major, so sorting matrices
// of one group sorts them by row-major lexicographic entry order.
class Mat {
public:
  Mat() = default;
  Mat(const Gf& f, int d);  // zero matrix
  static Mat identity(const Gf& f, int d);
  static Mat mat2(const Gf& f, int a, int b, int c, int dd);  // [[a,b],[c,dd]]

  const Gf& field() const { return *f_; }
  int dim() const { return d_; }
  std::uint16_t at(int r, int c) const { return e_[r * d_ + c]; }
  void set(int r, int c, std::uint16_t v) { e_[r * d_ + c] = v; }

  Mat operator*(const Mat& rhs) const;
  Mat inverse() const;  // SingularMatrix when not invertible
  std::uint16_t det() const;
  std::uint16_t trace() const;
  bool is_identity() const;
  bool is_scalar() const;
  bool invertible() const { return det() != 0; }

  // Characteristic polynomial, dimension 2 only: {c0, c1, 1} with
  // t^2 + c1 t + c0 = t^2 - tr(M) t + det(M).
  GfPoly char_poly2() const;

  std::string to_string() const;  // "[[a,b],[c,d]]" with integer encodings

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.key() == b.key();
  }
  friend std::strong_ordering operator<=>(const Mat& a, const Mat& b) {
    return a.key() <=> b.key();
  }

private:
  std::array<std::uint16_t, 18> key() const;

  const Gf* f_ = nullptr;
  int d_ = 0;
  std::array<std::uint16_t, 16> e_{};
};

}  // namespace ccc
