#include "ccc/mat.hpp"

#include "ccc/error.hpp"

namespace ccc {

Mat::Mat(const Gf& f, int d) : f_(&f), d_(d) {
  require(d >= 1 && d <= 4, Errc::invalid_argument, "matrix dimension must be 1..4");
}

Mat Mat::identity(const Gf& f, int d) {
  Mat m(f, d);
  for (int i = 0; i < d; ++i) m.set(i, i, 1);
  return m;
}

Mat Mat::mat2(const Gf& f, int a, int b, int c, int dd) {
  Mat m(f, 2);
  m.set(0, 0, static_cast<std::uint16_t>(a));
  m.set(0, 1, static_cast<std::uint16_t>(b));
  m.set(1, 0, static_cast<std::uint16_t>(c));
  m.set(1, 1, static_cast<std::uint16_t>(dd));
  return m;
}

std::array<std::uint16_t, 18> Mat::key() const {
  std::array<std::uint16_t, 18> k{};
  k[0] = static_cast<std::uint16_t>(d_);
  k[1] = static_cast<std::uint16_t>(f_ ? f_->q() : 0);
  for (int i = 0; i < d_ * d_; ++i) k[2 + i] = e_[i];
  return k;
}

Mat Mat::operator*(const Mat& rhs) const {
  Mat out(*f_, d_);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j) {
      std::uint16_t s = 0;
      for (int l = 0; l < d_; ++l) s = f_->add(s, f_->mul(at(i, l), rhs.at(l, j)));
      out.set(i, j, s);
    }
  return out;
}

std::uint16_t Mat::det() const {
  const Gf& f = *f_;
  if (d_ == 1) return at(0, 0);
  if (d_ == 2)
    return f.sub(f.mul(at(0, 0), at(1, 1)), f.mul(at(0, 1), at(1, 0)));
  // Gaussian elimination with the determinant accumulated from pivots.
  Mat m = *this;
  std::uint16_t det = 1;
  for (int col = 0; col < d_; ++col) {
    int pivot = -1;
    for (int r = col; r < d_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < d_; ++c) {
        std::uint16_t t = m.at(pivot, c);
        m.set(pivot, c, m.at(col, c));
        m.set(col, c, t);
      }
      det = f.neg(det);
    }
    det = f.mul(det, m.at(col, col));
    std::uint16_t pinv = f.inv(m.at(col, col));
    for (int r = col + 1; r < d_; ++r) {
      std::uint16_t factor = f.mul(m.at(r, col), pinv);
      if (factor == 0) continue;
      for (int c = col; c < d_; ++c)
        m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(col, c))));
    }
  }
  return det;
}

Mat Mat::inverse() const {
  const Gf& f = *f_;
  // Gauss-Jordan on [M | I].
  Mat m = *this;
  Mat inv = Mat::identity(f, d_);
  for (int col = 0; col < d_; ++col) {
    int pivot = -1;
    for (int r = col; r < d_; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    require(pivot >= 0, Errc::singular_matrix, "matrix is not invertible");
    if (pivot != col) {
      for (int c = 0; c < d_; ++c) {
        std::uint16_t t = m.at(pivot, c);
        m.set(pivot, c, m.at(col, c));
        m.set(col, c, t);
        t = inv.at(pivot, c);
        inv.set(pivot, c, inv.at(col, c));
        inv.set(col, c, t);
      }
    }
    std::uint16_t pinv = f.inv(m.at(col, col));
    for (int c = 0; c < d_; ++c) {
      m.set(col, c, f.mul(m.at(col, c), pinv));
      inv.set(col, c, f.mul(inv.at(col, c), pinv));
    }
    for (int r = 0; r < d_; ++r) {
      if (r == col) continue;
      std::uint16_t factor = m.at(r, col);
      if (factor == 0) continue;
      for (int c = 0; c < d_; ++c) {
        m.set(r, c, f.sub(m.at(r, c), f.mul(factor, m.at(col, c))));
        inv.set(r, c, f.sub(inv.at(r, c), f.mul(factor, inv.at(col, c))));
      }
    }
  }
  return inv;
}

std::uint16_t Mat::trace() const {
  std::uint16_t s = 0;
  for (int i = 0; i < d_; ++i) s = f_->add(s, at(i, i));
  return s;
}

bool Mat::is_identity() const {
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool Mat::is_scalar() const {
  std::uint16_t a = at(0, 0);
  for (int i = 0; i < d_; ++i)
    for (int j = 0; j < d_; ++j)
      if (at(i, j) != (i == j ? a : 0)) return false;
  return true;
}

GfPoly Mat::char_poly2() const {
  require(d_ == 2, Errc::invalid_argument, "char_poly2 needs dimension 2");
  return GfPoly{det(), f_->neg(trace()), 1};
}

std::string Mat::to_string() const {
  std::string out = "[";
  for (int i = 0; i < d_; ++i) {
    if (i) out += ",";
    out += "[";
    for (int j = 0; j < d_; ++j) {
      if (j) out += ",";
      out += std::to_string(at(i, j));
    }
    out += "]";
  }
  out += "]";
  return out;
}

}  // namespace ccc
