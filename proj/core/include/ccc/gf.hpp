#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ccc {

// Polynomial over a finite field: coefficient vector c0..cd, ascending
// degree, no trailing zero (the zero polynomial is the empty vector).
using GfPoly = std::vector<std::uint16_t>;

// GF(p^k). Elements are encoded as integers in [0, q): the base-p digit
// vector of the residue polynomial, constant digit first. The modulus is the
// monic irreducible of degree k over GF(p) with the smallest encoding, and
// xi() is the primitive element with the smallest encoding, so the whole
// arithmetic is determined by (p, k).
class Gf {
public:
  Gf(int p, int k);  // NotPrime / TooLarge (q must be <= 2^16)

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  std::uint16_t xi() const { return xi_; }
  const GfPoly& modulus() const { return modulus_; }  // coeffs over GF(p)

  std::uint16_t add(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t sub(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t neg(std::uint16_t a) const;
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t inv(std::uint16_t a) const;  // a != 0
  std::uint16_t div(std::uint16_t a, std::uint16_t b) const;
  std::uint16_t pow(std::uint16_t a, long long e) const;
  int mult_order(std::uint16_t a) const;  // a != 0

  // Polynomials with coefficients in this field.
  std::uint16_t poly_eval(const GfPoly& f, std::uint16_t x) const;
  bool poly_is_irreducible(const GfPoly& f) const;  // deg >= 1
  // All monic irreducibles of the given degree, ascending by encoding of the
  // non-leading coefficient vector.
  std::vector<GfPoly> monic_irreducibles(int degree) const;
  std::string poly_string(const GfPoly& f) const;  // "t^2+2t+2"

private:
  std::uint16_t mul_slow(std::uint16_t a, std::uint16_t b) const;

  int p_ = 0, k_ = 0, q_ = 0;
  GfPoly modulus_;
  std::uint16_t xi_ = 0;
  std::vector<std::uint16_t> mul_table_;  // only built for small q
  std::vector<std::uint16_t> inv_table_;
};

// Registry of fields keyed by (p, k); references stay valid for the program's
// lifetime, so matrices can hold plain pointers.
const Gf& make_field(int p, int k);
const Gf& make_field_q(int q);  // factors q; NotPrime when q is not a prime power

std::vector<long long> prime_factors(long long n);  // distinct, ascending
long long gcd_ll(long long a, long long b);

}  // namespace ccc
