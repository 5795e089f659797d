#include "ccc/gf.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "ccc/error.hpp"

namespace ccc {

namespace {

constexpr int kMaxQ = 1 << 16;
constexpr int kMulTableMaxQ = 1024;

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// GF(p) polynomial helpers used only while constructing the field tables.
// Coefficients ascending, trimmed.
using PPoly = std::vector<int>;

PPoly ppoly_trim(PPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

PPoly ppoly_mul(const PPoly& a, const PPoly& b, int p) {
  if (a.empty() || b.empty()) return {};
  PPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  return ppoly_trim(std::move(out));
}

// Remainder of a modulo monic m.
PPoly ppoly_mod(PPoly a, const PPoly& m, int p) {
  a = ppoly_trim(std::move(a));
  while (a.size() >= m.size()) {
    int lead = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    a = ppoly_trim(std::move(a));
  }
  return a;
}

bool ppoly_is_irreducible(const PPoly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long enc = 0; enc < count; ++enc) {
      PPoly g(d + 1, 0);
      long long v = enc;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (ppoly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Gf::Gf(int p, int k) : p_(p), k_(k) {
  require(is_prime(p), Errc::not_prime, "field characteristic must be prime");
  require(k >= 1, Errc::invalid_argument, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    require(q <= kMaxQ, Errc::too_large, "field size exceeds 2^16");
  }
  q_ = static_cast<int>(q);

  // Smallest-encoding monic irreducible of degree k over GF(p).
  PPoly mod;
  for (long long enc = 0;; ++enc) {
    require(enc < q_, Errc::crosscheck_failure, "no irreducible modulus found");
    PPoly f(k + 1, 0);
    long long v = enc;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(v % p);
      v /= p;
    }
    f[k] = 1;
    if (ppoly_is_irreducible(f, p)) {
      mod = f;
      break;
    }
  }
  modulus_.assign(mod.begin(), mod.end());

  auto decode = [&](int enc) {
    PPoly f;
    int v = enc;
    while (v) {
      f.push_back(v % p);
      v /= p;
    }
    return f;
  };
  auto encode = [&](const PPoly& f) {
    int enc = 0;
    for (std::size_t i = f.size(); i-- > 0;) enc = enc * p + f[i];
    return enc;
  };

  if (q_ <= kMulTableMaxQ) {
    mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
    for (int a = 0; a < q_; ++a)
      for (int b = a; b < q_; ++b) {
        int prod = encode(ppoly_mod(ppoly_mul(decode(a), decode(b), p), mod, p));
        mul_table_[static_cast<std::size_t>(a) * q_ + b] =
            static_cast<std::uint16_t>(prod);
        mul_table_[static_cast<std::size_t>(b) * q_ + a] =
            static_cast<std::uint16_t>(prod);
      }
    inv_table_.assign(q_, 0);
    for (int a = 1; a < q_; ++a)
      for (int b = 1; b < q_; ++b)
        if (mul(static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)) == 1) {
          inv_table_[a] = static_cast<std::uint16_t>(b);
          break;
        }
  }

  // Smallest-encoding primitive element.
  for (int a = 1; a < q_; ++a) {
    if (mult_order(static_cast<std::uint16_t>(a)) == q_ - 1) {
      xi_ = static_cast<std::uint16_t>(a);
      break;
    }
  }
}

std::uint16_t Gf::add(std::uint16_t a, std::uint16_t b) const {
  if (k_ == 1) return static_cast<std::uint16_t>((a + b) % p_);
  int out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return static_cast<std::uint16_t>(out);
}

std::uint16_t Gf::neg(std::uint16_t a) const {
  if (k_ == 1) return static_cast<std::uint16_t>((p_ - a) % p_);
  int out = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return static_cast<std::uint16_t>(out);
}

std::uint16_t Gf::sub(std::uint16_t a, std::uint16_t b) const {
  return add(a, neg(b));
}

std::uint16_t Gf::mul_slow(std::uint16_t a, std::uint16_t b) const {
  PPoly fa, fb;
  for (int v = a; v; v /= p_) fa.push_back(v % p_);
  for (int v = b; v; v /= p_) fb.push_back(v % p_);
  PPoly mod(modulus_.begin(), modulus_.end());
  PPoly prod = ppoly_mod(ppoly_mul(fa, fb, p_), mod, p_);
  int enc = 0;
  for (std::size_t i = prod.size(); i-- > 0;) enc = enc * p_ + prod[i];
  return static_cast<std::uint16_t>(enc);
}

std::uint16_t Gf::mul(std::uint16_t a, std::uint16_t b) const {
  if (!mul_table_.empty())
    return mul_table_[static_cast<std::size_t>(a) * q_ + b];
  return mul_slow(a, b);
}

std::uint16_t Gf::pow(std::uint16_t a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::uint16_t out = 1;
  while (e) {
    if (e & 1) out = mul(out, a);
    a = mul(a, a);
    e >>= 1;
  }
  return out;
}

std::uint16_t Gf::inv(std::uint16_t a) const {
  require(a != 0, Errc::invalid_argument, "inverse of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return pow(a, q_ - 2);
}

std::uint16_t Gf::div(std::uint16_t a, std::uint16_t b) const {
  return mul(a, inv(b));
}

int Gf::mult_order(std::uint16_t a) const {
  require(a != 0, Errc::invalid_argument, "order of zero");
  int order = q_ - 1;
  for (long long r : prime_factors(q_ - 1)) {
    while (order % r == 0 && pow(a, order / r) == 1) order /= static_cast<int>(r);
  }
  return order;
}

std::uint16_t Gf::poly_eval(const GfPoly& f, std::uint16_t x) const {
  std::uint16_t out = 0;
  for (std::size_t i = f.size(); i-- > 0;) out = add(mul(out, x), f[i]);
  return out;
}

bool Gf::poly_is_irreducible(const GfPoly& f) const {
  int deg = static_cast<int>(f.size()) - 1;
  require(deg >= 1, Errc::invalid_argument, "irreducibility needs degree >= 1");
  if (deg == 1) return true;
  if (deg <= 3) {
    // For degree 2 or 3, irreducible iff no root.
    for (int x = 0; x < q_; ++x)
      if (poly_eval(f, static_cast<std::uint16_t>(x)) == 0) return false;
    return true;
  }
  // Trial division by monic irreducibles of degree <= deg/2.
  for (int d = 1; 2 * d <= deg; ++d) {
    for (const GfPoly& g : monic_irreducibles(d)) {
      GfPoly r = f;
      while (r.size() >= g.size()) {
        std::uint16_t lead = r.back();
        std::size_t shift = r.size() - g.size();
        for (std::size_t i = 0; i < g.size(); ++i)
          r[shift + i] = sub(r[shift + i], mul(lead, g[i]));
        while (!r.empty() && r.back() == 0) r.pop_back();
      }
      if (r.empty()) return false;
    }
  }
  return true;
}

std::vector<GfPoly> Gf::monic_irreducibles(int degree) const {
  std::vector<GfPoly> out;
  long long count = 1;
  for (int i = 0; i < degree; ++i) count *= q_;
  for (long long enc = 0; enc < count; ++enc) {
    GfPoly f(degree + 1, 0);
    long long v = enc;
    for (int i = 0; i < degree; ++i) {
      f[i] = static_cast<std::uint16_t>(v % q_);
      v /= q_;
    }
    f[degree] = 1;
    if (poly_is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

std::string Gf::poly_string(const GfPoly& f) const {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0 && f.size() > 1) continue;
    if (!out.empty()) out += "+";
    if (i == 0 || f[i] != 1) out += std::to_string(f[i]);
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

const Gf& make_field(int p, int k) {
  static std::map<std::pair<int, int>, std::unique_ptr<Gf>> registry;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[{p, k}];
  if (!slot) slot = std::make_unique<Gf>(p, k);
  return *slot;
}

const Gf& make_field_q(int q) {
  require(q >= 2, Errc::invalid_argument, "field size must be >= 2");
  for (long long p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      int k = 0;
      long long v = q;
      while (v % p == 0) {
        v /= p;
        ++k;
      }
      require(v == 1, Errc::not_prime, std::to_string(q) + " is not a prime power");
      return make_field(static_cast<int>(p), k);
    }
  }
  return make_field(q, 1);
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace ccc
