#include "ccc/gl2.hpp"

#include <algorithm>

#include "ccc/error.hpp"

namespace ccc {

namespace {

// f restricted to the keys of a GL class assignment: monic, irreducible,
// nonzero constant term (so f != t).
void validate_key(const Gf& f, const GfPoly& poly) {
  require(poly.size() >= 2 && poly.back() == 1, Errc::invalid_argument,
          "class key polynomials must be monic of degree >= 1");
  require(poly.front() != 0, Errc::invalid_argument,
          "class key polynomial f(t) = t is excluded");
  require(f.poly_is_irreducible(poly), Errc::invalid_argument,
          "class key polynomial must be irreducible");
}

}  // namespace

void validate_params(const Gf& f, const GlClassParams& params) {
  int total = 0;
  for (const auto& [poly, lambda] : params.assignment) {
    validate_key(f, poly);
    require(!lambda.empty(), Errc::invalid_argument, "empty partition assigned");
    total += lambda.n() * (static_cast<int>(poly.size()) - 1);
  }
  require(total == params.d, Errc::invalid_argument,
          "sum |lambda_f| deg f must equal the dimension");
}

std::uint16_t class_determinant(const Gf& f, const GlClassParams& params) {
  validate_params(f, params);
  std::uint16_t det = f.pow(f.neg(1), params.d);
  for (const auto& [poly, lambda] : params.assignment)
    det = f.mul(det, f.pow(poly.front(), lambda.n()));
  return det;
}

bool gl_split_predicate(const Gf& f, const GlClassParams& params) {
  validate_params(f, params);
  for (long long divisor : prime_factors(f.q() - 1)) {
    bool divides_all = true;
    for (const auto& [poly, lambda] : params.assignment)
      for (int part : lambda.parts())
        if (part % divisor != 0) {
          divides_all = false;
          break;
        }
    if (divides_all) return true;
  }
  return false;
}

const char* gl2_type_name(Gl2Type t) {
  switch (t) {
    case Gl2Type::A: return "A";
    case Gl2Type::B: return "B";
    case Gl2Type::C: return "C";
    case Gl2Type::D: return "D";
  }
  return "?";
}

std::array<long long, 4> Gl2Catalog::type_counts() const {
  std::array<long long, 4> out{};
  for (const Gl2ClassRecord& r : records) ++out[static_cast<int>(r.type)];
  return out;
}

Gl2Catalog gl2_class_catalog(int q) {
  const Gf& f = make_field_q(q);
  Gl2Catalog cat;
  cat.field = &f;

  auto linear = [&](std::uint16_t a) {  // t - a
    return GfPoly{f.neg(a), 1};
  };

  // (A) scalars aI, partition (1,1) on t - a.
  for (int a = 1; a < q; ++a) {
    Gl2ClassRecord r;
    r.type = Gl2Type::A;
    r.rep = Mat::mat2(f, a, 0, 0, a);
    r.params.d = 2;
    r.params.assignment[linear(static_cast<std::uint16_t>(a))] =
        Partition({1, 1});
    r.det = class_determinant(f, r.params);
    cat.records.push_back(std::move(r));
  }
  // (B) single eigenvalue, non-semisimple: [[a,1],[0,a]], partition (2).
  for (int a = 1; a < q; ++a) {
    Gl2ClassRecord r;
    r.type = Gl2Type::B;
    r.rep = Mat::mat2(f, a, 1, 0, a);
    r.params.d = 2;
    r.params.assignment[linear(static_cast<std::uint16_t>(a))] = Partition({2});
    r.det = class_determinant(f, r.params);
    cat.records.push_back(std::move(r));
  }
  // (C) two distinct eigenvalues: diag(a, b) keyed by a < b.
  for (int a = 1; a < q; ++a)
    for (int b = a + 1; b < q; ++b) {
      Gl2ClassRecord r;
      r.type = Gl2Type::C;
      r.rep = Mat::mat2(f, a, 0, 0, b);
      r.params.d = 2;
      r.params.assignment[linear(static_cast<std::uint16_t>(a))] = Partition({1});
      r.params.assignment[linear(static_cast<std::uint16_t>(b))] = Partition({1});
      r.det = class_determinant(f, r.params);
      cat.records.push_back(std::move(r));
    }
  // (D) eigenvalue-free: companion of each monic irreducible quadratic
  // t^2 + c t + e, ordered by (c, e).
  std::vector<GfPoly> quads = f.monic_irreducibles(2);
  std::sort(quads.begin(), quads.end(), [](const GfPoly& x, const GfPoly& y) {
    return std::pair(x[1], x[0]) < std::pair(y[1], y[0]);
  });
  for (const GfPoly& poly : quads) {
    Gl2ClassRecord r;
    r.type = Gl2Type::D;
    r.rep = Mat::mat2(f, 0, f.neg(poly[0]), 1, f.neg(poly[1]));
    r.params.d = 2;
    r.params.assignment[poly] = Partition({1});
    r.det = class_determinant(f, r.params);
    cat.records.push_back(std::move(r));
  }

  const auto counts = cat.type_counts();
  require(counts[0] == q - 1 && counts[1] == q - 1 &&
              counts[2] == static_cast<long long>(q - 1) * (q - 2) / 2 &&
              counts[3] == static_cast<long long>(q) * (q - 1) / 2,
          Errc::crosscheck_failure, "catalog type counts disagree with formulas");
  return cat;
}

int classify_gl2(const Gl2Catalog& cat, const Mat& m) {
  const Gf& f = *cat.field;
  require(m.dim() == 2 && &m.field() == &f, Errc::invalid_argument,
          "matrix does not belong to this catalog");
  require(m.det() != 0, Errc::singular_matrix, "matrix is not invertible");

  // Eigenvalues: roots of the characteristic polynomial.
  GfPoly chi = m.char_poly2();
  std::vector<std::uint16_t> roots;
  for (int x = 0; x < f.q(); ++x)
    if (f.poly_eval(chi, static_cast<std::uint16_t>(x)) == 0)
      roots.push_back(static_cast<std::uint16_t>(x));

  Gl2Type type;
  if (roots.size() == 2)
    type = Gl2Type::C;
  else if (roots.empty())
    type = Gl2Type::D;
  else
    type = m.is_scalar() ? Gl2Type::A : Gl2Type::B;

  for (std::size_t i = 0; i < cat.records.size(); ++i) {
    const Gl2ClassRecord& r = cat.records[i];
    if (r.type != type) continue;
    if (r.rep.char_poly2() == chi) return static_cast<int>(i);
  }
  fail(Errc::crosscheck_failure, "matrix matches no catalog class (bug)");
}

CosetTypeTable coset_table(int q) {
  require(q % 2 == 1, Errc::even_field,
          "the type table assumes odd q (scalars meet every coset when q is even)");
  Gl2Catalog cat = gl2_class_catalog(q);
  const Gf& f = *cat.field;
  CosetTypeTable table;
  table.q = q;
  for (const Gl2ClassRecord& r : cat.records) {
    if (r.det == 1) ++table.sl[static_cast<int>(r.type)];
    if (r.det == f.xi()) ++table.cxi[static_cast<int>(r.type)];
  }
  const std::array<long long, 4> sl_expected{2, 2, (q - 3) / 2, (q - 1) / 2};
  const std::array<long long, 4> cxi_expected{0, 0, (q - 1) / 2, (q + 1) / 2};
  require(table.sl == sl_expected && table.cxi == cxi_expected,
          Errc::crosscheck_failure, "coset type counts disagree with the table");
  return table;
}

namespace {

// GF(q)[u] modulo the canonically smallest irreducible quadratic: the
// quadratic extension used to realize eigenvalue-free classes as
// multiplication maps on a common basis {1, u}.
struct QuadExt {
  const Gf* base;
  GfPoly modulus;  // g0 + g1 u + u^2

  using El = std::pair<std::uint16_t, std::uint16_t>;  // a + b u

  El mul(El x, El y) const {
    const Gf& f = *base;
    // (a + bu)(c + du) = ac + (ad + bc) u + bd u^2, u^2 = -g1 u - g0.
    std::uint16_t ac = f.mul(x.first, y.first);
    std::uint16_t cross = f.add(f.mul(x.first, y.second), f.mul(x.second, y.first));
    std::uint16_t bd = f.mul(x.second, y.second);
    return {f.sub(ac, f.mul(bd, modulus[0])),
            f.sub(cross, f.mul(bd, modulus[1]))};
  }

  // Matrix of multiplication by x in the basis {1, u}.
  Mat mult_map(El x) const {
    const Gf& f = *base;
    El col0 = x;                    // x * 1
    El col1 = mul(x, {0, 1});       // x * u
    Mat m(f, 2);
    m.set(0, 0, col0.first);
    m.set(1, 0, col0.second);
    m.set(0, 1, col1.first);
    m.set(1, 1, col1.second);
    return m;
  }

  // A root of the irreducible quadratic poly (coeffs in the base field).
  El root_of(const GfPoly& poly) const {
    const Gf& f = *base;
    for (int a = 0; a < f.q(); ++a)
      for (int b = 1; b < f.q(); ++b) {  // roots lie outside the base field
        El x{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)};
        El val = mul(x, x);
        val.first = f.add(val.first, f.mul(poly[1], x.first));
        val.second = f.add(val.second, f.mul(poly[1], x.second));
        val.first = f.add(val.first, poly[0]);
        if (val.first == 0 && val.second == 0) return x;
      }
    fail(Errc::crosscheck_failure, "irreducible quadratic has no root upstairs (bug)");
  }
};

QuadExt make_quad_ext(const Gf& f) {
  std::vector<GfPoly> quads = f.monic_irreducibles(2);
  std::sort(quads.begin(), quads.end(), [](const GfPoly& x, const GfPoly& y) {
    return std::pair(x[1], x[0]) < std::pair(y[1], y[0]);
  });
  return QuadExt{&f, quads.front()};
}

bool commute(const Mat& a, const Mat& b) { return a * b == b * a; }

}  // namespace

SlCxiMatching sl2_cxi_matching(int q) {
  SlCxiMatching out;
  out.q = q;
  if (q % 2 == 0) {
    // Scalars have determinant a^2 and squaring is onto for even q, so every
    // coset holds scalars and the matching problem is trivial.
    make_field_q(q);  // still validates q
    out.trivial_even = true;
    out.verified = true;
    return out;
  }

  Gl2Catalog cat = gl2_class_catalog(q);
  const Gf& f = *cat.field;
  QuadExt ext = make_quad_ext(f);

  std::vector<int> sl_a, sl_c, sl_d, cxi_c, cxi_d;
  for (std::size_t i = 0; i < cat.records.size(); ++i) {
    const Gl2ClassRecord& r = cat.records[i];
    int idx = static_cast<int>(i);
    if (r.det == 1) {
      // Type B classes in SL are split for odd q; the scheme matches the
      // non-split classes only.
      if (r.type == Gl2Type::A) sl_a.push_back(idx);
      if (r.type == Gl2Type::C) sl_c.push_back(idx);
      if (r.type == Gl2Type::D) sl_d.push_back(idx);
      if (r.type == Gl2Type::B)
        require(gl_split_predicate(f, r.params), Errc::scheme_defect,
                "type B class unexpectedly non-split for odd q");
    } else if (r.det == f.xi()) {
      if (r.type == Gl2Type::C) cxi_c.push_back(idx);
      if (r.type == Gl2Type::D) cxi_d.push_back(idx);
      require(r.type == Gl2Type::C || r.type == Gl2Type::D, Errc::scheme_defect,
              "unexpected scalar or type B class with determinant xi");
    }
  }
  require(sl_a.size() == 2 && cxi_c.size() == sl_c.size() + 1 &&
              cxi_d.size() == sl_d.size() + 1,
          Errc::scheme_defect, "coset class counts do not fit the scheme");

  auto make_pair = [&](int left, int right, Mat wl, Mat wr) {
    return SlCxiPair{left,
                     right,
                     cat.records[left].type,
                     cat.records[right].type,
                     std::move(wl),
                     std::move(wr)};
  };
  auto diag_witnesses = [&](int left, int right) {
    // Both classes of type C: their diagonal representatives commute.
    return make_pair(left, right, cat.records[left].rep, cat.records[right].rep);
  };
  auto mult_map_witnesses = [&](int left, int right) {
    // Both classes of type D: multiplication maps on the common basis.
    Mat wl = ext.mult_map(ext.root_of(cat.records[left].params.assignment.begin()->first));
    Mat wr = ext.mult_map(ext.root_of(cat.records[right].params.assignment.begin()->first));
    return make_pair(left, right, std::move(wl), std::move(wr));
  };

  for (std::size_t i = 0; i < sl_c.size(); ++i)
    out.pairs.push_back(diag_witnesses(sl_c[i], cxi_c[i]));
  for (std::size_t i = 0; i < sl_d.size(); ++i)
    out.pairs.push_back(mult_map_witnesses(sl_d[i], cxi_d[i]));
  // One class of each type remains in C_xi; the scalar SL classes pick them
  // up, scalars commuting with everything.
  out.pairs.push_back(make_pair(sl_a[0], cxi_c.back(), cat.records[sl_a[0]].rep,
                                cat.records[cxi_c.back()].rep));
  out.pairs.push_back(make_pair(sl_a[1], cxi_d.back(), cat.records[sl_a[1]].rep,
                                cat.records[cxi_d.back()].rep));

  // Verification: each witness belongs to its class and the pair commutes.
  std::vector<char> left_used(cat.records.size(), 0), right_used(cat.records.size(), 0);
  for (const SlCxiPair& pair : out.pairs) {
    require(!left_used[pair.left_index] && !right_used[pair.right_index],
            Errc::scheme_defect, "class reused in the matching");
    left_used[pair.left_index] = 1;
    right_used[pair.right_index] = 1;
    require(classify_gl2(cat, pair.witness_left) == pair.left_index,
            Errc::scheme_defect, "left witness lies outside its class");
    require(classify_gl2(cat, pair.witness_right) == pair.right_index,
            Errc::scheme_defect, "right witness lies outside its class");
    require(commute(pair.witness_left, pair.witness_right), Errc::scheme_defect,
            "witness pair does not commute");
    require(!gl_split_predicate(f, cat.records[pair.left_index].params),
            Errc::scheme_defect, "split class on the SL side of the matching");
  }
  require(out.pairs.size() == sl_a.size() + sl_c.size() + sl_d.size() &&
              out.pairs.size() == cxi_c.size() + cxi_d.size(),
          Errc::scheme_defect, "matching does not exhaust both sides");
  out.verified = true;
  return out;
}

SameTypeReport same_type_commute_check(int q) {
  require(q % 2 == 1, Errc::even_field, "same-type check runs over odd q");
  Gl2Catalog cat = gl2_class_catalog(q);
  const Gf& f = *cat.field;
  QuadExt ext = make_quad_ext(f);

  // Classes of SL union C_xi, bucketed by type.
  std::array<std::vector<int>, 4> buckets;
  for (std::size_t i = 0; i < cat.records.size(); ++i) {
    const Gl2ClassRecord& r = cat.records[i];
    if (r.det == 1 || r.det == f.xi())
      buckets[static_cast<int>(r.type)].push_back(static_cast<int>(i));
  }

  SameTypeReport rep;
  rep.q = q;
  for (int type = 0; type < 4; ++type) {
    const auto& bucket = buckets[type];
    for (std::size_t i = 0; i < bucket.size(); ++i)
      for (std::size_t j = i; j < bucket.size(); ++j) {
        const Gl2ClassRecord& ri = cat.records[bucket[i]];
        const Gl2ClassRecord& rj = cat.records[bucket[j]];
        Mat wi = ri.rep, wj = rj.rep;
        if (ri.type == Gl2Type::D) {
          wi = ext.mult_map(ext.root_of(ri.params.assignment.begin()->first));
          wj = ext.mult_map(ext.root_of(rj.params.assignment.begin()->first));
        }
        require(classify_gl2(cat, wi) == bucket[i] &&
                    classify_gl2(cat, wj) == bucket[j],
                Errc::crosscheck_failure, "realization left its class");
        require(commute(wi, wj), Errc::crosscheck_failure,
                "same-type realizations do not commute");
        ++rep.pairs_checked;

        // Types C and D: exhibit the interpolating polynomial both ways.
        if (ri.type == Gl2Type::C) {
          auto interp = [&](const Mat& from, const Mat& to) {
            std::uint16_t a = from.at(0, 0), b = from.at(1, 1);
            std::uint16_t c = to.at(0, 0), d = to.at(1, 1);
            // P(t) = c + (d - c)/(b - a) (t - a); P(a) = c, P(b) = d.
            std::uint16_t slope = f.div(f.sub(d, c), f.sub(b, a));
            std::uint16_t constant = f.sub(c, f.mul(slope, a));
            Mat out = from;
            for (int r2 = 0; r2 < 2; ++r2)
              for (int c2 = 0; c2 < 2; ++c2)
                out.set(r2, c2, f.add(f.mul(slope, from.at(r2, c2)),
                                      r2 == c2 ? constant : 0));
            return out;
          };
          require(interp(wi, wj) == wj && interp(wj, wi) == wi,
                  Errc::crosscheck_failure, "diagonal interpolation failed");
          rep.polynomials_exhibited += 2;
        }
        if (ri.type == Gl2Type::D && i != j) {
          auto alpha = ext.root_of(ri.params.assignment.begin()->first);
          auto beta = ext.root_of(rj.params.assignment.begin()->first);
          auto linear_in = [&](QuadExt::El from, QuadExt::El to, const Mat& mfrom,
                               const Mat& mto) {
            // to = u0 + v0 * from with u0, v0 in GF(q).
            std::uint16_t v0 = f.div(to.second, from.second);
            std::uint16_t u0 = f.sub(to.first, f.mul(v0, from.first));
            Mat image = mfrom;
            for (int r2 = 0; r2 < 2; ++r2)
              for (int c2 = 0; c2 < 2; ++c2)
                image.set(r2, c2, f.add(f.mul(v0, mfrom.at(r2, c2)),
                                        r2 == c2 ? u0 : 0));
            return image == mto;
          };
          require(linear_in(alpha, beta, wi, wj) && linear_in(beta, alpha, wj, wi),
                  Errc::crosscheck_failure, "extension-field interpolation failed");
          rep.polynomials_exhibited += 2;
        }
      }
  }
  rep.ok = true;
  return rep;
}

namespace {

// 4x4 matrices over GF(2) as four 4-bit row masks packed into uint16.
using BitMat4 = std::uint16_t;

constexpr BitMat4 kIdentity4 = 0x8421;  // rows 0001,0010,0100,1000 from LSB

inline int row(BitMat4 m, int r) { return (m >> (4 * r)) & 0xF; }

BitMat4 bm_mul(BitMat4 a, BitMat4 b) {
  BitMat4 out = 0;
  for (int r = 0; r < 4; ++r) {
    int acc = 0;
    int ra = row(a, r);
    for (int j = 0; j < 4; ++j)
      if (ra >> j & 1) acc ^= row(b, j);
    out |= static_cast<BitMat4>(acc) << (4 * r);
  }
  return out;
}

int bm_rank(BitMat4 m) {
  int rows[4] = {row(m, 0), row(m, 1), row(m, 2), row(m, 3)};
  int rank = 0;
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = rank; r < 4; ++r)
      if (rows[r] >> col & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < 4; ++r)
      if (r != rank && (rows[r] >> col & 1)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

// Jordan type of a unipotent matrix: partition from the rank sequence of
// N = M - I. Returns {} when M is not unipotent.
std::vector<int> unipotent_type(BitMat4 m) {
  BitMat4 n = m ^ kIdentity4;
  BitMat4 n2 = bm_mul(n, n);
  BitMat4 n4 = bm_mul(n2, n2);
  if (n4 != 0) return {};
  int r[5] = {4, bm_rank(n), bm_rank(n2), bm_rank(bm_mul(n2, n)), 0};
  std::vector<int> type;
  // blocks of size >= k: r[k-1] - r[k]; emit sizes directly.
  for (int k = 1; k <= 4; ++k) {
    int count = (r[k - 1] - r[k]) - (k < 4 ? (r[k] - r[k + 1]) : 0);
    for (int i = 0; i < count; ++i) type.push_back(k);
  }
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string bm_to_string(BitMat4 m) {
  std::string out = "[";
  for (int r = 0; r < 4; ++r) {
    if (r) out += ",";
    out += "[";
    for (int c = 0; c < 4; ++c) {
      if (c) out += ",";
      out += (row(m, r) >> c & 1) ? "1" : "0";
    }
    out += "]";
  }
  return out + "]";
}

// Does the algebra {p(Z)} (spanned by I, Z, Z^2, Z^3 over GF(2)) contain
// unipotent elements of both given Jordan types?
bool algebra_contains_both(BitMat4 z, const std::vector<int>& type1,
                           const std::vector<int>& type2) {
  BitMat4 z2 = bm_mul(z, z);
  BitMat4 z3 = bm_mul(z2, z);
  bool has1 = false, has2 = false;
  for (int mask = 0; mask < 16; ++mask) {
    BitMat4 v = 0;
    if (mask & 1) v ^= kIdentity4;
    if (mask & 2) v ^= z;
    if (mask & 4) v ^= z2;
    if (mask & 8) v ^= z3;
    std::vector<int> t = unipotent_type(v);
    if (t == type1) has1 = true;
    if (t == type2) has2 = true;
    if (has1 && has2) return true;
  }
  return false;
}

}  // namespace

Gl4Report gl4_counterexample() {
  const std::vector<int> type31{3, 1};
  const std::vector<int> type22{2, 2};
  Gl4Report rep;

  // J_3 + J_1 unipotent: rows 1100, 0110, 0010, 0001 (column j of row r).
  BitMat4 x = 0;
  auto set_entry = [&](int r, int c) { x |= BitMat4(1) << (4 * r + c); };
  set_entry(0, 0);
  set_entry(0, 1);
  set_entry(1, 1);
  set_entry(1, 2);
  set_entry(2, 2);
  set_entry(3, 3);
  require(unipotent_type(x) == type31, Errc::crosscheck_failure,
          "canonical (3,1) unipotent misclassified");

  for (int y = 0; y < 65536 && !rep.commuting_pair_found; ++y) {
    BitMat4 ym = static_cast<BitMat4>(y);
    if (unipotent_type(ym) != type22) continue;
    if (bm_mul(x, ym) != bm_mul(ym, x)) continue;
    rep.commuting_pair_found = true;
    rep.witness_x = bm_to_string(x);
    rep.witness_y = bm_to_string(ym);
  }

  for (int z = 0; z < 65536; ++z) {
    BitMat4 zm = static_cast<BitMat4>(z);
    ++rep.z_scanned;
    if (algebra_contains_both(zm, type31, type22))
      rep.both_types_in_one_algebra = true;
    if (!rep.control_same_type_found &&
        algebra_contains_both(zm, type31, type31))
      rep.control_same_type_found = true;
  }
  return rep;
}

FiniteGroup gl2_group(int q, int cap) {
  const Gf& f = make_field_q(q);
  std::vector<Element> gens;
  // Transvections E12(xi^j) for a GF(p)-spanning set, the Weyl rotation,
  // and a determinant-xi diagonal; together they generate GL_2(q).
  for (int j = 0; j < f.k(); ++j)
    gens.push_back(Mat::mat2(f, 1, f.pow(f.xi(), j), 0, 1));
  gens.push_back(Mat::mat2(f, 0, f.neg(1), 1, 0));
  gens.push_back(Mat::mat2(f, f.xi(), 0, 0, 1));
  FiniteGroup g = FiniteGroup::close(std::move(gens), cap);
  require(g.order() == static_cast<int>((static_cast<long long>(q) * q - 1) *
                                        (static_cast<long long>(q) * q - q)),
          Errc::crosscheck_failure, "GL_2(q) closure has the wrong order");
  return g;
}

std::vector<int> det_members(const FiniteGroup& g, std::uint16_t detval) {
  std::vector<int> out;
  for (int i = 0; i < g.order(); ++i)
    if (std::get<Mat>(g.element(i)).det() == detval) out.push_back(i);
  return out;
}

}  // namespace ccc
