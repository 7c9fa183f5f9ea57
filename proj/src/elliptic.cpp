#include "bogocert/elliptic.hpp"

#include <algorithm>
#include <map>

namespace bogocert {

namespace {

FieldElement rat(const FieldPtr& k, long v) { return element_from_rational(k, Rational(v)); }

}  // namespace

CurveModel make_curve(const FieldPtr& k, FieldElement a1, FieldElement a2, FieldElement a3,
                      FieldElement a4, FieldElement a6) {
  CurveModel e{k, std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6),
               element_zero(k), element_zero(k), element_zero(k), element_zero(k)};
  FieldElement b2 = e.a1 * e.a1 + Rational(4) * e.a2;
  FieldElement b4 = Rational(2) * e.a4 + e.a1 * e.a3;
  FieldElement b6 = e.a3 * e.a3 + Rational(4) * e.a6;
  FieldElement b8 = e.a1 * e.a1 * e.a6 + Rational(4) * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 +
                    e.a2 * e.a3 * e.a3 - e.a4 * e.a4;
  e.c4 = b2 * b2 - Rational(24) * b4;
  e.c6 = Rational(-1) * b2 * b2 * b2 + Rational(36) * b2 * b4 - Rational(216) * b6;
  e.disc = Rational(-1) * b2 * b2 * b8 - Rational(8) * b4 * b4 * b4 - Rational(27) * b6 * b6 +
           Rational(9) * b2 * b4 * b6;
  if (e.disc.is_zero()) throw singular_model_error("curve model has vanishing discriminant");
  e.j = e.c4 * e.c4 * e.c4 / e.disc;
  return e;
}

CurveModel curve_from_j(const FieldElement& j) {
  const FieldPtr& k = j.owner;
  if (j.is_zero()) return make_curve(k, rat(k, 0), rat(k, 0), rat(k, 1), rat(k, 0), rat(k, 0));
  if (j == rat(k, 1728))
    return make_curve(k, rat(k, 0), rat(k, 0), rat(k, 0), rat(k, 1), rat(k, 0));
  FieldElement d = j - rat(k, 1728);
  FieldElement a4 = Rational(-36) * inverse(d);
  FieldElement a6 = Rational(-1) * inverse(d);
  return make_curve(k, rat(k, 1), rat(k, 0), rat(k, 0), std::move(a4), std::move(a6));
}

namespace {

// Evaluation of an element of F_p[x]/(g) at the image of x in the residue
// field (identity for f == 1 after constant extraction, canonical root for
// f == 2).
F2 to_residue_field(const PolyFp& value, const ResidueField& k, const PolyFp& g) {
  if (k.f == 1) return f2_embed(value.coeff(0));
  QuadField q = k.quad();
  // root of g in the canonical presentation; g is monic of degree 2 over F_p
  F2 root = quad_root(q, g.coeff(1), g.coeff(0));
  return f2_eval(q, value, root);
}

}  // namespace

ReducedCurve reduce_at_place(const CurveModel& e, u64 p, const PolyFp& residue_poly) {
  if (p <= 3) throw std::invalid_argument("reduce_at_place: residue characteristic must exceed 3");
  int f = residue_poly.degree();
  if (f < 1 || f > 2)
    throw std::invalid_argument("reduce_at_place: residue degree must be 1 or 2");
  ResidueField k{p, f, f == 2 ? canonical_quad_field(p).c : 0};
  QuadField q = k.quad();

  auto red = [&](const FieldElement& a) {
    return to_residue_field(reduce_element(a, p, residue_poly), k, residue_poly);
  };
  F2 a1 = red(e.a1), a2 = red(e.a2), a3 = red(e.a3), a4 = red(e.a4), a6 = red(e.a6);

  auto add = [&](F2 x, F2 y) { return f2_add(q, x, y); };
  auto sub = [&](F2 x, F2 y) { return f2_sub(q, x, y); };
  auto mul = [&](F2 x, F2 y) { return f2_mul(q, x, y); };
  auto scale = [&](u64 s, F2 x) { return f2_mul(q, f2_embed(s % p), x); };

  F2 b2 = add(mul(a1, a1), scale(4, a2));
  F2 b4 = add(scale(2, a4), mul(a1, a3));
  F2 b6 = add(mul(a3, a3), scale(4, a6));
  F2 b8 = sub(add(add(mul(mul(a1, a1), a6), scale(4, mul(a2, a6))),
                  sub(mul(a2, mul(a3, a3)), mul(a1, mul(a3, a4)))),
              mul(a4, a4));
  F2 c4 = sub(mul(b2, b2), scale(24, b4));
  F2 c6 = add(sub(scale(36, mul(b2, b4)), mul(b2, mul(b2, b2))), f2_neg(q, scale(216, b6)));
  F2 disc = add(sub(f2_neg(q, mul(mul(b2, b2), b8)), scale(8, mul(b4, mul(b4, b4)))),
                sub(scale(9, mul(b2, mul(b4, b6))), scale(27, mul(b6, b6))));

  ReducedCurve out;
  out.k = k;
  out.good_reduction = !(disc == f2_embed(0));
  // y^2 = x^3 - 27 c4 x - 54 c6, the standard short form for char > 3
  out.a = f2_neg(q, scale(27, c4));
  out.b = f2_neg(q, scale(54, c6));
  if (out.good_reduction) out.j = mul(mul(c4, c4), mul(c4, f2_inv(q, disc)));
  return out;
}

PolyFp reduce_j_at_place(const CurveModel& e, u64 p, const PolyFp& residue_poly) {
  return reduce_element(e.j, p, residue_poly);
}

std::optional<F2> project_to_fp2(const PolyFp& value, const PolyFp& residue_poly) {
  u64 p = value.p;
  if (value.degree() <= 0) return f2_embed(value.coeff(0));
  // minimal polynomial over F_p has degree 2 iff value^(p^2) == value
  PolyFp vp = powmod(value, BigInt(p), residue_poly);
  PolyFp vpp = powmod(vp, BigInt(p), residue_poly);
  if (!(vpp == value)) return std::nullopt;
  PolyFp tr = value + vp;
  PolyFp nm = rem(value * vp, residue_poly);
  if (tr.degree() > 0 || nm.degree() > 0)
    throw std::logic_error("project_to_fp2: trace/norm not in the prime field");
  QuadField q = canonical_quad_field(p);
  return quad_root(q, negmod(tr.coeff(0), p), nm.coeff(0));
}

long trace_of_frobenius(const ReducedCurve& e) {
  if (!e.good_reduction) throw std::invalid_argument("trace_of_frobenius: bad reduction");
  u64 p = e.k.p;
  u64 q = e.k.f == 2 ? p * p : p;
  if (q > 1000000) throw budget_error("trace_of_frobenius: field size exceeds the enumeration budget");
  QuadField k = e.k.quad();
  long long count = 1;  // point at infinity
  if (e.k.f == 1) {
    std::vector<std::uint8_t> sq(p, 0);
    for (u64 y = 0; y < p; ++y) ++sq[mulmod(y, y, p)];
    u64 a = e.a.a, b = e.b.a;
    for (u64 x = 0; x < p; ++x) {
      u64 rhs = addmod(mulmod(mulmod(x, x, p), x, p), addmod(mulmod(a, x, p), b, p), p);
      count += sq[rhs];
    }
  } else {
    std::vector<std::uint8_t> sq(q, 0);
    for (u64 i = 0; i < q; ++i) {
      F2 y{i % p, i / p};
      ++sq[f2_index(k, f2_mul(k, y, y))];
    }
    for (u64 i = 0; i < q; ++i) {
      F2 x{i % p, i / p};
      F2 rhs = f2_add(k, f2_mul(k, f2_mul(k, x, x), x),
                      f2_add(k, f2_mul(k, e.a, x), e.b));
      count += sq[f2_index(k, rhs)];
    }
  }
  long long a = static_cast<long long>(q) + 1 - count;
  if (static_cast<long long>(a) * a > 4 * static_cast<long long>(q))
    throw std::logic_error("trace_of_frobenius: Hasse bound violated");
  return static_cast<long>(a);
}

Fp hasse_invariant(const ReducedCurve& e) {
  if (e.k.f != 1) throw std::invalid_argument("hasse_invariant: degree-1 places only");
  if (e.k.p <= 3) throw std::invalid_argument("hasse_invariant: characteristic must exceed 3");
  if (!e.good_reduction) throw std::invalid_argument("hasse_invariant: bad reduction");
  u64 p = e.k.p;
  u64 m = (p - 1) / 2;
  // iteratively expand (x^3 + a x + b)^m, tracking coefficients up to x^(p-1)
  std::vector<u64> acc{1};
  std::vector<u64> cubic{e.b.a, e.a.a, 0, 1};
  for (u64 i = 0; i < m; ++i) {
    std::vector<u64> next(std::min<size_t>(acc.size() + 3, p), 0);
    for (size_t s = 0; s < acc.size(); ++s) {
      if (acc[s] == 0) continue;
      for (size_t t = 0; t < 4 && s + t < next.size(); ++t)
        next[s + t] = addmod(next[s + t], mulmod(acc[s], cubic[t], p), p);
    }
    acc = std::move(next);
  }
  return Fp(static_cast<long long>(acc.size() > p - 1 ? acc[p - 1] : 0), p);
}

PolyFp hasse_poly(u64 p) {
  if (p <= 3 || !is_prime_u64(p)) throw std::invalid_argument("hasse_poly: p must be a prime > 3");
  u64 m = (p - 1) / 2;
  std::vector<u64> c(m + 1);
  u64 binom = 1;  // C(m, i) mod p, exact since i < p
  c[0] = 1;
  for (u64 i = 0; i < m; ++i) {
    binom = mulmod(binom, mulmod((m - i) % p, invmod((i + 1) % p, p), p), p);
    c[i + 1] = mulmod(binom, binom, p);
  }
  return PolyFp(p, std::move(c));
}

namespace {

// j l^2 (l-1)^2 - 256 (l^2 - l + 1)^3 as coefficient arrays:
//   l^2(l-1)^2       = l^4 - 2 l^3 + l^2
//   (l^2 - l + 1)^3  = l^6 - 3 l^5 + 6 l^4 - 7 l^3 + 6 l^2 - 3 l + 1
constexpr long kSq[7] = {0, 0, 1, -2, 1, 0, 0};
constexpr long kCube[7] = {1, -3, 6, -7, 6, -3, 1};

// resultant over the canonical F_{p^2}
F2 f2_resultant(const QuadField& k, std::vector<F2> f, std::vector<F2> g) {
  auto trim = [](std::vector<F2>& v) {
    while (!v.empty() && v.back() == F2{0, 0}) v.pop_back();
  };
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) throw std::invalid_argument("f2_resultant: zero polynomial");
  F2 res = f2_embed(1);
  while (true) {
    if (g.size() == 1) {
      return f2_mul(k, res, f2_pow(k, g[0], f.size() - 1));
    }
    // r = f mod g
    std::vector<F2> r = f;
    F2 lead_inv = f2_inv(k, g.back());
    while (r.size() >= g.size()) {
      F2 coef = f2_mul(k, r.back(), lead_inv);
      size_t shift = r.size() - g.size();
      for (size_t i = 0; i < g.size(); ++i)
        r[i + shift] = f2_sub(k, r[i + shift], f2_mul(k, coef, g[i]));
      trim(r);
      if (r.empty()) return f2_embed(0);
    }
    u64 df = f.size() - 1, dg = g.size() - 1, dr = r.size() - 1;
    if ((df * dg) % 2 == 1) res = f2_neg(k, res);
    res = f2_mul(k, res, f2_pow(k, g.back(), df - dr));
    f = std::move(g);
    g = std::move(r);
  }
}

}  // namespace

bool is_supersingular_j(const ResidueField& k, F2 j_res) {
  u64 p = k.p;
  if (p <= 3) throw std::invalid_argument("is_supersingular_j: p must exceed 3");
  PolyFp hp = hasse_poly(p);
  if (j_res.in_prime_field()) {
    std::vector<u64> g(7);
    for (int i = 0; i < 7; ++i) {
      u64 term = mulmod(j_res.a, to_residue(kSq[i], p), p);
      g[i] = addmod(term, mulmod(256 % p, to_residue(-kCube[i], p), p), p);
    }
    PolyFp gp(p, std::move(g));
    return resultant(hp, gp).value == 0;
  }
  QuadField q = k.quad();
  std::vector<F2> hp2(hp.c.size());
  for (size_t i = 0; i < hp.c.size(); ++i) hp2[i] = f2_embed(hp.c[i]);
  std::vector<F2> g(7);
  for (int i = 0; i < 7; ++i) {
    F2 term = f2_mul(q, j_res, f2_embed(to_residue(kSq[i], p)));
    g[i] = f2_add(q, term, f2_embed(mulmod(256 % p, to_residue(-kCube[i], p), p)));
  }
  return f2_resultant(q, hp2, g) == f2_embed(0);
}

PolyFp supersingular_polynomial(u64 p) {
  PolyFp hp = hasse_poly(p);
  int m = hp.degree();
  // R(X) = Res_lambda(H_p, X l^2(l-1)^2 - 256 (l^2-l+1)^3) has degree m in X;
  // interpolate through X = 0..m
  std::vector<u64> xs, ys;
  for (int t = 0; t <= m; ++t) {
    u64 x = static_cast<u64>(t) % p;
    std::vector<u64> g(7);
    for (int i = 0; i < 7; ++i) {
      u64 term = mulmod(x, to_residue(kSq[i], p), p);
      g[i] = addmod(term, mulmod(256 % p, to_residue(-kCube[i], p), p), p);
    }
    xs.push_back(x);
    ys.push_back(resultant(hp, PolyFp(p, std::move(g))).value);
  }
  // Lagrange interpolation
  PolyFp r(p);
  for (int i = 0; i <= m; ++i) {
    PolyFp basis = poly_const(p, 1);
    u64 denom = 1;
    for (int t = 0; t <= m; ++t) {
      if (t == i) continue;
      basis = basis * PolyFp(p, {negmod(xs[t], p), 1});
      denom = mulmod(denom, submod(xs[i], xs[t], p), p);
    }
    r = r + mulmod(ys[i], invmod(denom, p), p) * basis;
  }
  return radical(r);
}

int count_supersingular_j(u64 p) { return count_roots_in_extension(supersingular_polynomial(p), 2); }

CMStatus cm_lookup(const FieldElement& j) {
  if (!j.is_rational_value()) return CMStatus{CMKind::unknown, 0};
  static const std::map<Rational, int> table = {
      {Rational(0), -3},
      {Rational(1728), -4},
      {Rational(-3375), -7},
      {Rational(8000), -8},
      {Rational(-32768), -11},
      {Rational(54000), -12},
      {Rational(287496), -16},
      {Rational(-884736), -19},
      {Rational(-12288000), -27},
      {Rational(16581375), -28},
      {Rational(-884736000), -43},
      {Rational(BigInt("-147197952000")), -67},
      {Rational(BigInt("-262537412640768000")), -163},
  };
  auto it = table.find(j.rational_value());
  if (it == table.end()) return CMStatus{CMKind::none, 0};
  return CMStatus{CMKind::cm, it->second};
}

}  // namespace bogocert
