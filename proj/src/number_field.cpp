#include "bogocert/number_field.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace bogocert {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::lcm;
using boost::multiprecision::numerator;

// ---- integer polynomial helpers ----

std::vector<BigInt> int_poly_derivative(const std::vector<BigInt>& f) {
  std::vector<BigInt> d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  while (!d.empty() && d.back() == 0) d.pop_back();
  return d;
}

// Determinant by Bareiss fraction-free elimination; exact over Z.
BigInt bareiss_det(std::vector<std::vector<BigInt>> a) {
  const size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

BigInt int_resultant(const std::vector<BigInt>& f, const std::vector<BigInt>& g) {
  int m = static_cast<int>(f.size()) - 1;
  int n = static_cast<int>(g.size()) - 1;
  if (m < 0 || n < 0) throw std::invalid_argument("int_resultant: zero polynomial");
  if (m + n == 0) return 1;
  std::vector<std::vector<BigInt>> a(m + n, std::vector<BigInt>(m + n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[i][i + j] = f[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[n + i][i + j] = g[n - j];
  return bareiss_det(std::move(a));
}

PolyFp reduce_int_poly(const std::vector<BigInt>& f, u64 p) {
  std::vector<u64> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = static_cast<u64>(((f[i] % p) + p) % p);
  return PolyFp(p, std::move(c));
}

// ---- rational polynomial helpers (for inversion in K) ----

using RatPoly = std::vector<Rational>;

void rat_trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// ---- irreducibility certification ----

std::set<int> proper_factor_degrees(const std::vector<int>& pattern, int n) {
  std::set<int> sums{0};
  for (int d : pattern) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  sums.erase(0);
  sums.erase(n);
  return sums;
}

std::vector<BigInt> divisors_of(const BigInt& n0) {
  BigInt n = abs(n0);
  auto factors = factor_integer(n);
  std::vector<BigInt> divs{1};
  for (const auto& [q, e] : factors) {
    std::vector<BigInt> next;
    BigInt qe = 1;
    for (int i = 0; i <= e; ++i) {
      for (const BigInt& d : divs) next.push_back(d * qe);
      qe *= q;
    }
    divs = std::move(next);
  }
  return divs;
}

BigInt eval_int_poly(const std::vector<BigInt>& f, const BigInt& x) {
  BigInt acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

void certify_irreducible(const std::vector<BigInt>& f, const BigInt& disc) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return;
  if (disc == 0) throw schema_error("min_poly is not squarefree, hence reducible over Q");
  if (f[0] == 0) throw schema_error("min_poly has the rational root 0");

  std::set<int> possible;
  bool first = true;
  for (u64 p : primes_in_range(2, 300)) {
    if (disc % p == 0) continue;
    auto factors = poly_factor(reduce_int_poly(f, p));
    std::vector<int> pattern;
    for (const auto& [g, mult] : factors)
      for (int i = 0; i < mult; ++i) pattern.push_back(g.degree());
    if (pattern.size() == 1) return;  // irreducible mod p
    std::set<int> here = proper_factor_degrees(pattern, n);
    if (first) {
      possible = std::move(here);
      first = false;
    } else {
      std::set<int> merged;
      std::set_intersection(possible.begin(), possible.end(), here.begin(), here.end(),
                            std::inserter(merged, merged.begin()));
      possible = std::move(merged);
    }
    if (possible.empty()) return;  // no consistent proper factor degree
  }
  if (n <= 3) {
    // a monic cubic or quadratic is reducible over Q iff it has an integer
    // root dividing the constant term
    for (const BigInt& d : divisors_of(f[0])) {
      if (eval_int_poly(f, d) == 0 || eval_int_poly(f, -d) == 0)
        throw schema_error("min_poly has an integer root");
    }
    return;
  }
  throw schema_error("cannot certify that min_poly is irreducible over Q");
}

}  // namespace

BigInt poly_disc(const std::vector<BigInt>& poly) {
  int n = static_cast<int>(poly.size()) - 1;
  if (n < 1) throw std::invalid_argument("poly_disc: constant polynomial");
  if (n == 1) return 1;
  auto d = int_poly_derivative(poly);
  BigInt res = int_resultant(poly, d);
  BigInt sign = (BigInt(n) * (n - 1) / 2) % 2 == 0 ? 1 : -1;
  return sign * res / poly.back();
}

std::shared_ptr<const NumberFieldOrder> NumberFieldOrder::make(std::vector<BigInt> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.size() < 2) throw schema_error("min_poly must have degree >= 1");
  if (coeffs.back() != 1) throw schema_error("min_poly must be monic");
  auto order = std::shared_ptr<NumberFieldOrder>(new NumberFieldOrder());
  order->min_poly = std::move(coeffs);
  order->poly_discriminant = poly_disc(order->min_poly);
  certify_irreducible(order->min_poly, order->poly_discriminant);
  return order;
}

std::shared_ptr<const NumberFieldOrder> NumberFieldOrder::rationals() {
  static const FieldPtr q = make({BigInt(0), BigInt(1)});
  return q;
}

// ---- field elements ----

bool FieldElement::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return r == 0; });
}

bool FieldElement::is_rational_value() const {
  for (size_t i = 1; i < coords.size(); ++i)
    if (coords[i] != 0) return false;
  return true;
}

Rational FieldElement::rational_value() const {
  if (!is_rational_value()) throw std::logic_error("FieldElement: not a rational value");
  return coords.empty() ? Rational(0) : coords[0];
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.owner->min_poly == b.owner->min_poly && a.coords == b.coords;
}

FieldElement element_zero(const FieldPtr& k) {
  return FieldElement{k, std::vector<Rational>(k->degree(), Rational(0))};
}

FieldElement element_one(const FieldPtr& k) { return element_from_rational(k, 1); }

FieldElement element_from_rational(const FieldPtr& k, const Rational& r) {
  FieldElement e = element_zero(k);
  e.coords[0] = r;
  return e;
}

FieldElement element_generator(const FieldPtr& k) {
  FieldElement e = element_zero(k);
  if (k->degree() == 1) {
    e.coords[0] = Rational(-k->min_poly[0]);  // the root of a linear min_poly
  } else {
    e.coords[1] = 1;
  }
  return e;
}

FieldElement make_element(const FieldPtr& k, std::vector<Rational> coords) {
  if (static_cast<int>(coords.size()) != k->degree())
    throw schema_error("element coordinate count must equal the field degree");
  return FieldElement{k, std::move(coords)};
}

namespace {
void check_same_owner(const FieldElement& a, const FieldElement& b) {
  if (a.owner->min_poly != b.owner->min_poly)
    throw std::invalid_argument("FieldElement: mixed base fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  check_same_owner(a, b);
  FieldElement r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  check_same_owner(a, b);
  FieldElement r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

FieldElement operator*(const Rational& s, const FieldElement& a) {
  FieldElement r = a;
  for (auto& c : r.coords) c *= s;
  return r;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  check_same_owner(a, b);
  const int n = a.owner->degree();
  std::vector<Rational> prod(2 * n - 1, Rational(0));
  for (int i = 0; i < n; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < n; ++j) prod[i + j] += a.coords[i] * b.coords[j];
  }
  const auto& m = a.owner->min_poly;
  for (int d = 2 * n - 2; d >= n; --d) {
    if (prod[d] == 0) continue;
    Rational lead = prod[d];
    prod[d] = 0;
    for (int i = 0; i < n; ++i) prod[d - n + i] -= lead * Rational(m[i]);
  }
  prod.resize(n);
  return FieldElement{a.owner, std::move(prod)};
}

FieldElement inverse(const FieldElement& a) {
  if (a.is_zero()) throw std::invalid_argument("FieldElement: inverse of zero");
  const int n = a.owner->degree();
  if (n == 1) return element_from_rational(a.owner, Rational(1) / a.coords[0]);
  // extended Euclid over Q[x]: s * a + t * min_poly = const
  RatPoly r0;
  for (const BigInt& c : a.owner->min_poly) r0.push_back(Rational(c));
  RatPoly r1 = a.coords;
  rat_trim(r1);
  RatPoly s0{}, s1{Rational(1)};
  while (!r1.empty()) {
    RatPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
    RatPoly rm = r0;
    while (rm.size() >= r1.size() && !rm.empty()) {
      Rational coef = rm.back() / r1.back();
      size_t shift = rm.size() - r1.size();
      q[shift] += coef;
      for (size_t i = 0; i < r1.size(); ++i) rm[i + shift] -= coef * r1[i];
      rat_trim(rm);
    }
    RatPoly qs;
    rat_trim(q);
    if (!q.empty() && !s1.empty()) {
      qs.assign(q.size() + s1.size() - 1, Rational(0));
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
    }
    RatPoly snext(std::max(s0.size(), qs.size()), Rational(0));
    for (size_t i = 0; i < snext.size(); ++i) {
      Rational v = i < s0.size() ? s0[i] : Rational(0);
      if (i < qs.size()) v -= qs[i];
      snext[i] = v;
    }
    rat_trim(snext);
    r0 = std::move(r1);
    r1 = std::move(rm);
    s0 = std::move(s1);
    s1 = std::move(snext);
  }
  if (r0.size() != 1) throw std::logic_error("inverse: gcd with min_poly is nonconstant");
  std::vector<Rational> out(n, Rational(0));
  for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] / r0[0];
  return FieldElement{a.owner, std::move(out)};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * inverse(b); }

PolyFp reduce_element(const FieldElement& a, u64 p, const PolyFp& residue_poly) {
  PolyFp acc(p);
  for (size_t i = a.coords.size(); i-- > 0;) {
    const Rational& c = a.coords[i];
    BigInt den = denominator(c) % p;
    if (den == 0) throw nonintegral_error("coordinate denominator vanishes mod p");
    BigInt num = numerator(c) % p;
    u64 num_r = static_cast<u64>(((num + p) % p).convert_to<u64>());
    u64 den_r = static_cast<u64>(((den + p) % p).convert_to<u64>());
    u64 value = mulmod(num_r, invmod(den_r, p), p);
    acc = rem(acc * poly_x(p) + poly_const(p, value), residue_poly);
  }
  return acc;
}

// ---- Dedekind criterion and splitting ----

namespace {

std::vector<BigInt> lift_poly(const PolyFp& f) {
  std::vector<BigInt> out;
  for (u64 c : f.c) out.push_back(BigInt(c));
  return out;
}

std::vector<BigInt> int_poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<BigInt> r(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

}  // namespace

Maximality dedekind_p_maximal(const NumberFieldOrder& order, u64 p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("dedekind_p_maximal: p must be prime");
  PolyFp fbar = reduce_int_poly(order.min_poly, p);
  auto factors = poly_factor(fbar);
  PolyFp gbar = poly_const(p, 1);
  PolyFp hbar = poly_const(p, 1);
  for (const auto& [gi, ei] : factors) {
    gbar = gbar * gi;
    for (int k = 1; k < ei; ++k) hbar = hbar * gi;
  }
  std::vector<BigInt> gh = int_poly_mul(lift_poly(gbar), lift_poly(hbar));
  gh.resize(std::max(gh.size(), order.min_poly.size()), BigInt(0));
  for (size_t i = 0; i < order.min_poly.size(); ++i) gh[i] -= order.min_poly[i];
  for (BigInt& c : gh) {
    if (c % p != 0) throw std::logic_error("dedekind: g*h != f mod p");
    c /= static_cast<long>(p);
  }
  PolyFp fcheck = reduce_int_poly(gh, p);
  PolyFp g2 = gcd(gcd(fcheck, gbar), hbar);
  return g2.degree() == 0 ? Maximality::maximal : Maximality::not_maximal;
}

PrimeSplittingData splitting_data(const NumberFieldOrder& order, u64 p) {
  if (dedekind_p_maximal(order, p) != Maximality::maximal)
    throw unsupported_prime_error("Z[theta] is not maximal at " + std::to_string(p) +
                                  "; splitting data unavailable");
  PrimeSplittingData out;
  out.p = p;
  out.certified_maximal = true;
  for (const auto& [gi, ei] : poly_factor(reduce_int_poly(order.min_poly, p)))
    out.factors.push_back(SplitFactor{ei, gi.degree(), gi});
  return out;
}

LocalDegree max_local_degree(const NumberFieldOrder& L, u64 p) {
  try {
    PrimeSplittingData sd = splitting_data(L, p);
    int dv = 0;
    for (const auto& fac : sd.factors) dv = std::max(dv, fac.e * fac.f);
    return LocalDegree{dv, true};
  } catch (const unsupported_prime_error&) {
    return LocalDegree{L.degree(), false};
  }
}

// ---- bad set ----

std::vector<BigInt> smith_diagonal(std::vector<std::vector<BigInt>> m) {
  const size_t n = m.size();
  std::vector<BigInt> diag;
  for (size_t t = 0; t < n; ++t) {
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < n && !found; ++i)
      for (size_t j = t; j < n && !found; ++j)
        if (m[i][j] != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) {
      for (size_t i = t; i < n; ++i) diag.push_back(0);
      return diag;
    }
    std::swap(m[pi], m[t]);
    for (size_t i = 0; i < n; ++i) std::swap(m[i][pj], m[i][t]);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (size_t i = t + 1; i < n; ++i) {
        while (m[i][t] != 0) {
          BigInt q = m[i][t] / m[t][t];
          for (size_t j = t; j < n; ++j) m[i][j] -= q * m[t][j];
          if (m[i][t] != 0) {
            std::swap(m[i], m[t]);
            clean = false;
          }
        }
      }
      for (size_t j = t + 1; j < n; ++j) {
        while (m[t][j] != 0) {
          BigInt q = m[t][j] / m[t][t];
          for (size_t i = t; i < n; ++i) m[i][j] -= q * m[i][t];
          if (m[t][j] != 0) {
            for (size_t i = t; i < n; ++i) std::swap(m[i][j], m[i][t]);
            clean = false;
          }
        }
      }
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

std::vector<std::pair<BigInt, int>> factor_integer(BigInt n) {
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, int>> out;
  if (n <= 1) return out;
  for (u64 d = 2; d <= 1000000 && BigInt(d) * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(BigInt(d), e);
    }
  }
  if (n > 1) {
    if (n <= BigInt("18446744073709551615") && is_prime_u64(n.convert_to<u64>())) {
      out.emplace_back(n, 1);
    } else {
      throw budget_error("factor_integer: cofactor " + n.convert_to<std::string>() +
                         " is beyond the trial-division budget");
    }
  }
  return out;
}

BadSet bad_set(const FieldElement& j) {
  if (j.is_zero()) throw std::invalid_argument("bad_set: j must be nonzero");
  const FieldPtr& k = j.owner;
  const int n = k->degree();

  BigInt N = 1;
  for (const Rational& c : j.coords) N = lcm(N, denominator(c));

  std::vector<BigInt> nj(n, 0);
  for (int i = 0; i < n; ++i) nj[i] = numerator(j.coords[i]) * (N / denominator(j.coords[i]));

  auto mul_mod_minpoly = [&](const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
    std::vector<BigInt> prod(2 * n - 1, BigInt(0));
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) prod[i + jj] += a[i] * b[jj];
    for (int d = 2 * n - 2; d >= n; --d) {
      if (prod[d] == 0) continue;
      BigInt lead = prod[d];
      prod[d] = 0;
      for (int i = 0; i < n; ++i) prod[d - n + i] -= lead * k->min_poly[i];
    }
    prod.resize(n);
    return prod;
  };

  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> power(n, 0);
  power[0] = 1;
  for (int r = 0; r < n; ++r) {
    rows.push_back(power);
    if (r + 1 < n) power = mul_mod_minpoly(power, nj);
  }

  BigInt index = 1;
  for (const BigInt& d : smith_diagonal(std::move(rows))) {
    if (d == 0) throw std::invalid_argument("bad_set: j does not generate the field");
    index *= d;
  }

  BadSet out;
  out.generating_integer = N * abs(k->poly_discriminant) * index;
  for (const auto& [q, e] : factor_integer(out.generating_integer))
    out.primes.push_back(q.convert_to<u64>());
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

}  // namespace bogocert
