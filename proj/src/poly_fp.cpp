#include "bogocert/poly_fp.hpp"

#include <algorithm>
#include <stdexcept>

namespace bogocert {

namespace {

void trim(std::vector<u64>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// splitmix64, seeded per factorization call from a hash of the input.
struct Rng {
  u64 state;
  explicit Rng(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

u64 fnv_hash(const PolyFp& f) {
  u64 h = 0xcbf29ce484222325ull;
  auto mix = [&h](u64 v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  mix(f.p);
  for (u64 v : f.c) mix(v + 1);
  return h;
}

}  // namespace

PolyFp::PolyFp(u64 modulus, std::vector<u64> coeffs) : p(modulus), c(std::move(coeffs)) {
  for (u64& v : c) v %= p;
  trim(c);
}

PolyFp poly_x(u64 p) { return PolyFp(p, {0, 1}); }
PolyFp poly_const(u64 p, u64 v) { return PolyFp(p, {v}); }

PolyFp poly_monomial(u64 p, int d, u64 v) {
  std::vector<u64> c(d + 1, 0);
  c[d] = v;
  return PolyFp(p, std::move(c));
}

PolyFp operator+(const PolyFp& a, const PolyFp& b) {
  PolyFp r(a.p);
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = addmod(a.coeff(i), b.coeff(i), a.p);
  trim(r.c);
  return r;
}

PolyFp operator-(const PolyFp& a, const PolyFp& b) {
  PolyFp r(a.p);
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = submod(a.coeff(i), b.coeff(i), a.p);
  trim(r.c);
  return r;
}

PolyFp operator*(const PolyFp& a, const PolyFp& b) {
  PolyFp r(a.p);
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = addmod(r.c[i + j], mulmod(a.c[i], b.c[j], a.p), a.p);
  }
  trim(r.c);
  return r;
}

PolyFp operator*(u64 s, const PolyFp& a) {
  PolyFp r = a;
  s %= a.p;
  for (u64& v : r.c) v = mulmod(v, s, a.p);
  trim(r.c);
  return r;
}

PolyFp derivative(const PolyFp& f) {
  PolyFp r(f.p);
  for (size_t i = 1; i < f.c.size(); ++i) r.c.push_back(mulmod(f.c[i], i % f.p, f.p));
  trim(r.c);
  return r;
}

u64 eval(const PolyFp& f, u64 x) {
  u64 acc = 0;
  for (size_t i = f.c.size(); i-- > 0;) acc = addmod(mulmod(acc, x, f.p), f.c[i], f.p);
  return acc;
}

PolyFp make_monic(const PolyFp& f) {
  if (f.is_zero() || f.leading() == 1) return f;
  return invmod(f.leading(), f.p) * f;
}

std::pair<PolyFp, PolyFp> divmod(const PolyFp& f, const PolyFp& g) {
  if (g.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  PolyFp q(f.p), r = f;
  int dg = g.degree();
  u64 inv_lead = invmod(g.leading(), g.p);
  if (r.degree() >= dg) q.c.assign(r.degree() - dg + 1, 0);
  while (r.degree() >= dg) {
    int shift = r.degree() - dg;
    u64 coef = mulmod(r.leading(), inv_lead, f.p);
    q.c[shift] = coef;
    for (int i = 0; i <= dg; ++i)
      r.c[i + shift] = submod(r.c[i + shift], mulmod(coef, g.c[i], f.p), f.p);
    trim(r.c);
  }
  trim(q.c);
  return {q, r};
}

PolyFp rem(const PolyFp& f, const PolyFp& g) { return divmod(f, g).second; }

PolyFp divexact(const PolyFp& f, const PolyFp& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) throw std::logic_error("divexact: nonzero remainder");
  return q;
}

PolyFp gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

PolyFp powmod(const PolyFp& base, const BigInt& e, const PolyFp& m) {
  if (e < 0) throw std::invalid_argument("powmod: negative exponent");
  PolyFp result = poly_const(base.p, 1);
  result = rem(result, m);
  PolyFp b = rem(base, m);
  if (e == 0) return result;
  auto bits = boost::multiprecision::msb(e);
  for (long i = static_cast<long>(bits); i >= 0; --i) {
    result = rem(result * result, m);
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = rem(result * b, m);
  }
  return result;
}

Fp resultant(const PolyFp& f0, const PolyFp& g0) {
  if (f0.is_zero() || g0.is_zero())
    throw std::invalid_argument("resultant: zero polynomial input");
  PolyFp f = f0, g = g0;
  u64 p = f.p;
  u64 res = 1;
  while (true) {
    if (g.degree() == 0) {
      res = mulmod(res, powmod(g.c[0], static_cast<u64>(f.degree()), p), p);
      return Fp(static_cast<long long>(res), p);
    }
    PolyFp r = rem(f, g);
    if (r.is_zero()) return Fp(0, p);
    u64 sign = (u64(f.degree()) * u64(g.degree())) % 2 ? p - 1 : 1;
    res = mulmod(res, sign, p);
    res = mulmod(res, powmod(g.leading(), static_cast<u64>(f.degree() - r.degree()), p), p);
    f = std::move(g);
    g = std::move(r);
  }
}

namespace {

// p-th root of f, valid when f = h(x^p); coefficientwise in F_p since a^p = a.
PolyFp pth_root(const PolyFp& f) {
  PolyFp r(f.p);
  for (size_t i = 0; i < f.c.size(); i += static_cast<size_t>(f.p)) r.c.push_back(f.c[i]);
  return r;
}

void squarefree_decomposition(const PolyFp& f, int mult, std::vector<std::pair<PolyFp, int>>& out) {
  PolyFp fp = derivative(f);
  if (fp.is_zero()) {
    squarefree_decomposition(pth_root(f), mult * static_cast<int>(f.p), out);
    return;
  }
  PolyFp c = gcd(f, fp);
  PolyFp w = divexact(make_monic(f), c);
  int i = 1;
  while (w.degree() > 0) {
    PolyFp y = gcd(w, c);
    PolyFp z = divexact(w, y);
    if (z.degree() > 0) out.emplace_back(z, mult * i);
    ++i;
    w = std::move(y);
    c = divexact(c, w);
  }
  if (c.degree() > 0) squarefree_decomposition(pth_root(c), mult * static_cast<int>(f.p), out);
}

PolyFp random_poly_below(Rng& rng, u64 p, int deg_bound) {
  std::vector<u64> c(static_cast<size_t>(deg_bound), 0);
  for (auto& v : c) v = rng.next() % p;
  return PolyFp(p, std::move(c));
}

// All monic irreducible factors of g, where g is squarefree and a product of
// irreducibles of the same degree d.
void equal_degree_split(const PolyFp& g, int d, Rng& rng, std::vector<PolyFp>& out) {
  if (g.degree() == d) {
    out.push_back(make_monic(g));
    return;
  }
  u64 p = g.p;
  while (true) {
    PolyFp r = random_poly_below(rng, p, g.degree());
    if (r.degree() < 1) continue;
    PolyFp u = gcd(r, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree_split(u, d, rng, out);
      equal_degree_split(divexact(g, u), d, rng, out);
      return;
    }
    PolyFp s(p);
    if (p == 2) {
      // trace map sum_{i<d} r^(2^i)
      PolyFp t = rem(r, g);
      s = t;
      for (int i = 1; i < d; ++i) {
        t = rem(t * t, g);
        s = s + t;
      }
    } else {
      BigInt e = (boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(d)) - 1) / 2;
      s = powmod(r, e, g) - poly_const(p, 1);
    }
    PolyFp v = gcd(s, g);
    if (v.degree() > 0 && v.degree() < g.degree()) {
      equal_degree_split(v, d, rng, out);
      equal_degree_split(divexact(g, v), d, rng, out);
      return;
    }
  }
}

std::vector<PolyFp> distinct_degree_then_split(const PolyFp& sf, Rng& rng) {
  std::vector<PolyFp> out;
  PolyFp f = make_monic(sf);
  u64 p = f.p;
  PolyFp h = rem(poly_x(p), f);
  int d = 0;
  while (f.degree() > 0) {
    ++d;
    if (2 * d > f.degree()) {
      out.push_back(f);
      break;
    }
    h = powmod(h, BigInt(p), f);
    PolyFp g = gcd(h - poly_x(p), f);
    if (g.degree() > 0) {
      equal_degree_split(g, d, rng, out);
      f = divexact(f, g);
      h = rem(h, f);
    }
  }
  return out;
}

bool poly_less(const PolyFp& a, const PolyFp& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i)
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  return false;
}

}  // namespace

std::vector<std::pair<PolyFp, int>> poly_factor(const PolyFp& f) {
  if (f.is_zero()) throw std::invalid_argument("poly_factor: zero polynomial");
  std::vector<std::pair<PolyFp, int>> result;
  if (f.degree() == 0) return result;
  Rng rng(fnv_hash(f));
  std::vector<std::pair<PolyFp, int>> squarefree_parts;
  squarefree_decomposition(make_monic(f), 1, squarefree_parts);
  for (const auto& [part, mult] : squarefree_parts) {
    for (PolyFp& irr : distinct_degree_then_split(part, rng)) result.emplace_back(std::move(irr), mult);
  }
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return poly_less(a.first, b.first);
    return a.second < b.second;
  });
  return result;
}

bool is_irreducible(const PolyFp& f) {
  if (f.degree() < 1) return false;
  auto fac = poly_factor(f);
  return fac.size() == 1 && fac[0].second == 1;
}

PolyFp radical(const PolyFp& f) {
  if (f.is_zero()) throw std::invalid_argument("radical: zero polynomial");
  std::vector<std::pair<PolyFp, int>> parts;
  squarefree_decomposition(make_monic(f), 1, parts);
  PolyFp r = poly_const(f.p, 1);
  for (const auto& [part, mult] : parts) r = r * part;
  return r;
}

int count_roots_in_extension(const PolyFp& f, int k) {
  PolyFp rad = radical(f);
  if (rad.degree() < 1) return 0;
  BigInt q = boost::multiprecision::pow(BigInt(f.p), static_cast<unsigned>(k));
  PolyFp frob = powmod(poly_x(f.p), q, rad);
  PolyFp g = gcd(frob - poly_x(f.p), rad);
  return g.degree();
}

}  // namespace bogocert
