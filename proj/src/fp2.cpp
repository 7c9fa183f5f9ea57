#include "bogocert/fp2.hpp"

#include <stdexcept>

namespace bogocert {

QuadField canonical_quad_field(u64 p) {
  if (p == 2 || !is_prime_u64(p)) throw std::invalid_argument("canonical_quad_field: p must be an odd prime");
  for (u64 c = 1; c < p; ++c) {
    if (legendre_symbol(static_cast<long long>(negmod(c, p)), p) == -1) return QuadField{p, c};
  }
  throw std::logic_error("canonical_quad_field: no nonresidue found");
}

F2 f2_add(const QuadField& k, F2 x, F2 y) { return {addmod(x.a, y.a, k.p), addmod(x.b, y.b, k.p)}; }
F2 f2_sub(const QuadField& k, F2 x, F2 y) { return {submod(x.a, y.a, k.p), submod(x.b, y.b, k.p)}; }
F2 f2_neg(const QuadField& k, F2 x) { return {negmod(x.a, k.p), negmod(x.b, k.p)}; }

F2 f2_mul(const QuadField& k, F2 x, F2 y) {
  // (a1 + b1 t)(a2 + b2 t) with t^2 = -c
  u64 p = k.p;
  u64 aa = mulmod(x.a, y.a, p);
  u64 bb = mulmod(x.b, y.b, p);
  u64 cross = addmod(mulmod(x.a, y.b, p), mulmod(x.b, y.a, p), p);
  return {submod(aa, mulmod(k.c, bb, p), p), cross};
}

F2 f2_inv(const QuadField& k, F2 x) {
  u64 p = k.p;
  // norm = a^2 + c b^2
  u64 norm = addmod(mulmod(x.a, x.a, p), mulmod(k.c, mulmod(x.b, x.b, p), p), p);
  if (norm == 0) throw std::invalid_argument("f2_inv: zero element");
  u64 ninv = invmod(norm, p);
  return {mulmod(x.a, ninv, p), mulmod(negmod(x.b, p), ninv, p)};
}

F2 f2_pow(const QuadField& k, F2 x, u64 e) {
  F2 r = f2_embed(1);
  while (e) {
    if (e & 1) r = f2_mul(k, r, x);
    x = f2_mul(k, x, x);
    e >>= 1;
  }
  return r;
}

u64 f2_index(const QuadField& k, F2 x) { return x.a + k.p * x.b; }

F2 quad_root(const QuadField& k, u64 B, u64 C) {
  u64 p = k.p;
  u64 disc = submod(mulmod(B, B, p), mulmod(4 % p, C, p), p);
  if (disc == 0 || legendre_symbol(static_cast<long long>(disc), p) == 1)
    throw std::invalid_argument("quad_root: polynomial is not irreducible over F_p");
  // sqrt(disc) = t * sqrt(disc / t^2), and disc / t^2 = disc / (-c) is a residue
  u64 ratio = mulmod(disc, invmod(k.nonresidue(), p), p);
  u64 s = sqrt_mod(ratio, p);
  F2 w{0, s};  // w^2 == disc
  u64 half = invmod(2, p);
  return {mulmod(submod(0, B, p), half, p), mulmod(w.b, half, p)};
}

F2 f2_eval(const QuadField& k, const PolyFp& f, F2 x) {
  F2 acc = f2_embed(0);
  for (size_t i = f.c.size(); i-- > 0;) acc = f2_add(k, f2_mul(k, acc, x), f2_embed(f.c[i]));
  return acc;
}

}  // namespace bogocert
