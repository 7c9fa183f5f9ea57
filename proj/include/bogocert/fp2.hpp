#pragma once

#include "bogocert/fp.hpp"
#include "bogocert/poly_fp.hpp"

namespace bogocert {

// F_{p^2} presented as F_p[t]/(t^2 + c) with x^2 + c the lexicographically
// smallest monic irreducible quadratic over F_p (smallest c >= 1 with -c a
// non-residue). All cross-module F_{p^2} data is converted to this
// presentation at the boundary.
struct QuadField {
  u64 p;
  u64 c;  // defining polynomial t^2 + c

  u64 nonresidue() const { return negmod(c, p); }  // t^2 = -c
  PolyFp defining_poly() const { return PolyFp(p, {c, 0, 1}); }
};

QuadField canonical_quad_field(u64 p);  // p an odd prime

// a + b*t in the canonical presentation; b == 0 embeds F_p.
struct F2 {
  u64 a = 0;
  u64 b = 0;

  bool in_prime_field() const { return b == 0; }
  friend bool operator==(const F2&, const F2&) = default;
};

F2 f2_add(const QuadField& k, F2 x, F2 y);
F2 f2_sub(const QuadField& k, F2 x, F2 y);
F2 f2_neg(const QuadField& k, F2 x);
F2 f2_mul(const QuadField& k, F2 x, F2 y);
F2 f2_inv(const QuadField& k, F2 x);
F2 f2_pow(const QuadField& k, F2 x, u64 e);
inline F2 f2_embed(u64 v) { return F2{v, 0}; }
u64 f2_index(const QuadField& k, F2 x);  // a + p*b, for table lookups

// A root in F_{p^2} of a monic quadratic y^2 + B y + C irreducible over F_p.
// This is the boundary conversion from the residue-polynomial presentation of
// a degree-2 residue field to the canonical one.
F2 quad_root(const QuadField& k, u64 B, u64 C);

// Horner evaluation of an F_p-coefficient polynomial at an F_{p^2} point.
F2 f2_eval(const QuadField& k, const PolyFp& f, F2 x);

}  // namespace bogocert
