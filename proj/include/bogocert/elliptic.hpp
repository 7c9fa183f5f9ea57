#pragma once

#include <optional>

#include "bogocert/fp2.hpp"
#include "bogocert/number_field.hpp"

namespace bogocert {

// Long Weierstrass model over a number field, with the derived quantities
// computed once at construction. The discriminant is required nonzero.
struct CurveModel {
  FieldPtr field;
  FieldElement a1, a2, a3, a4, a6;
  FieldElement c4, c6, disc, j;
};

CurveModel make_curve(const FieldPtr& k, FieldElement a1, FieldElement a2, FieldElement a3,
                      FieldElement a4, FieldElement a6);

// A model over Q(j) with the requested j-invariant:
//   j = 0:    y^2 + y = x^3
//   j = 1728: y^2 = x^3 + x
//   else:     y^2 + xy = x^3 - (36/(j-1728)) x - 1/(j-1728)
CurveModel curve_from_j(const FieldElement& j);

inline const FieldElement& j_invariant(const CurveModel& e) { return e.j; }

// Residue field of a degree-1 or degree-2 place; the degree-2 case is always
// the canonical quadratic presentation.
struct ResidueField {
  u64 p;
  int f;
  u64 quad_c = 0;  // defining t^2 + quad_c when f == 2

  QuadField quad() const { return QuadField{p, quad_c}; }
};

// Short Weierstrass reduction y^2 = x^3 + a x + b at a place of residue
// characteristic > 3. When good_reduction is false, a/b/j are meaningless.
struct ReducedCurve {
  ResidueField k;
  F2 a, b;
  bool good_reduction = false;
  F2 j;
};

// Reduction of the model at the place given by an irreducible degree-1 or
// degree-2 factor of min_poly mod p. Throws:
//   std::invalid_argument      p <= 3 (unsupported characteristic) or f > 2
//   nonintegral_error          a coefficient is not p-integral in this
//                              presentation; callers inspect j separately to
//                              separate the potentially-multiplicative case
ReducedCurve reduce_at_place(const CurveModel& e, u64 p, const PolyFp& residue_poly);

// j reduced at a place of any residue degree, as an element of F_p[x]/(g).
PolyFp reduce_j_at_place(const CurveModel& e, u64 p, const PolyFp& residue_poly);

// Image of an element of F_p[x]/(g) in the canonical F_{p^2} when it lies in
// a subfield of degree <= 2 over F_p; nullopt otherwise.
std::optional<F2> project_to_fp2(const PolyFp& value, const PolyFp& residue_poly);

// Trace of Frobenius a = q + 1 - #E(F_q) by exhaustive point enumeration;
// Hasse bound checked. Throws budget_error when q > 10^6.
long trace_of_frobenius(const ReducedCurve& e);

// Coefficient of x^(p-1) in (x^3 + a x + b)^((p-1)/2); vanishes exactly for
// supersingular curves. Degree-1 places only.
Fp hasse_invariant(const ReducedCurve& e);

// sum_i C(m,i)^2 lambda^i with m = (p-1)/2; its roots are the supersingular
// Legendre parameters.
PolyFp hasse_poly(u64 p);

// Supersingularity of a j-value in F_p or the canonical F_{p^2}, decided by
// the vanishing of Res_lambda(H_p(lambda), j l^2(l-1)^2 - 256(l^2-l+1)^3).
bool is_supersingular_j(const ResidueField& k, F2 j_res);

// The monic squarefree polynomial over F_p whose roots are exactly the
// supersingular j-values, via interpolation of the resultant above in the
// j variable.
PolyFp supersingular_polynomial(u64 p);

// Number of supersingular j-values in F_{p^2}.
int count_supersingular_j(u64 p);

enum class CMKind { none, cm, unknown };

struct CMStatus {
  CMKind kind = CMKind::none;
  int discriminant = 0;  // negative, set when kind == cm
};

// Class-number-one CM detection for rational j; irrational j reports unknown
// and the pipeline proceeds on the non-CM path with a warning.
CMStatus cm_lookup(const FieldElement& j);

}  // namespace bogocert
