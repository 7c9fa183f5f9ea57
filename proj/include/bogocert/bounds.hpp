#pragma once

#include <string>

#include "bogocert/logreal.hpp"

namespace bogocert {

// Inputs of the supersingular-prime height bound: the certified prime p, the
// maximal local degree d_v(L) (or a valid upper bound for it), and [K:Q].
struct BoundInput {
  u64 p = 0;
  int dv = 1;
  int deg_k = 1;
};

enum class Formula {
  supersingular,  // wire id "theorem13"
  cm_abelian,     // wire id "prop22"
};

std::string formula_wire_name(Formula f);

struct HeightBound {
  BigLogReal value;
  Formula formula = Formula::supersingular;
  BoundInput inputs{};
  int cm_degree = 0;        // d, for the CM formula
  BigInt cm_exponent = 0;   // exact exponent of 3 in the CM formula
};

// ln of the supersingular-prime bound
//   1/(4^(p^2 dv) + 1) * ( log p / (dv (40 sqrt 2 + 2) [K:Q] p^(2 p^2 dv + 2)) )^(2 + 4/(p^(p^2 dv / 4) - 2))
// evaluated entirely in log space at the requested precision. "log p" is the
// natural logarithm; certificates record that convention.
template <unsigned Digits>
RealD<Digits> supersingular_bound_ln(u64 p, int dv, int deg_k);

// Validates the input invariants (p prime, p > max(3, 2 dv), dv >= 1,
// deg_k >= 1, p^(p^2 dv/4) > 2) and evaluates at the default precision.
// Throws std::invalid_argument naming the violated condition.
HeightBound supersingular_height_bound(const BoundInput& in);

// The CM route: exact value 3^(-4d^2 - 4d - 6) with d = [L:Q].
HeightBound cm_height_bound(int d);

}  // namespace bogocert
