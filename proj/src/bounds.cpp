#include "bogocert/bounds.hpp"

#include <stdexcept>

namespace bogocert {

std::string formula_wire_name(Formula f) {
  switch (f) {
    case Formula::supersingular: return "theorem13";
    case Formula::cm_abelian: return "prop22";
  }
  throw std::logic_error("formula_wire_name: unknown formula");
}

template <unsigned Digits>
RealD<Digits> supersingular_bound_ln(u64 p, int dv, int deg_k) {
  using R = RealD<Digits>;
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  using boost::multiprecision::sqrt;

  const BigInt p2dv = BigInt(p) * p * dv;
  const R ln_p = log(R(p));
  const R ln4 = log(R(4));

  // ln(4^(p^2 dv) + 1)
  const R ln_first_denom = log_add_exp(R(p2dv) * ln4, R(0));

  // exponent 2 + 4/(p^(p^2 dv / 4) - 2), via ln(p^(p^2 dv/4) - 2)
  const R x = R(p2dv) / 4 * ln_p;
  const R ln_pow_minus_2 = log_sub_exp(x, log(R(2)));
  const R correction = exp(ln4 - ln_pow_minus_2);
  const R outer_exp = R(2) + correction;

  // ln of the base: ln(log p) - ln(dv (40 sqrt 2 + 2) [K:Q]) - (2 p^2 dv + 2) ln p
  const R constant = 40 * sqrt(R(2)) + 2;
  const R ln_base = log(ln_p) - log(R(dv) * constant * deg_k) - R(2 * p2dv + 2) * ln_p;

  return -ln_first_denom + outer_exp * ln_base;
}

template RealD<50> supersingular_bound_ln<50>(u64, int, int);
template RealD<64> supersingular_bound_ln<64>(u64, int, int);
template RealD<100> supersingular_bound_ln<100>(u64, int, int);

HeightBound supersingular_height_bound(const BoundInput& in) {
  if (in.dv < 1) throw std::invalid_argument("height bound: dv must be >= 1");
  if (in.deg_k < 1) throw std::invalid_argument("height bound: deg_k must be >= 1");
  if (!is_prime_u64(in.p)) throw std::invalid_argument("height bound: p must be prime");
  if (in.p <= 3 || in.p <= 2 * static_cast<u64>(in.dv))
    throw std::invalid_argument("height bound: p must exceed max(3, 2 dv)");
  // p^(p^2 dv / 4) > 2 holds for every admissible p, but the precondition is
  // checked explicitly so a violation is named rather than surfacing as a
  // log-domain error.
  if (BigInt(in.p) * in.p * in.dv < 2)
    throw std::invalid_argument("height bound: p^(p^2 dv / 4) must exceed 2");

  HeightBound out;
  out.formula = Formula::supersingular;
  out.inputs = in;
  out.value = BigLogReal::from_log(supersingular_bound_ln<64>(in.p, in.dv, in.deg_k));
  return out;
}

HeightBound cm_height_bound(int d) {
  if (d < 1) throw std::invalid_argument("cm bound: d must be >= 1");
  HeightBound out;
  out.formula = Formula::cm_abelian;
  out.cm_degree = d;
  out.cm_exponent = -(BigInt(4) * d * d + 4 * d + 6);
  out.value = BigLogReal::from_log(Real(out.cm_exponent) * boost::multiprecision::log(Real(3)));
  return out;
}

}  // namespace bogocert
