#include "bogocert/galois_image.hpp"

namespace bogocert {

CharpolyLabels classify_charpoly(long t, u64 d, u64 p) {
  if (p <= 3 || !is_prime_u64(p)) throw std::invalid_argument("classify_charpoly: p must be a prime > 3");
  if (d % p == 0) throw std::invalid_argument("classify_charpoly: determinant divisible by p");
  u64 tr = to_residue(t, p);
  u64 det = d % p;
  u64 disc = submod(mulmod(tr, tr, p), mulmod(4, det, p), p);
  CharpolyLabels out;
  if (disc != 0) {
    int chi = legendre_symbol(static_cast<long long>(disc), p);
    out.nonsplit = chi == -1;
    out.split = chi == 1 && tr != 0;
  }
  u64 u = mulmod(mulmod(tr, tr, p), invmod(det, p), p);
  if (u != 0 && u != 1 && u != 2 && u != 4) {
    u64 charpoly5 = addmod(submod(mulmod(u, u, p), mulmod(3, u, p), p), 1, p);
    out.exceptional_excluder = charpoly5 != 0;
  }
  return out;
}

ImageVerdict sl2_containment(const CurveModel& e, u64 p, u64 ell_budget) {
  if (p <= 3 || !is_prime_u64(p)) throw std::invalid_argument("sl2_containment: p must be a prime > 3");
  if (ell_budget > 100000) throw budget_error("sl2_containment: ell budget exceeds 10^5");
  ImageVerdict verdict;
  verdict.ell_budget = ell_budget;
  verdict.base_field_degree = e.field->degree();

  for (u64 ell : primes_in_range(5, ell_budget)) {
    if (ell == p) continue;
    PrimeSplittingData sd;
    try {
      sd = splitting_data(*e.field, ell);
    } catch (const unsupported_prime_error&) {
      continue;
    }
    for (const auto& place : sd.factors) {
      if (place.e != 1 || place.f != 1) continue;
      ReducedCurve rc;
      try {
        rc = reduce_at_place(e, ell, place.residue_poly);
      } catch (const nonintegral_error&) {
        continue;
      }
      if (!rc.good_reduction) continue;
      long a = trace_of_frobenius(rc);
      ++verdict.samples_used;
      CharpolyLabels labels = classify_charpoly(a, ell, p);
      FrobeniusSample sample{ell, a, ell};
      if (labels.nonsplit && !verdict.witnesses.nonsplit) verdict.witnesses.nonsplit = sample;
      if (labels.split && !verdict.witnesses.split) verdict.witnesses.split = sample;
      if (labels.exceptional_excluder && !verdict.witnesses.exceptional_excluder)
        verdict.witnesses.exceptional_excluder = sample;
      if (verdict.witnesses.complete()) {
        verdict.status = ImageStatus::contains_sl2;
        return verdict;
      }
    }
  }
  verdict.status = ImageStatus::inconclusive;
  return verdict;
}

RuleVerdict descend_condition_ii(const ImageVerdict& verdict, u64 p, int deg_l_over_ke, int dv) {
  if (deg_l_over_ke < 1) throw std::invalid_argument("descend_condition_ii: degree must be >= 1");
  if (verdict.status != ImageStatus::contains_sl2) return RuleVerdict::inconclusive;
  if (p <= 3 || p <= 2 * static_cast<u64>(dv)) return RuleVerdict::inconclusive;
  if (static_cast<u64>(deg_l_over_ke) >= p) return RuleVerdict::inconclusive;
  return RuleVerdict::holds;
}

RuleVerdict condition_v(RuleVerdict condition_ii, bool l_unramified_at_p) {
  if (condition_ii == RuleVerdict::holds && l_unramified_at_p) return RuleVerdict::holds;
  return RuleVerdict::inconclusive;
}

}  // namespace bogocert
