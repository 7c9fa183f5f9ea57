#pragma once

#include <optional>
#include <string>

#include "bogocert/elliptic.hpp"

namespace bogocert {

// Characteristic-polynomial data of a Frobenius element at a degree-1 place
// of good reduction: trace a and determinant ell (the norm of the place).
struct FrobeniusSample {
  u64 ell = 0;
  long trace = 0;
  u64 det = 0;

  friend bool operator==(const FrobeniusSample&, const FrobeniusSample&) = default;
};

// Labels a sample can earn mod p. nonsplit: t^2-4d a nonzero nonsquare
// (rules out Borel and split-Cartan-normalizer images); split: t^2-4d a
// nonzero square with t != 0 (rules out the nonsplit Cartan normalizer);
// exceptional_excluder: u = t^2/d outside {0,1,2,4} with u^2-3u+1 != 0
// (rules out the exceptional projective images).
struct CharpolyLabels {
  bool nonsplit = false;
  bool split = false;
  bool exceptional_excluder = false;

  bool neutral() const { return !nonsplit && !split && !exceptional_excluder; }
  friend bool operator==(const CharpolyLabels&, const CharpolyLabels&) = default;
};

// Throws std::invalid_argument unless p > 3 is prime and gcd(d, p) = 1.
CharpolyLabels classify_charpoly(long t, u64 d, u64 p);

struct WitnessTriple {
  std::optional<FrobeniusSample> nonsplit;
  std::optional<FrobeniusSample> split;
  std::optional<FrobeniusSample> exceptional_excluder;

  bool complete() const {
    return nonsplit.has_value() && split.has_value() && exceptional_excluder.has_value();
  }
};

enum class ImageStatus { contains_sl2, inconclusive };

struct ImageVerdict {
  ImageStatus status = ImageStatus::inconclusive;
  WitnessTriple witnesses;
  u64 samples_used = 0;
  u64 ell_budget = 0;
  int base_field_degree = 1;  // degree of the field the samples were taken over
};

// Samples Frobenius traces at degree-1 places of good reduction over the
// curve's base field, at rational primes ell <= ell_budget in ascending
// order, and certifies that the mod-p image contains SL_2 once all three
// witness kinds are found. A contains_sl2 verdict is a proof (given the
// surjective determinant); inconclusive never asserts non-containment.
// Budget exhaustion is not an error. Deterministic: stored witnesses are the
// smallest-ell representatives.
ImageVerdict sl2_containment(const CurveModel& e, u64 p, u64 ell_budget);

enum class RuleVerdict { holds, inconclusive };

// Transfer of the containment statement from the base field to L: holds iff
// the verdict is contains_sl2, p > max(3, 2 dv), and [L:K_E] < p. SL_2(F_p)
// has no proper subgroup of index < p for p >= 5, so a subgroup of index
// [L:K_E] < p in a group containing SL_2 still contains SL_2.
RuleVerdict descend_condition_ii(const ImageVerdict& verdict, u64 p, int deg_l_over_ke, int dv);

// Surjectivity over L: containment of SL_2 plus a surjective determinant.
// Q(zeta_p)/Q is totally ramified at p, so p unramified in L forces
// L and Q(zeta_p) to be linearly disjoint and the cyclotomic determinant
// stays surjective.
RuleVerdict condition_v(RuleVerdict condition_ii, bool l_unramified_at_p);

}  // namespace bogocert
