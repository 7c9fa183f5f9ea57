#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bogocert/galois_image.hpp"

using namespace bogocert;

namespace {

FieldPtr rationals() { return NumberFieldOrder::rationals(); }

FieldElement q(const FieldPtr& k, long long v) { return element_from_rational(k, Rational(v)); }

CurveModel conductor11(const FieldPtr& k) {
  // y^2 + y = x^3 - x^2 - 10x - 20
  return make_curve(k, q(k, 0), q(k, -1), q(k, 1), q(k, -10), q(k, -20));
}

// Oracle trace: direct enumeration of the long Weierstrass equation.
long oracle_trace_11a1(u64 ell) {
  long long count = 1;
  for (u64 x = 0; x < ell; ++x)
    for (u64 y = 0; y < ell; ++y) {
      u64 lhs = addmod(mulmod(y, y, ell), y, ell);
      u64 x2 = mulmod(x, x, ell);
      u64 rhs = submod(mulmod(x2, x, ell), x2, ell);
      rhs = submod(rhs, mulmod(10 % ell, x, ell), ell);
      rhs = submod(rhs, 20 % ell, ell);
      if (lhs == rhs) ++count;
    }
  return static_cast<long>(ell) + 1 - static_cast<long>(count);
}

// Oracle classification with an explicit residue table.
CharpolyLabels oracle_classify(long t, u64 d, u64 p) {
  std::set<u64> squares;
  for (u64 y = 1; y < p; ++y) squares.insert(mulmod(y, y, p));
  u64 tr = to_residue(t, p);
  u64 disc = submod(mulmod(tr, tr, p), mulmod(4 % p, d % p, p), p);
  CharpolyLabels out;
  out.nonsplit = disc != 0 && !squares.count(disc);
  out.split = disc != 0 && squares.count(disc) > 0 && tr != 0;
  u64 u = mulmod(mulmod(tr, tr, p), invmod(d % p, p), p);
  out.exceptional_excluder =
      u != 0 && u != 1 && u != 2 && u != 4 && addmod(submod(mulmod(u, u, p), mulmod(3, u, p), p), 1, p) != 0;
  return out;
}

}  // namespace

TEST_CASE("classify_charpoly worked examples") {
  CharpolyLabels a = classify_charpoly(1, 3, 7);  // disc -11 = 3 mod 7, a nonsquare
  CHECK(a.nonsplit);
  CHECK_FALSE(a.split);

  CharpolyLabels b = classify_charpoly(3, 2, 7);  // disc 1, a nonzero square
  CHECK(b.split);
  CHECK_FALSE(b.nonsplit);

  CharpolyLabels c = classify_charpoly(0, 5, 7);  // u = 0 sits in the excluded set
  CHECK_FALSE(c.exceptional_excluder);
  CHECK(c.neutral());

  CHECK_THROWS_AS(classify_charpoly(1, 7, 7), std::invalid_argument);
  CHECK_THROWS_AS(classify_charpoly(1, 2, 3), std::invalid_argument);
}

TEST_CASE("classify_charpoly agrees with brute-force arithmetic for p <= 97") {
  for (u64 p : primes_in_range(5, 97)) {
    for (u64 d = 1; d < p; ++d)
      for (u64 t = 0; t < p; ++t)
        REQUIRE(classify_charpoly(static_cast<long>(t), d, p) == oracle_classify(static_cast<long>(t), d, p));
  }
}

TEST_CASE("conductor-11 curve certifies SL2 containment at p = 7") {
  FieldPtr k = rationals();
  CurveModel e = conductor11(k);
  ImageVerdict v = sl2_containment(e, 7, 200);
  REQUIRE(v.status == ImageStatus::contains_sl2);
  REQUIRE(v.witnesses.complete());

  // the stored witnesses re-verify: re-running the classifier reproduces the labels
  CHECK(classify_charpoly(v.witnesses.nonsplit->trace, v.witnesses.nonsplit->det, 7).nonsplit);
  CHECK(classify_charpoly(v.witnesses.split->trace, v.witnesses.split->det, 7).split);
  CHECK(classify_charpoly(v.witnesses.exceptional_excluder->trace,
                          v.witnesses.exceptional_excluder->det, 7)
            .exceptional_excluder);

  // witness traces match the enumeration oracle and are minimal in ell
  for (const auto& w : {*v.witnesses.nonsplit, *v.witnesses.split, *v.witnesses.exceptional_excluder}) {
    CHECK(w.det == w.ell);
    CHECK(oracle_trace_11a1(w.ell) == w.trace);
    CHECK(static_cast<long long>(w.trace) * w.trace <= 4 * static_cast<long long>(w.ell));
  }
  bool seen_nonsplit = false, seen_split = false, seen_exc = false;
  for (u64 ell : primes_in_range(5, 200)) {
    if (ell == 7 || ell == 11) continue;
    CharpolyLabels l = oracle_classify(oracle_trace_11a1(ell), ell, 7);
    if (l.nonsplit && !seen_nonsplit) {
      seen_nonsplit = true;
      CHECK(v.witnesses.nonsplit->ell == ell);
    }
    if (l.split && !seen_split) {
      seen_split = true;
      CHECK(v.witnesses.split->ell == ell);
    }
    if (l.exceptional_excluder && !seen_exc) {
      seen_exc = true;
      CHECK(v.witnesses.exceptional_excluder->ell == ell);
    }
  }
  CHECK(seen_nonsplit);
  CHECK(seen_split);
  CHECK(seen_exc);
}

TEST_CASE("conductor-11 curve stays inconclusive at p = 5 (rational 5-isogeny)") {
  FieldPtr k = rationals();
  CurveModel e = conductor11(k);
  ImageVerdict v = sl2_containment(e, 5, 2000);
  CHECK(v.status == ImageStatus::inconclusive);
  CHECK_FALSE(v.witnesses.nonsplit.has_value());

  // the eigenvalues are rational: every characteristic polynomial splits mod 5
  for (u64 ell : primes_in_range(5, 500)) {
    if (ell == 5 || ell == 11) continue;
    CHECK_FALSE(oracle_classify(oracle_trace_11a1(ell), ell, 5).nonsplit);
  }
}

TEST_CASE("CM curve y^2 = x^3 + x is inconclusive (Cartan normalizer image)") {
  FieldPtr k = rationals();
  CurveModel e = make_curve(k, q(k, 0), q(k, 0), q(k, 0), q(k, 1), q(k, 0));
  ImageVerdict v = sl2_containment(e, 7, 500);
  CHECK(v.status == ImageStatus::inconclusive);
}

TEST_CASE("verdicts are deterministic") {
  FieldPtr k = rationals();
  CurveModel e = conductor11(k);
  ImageVerdict a = sl2_containment(e, 7, 300);
  ImageVerdict b = sl2_containment(e, 7, 300);
  CHECK(a.status == b.status);
  CHECK(a.samples_used == b.samples_used);
  CHECK(a.witnesses.nonsplit == b.witnesses.nonsplit);
  CHECK(a.witnesses.split == b.witnesses.split);
  CHECK(a.witnesses.exceptional_excluder == b.witnesses.exceptional_excluder);
}

TEST_CASE("descend and surjectivity rules") {
  ImageVerdict good;
  good.status = ImageStatus::contains_sl2;
  ImageVerdict bad;
  bad.status = ImageStatus::inconclusive;

  CHECK(descend_condition_ii(good, 7, 2, 1) == RuleVerdict::holds);
  CHECK(descend_condition_ii(good, 7, 8, 1) == RuleVerdict::inconclusive);  // degree >= p
  CHECK(descend_condition_ii(bad, 101, 1, 1) == RuleVerdict::inconclusive);
  CHECK(descend_condition_ii(good, 7, 1, 4) == RuleVerdict::inconclusive);  // p <= 2 dv
  CHECK_THROWS_AS(descend_condition_ii(good, 7, 0, 1), std::invalid_argument);

  CHECK(condition_v(RuleVerdict::holds, true) == RuleVerdict::holds);
  CHECK(condition_v(RuleVerdict::holds, false) == RuleVerdict::inconclusive);
  CHECK(condition_v(RuleVerdict::inconclusive, true) == RuleVerdict::inconclusive);
}
