// Acceptance suite: runs each acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero when any fails.

#include <chrono>
#include <cstdlib>
#include <cstdio>
#include <functional>
#include <iostream>

#include "bogocert/certifier.hpp"
#include "support/bigfixed.hpp"

using namespace bogocert;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& run) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  if (!ok) ++failures;
  std::printf("[%s] criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
              static_cast<long long>(dt.count()), error.empty() ? "" : " error: ", error.c_str());
  std::fflush(stdout);
}

Json curve_11a1_doc() {
  return Json::parse(R"({
    "base_field": {"min_poly": [0, 1]},
    "a_invariants": [[[0,1]], [[-1,1]], [[1,1]], [[-10,1]], [[-20,1]]]
  })");
}

Json curve_elkies_doc() {
  return Json::parse(R"({
    "base_field": {"min_poly": [1, 0, 1]},
    "a_invariants": [[[0,1],[0,1]], [[-1,1],[-2,1]], [[0,1],[0,1]], [[-1,1],[0,1]], [[0,1],[0,1]]]
  })");
}

Json curve_j1728_doc() {
  return Json::parse(R"({
    "base_field": {"min_poly": [0, 1]},
    "a_invariants": [[[0,1]], [[0,1]], [[0,1]], [[1,1]], [[0,1]]]
  })");
}

Json field_q_doc() { return Json::parse(R"({"min_poly": [0, 1]})"); }
Json field_qi_doc() { return Json::parse(R"({"min_poly": [1, 0, 1]})"); }

// oracle trace for a short Weierstrass curve over F_p by direct counting
long oracle_trace(u64 p, u64 a, u64 b) {
  std::vector<std::uint8_t> sq(p, 0);
  for (u64 y = 0; y < p; ++y) ++sq[mulmod(y, y, p)];
  long long count = 1;
  for (u64 x = 0; x < p; ++x)
    count += sq[addmod(mulmod(mulmod(x, x, p), x, p), addmod(mulmod(a, x, p), b, p), p)];
  return static_cast<long>(p) + 1 - static_cast<long>(count);
}

// oracle trace of the conductor-11 curve from its long model
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

bool criterion1() {
  for (u64 p : primes_in_range(5, 97)) {
    for (u64 a = 0; a < p; ++a)
      for (u64 b = 0; b < p; ++b) {
        u64 d = addmod(mulmod(4, mulmod(a, mulmod(a, a, p), p), p), mulmod(27 % p, mulmod(b, b, p), p), p);
        if (d == 0) continue;
        ReducedCurve rc{ResidueField{p, 1, 0}, f2_embed(a), f2_embed(b), true, F2{}};
        bool hasse_zero = hasse_invariant(rc).value == 0;
        bool count_ss = oracle_trace(p, a, b) == 0;
        if (hasse_zero != count_ss) return false;
      }
  }
  return true;
}

bool criterion2() {
  for (u64 p : primes_in_range(5, 97)) {
    int eps;
    switch (p % 12) {
      case 1: eps = 0; break;
      case 5: eps = 1; break;
      case 7: eps = 1; break;
      default: eps = 2; break;
    }
    if (count_supersingular_j(p) != static_cast<int>(p / 12) + eps) return false;
  }
  return true;
}

bool criterion3() {
  IngestResult elkies = ingest_curve(curve_elkies_doc());
  ExtensionInput l = ingest_extension(field_qi_doc(), elkies.curve.field, std::nullopt);
  // all supersingular places below 1000, independent of the later conditions
  if (!census(elkies.curve, 999).entries.empty()) return false;
  // and therefore no certificates either
  return search_supersingular(elkies, l, 999, 2, 500).certificates.empty();
}

bool criterion4() {
  struct Case {
    Json doc;
    std::vector<u64> expected_s;  // empty = no assertion on S contents
  };
  std::vector<Case> cases;
  cases.push_back({curve_elkies_doc(), {2, 17}});
  cases.push_back({Json::parse(R"({"base_field": {"min_poly": [-1,-1,1]}, "j": [[0,1],[1,1]]})"), {5}});
  cases.push_back(
      {Json::parse(R"({"base_field": {"min_poly": [-1,-1,0,1]}, "j": [[0,1],[1,1],[0,1]]})"), {23}});
  cases.push_back(
      {Json::parse(R"({"base_field": {"min_poly": [-1,-1,0,1]}, "j": [[1,2],[0,1],[1,1]]})"), {2, 23}});

  for (const Case& c : cases) {
    IngestResult r = ingest_curve(c.doc);
    BadSet s = bad_set(j_invariant(r.curve));
    if (!c.expected_s.empty() && s.primes != c.expected_s) return false;
    for (u64 p : primes_in_range(5, 2000)) {
      if (s.contains(p)) continue;
      PrimeSplittingData sd = splitting_data(*r.curve.field, p);
      for (const auto& factor : sd.factors) {
        // the claim: supersingular reduction forces f <= 2; equivalently no
        // place with f >= 3 is supersingular
        if (factor.f <= 2) continue;
        PolyFp discbar;
        try {
          discbar = reduce_element(r.curve.disc, p, factor.residue_poly);
        } catch (const nonintegral_error&) {
          continue;  // not a prime of good reduction for this model
        }
        if (discbar.is_zero()) continue;
        PolyFp jbar = reduce_j_at_place(r.curve, p, factor.residue_poly);
        auto proj = project_to_fp2(jbar, factor.residue_poly);
        if (!proj) continue;  // j generates a cubic residue field: not supersingular
        ResidueField k{p, proj->in_prime_field() ? 1 : 2, 0};
        if (k.f == 2) k.quad_c = canonical_quad_field(p).c;
        if (is_supersingular_j(k, *proj)) return false;  // violation of the lemma
      }
    }
  }
  return true;
}

bool criterion5() {
  HeightBound b1 = cm_height_bound(1);
  HeightBound b2 = cm_height_bound(2);
  if (b1.cm_exponent != -14 || b2.cm_exponent != -30) return false;
  using boost::multiprecision::abs;
  using boost::multiprecision::log;
  return abs(b1.value.natural_log - Real(-14) * log(Real(3))) < Real("1e-60") &&
         abs(b2.value.natural_log - Real(-30) * log(Real(3))) < Real("1e-60");
}

bool criterion6() {
  using boost::multiprecision::abs;
  for (auto [p, dv, dk] : {std::tuple<u64, int, int>{7, 1, 1}, {19, 1, 1}}) {
    Real got = supersingular_bound_ln<64>(p, dv, dk);
    Real want(bigfixed::oracle_bound_ln(p, dv, dk, 230).to_string(80));
    if (abs(got - want) > Real("1e-30") * abs(want)) return false;
  }
  std::vector<u64> ps = primes_in_range(5, 97);
  auto valid = [](u64 p, int dv) { return p > std::max<u64>(3, 2 * static_cast<u64>(dv)); };
  for (u64 p : ps)
    for (int dv = 1; dv <= 4; ++dv)
      for (int dk = 1; dk <= 3; ++dk) {
        if (!valid(p, dv)) continue;
        Real here = supersingular_bound_ln<64>(p, dv, dk);
        u64 pn = 0;
        for (u64 v : ps)
          if (v > p) {
            pn = v;
            break;
          }
        if (pn && valid(pn, dv) && !(supersingular_bound_ln<64>(pn, dv, dk) < here)) return false;
        if (dv < 4 && valid(p, dv + 1) && !(supersingular_bound_ln<64>(p, dv + 1, dk) < here))
          return false;
        if (dk < 3 && !(supersingular_bound_ln<64>(p, dv, dk + 1) < here)) return false;
      }
  return true;
}

bool criterion7() {
  IngestResult r = ingest_curve(curve_11a1_doc());
  ImageVerdict v7 = sl2_containment(r.curve, 7, 10000);
  if (v7.status != ImageStatus::contains_sl2 || !v7.witnesses.complete()) return false;
  // re-verifiable: labels reproduce and traces match the direct enumeration oracle
  const WitnessTriple& w = v7.witnesses;
  if (!classify_charpoly(w.nonsplit->trace, w.nonsplit->det, 7).nonsplit) return false;
  if (!classify_charpoly(w.split->trace, w.split->det, 7).split) return false;
  if (!classify_charpoly(w.exceptional_excluder->trace, w.exceptional_excluder->det, 7)
           .exceptional_excluder)
    return false;
  for (const FrobeniusSample& s : {*w.nonsplit, *w.split, *w.exceptional_excluder}) {
    if (s.det != s.ell) return false;
    if (oracle_trace_11a1(s.ell) != s.trace) return false;
  }
  ImageVerdict v5 = sl2_containment(r.curve, 5, 10000);
  return v5.status == ImageStatus::inconclusive && !v5.witnesses.nonsplit.has_value();
}

bool criterion8() {
  IngestResult r = ingest_curve(curve_11a1_doc());
  ExtensionInput l = ingest_extension(field_q_doc(), r.curve.field, std::nullopt);
  SearchResult res = search_supersingular(r, l, 2000, 1, 1000);
  if (res.certificates.empty()) return false;
  for (const Certificate& c : res.certificates) {
    Json doc = emit_certificate(c);
    VerifyReport vr = verify_certificate(doc);
    if (!vr.ok) return false;
    for (const char* flag : {"i", "ii", "iii", "iv", "v"})
      if (doc["conditions"][flag]["status"] != "holds") return false;
    // the emitted bound equals the bound evaluator on its recorded inputs
    HeightBound recomputed = supersingular_height_bound(
        {doc["p"].get<u64>(), doc["dv"]["value"].get<int>(), r.curve.field->degree()});
    if (doc["bound"]["ln"].get<std::string>() != recomputed.value.ln_string(50)) return false;
  }
  return true;
}

bool criterion9() {
  IngestResult r = ingest_curve(curve_j1728_doc());
  CensusResult c = census(r.curve, 10000);
  u64 total = primes_in_range(5, 10000).size();
  double density = static_cast<double>(c.entries.size()) / static_cast<double>(total);
  return density > 0.45 && density < 0.55;
}

bool criterion10() {
  IngestResult r = ingest_curve(curve_11a1_doc());
  ExtensionInput l = ingest_extension(field_q_doc(), r.curve.field, std::nullopt);
  SearchResult a = search_supersingular(r, l, 2000, 1, 1000);
  SearchResult b = search_supersingular(r, l, 2000, 8, 1000);
  if (a.certificates.size() != b.certificates.size()) return false;
  std::string da, db;
  for (const Certificate& c : a.certificates) da += emit_certificate(c).dump();
  for (const Certificate& c : b.certificates) db += emit_certificate(c).dump();
  return da == db;
}

}  // namespace

bool criterion3_full_range() {
  IngestResult elkies = ingest_curve(curve_elkies_doc());
  return census(elkies.curve, 73999).entries.empty();
}

int main() {
  criterion(1, "hasse invariant vanishes iff the point count is p+1, for all curves with 3 < p <= 97",
            criterion1);
  criterion(2, "supersingular j-value count law floor(p/12) + eps for 3 < p <= 97", criterion2);
  criterion(3, "the Q(i) curve i y^2 = x^3 + (i-2) x^2 + x has no supersingular prime below 1000",
            criterion3);
  criterion(4, "supersingular places outside the bad set S have residue degree <= 2 (p <= 2000)",
            criterion4);
  criterion(5, "CM bound reproduces 3^-14 and 3^-30 exactly", criterion5);
  criterion(6, "supersingular bound matches a 230-digit oracle to 1e-30 and is monotone on the grid",
            criterion6);
  criterion(7, "SL2 witnesses for conductor 11: provable at p=7, inconclusive at p=5 (budget 10^4)",
            criterion7);
  criterion(8, "end-to-end certificates below 2000 verify with all five conditions holding",
            criterion8);
  criterion(9, "census density of supersingular primes for y^2 = x^3 + x is 0.5 +- 0.05 below 10^4",
            criterion9);
  criterion(10, "search output is byte-identical for 1 and 8 worker threads", criterion10);
  if (std::getenv("BOGOCERT_SLOW"))
    criterion(3, "slow variant: no supersingular place of the Q(i) curve below 74000",
              criterion3_full_range);
  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all acceptance criteria passed\n";
  return 0;
}
