#pragma once

#include <json.hpp>

#include "bogocert/bounds.hpp"
#include "bogocert/galois_image.hpp"

namespace bogocert {

using Json = nlohmann::json;  // object keys stay sorted, which keeps emission canonical

enum class Flag { holds, fails, inconclusive };
std::string flag_name(Flag f);

// The extension L/K_E the certificate is issued for. L is presented
// absolutely over Q; containment of K_E is asserted by the caller and checked
// only through degree divisibility. Non-Galois L requires a degree bound for
// a Galois closure over K_E and puts the certificate in bound mode.
struct ExtensionSpec {
  FieldPtr L;
  bool galois = false;
  std::optional<int> galois_closure_degree_bound;
};

struct ExtensionInput {
  ExtensionSpec spec;
  Json canonical_input;
};

// The place of K_E chosen for conditions (i) and (iii) jointly, with the
// evidence a verifier needs to re-run both.
struct PlaceEvidence {
  PolyFp residue_poly;
  int e = 1;
  int f = 1;
  ReducedCurve reduced;
};

struct DvInfo {
  int dv = 1;
  bool exact = true;
  int deg_l_over_ke = 1;
  bool bound_mode = false;
};

struct ConditionReport {
  u64 p = 0;
  Flag i = Flag::fails;
  Flag ii = Flag::inconclusive;
  Flag iii = Flag::fails;
  Flag iv = Flag::inconclusive;
  Flag v = Flag::inconclusive;
  std::optional<PlaceEvidence> place;  // joint (i)+(iii) witness place
  std::optional<ImageVerdict> image;
  std::optional<PrimeSplittingData> ke_splitting;
  std::optional<PrimeSplittingData> l_splitting;
  DvInfo dv;
  u64 ell_budget = 0;
  std::vector<std::string> notes;
};

enum class CheckPolicy {
  full_report,  // evaluate every condition for the report
  search_fast,  // skip Frobenius sampling unless a joint place exists
};

struct Certificate {
  Json curve_input;
  Json l_input;
  std::vector<BigInt> ke_min_poly;
  bool descended = false;
  bool cm_route = false;
  int cm_discriminant = 0;
  u64 p = 0;  // 0 on the CM route
  std::optional<ConditionReport> report;
  HeightBound bound;
  bool neron_tate_flag = false;
  std::vector<std::string> notes;
};

struct IngestResult {
  CurveModel curve;  // over K_E
  Json canonical_input;
  bool descended = false;
  FieldPtr original_field;
};

// Parses and validates the curve document ({"base_field": {...},
// "a_invariants" | "j": ...}); derives the Q(j) model when the input field is
// larger than Q(j) and j is rational. Throws schema_error /
// singular_model_error with the offending field named.
IngestResult ingest_curve(const Json& doc);

// Parses {"min_poly": [...], "galois"?: bool,
// "galois_closure_degree_bound"?: m}. Degree-<=-2 extensions of K_E are
// Galois automatically.
ExtensionInput ingest_extension(const Json& doc, const FieldPtr& ke,
                                std::optional<int> galois_bound_override);

ConditionReport check_conditions(const CurveModel& e, const ExtensionSpec& l, u64 p,
                                 u64 ell_budget, CheckPolicy policy = CheckPolicy::full_report);

struct SearchResult {
  std::vector<Certificate> certificates;
  u64 pmax = 0;
  std::vector<std::string> notes;
};

// Ascending scan of rational primes up to pmax; CM curves short-circuit to a
// single abelian-route certificate. Deterministic: output is byte-identical
// for any worker count.
SearchResult search_supersingular(const IngestResult& curve, const ExtensionInput& l, u64 pmax,
                                  int jobs, u64 ell_budget);

struct CensusEntry {
  u64 p;
  int f;
  PolyFp residue_poly;
};

struct CensusResult {
  u64 x_max = 0;
  std::vector<CensusEntry> entries;  // ascending (p, factor order)
  double fitted_c = 0.0;             // least squares of count ~ C log log x
  std::vector<std::pair<u64, u64>> checkpoints;
  std::vector<double> residuals;
};

// All supersingular places of good reduction with residue degree <= 2 over
// primes in (3, x_max].
CensusResult census(const CurveModel& e, u64 x_max);

Json emit_certificate(const Certificate& cert);
Json report_to_json(const ConditionReport& rep);
Json badset_to_json(const BadSet& s);
Json census_to_json(const CensusResult& c);
Json bound_to_json(const HeightBound& b);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> checks;
  std::vector<std::string> failures;
};

// Re-derives every holds flag and the bound from the embedded evidence,
// without re-running the search.
VerifyReport verify_certificate(const Json& cert);

}  // namespace bogocert
