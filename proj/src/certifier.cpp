#include "bogocert/certifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace bogocert {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr u64 kMaxPrimeScan = 100000;
constexpr u64 kMaxCensus = 100000;

const BigInt kJsonIntLimit = BigInt(1) << 53;

Json json_int(const BigInt& v) {
  if (v < kJsonIntLimit && v > -kJsonIntLimit) return Json(v.convert_to<long long>());
  return Json(v.convert_to<std::string>());
}

BigInt parse_bigint(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw schema_error(where + ": malformed integer string");
    }
  }
  throw schema_error(where + ": expected an integer or a decimal string");
}

std::vector<BigInt> parse_int_poly(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw schema_error(where + ": expected a coefficient array");
  std::vector<BigInt> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(parse_bigint(j[i], where));
  return out;
}

Json int_poly_to_json(const std::vector<BigInt>& poly) {
  Json out = Json::array();
  for (const BigInt& c : poly) out.push_back(json_int(c));
  return out;
}

Json polyfp_to_json(const PolyFp& f) {
  Json out = Json::array();
  for (u64 c : f.c) out.push_back(c);
  return out;
}

PolyFp polyfp_from_json(const Json& j, u64 p, const std::string& where) {
  if (!j.is_array()) throw schema_error(where + ": expected a coefficient array");
  std::vector<u64> c;
  for (const auto& v : j) {
    if (!v.is_number_unsigned() && !v.is_number_integer())
      throw schema_error(where + ": expected residue coefficients");
    c.push_back(v.get<u64>());
  }
  return PolyFp(p, std::move(c));
}

Json f2_to_json(F2 v) { return Json::array({v.a, v.b}); }

F2 f2_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw schema_error(where + ": expected [a, b]");
  return F2{j[0].get<u64>(), j[1].get<u64>()};
}

Json coords_to_json(const FieldElement& e) {
  Json out = Json::array();
  for (const Rational& c : e.coords)
    out.push_back(Json::array({json_int(numerator(c)), json_int(denominator(c))}));
  return out;
}

FieldElement coords_from_json(const Json& j, const FieldPtr& k, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != k->degree())
    throw schema_error(where + ": expected " + std::to_string(k->degree()) +
                       " coordinate pairs [num, den]");
  std::vector<Rational> coords;
  for (size_t i = 0; i < j.size(); ++i) {
    const Json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2)
      throw schema_error(where + ": coordinate " + std::to_string(i) + " must be [num, den]");
    BigInt num = parse_bigint(pair[0], where);
    BigInt den = parse_bigint(pair[1], where);
    if (den == 0) throw schema_error(where + ": zero denominator");
    coords.emplace_back(num, den);
  }
  return make_element(k, std::move(coords));
}

bool generates_field(const FieldElement& j) {
  const FieldPtr& k = j.owner;
  const int n = k->degree();
  if (n == 1) return true;
  BigInt n_scale = 1;
  for (const Rational& c : j.coords) n_scale = boost::multiprecision::lcm(n_scale, denominator(c));
  std::vector<BigInt> nj(n, 0);
  for (int i = 0; i < n; ++i)
    nj[i] = numerator(j.coords[i]) * (n_scale / denominator(j.coords[i]));
  std::vector<std::vector<BigInt>> rows;
  std::vector<BigInt> power(n, 0);
  power[0] = 1;
  for (int r = 0; r < n; ++r) {
    rows.push_back(power);
    if (r + 1 < n) {
      std::vector<BigInt> prod(2 * n - 1, BigInt(0));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) prod[a + b] += power[a] * nj[b];
      for (int d = 2 * n - 2; d >= n; --d) {
        if (prod[d] == 0) continue;
        BigInt lead = prod[d];
        prod[d] = 0;
        for (int i = 0; i < n; ++i) prod[d - n + i] -= lead * k->min_poly[i];
      }
      prod.resize(n);
      power = std::move(prod);
    }
  }
  for (const BigInt& d : smith_diagonal(std::move(rows)))
    if (d == 0) return false;
  return true;
}

u64 parse_prime(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !j.is_number_integer()) throw schema_error(where + ": expected a prime");
  long long v = j.get<long long>();
  if (v < 2 || !is_prime_u64(static_cast<u64>(v))) throw schema_error(where + ": not a prime");
  return static_cast<u64>(v);
}

}  // namespace

std::string flag_name(Flag f) {
  switch (f) {
    case Flag::holds: return "holds";
    case Flag::fails: return "fails";
    case Flag::inconclusive: return "inconclusive";
  }
  throw std::logic_error("flag_name");
}

namespace {

Flag flag_from_name(const std::string& s, const std::string& where) {
  if (s == "holds") return Flag::holds;
  if (s == "fails") return Flag::fails;
  if (s == "inconclusive") return Flag::inconclusive;
  throw schema_error(where + ": unknown flag value " + s);
}

}  // namespace

IngestResult ingest_curve(const Json& doc) {
  if (!doc.is_object()) throw schema_error("curve document must be an object");
  if (!doc.contains("base_field") || !doc["base_field"].is_object() ||
      !doc["base_field"].contains("min_poly"))
    throw schema_error("curve document: missing base_field.min_poly");
  FieldPtr k0 = NumberFieldOrder::make(parse_int_poly(doc["base_field"]["min_poly"], "base_field.min_poly"));

  CurveModel model = [&]() {
    if (doc.contains("a_invariants")) {
      const Json& a = doc["a_invariants"];
      if (!a.is_array() || a.size() != 5)
        throw schema_error("a_invariants: expected [a1, a2, a3, a4, a6]");
      return make_curve(k0, coords_from_json(a[0], k0, "a1"), coords_from_json(a[1], k0, "a2"),
                        coords_from_json(a[2], k0, "a3"), coords_from_json(a[3], k0, "a4"),
                        coords_from_json(a[4], k0, "a6"));
    }
    if (doc.contains("j")) return curve_from_j(coords_from_json(doc["j"], k0, "j"));
    throw schema_error("curve document: need a_invariants or j");
  }();

  Json echo;
  echo["base_field"]["min_poly"] = int_poly_to_json(k0->min_poly);
  if (doc.contains("a_invariants"))
    echo["a_invariants"] = Json::array({coords_to_json(model.a1), coords_to_json(model.a2),
                                        coords_to_json(model.a3), coords_to_json(model.a4),
                                        coords_to_json(model.a6)});
  else
    echo["j"] = coords_to_json(model.j);

  IngestResult out{std::move(model), std::move(echo), false, k0};
  if (k0->degree() > 1 && out.curve.j.is_rational_value()) {
    // the curve lives over a field strictly larger than Q(j); apply the
    // criterion to the canonical model over K_E = Q
    FieldPtr q = NumberFieldOrder::rationals();
    out.curve = curve_from_j(element_from_rational(q, out.curve.j.rational_value()));
    out.descended = true;
  } else if (k0->degree() > 1 && !generates_field(out.curve.j)) {
    throw schema_error(
        "base_field is strictly larger than Q(j_E) with irrational j; supply a model over Q(j_E)");
  }
  return out;
}

ExtensionInput ingest_extension(const Json& doc, const FieldPtr& ke,
                                std::optional<int> galois_bound_override) {
  if (!doc.is_object() || !doc.contains("min_poly"))
    throw schema_error("extension document: missing min_poly");
  ExtensionSpec spec;
  spec.L = NumberFieldOrder::make(parse_int_poly(doc["min_poly"], "L.min_poly"));
  int nk = ke->degree(), nl = spec.L->degree();
  if (nl % nk != 0)
    throw schema_error("degree of L is not a multiple of [K_E:Q]; L cannot contain K_E");
  int ratio = nl / nk;
  if (doc.contains("galois")) {
    if (!doc["galois"].is_boolean()) throw schema_error("L.galois must be a boolean");
    spec.galois = doc["galois"].get<bool>();
  }
  if (ratio <= 2) spec.galois = true;  // degree <= 2 extensions are Galois
  if (galois_bound_override) spec.galois_closure_degree_bound = *galois_bound_override;
  else if (doc.contains("galois_closure_degree_bound"))
    spec.galois_closure_degree_bound = doc["galois_closure_degree_bound"].get<int>();
  if (!spec.galois) {
    if (!spec.galois_closure_degree_bound)
      throw schema_error(
          "L/K_E is not asserted Galois: a galois_closure_degree_bound is required (bound mode)");
    if (*spec.galois_closure_degree_bound < ratio)
      throw schema_error("galois_closure_degree_bound is smaller than [L:K_E]");
  }

  ExtensionInput out;
  out.spec = std::move(spec);
  out.canonical_input["min_poly"] = int_poly_to_json(out.spec.L->min_poly);
  out.canonical_input["galois"] = out.spec.galois;
  if (out.spec.galois_closure_degree_bound)
    out.canonical_input["galois_closure_degree_bound"] = *out.spec.galois_closure_degree_bound;
  return out;
}

namespace {

DvInfo compute_dv(const FieldPtr& ke, const ExtensionSpec& l, u64 p) {
  DvInfo out;
  int ratio = l.L->degree() / ke->degree();
  if (!l.galois) {
    if (!l.galois_closure_degree_bound)
      throw schema_error("non-Galois L requires a galois_closure_degree_bound");
    out.bound_mode = true;
    out.deg_l_over_ke = *l.galois_closure_degree_bound;
    out.dv = *l.galois_closure_degree_bound;
    out.exact = false;
    return out;
  }
  out.deg_l_over_ke = ratio;
  if (ratio == 1) {
    out.dv = 1;
    out.exact = true;
    return out;
  }
  LocalDegree ld = max_local_degree(*l.L, p);
  if (ke->degree() == 1) {
    out.dv = ld.dv;
    out.exact = ld.exact;
  } else {
    // [L_w:K_v] divides [L_w:Q_p]; both the absolute local degree and the
    // relative extension degree are valid upper bounds
    out.dv = std::min(ld.dv, ratio);
    out.exact = false;
  }
  return out;
}

bool j_value_admissible(u64 p, F2 j) {
  return !(j == f2_embed(0)) && !(j == f2_embed(1728 % p));
}

}  // namespace

ConditionReport check_conditions(const CurveModel& e, const ExtensionSpec& l, u64 p,
                                 u64 ell_budget, CheckPolicy policy) {
  if (p <= 3) throw std::invalid_argument("check_conditions: p must exceed 3");
  if (!is_prime_u64(p)) throw std::invalid_argument("check_conditions: p must be prime");
  ConditionReport rep;
  rep.p = p;
  rep.ell_budget = ell_budget;
  rep.dv = compute_dv(e.field, l, p);

  try {
    rep.ke_splitting = splitting_data(*e.field, p);
  } catch (const unsupported_prime_error&) {
    rep.notes.push_back(
        "p lies in the conservative bad set (Z[theta] not certified maximal at p); "
        "conditions (i) and (iii) fail closed and the rest are not evaluated");
    rep.i = Flag::fails;
    rep.iii = Flag::fails;
    return rep;
  }

  bool ss_place_anywhere = false;
  bool iii_candidate = false;
  for (const auto& factor : rep.ke_splitting->factors) {
    if (factor.e == 1 && factor.f <= 2) iii_candidate = true;
    if (factor.f <= 2) {
      try {
        ReducedCurve rc = reduce_at_place(e, p, factor.residue_poly);
        if (!rc.good_reduction) {
          bool j_integral = true;
          try {
            reduce_j_at_place(e, p, factor.residue_poly);
          } catch (const nonintegral_error&) {
            j_integral = false;
          }
          rep.notes.push_back(j_integral
                                  ? "twist-candidate: j is integral but the supplied model has bad "
                                    "reduction at a place; condition (i) not certified there"
                                  : "potentially multiplicative reduction at a place (j not "
                                    "integral); condition (i) fails there");
          continue;
        }
        bool ss = is_supersingular_j(rc.k, rc.j);
        if (!ss) continue;
        if (!j_value_admissible(p, rc.j)) {
          rep.notes.push_back(
              "supersingular place with j = 0 or 1728 mod v; excluded by condition (i)");
          continue;
        }
        ss_place_anywhere = true;
        if (factor.e == 1 && !rep.place) {
          rep.place = PlaceEvidence{factor.residue_poly, factor.e, factor.f, rc};
        }
      } catch (const nonintegral_error&) {
        rep.notes.push_back(
            "model coefficients are not integral at a place in this presentation; skipped");
      }
    } else {
      // residue degree >= 3: supersingular j must lie in F_{p^2}, so the place
      // can witness (i) only through the subfield test; it can never satisfy (iii)
      try {
        PolyFp discbar = reduce_element(e.disc, p, factor.residue_poly);
        if (discbar.is_zero()) continue;
        PolyFp jbar = reduce_j_at_place(e, p, factor.residue_poly);
        auto proj = project_to_fp2(jbar, factor.residue_poly);
        if (!proj) continue;
        ResidueField k{p, proj->in_prime_field() ? 1 : 2, 0};
        if (k.f == 2) k.quad_c = canonical_quad_field(p).c;
        if (is_supersingular_j(k, *proj) && j_value_admissible(p, *proj)) {
          ss_place_anywhere = true;
          rep.notes.push_back(
              "condition (i) holds at a place of residue degree >= 3; unusable for (iii)");
        }
      } catch (const nonintegral_error&) {
        rep.notes.push_back(
            "model is not integral at a high-degree place in this presentation; skipped");
      }
    }
  }
  rep.i = ss_place_anywhere ? Flag::holds : Flag::fails;
  rep.iii = iii_candidate ? Flag::holds : Flag::fails;

  // (ii): cheap gates first, then Frobenius sampling
  bool gate_ok = p > std::max<u64>(3, 2 * static_cast<u64>(rep.dv.dv)) &&
                 static_cast<u64>(rep.dv.deg_l_over_ke) < p;
  if (!gate_ok) {
    rep.ii = Flag::inconclusive;
    rep.notes.push_back("condition (ii) gate p > max(3, 2 dv) and [L:K_E] < p not met");
  } else if (policy == CheckPolicy::search_fast && !rep.place) {
    rep.ii = Flag::inconclusive;
    rep.notes.push_back("condition (ii) not sampled: no joint place for (i) and (iii)");
  } else {
    rep.image = sl2_containment(e, p, ell_budget);
    RuleVerdict r = descend_condition_ii(*rep.image, p, rep.dv.deg_l_over_ke, rep.dv.dv);
    rep.ii = r == RuleVerdict::holds ? Flag::holds : Flag::inconclusive;
  }

  // (iv): v unramified in L, via the splitting of p in L
  if (rep.dv.bound_mode) {
    rep.iv = Flag::inconclusive;
    rep.notes.push_back("bound mode: ramification in the Galois closure is not verifiable");
  } else {
    try {
      rep.l_splitting = splitting_data(*l.L, p);
      bool all_unramified = true;
      for (const auto& f : rep.l_splitting->factors)
        if (f.e != 1) all_unramified = false;
      rep.iv = all_unramified ? Flag::holds : Flag::fails;
    } catch (const unsupported_prime_error&) {
      rep.iv = Flag::inconclusive;
      rep.notes.push_back("splitting of p in L is not certifiable (Dedekind fails); (iv) unknown");
    }
  }

  // (v): surjectivity = SL2 containment + surjective determinant
  RuleVerdict r2 = rep.ii == Flag::holds ? RuleVerdict::holds : RuleVerdict::inconclusive;
  rep.v = condition_v(r2, rep.iv == Flag::holds) == RuleVerdict::holds ? Flag::holds
                                                                       : Flag::inconclusive;
  return rep;
}

namespace {

Certificate make_ss_certificate(const IngestResult& curve, const ExtensionInput& l,
                                ConditionReport rep) {
  Certificate c;
  c.curve_input = curve.canonical_input;
  c.l_input = l.canonical_input;
  c.ke_min_poly = curve.curve.field->min_poly;
  c.descended = curve.descended;
  c.p = rep.p;
  c.bound = supersingular_height_bound(
      {rep.p, rep.dv.dv, curve.curve.field->degree()});
  c.neron_tate_flag = rep.iv == Flag::holds && rep.v == Flag::holds;
  c.report = std::move(rep);
  return c;
}

}  // namespace

SearchResult search_supersingular(const IngestResult& curve, const ExtensionInput& l, u64 pmax,
                                  int jobs, u64 ell_budget) {
  if (pmax > kMaxPrimeScan)
    throw budget_error("search: pmax exceeds the prime-scan budget of 100000");
  if (ell_budget > kMaxPrimeScan)
    throw budget_error("search: ell budget exceeds 10^5");
  SearchResult out;
  out.pmax = pmax;

  CMStatus cm = cm_lookup(curve.curve.j);
  if (cm.kind == CMKind::cm) {
    Certificate c;
    c.curve_input = curve.canonical_input;
    c.l_input = l.canonical_input;
    c.ke_min_poly = curve.curve.field->min_poly;
    c.descended = curve.descended;
    c.cm_route = true;
    c.cm_discriminant = cm.discriminant;
    c.bound = cm_height_bound(l.spec.L->degree());
    c.notes.push_back(
        "complex multiplication route: the torsion field lies inside the abelian closure of "
        "L(sqrt(D)), so the abelian height bound applies with d = [L:Q]");
    out.certificates.push_back(std::move(c));
    return out;
  }
  if (cm.kind == CMKind::unknown)
    out.notes.push_back(
        "irrational j: CM status unknown; proceeding on the non-CM path (witness search may "
        "stay inconclusive for CM curves)");

  const int deg_gate = l.spec.galois ? l.spec.L->degree() / curve.curve.field->degree()
                                     : *l.spec.galois_closure_degree_bound;
  const int dv_floor = l.spec.galois ? 1 : *l.spec.galois_closure_degree_bound;
  std::vector<u64> primes;
  for (u64 p : primes_in_range(5, pmax)) {
    if (p <= std::max<u64>(3, 2 * static_cast<u64>(dv_floor))) continue;
    if (p <= static_cast<u64>(deg_gate)) continue;
    primes.push_back(p);
  }

  std::vector<std::optional<Certificate>> results(primes.size());
  std::atomic<size_t> next{0};
  std::exception_ptr worker_error;
  std::mutex error_mutex;
  auto worker = [&]() {
    try {
      while (true) {
        size_t idx = next.fetch_add(1);
        if (idx >= primes.size()) break;
        ConditionReport rep =
            check_conditions(curve.curve, l.spec, primes[idx], ell_budget, CheckPolicy::search_fast);
        if (rep.place && rep.ii == Flag::holds)
          results[idx] = make_ss_certificate(curve, l, std::move(rep));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!worker_error) worker_error = std::current_exception();
    }
  };
  int nthreads = std::max(1, jobs);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (worker_error) std::rethrow_exception(worker_error);
  for (auto& r : results)
    if (r) out.certificates.push_back(std::move(*r));
  return out;
}

CensusResult census(const CurveModel& e, u64 x_max) {
  if (x_max > kMaxCensus) throw budget_error("census: x_max exceeds the budget of 100000");
  CensusResult out;
  out.x_max = x_max;
  for (u64 p : primes_in_range(5, x_max)) {
    PrimeSplittingData sd;
    try {
      sd = splitting_data(*e.field, p);
    } catch (const unsupported_prime_error&) {
      continue;  // finitely many uncertifiable primes; not census material
    }
    for (const auto& factor : sd.factors) {
      if (factor.f > 2) continue;
      try {
        ReducedCurve rc = reduce_at_place(e, p, factor.residue_poly);
        if (!rc.good_reduction) continue;
        bool ss = factor.f == 1 ? trace_of_frobenius(rc) == 0 : is_supersingular_j(rc.k, rc.j);
        if (ss) out.entries.push_back(CensusEntry{p, factor.f, factor.residue_poly});
      } catch (const nonintegral_error&) {
        continue;
      }
    }
  }
  // least squares of count(x) ~ C log log x at decade checkpoints
  double num = 0, den = 0;
  std::vector<std::pair<double, double>> points;
  for (u64 x = 100; x <= x_max; x *= 10) {
    u64 count = 0;
    for (const auto& entry : out.entries)
      if (entry.p <= x) ++count;
    out.checkpoints.emplace_back(x, count);
    double g = std::log(std::log(static_cast<double>(x)));
    points.emplace_back(g, static_cast<double>(count));
    num += g * static_cast<double>(count);
    den += g * g;
  }
  out.fitted_c = den > 0 ? num / den : 0.0;
  for (const auto& [g, y] : points) out.residuals.push_back(y - out.fitted_c * g);
  return out;
}

// ---- serialization ----

Json bound_to_json(const HeightBound& b) {
  Json out;
  out["formula"] = formula_wire_name(b.formula);
  if (b.formula == Formula::supersingular) {
    out["inputs"]["p"] = b.inputs.p;
    out["inputs"]["dv"] = b.inputs.dv;
    out["inputs"]["deg_k"] = b.inputs.deg_k;
    out["log_convention"] = "natural";
  } else {
    out["inputs"]["d"] = b.cm_degree;
    out["exponent_of_3"] = json_int(b.cm_exponent);
  }
  out["ln"] = b.value.ln_string(50);
  out["log10"] = b.value.log10_string(50);
  return out;
}

namespace {

Json splitting_to_json(const PrimeSplittingData& sd) {
  Json out = Json::array();
  for (const auto& f : sd.factors)
    out.push_back(Json{{"e", f.e}, {"f", f.f}, {"residue_poly", polyfp_to_json(f.residue_poly)}});
  return out;
}

Json witness_to_json(const FrobeniusSample& s, const std::string& label) {
  return Json{{"ell", s.ell}, {"trace", s.trace}, {"det", s.det}, {"label", label}};
}

Json conditions_to_json(const ConditionReport& rep) {
  Json c;
  c["i"]["status"] = flag_name(rep.i);
  if (rep.place) {
    c["i"]["place"] = {{"residue_poly", polyfp_to_json(rep.place->residue_poly)},
                       {"e", rep.place->e},
                       {"f", rep.place->f}};
    const ReducedCurve& rc = rep.place->reduced;
    c["i"]["reduced_curve"] = {{"a", f2_to_json(rc.a)},
                               {"b", f2_to_json(rc.b)},
                               {"field", {{"p", rc.k.p}, {"f", rc.k.f}, {"quad_c", rc.k.quad_c}}}};
    c["i"]["j_reduced"] = f2_to_json(rc.j);
    c["i"]["test"] = "legendre-resultant";
  }
  c["ii"]["status"] = flag_name(rep.ii);
  if (rep.image) {
    c["ii"]["samples_used"] = rep.image->samples_used;
    c["ii"]["base_field_degree"] = rep.image->base_field_degree;
    Json w = Json::object();
    if (rep.image->witnesses.nonsplit)
      w["nonsplit"] = witness_to_json(*rep.image->witnesses.nonsplit, "nonsplit");
    if (rep.image->witnesses.split)
      w["split"] = witness_to_json(*rep.image->witnesses.split, "split");
    if (rep.image->witnesses.exceptional_excluder)
      w["exceptional_excluder"] =
          witness_to_json(*rep.image->witnesses.exceptional_excluder, "exceptional_excluder");
    c["ii"]["witnesses"] = std::move(w);
  }
  c["iii"]["status"] = flag_name(rep.iii);
  if (rep.ke_splitting) c["iii"]["splitting"] = splitting_to_json(*rep.ke_splitting);
  c["iv"]["status"] = flag_name(rep.iv);
  if (rep.l_splitting) c["iv"]["splitting_l"] = splitting_to_json(*rep.l_splitting);
  c["v"]["status"] = flag_name(rep.v);
  return c;
}

}  // namespace

Json report_to_json(const ConditionReport& rep) {
  Json out;
  out["p"] = rep.p;
  out["ell_budget"] = rep.ell_budget;
  out["dv"] = {{"value", rep.dv.dv},
               {"mode", rep.dv.exact ? "exact" : "upper_bound"},
               {"deg_l_over_ke", rep.dv.deg_l_over_ke},
               {"bound_mode", rep.dv.bound_mode}};
  out["conditions"] = conditions_to_json(rep);
  out["certificate_eligible"] = rep.place.has_value() && rep.ii == Flag::holds;
  out["notes"] = rep.notes;
  return out;
}

Json badset_to_json(const BadSet& s) {
  Json out;
  out["generating_integer"] = json_int(s.generating_integer);
  out["primes"] = s.primes;
  return out;
}

Json census_to_json(const CensusResult& c) {
  Json out;
  out["x_max"] = c.x_max;
  Json entries = Json::array();
  for (const auto& e : c.entries)
    entries.push_back(
        Json{{"p", e.p}, {"f", e.f}, {"residue_poly", polyfp_to_json(e.residue_poly)}});
  out["supersingular_places"] = std::move(entries);
  out["count"] = c.entries.size();
  out["fitted_c"] = c.fitted_c;
  Json cps = Json::array();
  for (auto [x, y] : c.checkpoints) cps.push_back(Json::array({x, y}));
  out["checkpoints"] = std::move(cps);
  out["residuals"] = c.residuals;
  return out;
}

Json emit_certificate(const Certificate& cert) {
  Json out;
  out["schema"] = "bogocert-certificate-v1";
  out["curve"] = cert.curve_input;
  out["field_l"] = cert.l_input;
  out["k_e"] = {{"min_poly", int_poly_to_json(cert.ke_min_poly)}, {"descended", cert.descended}};
  out["bound"] = bound_to_json(cert.bound);
  out["notes"] = cert.notes;
  if (cert.cm_route) {
    out["route"] = "cm";
    out["cm"] = {{"discriminant", cert.cm_discriminant}};
    return out;
  }
  out["route"] = "supersingular";
  out["p"] = cert.p;
  out["ell_budget"] = cert.report->ell_budget;
  out["dv"] = {{"value", cert.report->dv.dv},
               {"mode", cert.report->dv.exact ? "exact" : "upper_bound"},
               {"deg_l_over_ke", cert.report->dv.deg_l_over_ke},
               {"bound_mode", cert.report->dv.bound_mode}};
  out["conditions"] = conditions_to_json(*cert.report);
  out["neron_tate"] = cert.neron_tate_flag;
  return out;
}

// ---- verification ----

namespace {

struct Verifier {
  VerifyReport rep;

  void check(bool ok, const std::string& what) {
    if (ok) {
      rep.checks.push_back(what);
    } else {
      rep.ok = false;
      rep.failures.push_back(what);
    }
  }
};

Real parse_real(const std::string& s) { return Real(s); }

bool close_relative(const Real& a, const Real& b, const char* tol) {
  using boost::multiprecision::abs;
  if (a == b) return true;
  return abs(a - b) <= Real(tol) * (abs(a) + abs(b));
}

}  // namespace

VerifyReport verify_certificate(const Json& cert) {
  Verifier v;
  try {
    if (!cert.is_object() || cert.value("schema", "") != "bogocert-certificate-v1")
      throw verification_error("not a bogocert certificate document");

    IngestResult curve = ingest_curve(cert.at("curve"));
    ExtensionInput l = ingest_extension(cert.at("field_l"), curve.curve.field, std::nullopt);
    v.check(int_poly_to_json(curve.curve.field->min_poly) == cert.at("k_e").at("min_poly"),
            "K_E presentation matches the re-derived Q(j_E)");
    v.check(curve.descended == cert.at("k_e").at("descended").get<bool>(),
            "model-descent flag matches");

    const std::string route = cert.at("route").get<std::string>();
    if (route == "cm") {
      CMStatus cm = cm_lookup(curve.curve.j);
      v.check(cm.kind == CMKind::cm, "curve has class-number-one CM");
      v.check(cm.discriminant == cert.at("cm").at("discriminant").get<int>(),
              "CM discriminant matches");
      int d = l.spec.L->degree();
      HeightBound want = cm_height_bound(d);
      v.check(cert.at("bound").at("formula") == "prop22", "bound formula is the CM route");
      v.check(parse_bigint(cert.at("bound").at("exponent_of_3"), "exponent") == want.cm_exponent,
              "exact exponent of 3 matches -(4d^2+4d+6)");
      v.check(close_relative(parse_real(cert.at("bound").at("ln").get<std::string>()),
                             want.value.natural_log, "1e-40"),
              "CM bound value matches recomputation");
      return v.rep;
    }
    if (route != "supersingular") throw verification_error("unknown certificate route");

    u64 p = parse_prime(cert.at("p"), "p");
    v.check(p > 3, "p exceeds 3");

    // dv and bound-mode bookkeeping
    DvInfo dv = compute_dv(curve.curve.field, l.spec, p);
    const Json& jdv = cert.at("dv");
    v.check(dv.dv == jdv.at("value").get<int>(), "d_v(L) value matches recomputation");
    v.check((dv.exact ? "exact" : "upper_bound") == jdv.at("mode").get<std::string>(),
            "d_v(L) mode matches");
    v.check(dv.deg_l_over_ke == jdv.at("deg_l_over_ke").get<int>(), "[L:K_E] matches");

    const Json& cond = cert.at("conditions");

    // (iii): splitting of p in K_E
    PrimeSplittingData sd = splitting_data(*curve.curve.field, p);
    v.check(splitting_to_json(sd) == cond.at("iii").at("splitting"),
            "splitting of p in K_E reproduces the recorded factors");
    v.check(cond.at("iii").at("status") == "holds", "condition (iii) recorded as holds");

    // (i): the chosen place
    const Json& ji = cond.at("i");
    v.check(ji.at("status") == "holds", "condition (i) recorded as holds");
    const Json& place = ji.at("place");
    PolyFp g = polyfp_from_json(place.at("residue_poly"), p, "place.residue_poly");
    bool in_splitting = false;
    for (const auto& f : sd.factors)
      if (f.residue_poly == g && f.e == place.at("e").get<int>() && f.f == place.at("f").get<int>())
        in_splitting = true;
    v.check(in_splitting, "chosen place appears in the splitting of p");
    v.check(place.at("e").get<int>() == 1 && place.at("f").get<int>() <= 2,
            "chosen place satisfies e = 1 and f <= 2");
    ReducedCurve rc = reduce_at_place(curve.curve, p, g);
    v.check(rc.good_reduction, "model has good reduction at the chosen place");
    v.check(f2_to_json(rc.a) == ji.at("reduced_curve").at("a") &&
                f2_to_json(rc.b) == ji.at("reduced_curve").at("b"),
            "reduced short Weierstrass model matches");
    F2 jred = f2_from_json(ji.at("j_reduced"), "j_reduced");
    v.check(rc.j == jred, "reduced j matches");
    v.check(is_supersingular_j(rc.k, rc.j), "reduced j is supersingular");
    v.check(!(rc.j == f2_embed(0)) && !(rc.j == f2_embed(1728 % p)),
            "reduced j avoids 0 and 1728");

    // (ii): witnesses re-verify
    const Json& jii = cond.at("ii");
    v.check(jii.at("status") == "holds", "condition (ii) recorded as holds");
    const Json& w = jii.at("witnesses");
    struct Expect {
      const char* key;
      bool CharpolyLabels::*member;
    };
    for (auto [key, member] : {Expect{"nonsplit", &CharpolyLabels::nonsplit},
                               Expect{"split", &CharpolyLabels::split},
                               Expect{"exceptional_excluder", &CharpolyLabels::exceptional_excluder}}) {
      if (!w.contains(key)) {
        v.check(false, std::string("witness ") + key + " present");
        continue;
      }
      u64 ell = parse_prime(w.at(key).at("ell"), "witness ell");
      long trace = w.at(key).at("trace").get<long>();
      u64 det = w.at(key).at("det").get<u64>();
      v.check(ell != p, std::string(key) + ": ell differs from p");
      v.check(det == ell, std::string(key) + ": determinant equals ell");
      v.check(static_cast<long long>(trace) * trace <= 4 * static_cast<long long>(ell),
              std::string(key) + ": Hasse bound");
      CharpolyLabels labels = classify_charpoly(trace, det, p);
      v.check(labels.*member, std::string(key) + ": classifier reproduces the label");
      // re-derive the trace from the curve at some degree-1 place of good reduction
      bool trace_matches = false;
      try {
        PrimeSplittingData sl = splitting_data(*curve.curve.field, ell);
        for (const auto& f : sl.factors) {
          if (f.e != 1 || f.f != 1) continue;
          try {
            ReducedCurve rcw = reduce_at_place(curve.curve, ell, f.residue_poly);
            if (rcw.good_reduction && trace_of_frobenius(rcw) == trace) trace_matches = true;
          } catch (const nonintegral_error&) {
          }
        }
      } catch (const unsupported_prime_error&) {
      }
      v.check(trace_matches, std::string(key) + ": trace re-derived by point count");
    }
    v.check(descend_condition_ii(
                ImageVerdict{ImageStatus::contains_sl2, {}, 0, 0, curve.curve.field->degree()}, p,
                dv.deg_l_over_ke, dv.dv) == RuleVerdict::holds,
            "descent gate p > max(3, 2dv) and [L:K_E] < p re-verified");

    // (iv) and (v)
    const std::string iv_status = cond.at("iv").at("status").get<std::string>();
    Flag iv_flag = flag_from_name(iv_status, "conditions.iv");
    if (dv.bound_mode) {
      v.check(iv_flag == Flag::inconclusive, "(iv) inconclusive in bound mode");
    } else {
      try {
        PrimeSplittingData sl = splitting_data(*l.spec.L, p);
        bool all_unramified = true;
        for (const auto& f : sl.factors)
          if (f.e != 1) all_unramified = false;
        v.check((all_unramified ? Flag::holds : Flag::fails) == iv_flag,
                "(iv) matches the recomputed splitting of p in L");
        if (cond.at("iv").contains("splitting_l"))
          v.check(splitting_to_json(sl) == cond.at("iv").at("splitting_l"),
                  "recorded splitting of p in L reproduces");
      } catch (const unsupported_prime_error&) {
        v.check(iv_flag == Flag::inconclusive, "(iv) inconclusive when Dedekind fails for L");
      }
    }
    Flag v_flag = flag_from_name(cond.at("v").at("status").get<std::string>(), "conditions.v");
    v.check((iv_flag == Flag::holds ? Flag::holds : Flag::inconclusive) == v_flag,
            "(v) follows from (ii) and (iv)");
    bool neron = cert.at("neron_tate").get<bool>();
    v.check(neron == (iv_flag == Flag::holds && v_flag == Flag::holds),
            "Neron-Tate flag consistent with (iv) and (v)");

    // bound
    const Json& jb = cert.at("bound");
    v.check(jb.at("formula") == "theorem13", "bound formula matches the route");
    v.check(jb.at("inputs").at("p").get<u64>() == p &&
                jb.at("inputs").at("dv").get<int>() == dv.dv &&
                jb.at("inputs").at("deg_k").get<int>() == curve.curve.field->degree(),
            "bound inputs match the certificate data");
    HeightBound want = supersingular_height_bound({p, dv.dv, curve.curve.field->degree()});
    v.check(close_relative(parse_real(jb.at("ln").get<std::string>()), want.value.natural_log,
                           "1e-40"),
            "bound ln matches recomputation");
    v.check(close_relative(parse_real(jb.at("log10").get<std::string>()), want.value.log10(),
                           "1e-40"),
            "bound log10 matches recomputation");
  } catch (const std::exception& err) {
    v.rep.ok = false;
    v.rep.failures.push_back(std::string("verification aborted: ") + err.what());
  }
  return v.rep;
}

}  // namespace bogocert
