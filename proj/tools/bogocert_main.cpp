// Command-line front end: certifies supersingular primes for explicit
// Bogomolov-type height bounds, computes bad sets and censuses, and
// re-verifies emitted certificates.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "bogocert/certifier.hpp"

using namespace bogocert;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw schema_error("cannot open " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw schema_error(path + ": " + e.what());
  }
  return doc;
}

void print(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

struct Options {
  std::string curve_path;
  std::string l_path;
  std::string cert_path;
  u64 p = 0;
  u64 pmax = 0;
  u64 xmax = 0;
  u64 ell_budget = 1000;
  int jobs = 1;
  int dv = 1;
  int deg_k = 1;
  int d = 1;
  std::optional<int> galois_bound;
};

ExtensionInput load_extension(const Options& opt, const FieldPtr& ke) {
  if (opt.l_path.empty()) {
    // default L = K_E presented by the same polynomial
    Json doc;
    doc["min_poly"] = Json::array();
    for (const BigInt& c : ke->min_poly) doc["min_poly"].push_back(c.convert_to<std::string>());
    return ingest_extension(doc, ke, opt.galois_bound);
  }
  return ingest_extension(load_json(opt.l_path), ke, opt.galois_bound);
}

int run(int argc, char** argv) {
  CLI::App app{"supersingular-prime certificates for explicit height lower bounds"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* badset = app.add_subcommand("badset", "conservative bad set of the curve's j-invariant");
  badset->add_option("curve", opt.curve_path, "curve JSON document")->required();

  CLI::App* check = app.add_subcommand("check", "evaluate conditions (i)-(v) at one prime");
  check->add_option("curve", opt.curve_path)->required();
  check->add_option("--L", opt.l_path, "extension field JSON (default: L = K_E)");
  check->add_option("--p", opt.p, "prime to check")->required();
  check->add_option("--ell-budget", opt.ell_budget, "Frobenius sampling budget");
  check->add_option("--galois-bound", opt.galois_bound, "Galois-closure degree bound for non-Galois L");

  CLI::App* search = app.add_subcommand("search", "scan primes and emit certificates");
  search->add_option("curve", opt.curve_path)->required();
  search->add_option("--L", opt.l_path, "extension field JSON (default: L = K_E)");
  search->add_option("--pmax", opt.pmax, "scan primes up to this bound")->required();
  search->add_option("--jobs", opt.jobs, "worker threads");
  search->add_option("--ell-budget", opt.ell_budget, "Frobenius sampling budget");
  search->add_option("--galois-bound", opt.galois_bound, "Galois-closure degree bound for non-Galois L");

  CLI::App* bound = app.add_subcommand("bound", "evaluate the supersingular-prime height bound");
  bound->add_option("--p", opt.p)->required();
  bound->add_option("--dv", opt.dv)->required();
  bound->add_option("--degK", opt.deg_k)->required();

  CLI::App* cmbound = app.add_subcommand("cm-bound", "evaluate the CM height bound");
  cmbound->add_option("--d", opt.d)->required();

  CLI::App* census_cmd = app.add_subcommand("census", "supersingular places up to x_max");
  census_cmd->add_option("curve", opt.curve_path)->required();
  census_cmd->add_option("--xmax", opt.xmax)->required();

  CLI::App* verify = app.add_subcommand("verify", "re-verify an emitted certificate document");
  verify->add_option("certificate", opt.cert_path)->required();

  CLI11_PARSE(app, argc, argv);

  if (badset->parsed()) {
    IngestResult curve = ingest_curve(load_json(opt.curve_path));
    print(badset_to_json(bad_set(curve.curve.j)));
    return 0;
  }
  if (check->parsed()) {
    if (opt.p <= 3 || !is_prime_u64(opt.p)) throw schema_error("--p must be a prime > 3");
    IngestResult curve = ingest_curve(load_json(opt.curve_path));
    ExtensionInput l = load_extension(opt, curve.curve.field);
    ConditionReport rep = check_conditions(curve.curve, l.spec, opt.p, opt.ell_budget);
    Json out = report_to_json(rep);
    if (rep.place && rep.ii == Flag::holds)
      out["bound"] = bound_to_json(
          supersingular_height_bound({rep.p, rep.dv.dv, curve.curve.field->degree()}));
    print(out);
    return 0;
  }
  if (search->parsed()) {
    IngestResult curve = ingest_curve(load_json(opt.curve_path));
    ExtensionInput l = load_extension(opt, curve.curve.field);
    SearchResult result = search_supersingular(curve, l, opt.pmax, opt.jobs, opt.ell_budget);
    Json out;
    out["pmax"] = result.pmax;
    out["notes"] = result.notes;
    out["certificates"] = Json::array();
    for (const Certificate& c : result.certificates) out["certificates"].push_back(emit_certificate(c));
    print(out);
    return 0;
  }
  if (bound->parsed()) {
    print(bound_to_json(supersingular_height_bound({opt.p, opt.dv, opt.deg_k})));
    return 0;
  }
  if (cmbound->parsed()) {
    print(bound_to_json(cm_height_bound(opt.d)));
    return 0;
  }
  if (census_cmd->parsed()) {
    IngestResult curve = ingest_curve(load_json(opt.curve_path));
    print(census_to_json(census(curve.curve, opt.xmax)));
    return 0;
  }
  if (verify->parsed()) {
    Json doc = load_json(opt.cert_path);
    std::vector<Json> certs;
    if (doc.is_object() && doc.contains("certificates")) {
      for (const auto& c : doc["certificates"]) certs.push_back(c);
    } else {
      certs.push_back(doc);
    }
    if (certs.empty()) throw schema_error("no certificates in the document");
    bool all_ok = true;
    Json out = Json::array();
    for (const Json& c : certs) {
      VerifyReport rep = verify_certificate(c);
      all_ok = all_ok && rep.ok;
      out.push_back(Json{{"ok", rep.ok}, {"checks", rep.checks}, {"failures", rep.failures}});
    }
    print(Json{{"ok", all_ok}, {"reports", out}});
    return all_ok ? 0 : kExitVerify;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const schema_error& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const singular_model_error& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::invalid_argument& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
