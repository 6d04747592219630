// Command-line front end. Every command prints one JSON document.
//   exit 0  success (equiv: equivalent)
//   exit 1  equiv: not equivalent; verify-lemmas: a shipped rule failed
//   exit 2  equiv: unknown (budget exhausted)
//   exit 3  invalid input

#include <iostream>
#include <map>
#include <random>

#include "CLI11.hpp"
#include "gda/equivalence.hpp"
#include "gda/invariants.hpp"
#include "gda/normalize.hpp"
#include "gda/parse.hpp"
#include "gda/report.hpp"
#include "gda/sample.hpp"

using namespace gda;

namespace {

constexpr int kExitInput = 3;

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

FactorList parse_or_throw(const std::string& text, Json& warnings) {
  std::vector<std::string> w;
  FactorList fs = parse_expr(text, &w);
  for (auto& s : w) warnings.push_back(s);
  return fs;
}

int run_normalize(const std::string& expr, bool trace) {
  Json warnings = Json::array();
  FactorList fs = parse_or_throw(expr, warnings);
  NormalizeOptions opt;
  opt.keep_trace = trace;
  Json doc = normalize_document(fs, normalize_full(fs, opt));
  if (!warnings.empty()) doc["warnings"] = warnings;
  print(doc);
  return 0;
}

int run_equiv(const std::string& a, const std::string& b, bool oracle, int64_t budget) {
  Json warnings = Json::array();
  FactorList fa = parse_or_throw(a, warnings), fb = parse_or_throw(b, warnings);
  EquivOptions opt;
  opt.oracle = oracle;
  opt.budget = budget;
  Verdict v = equivalent(fa, fb, opt);
  Json doc = verdict_document(v, presentation_of(fb));
  if (!warnings.empty()) doc["warnings"] = warnings;
  print(doc);
  switch (v.kind) {
    case VerdictKind::Equivalent: return 0;
    case VerdictKind::NotEquivalent: return 1;
    case VerdictKind::Unknown: return 2;
  }
  return 2;
}

int run_invariants(const std::string& expr, int k) {
  Json warnings = Json::array();
  FactorList fs = parse_or_throw(expr, warnings);
  Json doc = invariant_document(fs, k);
  if (!warnings.empty()) doc["warnings"] = warnings;
  print(doc);
  return 0;
}

int run_classes(const std::string& group, int64_t max_dim) {
  FiniteAbelianGroup g = parse_group(group);
  if (max_dim <= 0) max_dim = 4 * g.cardinality();
  std::map<std::string, std::pair<std::string, std::string>> classes;
  for (const auto& fs : products_with_support(g, max_dim)) {
    CanonicalForm cf = normalize(fs);
    std::string label = canonical_label(cf);
    if (!classes.count(label)) classes[label] = {tag_name(cf.tag), factors_to_string(fs)};
  }
  Json doc;
  doc["schema"] = schema_tag("classes");
  doc["group"] = canonical_group(g).to_string();
  doc["max_dim"] = max_dim;
  Json list = Json::array();
  for (const auto& [label, info] : classes) {
    list.push_back(Json{{"label", label}, {"tag", info.first}, {"example", info.second}});
  }
  doc["classes"] = list;
  print(doc);
  return 0;
}

int run_verify_lemmas(int max_exp, int confluence, uint64_t seed) {
  auto reports = verify_lemmas(max_exp);
  Json doc = lemma_document(reports);
  bool ok = doc["shipped_pass"].get<bool>();
  if (confluence > 0) {
    std::mt19937_64 rng(seed);
    int agree = 0;
    Json bad = Json::array();
    for (int i = 0; i < confluence; ++i) {
      FactorList fs = random_factor_list(rng);
      std::string want = canonical_label(normalize(fs));
      std::string got = canonical_label(normalize_full(fs, random_chooser(rng)).form);
      if (want == got) {
        ++agree;
      } else {
        bad.push_back(factors_to_string(fs));
      }
    }
    doc["confluence"] = Json{{"seed", seed}, {"samples", confluence}, {"agree", agree}, {"failures", bad}};
    ok = ok && agree == confluence;
  }
  print(doc);
  return ok ? 0 : 1;
}

int run_decompose(const std::string& expr) {
  Json warnings = Json::array();
  FactorList fs = parse_or_throw(expr, warnings);
  auto [cplx, real] = ungraded_decomposition_commutative(presentation_of(fs));
  Json doc;
  doc["schema"] = schema_tag("decompose");
  doc["input"] = factors_to_string(fs);
  doc["num_complex"] = cplx;
  doc["num_real"] = real;
  if (!warnings.empty()) doc["warnings"] = warnings;
  print(doc);
  return 0;
}

int input_error(const std::string& kind, const std::string& msg) {
  Json doc;
  doc["schema"] = schema_tag("error");
  doc["error"] = kind;
  doc["message"] = msg;
  print(doc);
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real graded division algebras: normal forms and equivalence"};
  app.require_subcommand(1);
  app.fallthrough();
  uint64_t seed = 1;
  bool json = true;
  app.add_option("--seed", seed, "Seed for randomized runs");
  app.add_flag("--json", json, "JSON output (always on)");

  std::string e1, e2, group;
  bool oracle = false, trace = false;
  int64_t budget = 20000000, max_dim = 0;
  int k = 0, max_exp = 4, confluence = 0;

  auto* norm = app.add_subcommand("normalize", "Canonical form and label");
  norm->add_option("expr", e1)->required();
  norm->add_flag("--trace", trace, "Include the rewrite trace");

  auto* eq = app.add_subcommand("equiv", "Decide equivalence");
  eq->add_option("expr1", e1)->required();
  eq->add_option("expr2", e2)->required();
  eq->add_flag("--oracle", oracle, "Use the exhaustive weak-isomorphism search");
  eq->add_option("--budget", budget, "Oracle node budget");

  auto* inv = app.add_subcommand("invariants", "Invariant profile");
  inv->add_option("expr", e1)->required();
  inv->add_option("--k", k, "Largest 2^k exponent probed (0 = automatic)");

  auto* cls = app.add_subcommand("classes", "Canonical labels realizable over a group");
  cls->add_option("--group", group)->required();
  cls->add_option("--max-dim", max_dim, "Dimension bound (default 4|G|)");

  auto* lem = app.add_subcommand("verify-lemmas", "Check every rule witness");
  lem->add_option("--max-exp", max_exp, "Largest exponent parameter");
  lem->add_option("--confluence", confluence, "Random-strategy confluence samples");

  auto* dec = app.add_subcommand("decompose", "Ungraded simple summands of a commutative algebra");
  dec->add_option("expr", e1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*norm) return run_normalize(e1, trace);
    if (*eq) return run_equiv(e1, e2, oracle, budget);
    if (*inv) return run_invariants(e1, k);
    if (*cls) return run_classes(group, max_dim);
    if (*lem) return run_verify_lemmas(max_exp, confluence, seed);
    if (*dec) return run_decompose(e1);
  } catch (const ParseError& e) {
    return input_error("parse", e.what());
  } catch (const BudgetExceeded& e) {
    return input_error("budget", e.what());
  } catch (const std::invalid_argument& e) {
    return input_error("invalid", e.what());
  }
  return kExitInput;
}
