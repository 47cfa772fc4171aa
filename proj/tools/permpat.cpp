// permpat: command-line front end for the permutation-pattern library.
//
// Exit codes: 0 success, 1 computation error, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "permpat/asymptotics.hpp"
#include "permpat/errors.hpp"
#include "permpat/exact_count.hpp"
#include "permpat/stochastic.hpp"
#include "permpat/structure.hpp"
#include "permpat/verification.hpp"

using json = nlohmann::ordered_json;

namespace {

using namespace permpat;

int max_brute_n_from_env() {
  const char* env = std::getenv("PPL_MAX_BRUTE_N");
  if (!env) return kDefaultBruteForceLimit;
  int value = std::atoi(env);
  if (value < 1)
    throw std::invalid_argument("PPL_MAX_BRUTE_N must be a positive integer");
  return value;
}

std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") return std::random_device{}();
  return std::stoull(text);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw std::invalid_argument("empty list: " + text);
  return out;
}

void emit(const json& payload, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << payload.dump(2) << "\n";
  } else {
    std::ofstream out(output_path);
    out << payload.dump(2) << "\n";
  }
}

void emit_text(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output_path);
    out << text;
  }
}

// Formula lookups honor the reverse/complement symmetries, which preserve
// all three containment notions.
std::optional<Permutation> symmetry_image_matching(
    const Permutation& q, const std::vector<Permutation>& targets) {
  const Permutation candidates[] = {q, q.reversed(), q.complemented(),
                                    q.reversed().complemented()};
  for (const Permutation& c : candidates)
    for (const Permutation& t : targets)
      if (c == t) return c;
  return std::nullopt;
}

std::optional<BigInt> closed_formula_count(const Permutation& q,
                                           ContainmentKind kind, int n) {
  if (kind != ContainmentKind::Classic) return std::nullopt;
  if (q.size() == 3) return catalan(n);
  if (symmetry_image_matching(q, {Permutation::parse("1234")}))
    return n == 0 ? BigInt(1) : s_1234(n, GesselForm::Product);
  if (symmetry_image_matching(q, {Permutation::parse("1342")}))
    return n == 0 ? BigInt(1) : s_1342(n);
  return std::nullopt;
}

std::optional<BigInt> generating_function_count(const Permutation& q,
                                                ContainmentKind kind, int n) {
  switch (kind) {
    case ContainmentKind::Classic:
      if (symmetry_image_matching(q, {Permutation::parse("1342")})) {
        FormalPowerSeries h = gf_1342(std::max(n, 1));
        return to_integer(h.coefficient(n));
      }
      return std::nullopt;
    case ContainmentKind::Tight: {
      auto sym = symmetry_image_matching(q, {monotone_pattern(q.size())});
      if (sym && q.size() >= 3)
        return tight_monotone_counts(q.size(), n)[n];
      if (symmetry_image_matching(q, {Permutation::parse("132")}))
        return tight_132_counts(n)[n];
      return std::nullopt;
    }
    case ContainmentKind::VeryTight:
      if (symmetry_image_matching(q, {monotone_pattern(q.size())}) &&
          q.size() >= 2)
        return very_tight_monotone_counts(q.size(), n)[n];
      return std::nullopt;
  }
  return std::nullopt;
}

struct CountParams {
  std::string pattern;
  std::string kind = "classic";
  int n = 0;
  std::string method = "brute";
  std::string format = "json";
  std::string output;
};

CountReport compute_count(const CountParams& params, int max_brute_n) {
  Permutation q = Permutation::parse(params.pattern);
  ContainmentKind kind = containment_kind_from_string(params.kind);
  CountReport report;
  report.n = params.n;
  report.pattern = q;
  report.kind = kind;
  if (params.method == "brute") {
    report.count = brute_force_count(params.n, q, kind, max_brute_n);
    report.method = CountMethod::BruteForce;
  } else if (params.method == "formula") {
    auto value = closed_formula_count(q, kind, params.n);
    if (!value)
      throw std::invalid_argument("no closed formula for pattern " +
                                  q.to_string() + " under " +
                                  to_string(kind) + " containment");
    report.count = *value;
    report.method = CountMethod::Formula;
  } else if (params.method == "gf") {
    auto value = generating_function_count(q, kind, params.n);
    if (!value)
      throw std::invalid_argument(
          "no generating function route for pattern " + q.to_string() +
          " under " + to_string(kind) + " containment");
    report.count = *value;
    report.method = CountMethod::GeneratingFunction;
  } else {
    throw std::invalid_argument("unknown method: " + params.method);
  }
  return report;
}

json count_report_json(const CountReport& report) {
  json out;
  out["n"] = report.n;
  out["pattern"] = report.pattern.to_string();
  out["kind"] = to_string(report.kind);
  out["method"] = to_string(report.method);
  out["count"] = report.count.str();
  return out;
}

int run_count(const CountParams& params, int max_brute_n) {
  CountReport report = compute_count(params, max_brute_n);
  if (params.format == "text") {
    emit_text(report.count.str() + "\n", params.output);
  } else {
    emit(count_report_json(report), params.output);
  }
  return 0;
}

struct TableParams {
  std::string pattern;
  std::string kind = "classic";
  int n_max = 8;
  std::string method = "auto";
  std::string format = "csv";
  std::string output;
};

int run_table(const TableParams& params, int max_brute_n) {
  Permutation q = Permutation::parse(params.pattern);
  ContainmentKind kind = containment_kind_from_string(params.kind);
  std::vector<CountReport> rows;
  for (int n = 1; n <= params.n_max; ++n) {
    CountReport report;
    report.n = n;
    report.pattern = q;
    report.kind = kind;
    std::optional<BigInt> value;
    if (params.method == "auto" || params.method == "formula") {
      value = closed_formula_count(q, kind, n);
      if (value) report.method = CountMethod::Formula;
      if (!value && params.method == "formula")
        throw std::invalid_argument("no closed formula for this pattern");
    }
    if (!value && (params.method == "auto" || params.method == "gf")) {
      value = generating_function_count(q, kind, n);
      if (value) report.method = CountMethod::GeneratingFunction;
      if (!value && params.method == "gf")
        throw std::invalid_argument("no generating function route");
    }
    if (!value) {
      value = brute_force_count(n, q, kind, max_brute_n);
      report.method = CountMethod::BruteForce;
    }
    report.count = *value;
    rows.push_back(std::move(report));
  }
  if (params.format == "json") {
    json out = json::array();
    for (const CountReport& r : rows) out.push_back(count_report_json(r));
    emit(out, params.output);
  } else {
    std::string text = "n,count,method\n";
    for (const CountReport& r : rows)
      text += std::to_string(r.n) + "," + r.count.str() + "," +
              to_string(r.method) + "\n";
    emit_text(text, params.output);
  }
  return 0;
}

int run_pair_query(const std::string& perm, const std::string& pattern,
                   const std::string& kind_text, bool count_mode,
                   const std::string& format, const std::string& output) {
  Permutation p = Permutation::parse(perm);
  Permutation q = Permutation::parse(pattern);
  ContainmentKind kind = containment_kind_from_string(kind_text);
  json out;
  out["perm"] = p.to_string();
  out["pattern"] = q.to_string();
  out["kind"] = to_string(kind);
  if (count_mode) {
    std::uint64_t c = count_occurrences(p, q, kind);
    if (format == "text") {
      emit_text(std::to_string(c) + "\n", output);
      return 0;
    }
    out["occurrences"] = c;
  } else {
    bool c = contains(p, q, kind);
    if (format == "text") {
      emit_text(std::string(c ? "true" : "false") + "\n", output);
      return 0;
    }
    out["contains"] = c;
  }
  emit(out, output);
  return 0;
}

int run_biject(const std::string& map_name, const std::string& perm,
               const std::string& format, const std::string& output) {
  Permutation p = Permutation::parse(perm);
  Permutation image;
  if (map_name == "simion-schmidt") {
    image = simion_schmidt(p);
  } else if (map_name == "simion-schmidt-inverse") {
    image = simion_schmidt_inverse(p);
  } else {
    throw std::invalid_argument("unknown map: " + map_name);
  }
  if (format == "text") {
    emit_text(image.to_string() + "\n", output);
  } else {
    json out;
    out["map"] = map_name;
    out["input"] = p.to_string();
    out["output"] = image.to_string();
    emit(out, output);
  }
  return 0;
}

int run_classify(int k, const std::string& format,
                 const std::string& output) {
  std::vector<Permutation> ext = extendible_patterns(k);
  if (format == "json") {
    json out;
    out["k"] = k;
    BigInt rising = big_factorial(k) / 2;
    out["rising"] = rising.str();
    json list = json::array();
    for (const Permutation& q : ext) list.push_back(q.to_string());
    out["extendible"] = list;
    emit(out, output);
  } else {
    std::string text;
    for (const Permutation& q : ext) text += q.to_string() + "\n";
    emit_text(text, output);
  }
  return 0;
}

int run_normalize(const std::string& perm, const std::string& format,
                  const std::string& output) {
  Permutation p = Permutation::parse(perm);
  NormalizeResult result = normalize_to_1324_avoider(p);
  if (format == "json") {
    json out;
    out["input"] = p.to_string();
    json steps = json::array();
    for (const NormalizeStep& step : result.steps) {
      json s;
      s["occurrence"] = step.occurrence;
      s["after"] = step.after.to_string();
      s["inversions"] = step.inversions_after;
      steps.push_back(s);
    }
    out["steps"] = steps;
    out["result"] = result.result.to_string();
    emit(out, output);
  } else {
    std::string text =
        "start: " + p.to_string() + " (inversions " +
        std::to_string(inversion_count(p)) + ")\n";
    int i = 0;
    for (const NormalizeStep& step : result.steps) {
      text += "step " + std::to_string(++i) + ": occurrence (" +
              std::to_string(step.occurrence[0]) + "," +
              std::to_string(step.occurrence[1]) + "," +
              std::to_string(step.occurrence[2]) + "," +
              std::to_string(step.occurrence[3]) + ") swap -> " +
              step.after.to_string() + " (inversions " +
              std::to_string(step.inversions_after) + ")\n";
    }
    text += "result: " + result.result.to_string() + "\n";
    emit_text(text, output);
  }
  return 0;
}

struct SimulateParams {
  int n = 0;
  int k = 0;
  std::string kind = "classic";
  std::uint64_t trials = 10000;
  std::string seed = "0";
  std::string format = "json";
  std::string output;
  std::string dump;
};

int run_simulate(const SimulateParams& params) {
  ContainmentKind kind = containment_kind_from_string(params.kind);
  RandomSource src(parse_seed(params.seed));
  std::vector<std::uint64_t> counts;
  SampleSummary summary = copy_count_experiment(
      params.n, params.k, kind, params.trials, src,
      params.dump.empty() ? nullptr : &counts);
  if (!params.dump.empty()) {
    std::ofstream out(params.dump);
    out << "trial,count\n";
    for (std::size_t t = 0; t < counts.size(); ++t)
      out << t << "," << counts[t] << "\n";
  }
  json out;
  out["n"] = summary.n;
  out["k"] = summary.k;
  out["kind"] = to_string(summary.kind);
  out["trials"] = summary.trials;
  out["seed"] = summary.seed;
  out["mean"] = summary.mean;
  out["variance"] = summary.variance;
  out["skewness"] = summary.skewness;
  out["excess_kurtosis"] = summary.excess_kurtosis;
  out["estimator"] = summary.estimator;
  out["method"] = "monte-carlo";
  emit(out, params.output);
  return 0;
}

struct PoissonParams {
  std::string n_list = "6,8,10";
  std::string mode = "exact";
  std::uint64_t trials = 100000;
  std::string seed = "0";
  std::string output;
};

int run_poisson_check(const PoissonParams& params, int max_brute_n) {
  std::vector<int> ns = parse_int_list(params.n_list);
  SampleMode mode;
  if (params.mode == "exact") {
    mode = SampleMode::Exact;
  } else if (params.mode == "monte-carlo" || params.mode == "mc") {
    mode = SampleMode::MonteCarlo;
  } else {
    throw std::invalid_argument("unknown mode: " + params.mode);
  }
  PoissonCheckReport report = succession_poisson_check(
      ns, mode, params.trials, RandomSource(parse_seed(params.seed)),
      max_brute_n);
  json out;
  out["mode"] = params.mode;
  json bell = json::array();
  for (const BigInt& b : report.bell) bell.push_back(b.str());
  out["bell"] = bell;
  json rows = json::array();
  for (const PoissonCheckRow& row : report.rows) {
    json r;
    r["n"] = row.n;
    r["method"] = row.exact ? "exact" : "monte-carlo";
    if (!row.exact) r["trials"] = row.trials;
    r["tv_distance"] = row.tv_distance;
    r["moments"] = row.moments;
    if (row.exact) r["mean"] = row.mean_exact.str();
    rows.push_back(r);
  }
  out["rows"] = rows;
  out["tv_decreasing"] = report.tv_decreasing;
  emit(out, params.output);
  return 0;
}

struct GrowthParams {
  std::string pattern;
  std::string kind = "classic";
  int n_max = 8;
  bool bound = false;
  std::string format = "json";
  std::string output;
};

int run_growth(const GrowthParams& params, int max_brute_n) {
  Permutation q = Permutation::parse(params.pattern);
  ContainmentKind kind = containment_kind_from_string(params.kind);
  GrowthSequence seq = growth_sequence(q, kind, params.n_max, max_brute_n);

  std::optional<RatioTrendReport> trend;
  if (params.bound) {
    trend = ratio_trend(q, kind, 1, params.n_max, max_brute_n);
  }

  if (params.format == "csv") {
    std::string text = params.bound ? "n,count,root,method,bound_holds\n"
                                    : "n,count,root,method\n";
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
      const GrowthRow& row = seq.rows[i];
      std::ostringstream line;
      line.precision(12);
      line << row.n << "," << row.count.str() << "," << row.root << ","
           << to_string(row.method);
      if (params.bound)
        line << "," << (trend->rows[i].bound_holds ? "yes" : "no");
      text += line.str() + "\n";
    }
    emit_text(text, params.output);
  } else {
    json out;
    out["pattern"] = q.to_string();
    out["kind"] = to_string(kind);
    json rows = json::array();
    for (std::size_t i = 0; i < seq.rows.size(); ++i) {
      const GrowthRow& row = seq.rows[i];
      json r;
      r["n"] = row.n;
      r["count"] = row.count.str();
      r["root"] = row.root;
      r["method"] = to_string(row.method);
      if (params.bound) {
        r["ratio_root"] = trend->rows[i].ratio_root;
        r["bound_holds"] = trend->rows[i].bound_holds;
      }
      rows.push_back(r);
    }
    out["rows"] = rows;
    if (params.bound) out["all_bounds_hold"] = trend->all_bounds_hold;
    emit(out, params.output);
  }
  return 0;
}

struct RootsParams {
  std::string which;
  int k = 3;
  double tol = 1e-8;
  std::string output;
};

int run_roots(const RootsParams& params) {
  json out;
  out["which"] = params.which;
  RootResult root;
  if (params.which == "omega") {
    out["k"] = params.k;
    root = smallest_positive_root_fk(params.k, params.tol);
  } else {
    TightConstant which;
    if (params.which == "rho1342") {
      which = TightConstant::Rho1342;
    } else if (params.which == "rho1234") {
      which = TightConstant::Rho1234;
    } else if (params.which == "rho132") {
      which = TightConstant::Rho132;
    } else {
      throw std::invalid_argument("unknown constant: " + params.which);
    }
    TightConstantResult result = tight_constant_roots(which, params.tol);
    root = result.rho;
    if (result.gamma) out["gamma"] = *result.gamma;
  }
  out["value"] = root.value;
  out["residual"] = root.residual;
  out["bracket"] = {root.lo, root.hi};
  out["tolerance"] = root.tolerance;
  emit(out, params.output);
  return 0;
}

struct SeriesParams {
  std::string which;
  int k = 3;
  int order = 10;
  std::string format = "csv";
  std::string output;
};

int run_series(const SeriesParams& params) {
  FormalPowerSeries series(0);
  if (params.which == "gf1342") {
    series = gf_1342(params.order);
  } else if (params.which == "tight-monotone") {
    // EGF 1/f_k; emit its rational coefficients.
    std::vector<Rational> coeffs;
    std::vector<BigInt> counts = tight_monotone_counts(params.k, params.order);
    BigInt fact = 1;
    for (int n = 0; n <= params.order; ++n) {
      if (n >= 2) fact *= n;
      coeffs.emplace_back(counts[n], fact);
    }
    series = FormalPowerSeries(std::move(coeffs));
  } else if (params.which == "tight-132") {
    std::vector<Rational> coeffs;
    std::vector<BigInt> counts = tight_132_counts(params.order);
    BigInt fact = 1;
    for (int n = 0; n <= params.order; ++n) {
      if (n >= 2) fact *= n;
      coeffs.emplace_back(counts[n], fact);
    }
    series = FormalPowerSeries(std::move(coeffs));
  } else if (params.which == "very-tight-monotone") {
    std::vector<Rational> coeffs;
    std::vector<BigInt> counts =
        very_tight_monotone_counts(params.k, params.order);
    for (int n = 0; n <= params.order; ++n) coeffs.emplace_back(counts[n]);
    series = FormalPowerSeries(std::move(coeffs));
  } else {
    throw std::invalid_argument("unknown series: " + params.which);
  }

  if (params.format == "text") {
    emit_text(series.to_string() + "\n", params.output);
  } else {
    std::string text = "exponent,numerator,denominator\n";
    for (int i = 0; i <= series.order(); ++i) {
      const Rational& c = series.coefficient(i);
      text += std::to_string(i) + "," +
              boost::multiprecision::numerator(c).str() + "," +
              boost::multiprecision::denominator(c).str() + "\n";
    }
    emit_text(text, params.output);
  }
  return 0;
}

struct VerifyParams {
  std::string suite = "all";
  std::string seed = "42";
  std::string format = "text";
  std::string output;
};

int run_verify(const VerifyParams& params, int max_brute_n) {
  const auto& names = verification_suite_names();
  if (params.suite != "all" &&
      std::find(names.begin(), names.end(), params.suite) == names.end())
    throw std::invalid_argument("unknown verification suite: " +
                                params.suite);

  VerifyOptions options;
  options.seed = parse_seed(params.seed);
  options.max_brute_n = max_brute_n;
  std::vector<CheckResult> ledger =
      params.suite == "all" ? run_all_verification(options)
                            : run_verification_suite(params.suite, options);

  std::size_t passed = 0;
  for (const CheckResult& check : ledger) passed += check.pass;

  if (params.format == "json") {
    json out;
    json checks = json::array();
    for (const CheckResult& check : ledger) {
      json c;
      c["name"] = check.name;
      c["status"] = check.pass ? "PASS" : "FAIL";
      c["expected"] = check.expected;
      c["actual"] = check.actual;
      checks.push_back(c);
    }
    out["checks"] = checks;
    out["passed"] = passed;
    out["total"] = ledger.size();
    emit(out, params.output);
  } else {
    std::string text;
    for (const CheckResult& check : ledger) {
      text += std::string(check.pass ? "PASS" : "FAIL") + "  " + check.name +
              "  expected=" + check.expected + "  actual=" + check.actual +
              "\n";
    }
    text += std::to_string(passed) + "/" + std::to_string(ledger.size()) +
            " checks passed\n";
    emit_text(text, params.output);
  }
  return passed == ledger.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "permpat: exact counting, bijections, and limit-law experiments for "
      "classic, tight, and very tight permutation patterns"};
  app.require_subcommand(1);

  int max_brute_n = kDefaultBruteForceLimit;

  CountParams count_params;
  CLI::App* count = app.add_subcommand(
      "count", "Count n-permutations avoiding a pattern");
  count->add_option("--pattern", count_params.pattern, "pattern, e.g. 1342")
      ->required();
  count->add_option("--kind", count_params.kind,
                    "classic | tight | very-tight");
  count->add_option("--n", count_params.n, "permutation length")->required();
  count->add_option("--method", count_params.method,
                    "formula | gf | brute (default brute)");
  count->add_option("--format", count_params.format, "json | text");
  count->add_option("--output", count_params.output, "output path");

  TableParams table_params;
  CLI::App* table = app.add_subcommand(
      "table", "Avoider counts for n = 1..n-max as CSV or JSON");
  table->add_option("--pattern", table_params.pattern, "pattern")->required();
  table->add_option("--kind", table_params.kind,
                    "classic | tight | very-tight");
  table->add_option("--n-max", table_params.n_max, "largest n")->required();
  table->add_option("--method", table_params.method,
                    "auto | formula | gf | brute");
  table->add_option("--format", table_params.format, "csv | json");
  table->add_option("--output", table_params.output, "output path");

  std::string pq_perm, pq_pattern, pq_kind = "classic",
              pq_format = "json", pq_output;
  CLI::App* occurrences = app.add_subcommand(
      "occurrences", "Count occurrences of a pattern in one permutation");
  occurrences->add_option("--perm", pq_perm, "host permutation")->required();
  occurrences->add_option("--pattern", pq_pattern, "pattern")->required();
  occurrences->add_option("--kind", pq_kind, "classic | tight | very-tight");
  occurrences->add_option("--format", pq_format, "json | text");
  occurrences->add_option("--output", pq_output, "output path");

  CLI::App* contains_cmd = app.add_subcommand(
      "contains", "Does a permutation contain a pattern?");
  contains_cmd->add_option("--perm", pq_perm, "host permutation")->required();
  contains_cmd->add_option("--pattern", pq_pattern, "pattern")->required();
  contains_cmd->add_option("--kind", pq_kind,
                           "classic | tight | very-tight");
  contains_cmd->add_option("--format", pq_format, "json | text");
  contains_cmd->add_option("--output", pq_output, "output path");

  std::string biject_map = "simion-schmidt", biject_perm,
              biject_format = "json", biject_output;
  CLI::App* biject = app.add_subcommand(
      "biject", "Apply the Simion-Schmidt bijection or its inverse");
  biject->add_option("--map", biject_map,
                     "simion-schmidt | simion-schmidt-inverse");
  biject->add_option("--perm", biject_perm, "input permutation")->required();
  biject->add_option("--format", biject_format, "json | text");
  biject->add_option("--output", biject_output, "output path");

  int classify_k = 4;
  bool classify_ext = false;
  std::string classify_format = "text", classify_output;
  CLI::App* classify = app.add_subcommand(
      "classify", "List extendible rising patterns of length k");
  classify->add_flag("--extendible", classify_ext,
                     "list extendible patterns (default action)");
  classify->add_option("--k", classify_k, "pattern length")->required();
  classify->add_option("--format", classify_format, "text | json");
  classify->add_option("--output", classify_output, "output path");

  std::string normalize_perm, normalize_format = "text", normalize_output;
  CLI::App* normalize = app.add_subcommand(
      "normalize", "Swap 1324 occurrences until the permutation avoids "
                   "1324, printing the trace");
  normalize->add_option("--perm", normalize_perm, "input permutation")
      ->required();
  normalize->add_option("--format", normalize_format, "text | json");
  normalize->add_option("--output", normalize_output, "output path");

  SimulateParams simulate_params;
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo moments of 12...k copy counts");
  simulate->add_option("--n", simulate_params.n, "permutation length")
      ->required();
  simulate->add_option("--k", simulate_params.k, "pattern length")
      ->required();
  simulate->add_option("--kind", simulate_params.kind,
                       "classic | tight | very-tight");
  simulate->add_option("--trials", simulate_params.trials, "sample count");
  simulate->add_option("--seed", simulate_params.seed,
                       "64-bit seed or 'random' (default 0)");
  simulate->add_option("--format", simulate_params.format, "json");
  simulate->add_option("--dump", simulate_params.dump,
                       "write per-trial counts to this CSV file");
  simulate->add_option("--output", simulate_params.output, "output path");

  PoissonParams poisson_params;
  CLI::App* poisson = app.add_subcommand(
      "poisson-check", "Succession counts against the Poisson(1) law");
  poisson->add_option("--n", poisson_params.n_list,
                      "comma-separated lengths, e.g. 6,8,10");
  poisson->add_option("--mode", poisson_params.mode, "exact | monte-carlo");
  poisson->add_option("--trials", poisson_params.trials,
                      "samples per n in monte-carlo mode");
  poisson->add_option("--seed", poisson_params.seed, "seed (default 0)");
  poisson->add_option("--output", poisson_params.output, "output path");

  GrowthParams growth_params;
  CLI::App* growth = app.add_subcommand(
      "growth", "Exact counts with n-th roots (growth-rate sequence)");
  growth->add_option("--pattern", growth_params.pattern, "pattern")
      ->required();
  growth->add_option("--kind", growth_params.kind,
                     "classic | tight | very-tight");
  growth->add_option("--n-max", growth_params.n_max, "largest n")->required();
  growth->add_flag("--bound", growth_params.bound,
                   "also check the tight subword bound per n");
  growth->add_option("--format", growth_params.format, "json | csv");
  growth->add_option("--output", growth_params.output, "output path");

  RootsParams roots_params;
  CLI::App* roots = app.add_subcommand(
      "roots", "Bracket-certified decay constants");
  roots->add_option("--which", roots_params.which,
                    "rho1342 | rho1234 | rho132 | omega")
      ->required();
  roots->add_option("--k", roots_params.k, "k for --which omega");
  roots->add_option("--tol", roots_params.tol, "bracket tolerance");
  roots->add_option("--output", roots_params.output, "output path");

  SeriesParams series_params;
  CLI::App* series = app.add_subcommand(
      "series", "Generating-function coefficient tables");
  series->add_option("--which", series_params.which,
                     "gf1342 | tight-monotone | tight-132 | "
                     "very-tight-monotone")
      ->required();
  series->add_option("--k", series_params.k, "pattern length where needed");
  series->add_option("--order", series_params.order, "truncation order");
  series->add_option("--format", series_params.format, "csv | text");
  series->add_option("--output", series_params.output, "output path");

  VerifyParams verify_params;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run acceptance checks and print a pass/fail ledger");
  verify->add_option("--suite", verify_params.suite,
                     "all or one of the named suites");
  verify->add_option("--seed", verify_params.seed, "seed (default 42)");
  verify->add_option("--format", verify_params.format, "text | json");
  verify->add_option("--output", verify_params.output, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    max_brute_n = max_brute_n_from_env();
    if (count->parsed()) return run_count(count_params, max_brute_n);
    if (table->parsed()) return run_table(table_params, max_brute_n);
    if (occurrences->parsed())
      return run_pair_query(pq_perm, pq_pattern, pq_kind, true, pq_format,
                            pq_output);
    if (contains_cmd->parsed())
      return run_pair_query(pq_perm, pq_pattern, pq_kind, false, pq_format,
                            pq_output);
    if (biject->parsed())
      return run_biject(biject_map, biject_perm, biject_format,
                        biject_output);
    if (classify->parsed())
      return run_classify(classify_k, classify_format, classify_output);
    if (normalize->parsed())
      return run_normalize(normalize_perm, normalize_format,
                           normalize_output);
    if (simulate->parsed()) return run_simulate(simulate_params);
    if (poisson->parsed()) return run_poisson_check(poisson_params,
                                                    max_brute_n);
    if (growth->parsed()) return run_growth(growth_params, max_brute_n);
    if (roots->parsed()) return run_roots(roots_params);
    if (series->parsed()) return run_series(series_params);
    if (verify->parsed()) return run_verify(verify_params, max_brute_n);
  } catch (const permpat::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
