// Copyright 2026 The gmplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "acceptance.hpp"
#include "gmplab/boxes.hpp"
#include "gmplab/error.hpp"
#include "gmplab/gentle.hpp"
#include "gmplab/info.hpp"
#include "gmplab/parallel.hpp"
#include "gmplab/random.hpp"
#include "gmplab/sqt.hpp"
#include "gmplab/vandam.hpp"
#include "manifest.hpp"

namespace gmplab::cli {

namespace fs = std::filesystem;

// ------------------------------------------------------------------ parsing

HermitianOperator matrix_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries")) {
    throw ValidationError("matrix JSON needs \"dim\" and \"entries\"");
  }
  const auto dim = doc.at("dim").get<long long>();
  if (dim < 1) throw ValidationError("matrix JSON: dim must be positive");
  const auto& entries = doc.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<std::size_t>(dim * dim)) {
    throw ValidationError("matrix JSON: entries must hold dim^2 [re, im] pairs");
  }
  std::vector<Complex> values;
  values.reserve(entries.size());
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ValidationError("matrix JSON: each entry must be [re, im]");
    }
    values.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  ComplexMatrix m(static_cast<std::size_t>(dim), std::move(values));
  if (doc.contains("subsystem_dims")) {
    return HermitianOperator(std::move(m), doc.at("subsystem_dims").get<std::vector<std::size_t>>());
  }
  return HermitianOperator(std::move(m));
}

Json matrix_to_json(const HermitianOperator& op) {
  Json entries = Json::array();
  for (const Complex& z : op.matrix().entries()) entries.push_back({z.real(), z.imag()});
  return {{"dim", op.dim()}, {"subsystem_dims", op.subsystem_dims()}, {"entries", entries}};
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw ValidationError("bad layer range '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  const int a = to_int(text.substr(0, dots));
  const int b = to_int(text.substr(dots + 2));
  if (a > b) throw ValidationError("layer range '" + text + "' is empty");
  return {a, b};
}

EtaFunction parse_eta(const std::string& spec) {
  if (spec == "quantum") return EtaFunction::quantum();
  if (spec.rfind("file:", 0) == 0) return EtaFunction::from_csv(spec.substr(5));
  throw ValidationError("--eta must be 'quantum' or 'file:PATH'");
}

std::vector<std::string> apply_params(const std::vector<std::string>& args, const Json& params) {
  if (!params.is_object()) throw ValidationError("--params file must hold a JSON object");
  std::vector<std::string> out = args;
  for (const auto& [key, value] : params.items()) {
    const std::string flag = "--" + key;
    bool given = false;
    for (const auto& a : args) given = given || a == flag || a.rfind(flag + "=", 0) == 0;
    if (given) continue;
    out.push_back(flag);
    if (value.is_string()) {
      out.push_back(value.get<std::string>());
    } else if (value.is_number_integer()) {
      out.push_back(std::to_string(value.get<long long>()));
    } else if (value.is_number()) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", value.get<double>());
      out.push_back(buf);
    } else if (value.is_boolean()) {
      out.push_back(value.get<bool>() ? "true" : "false");
    } else {
      throw ValidationError("--params: value of '" + key + "' must be a scalar");
    }
  }
  return out;
}

namespace {

Json read_json_file(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------- emission

struct Common {
  std::vector<std::string> argv;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::string out_path;
  std::string csv_path;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;

  std::size_t worker_count() const { return threads > 0 ? threads : default_threads(); }
};

struct Output {
  std::string path;
  std::string contents;
};

// Writes the given outputs (or the first one to stdout when no path is set)
// and the manifest next to the first written file.
void emit(const Common& c, const std::vector<Output>& outputs, const Json& parameters,
          const Json& timing = Json::object()) {
  std::vector<fs::path> written;
  for (const auto& o : outputs) {
    if (o.path.empty()) continue;
    write_file(o.path, o.contents);
    written.emplace_back(o.path);
  }
  if (written.empty()) {
    if (!outputs.empty()) *c.out << outputs.front().contents;
    return;
  }
  RunManifest manifest;
  manifest.command_line = c.argv;
  manifest.seed = c.seed;
  manifest.timestamp = utc_timestamp();
  manifest.parameters = round_reals(parameters);
  manifest.timing = round_reals(timing);
  manifest.outputs = written;
  write_manifest(manifest, written.front());
}

std::vector<std::size_t> parse_targets(const std::string& text, int n) {
  const std::size_t data_bits = std::size_t{1} << n;
  std::vector<std::size_t> targets;
  if (text == "all") {
    for (std::size_t i = 0; i < data_bits; ++i) targets.push_back(i);
    return targets;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || item.front() == '-') {
      throw ValidationError("--targets: bad index '" + item + "'");
    }
    if (v >= data_bits) throw ValidationError("--targets: index " + item + " out of range");
    targets.push_back(static_cast<std::size_t>(v));
  }
  if (targets.empty()) throw ValidationError("--targets: no indices given");
  return targets;
}

// --------------------------------------------------------------- commands

int run_gentle_verify(const Common& c, int dim, int trials) {
  if (dim < 1 || trials < 1) throw ValidationError("gentle verify: --dim and --trials must be positive");
  std::vector<GentleLemmaReport> reports(static_cast<std::size_t>(trials));
  std::vector<double> eps(reports.size());
  parallel_for(reports.size(), c.worker_count(), [&](std::size_t i) {
    SplitMix64 rng = SplitMix64::stream(c.seed, i);
    const HermitianOperator rho = random_density(rng, static_cast<std::size_t>(dim));
    const HermitianOperator x = random_contraction(rng, static_cast<std::size_t>(dim));
    reports[i] = gentle_lemma_check(rho, x);
    eps[i] = 1.0 - rho.expectation(x);
  });
  Json list = Json::array();
  std::size_t failures = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    if (!r.holds) ++failures;
    list.push_back({{"trial", i}, {"eps", eps[i]}, {"lhs", r.lhs}, {"rhs", r.rhs},
                    {"margin", r.rhs - r.lhs}, {"holds", r.holds}});
  }
  Json doc{{"dim", dim}, {"trials", trials}, {"seed", c.seed}, {"rng", SplitMix64::kName},
           {"violations", failures}, {"all_hold", failures == 0}, {"results", list}};
  emit(c, {{c.out_path, render_json(doc)}}, {{"dim", dim}, {"trials", trials}});
  return failures == 0 ? kExitOk : kExitNumeric;
}

int run_cone_state(const Common& c, double tau, const std::string& file) {
  const sqt::SqtParams params(tau);
  const HermitianOperator op = matrix_from_json(read_json_file(file));
  const auto rep = sqt::state_membership(op, params);
  Json doc{{"tau", tau},
           {"member", rep.member},
           {"margins",
            {{"comp_diag", rep.comp_diag}, {"fourier_diag", rep.fourier_diag}, {"spectral", rep.spectral}}},
           {"trace_error", rep.trace_error}};
  emit(c, {{c.out_path, render_json(doc)}}, {{"tau", tau}, {"file", file}});
  return kExitOk;
}

int run_cone_effect(const Common& c, double tau, const std::string& file) {
  const sqt::SqtParams params(tau);
  const HermitianOperator op = matrix_from_json(read_json_file(file));
  if (op.dim() != 2) throw UnsupportedShapeError("cone effect: only 2x2 effects are supported");
  const auto rep = sqt::qubit_effect_report(op, params);
  Json doc{{"tau", tau},
           {"member", rep.member},
           {"margins", {{"min_eigenvalue", rep.min_eigenvalue}, {"min_probability", rep.min_probability}}},
           {"worst_state", {rep.worst_state.x, rep.worst_state.y, rep.worst_state.z}}};
  emit(c, {{c.out_path, render_json(doc)}}, {{"tau", tau}, {"file", file}});
  return kExitOk;
}

int run_chsh(const Common& c, double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw ValidationError("chsh: --lambda must lie in [0, 1]");
  const NoSignallingBox box = isotropic_box(lambda);
  const SignallingReport ns = signalling_witness(box.table());
  Json correlators = Json::object();
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) correlators["E" + std::to_string(i) + std::to_string(j)] = correlator(box, i, j);
  }
  Json conditionals = Json::array();
  for (int i = 0; i < 2; ++i) {
    for (int r = 0; r < 2; ++r) {
      const ConditionalTable t = conditional_outcome_probs(box, i, r);
      conditionals.push_back({{"i", i}, {"r", r}, {"p_s_given_j", {{t[0][0], t[0][1]}, {t[1][0], t[1][1]}}}});
    }
  }
  Json doc{{"lambda", lambda},       {"S", chsh_value(box)},      {"is_ns", ns.is_ns},
           {"max_violation", ns.max_violation}, {"correlators", correlators}, {"conditionals", conditionals}};
  emit(c, {{c.out_path, render_json(doc)}}, {{"lambda", lambda}});
  return kExitOk;
}

int run_bound_lambda(const Common& c, const std::string& eta_spec) {
  const EtaFunction eta = parse_eta(eta_spec);
  const double inv = eta_inverse(eta, 0.25);
  Json doc{{"eta_name", eta.name()}, {"eta_inv_quarter", inv}, {"lambda_bound", 1.0 - 2.0 * inv}};
  emit(c, {{c.out_path, render_json(doc)}}, {{"eta", eta_spec}});
  return kExitOk;
}

int run_bound_tau(const Common& c, const std::string& eta_spec) {
  const EtaFunction eta = parse_eta(eta_spec);
  const TauBound tb = tau_bound_solver(eta);
  constexpr int kGrid = 10000;
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < kGrid; ++k) {
    const double t = static_cast<double>(k) / (kGrid - 1);
    if (fano_lower_bound(t, eta) <= 1.0) {
      lo = t;
      hi = std::min(1.0, static_cast<double>(k + 1) / (kGrid - 1));
    }
  }
  const bool consistent = tb.tau_star >= lo && tb.tau_star <= hi;
  Json doc{{"eta_name", eta.name()},
           {"tau_star", tb.tau_star},
           {"fano_at_tau_star", tb.fano_at_tau_star},
           {"bracket", {tb.bracket_lo, tb.bracket_hi}},
           {"trivial", tb.trivial},
           {"closed_form_argument", tb.closed_form_argument},
           {"grid_crosscheck", {{"points", kGrid}, {"lo", lo}, {"hi", hi}, {"consistent", consistent}}}};
  emit(c, {{c.out_path, render_json(doc)}}, {{"eta", eta_spec}});
  return consistent ? kExitOk : kExitNumeric;
}

int run_vandam_exact(const Common& c, double tau, const std::string& range) {
  const auto [a, b] = parse_range(range);
  std::vector<Row> rows;
  Json records = Json::array();
  for (int n = a; n <= b; ++n) {
    const double p = vandam::exact_success_probability(n, tau);
    const double jn = vandam::jn_exact(n, tau);
    const double lb = jn_lower_bound(tau, n);
    rows.push_back({static_cast<std::int64_t>(n), p, jn, lb});
    records.push_back({{"n", n}, {"p_exact", p}, {"jn_exact", jn}, {"jn_lb", lb}});
  }
  const std::string csv = render_csv({"n", "p_exact", "jn_exact", "jn_lb"}, rows);
  std::vector<Output> outputs;
  if (!c.csv_path.empty() || c.out_path.empty()) outputs.push_back({c.csv_path, csv});
  if (!c.out_path.empty()) {
    outputs.push_back({c.out_path, render_json({{"tau", tau}, {"rows", records}})});
  }
  emit(c, outputs, {{"tau", tau}, {"n", range}});
  return kExitOk;
}

int run_vandam_mc(const Common& c, double tau, int n, long long trials, const std::string& targets_text) {
  if (trials < 1) throw ValidationError("vandam mc: --trials must be positive");
  const vandam::ProtocolConfig config{n, tau, static_cast<std::uint64_t>(trials), c.seed};
  config.validate();
  const std::vector<std::size_t> targets = parse_targets(targets_text, n);
  const vandam::RunReport rep = vandam::simulate(config, targets, c.worker_count());
  Json list = Json::array();
  for (const auto& t : rep.targets) {
    list.push_back({{"index", t.index}, {"successes", t.successes}, {"frequency", t.frequency},
                    {"sigma", t.sigma}, {"z", t.sigma > 0 ? (t.frequency - rep.p_exact) / t.sigma : 0.0}});
  }
  Json doc{{"n", n},
           {"tau", tau},
           {"trials", trials},
           {"seed", c.seed},
           {"rng", rep.rng},
           {"p_exact", rep.p_exact},
           {"jn_exact", rep.jn_exact},
           {"jn_lower_bound", rep.jn_lower_bound},
           {"targets", list}};
  emit(c, {{c.out_path, render_json(doc)}},
       {{"tau", tau}, {"n", n}, {"trials", trials}, {"targets", targets_text}},
       {{"wall_clock_seconds", rep.wall_clock_seconds}, {"threads", c.worker_count()}});
  return kExitOk;
}

int run_vandam_threshold(const Common& c, double tau) {
  try {
    const vandam::Threshold t = vandam::violation_threshold(tau);
    Json doc{{"tau", tau}, {"n_star", t.n_star}, {"jn_at_n_star", t.jn_at_n_star}};
    emit(c, {{c.out_path, render_json(doc)}}, {{"tau", tau}});
    return kExitOk;
  } catch (const ThresholdOverflowError& e) {
    *c.err << "error: " << e.what() << " (J_24 = " << format_real(e.last_value()) << ")\n";
    return kExitNumeric;
  }
}

int run_jn_lb(const Common& c, double tau, const std::string& range) {
  const auto [a, b] = parse_range(range);
  if (a < 1) throw ValidationError("jn-lb: n must be positive");
  std::vector<Row> rows;
  for (int n = a; n <= b; ++n) rows.push_back({static_cast<std::int64_t>(n), jn_lower_bound(tau, n)});
  const std::string csv = render_csv({"n", "jn_lower_bound"}, rows);
  emit(c, {{c.csv_path.empty() ? c.out_path : c.csv_path, csv}}, {{"tau", tau}, {"n", range}});
  return kExitOk;
}

int run_lemma35(const Common& c, int trials) {
  if (trials < 1) throw ValidationError("lemma35: --trials must be positive");
  struct Family {
    const char* name;
    std::function<double(double)> f;
  };
  const std::vector<Family> families{{"identity", [](double x) { return x; }},
                                     {"eta_quantum", eta_quantum},
                                     {"square", [](double x) { return x * x; }}};
  Json doc{{"trials", trials}, {"seed", c.seed}, {"rng", SplitMix64::kName}};
  Json fams = Json::object();
  std::size_t total_violations = 0;
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    std::vector<Lemma35Report> reps(static_cast<std::size_t>(trials));
    parallel_for(reps.size(), c.worker_count(), [&](std::size_t t) {
      SplitMix64 rng = SplitMix64::stream(c.seed, fi * static_cast<std::size_t>(trials) + t);
      const double cc = 0.05 + 0.95 * rng.uniform();
      const double eps = cc * cc * (1.0 - rng.uniform());
      const std::size_t k = 2 + rng.below(4);
      std::vector<double> p(k), e(k);
      double total = 0.0;
      for (auto& v : p) total += (v = rng.uniform() + 1e-3);
      for (auto& v : p) v /= total;
      double mean = 0.0;
      for (std::size_t i = 0; i < k; ++i) mean += p[i] * (e[i] = cc * rng.uniform());
      if (mean > eps) {
        const double scale = eps / mean * (1.0 - 1e-9) * rng.uniform(0.5, 1.0);
        for (auto& v : e) v *= scale;
      }
      reps[t] = lemma35_check(families[fi].f, p, e, eps, cc);
    });
    std::size_t violations = 0;
    double worst = -INFINITY;
    for (const auto& r : reps) {
      if (!r.holds) ++violations;
      worst = std::max(worst, r.lhs - r.rhs);
    }
    total_violations += violations;
    fams[families[fi].name] = {{"violations", violations}, {"max_lhs_minus_rhs", worst}};
  }
  doc["families"] = fams;
  doc["all_hold"] = total_violations == 0;
  emit(c, {{c.out_path, render_json(doc)}}, {{"trials", trials}});
  return total_violations == 0 ? kExitOk : kExitNumeric;
}

int run_suite_acceptance(const Common& c) {
  const std::vector<CriterionResult> results = run_acceptance(c.seed, c.worker_count());
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    *c.err << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << " (" << r.name
           << "): " << r.detail << "\n";
  }
  Json timing = Json::object();
  for (const auto& r : results) timing[std::to_string(r.id)] = r.seconds;
  std::vector<Output> outputs{{c.out_path, render_json(acceptance_primary_json(results, c.seed))}};
  if (!c.csv_path.empty()) outputs.push_back({c.csv_path, acceptance_csv(results)});
  emit(c, outputs, {{"suite", "acceptance"}}, timing);
  return all ? kExitOk : kExitNumeric;
}

}  // namespace

// --------------------------------------------------------------- dispatch

int dispatch(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args = raw_args;
  try {
    for (std::size_t i = 1; i < raw_args.size(); ++i) {
      std::string file;
      if (raw_args[i] == "--params" && i + 1 < raw_args.size()) file = raw_args[i + 1];
      if (raw_args[i].rfind("--params=", 0) == 0) file = raw_args[i].substr(9);
      if (!file.empty()) args = apply_params(raw_args, read_json_file(file));
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }

  CLI::App app{"gmplab: stretched quantum theory and gentle measurement laboratory", "gmplab"};
  app.fallthrough();
  app.require_subcommand(1);

  Common c;
  c.argv = raw_args;
  c.out = &out;
  c.err = &err;
  std::string params_file;
  app.add_option("--seed", c.seed, "Master seed");
  app.add_option("--threads", c.threads, "Worker threads (default: GMPLAB_THREADS or core count)");
  app.add_option("--out", c.out_path, "Primary output path (stdout when omitted)");
  app.add_option("--csv", c.csv_path, "CSV output path");
  app.add_option("--params", params_file, "JSON file of flag overrides");

  double tau = 0.0;
  double lambda = 0.0;
  int dim = 2;
  int trials_i = 1000;
  long long trials_ll = 100000;
  int layers = 1;
  std::string range = "1";
  std::string eta_spec = "quantum";
  std::string targets = "all";
  std::string file;

  auto* gentle = app.add_subcommand("gentle", "Gentle measurement lemma sweeps");
  gentle->require_subcommand(1);
  auto* gentle_verify = gentle->add_subcommand("verify", "Random sweep of the gentle measurement lemma");
  gentle_verify->add_option("--dim", dim, "Hilbert space dimension")->required();
  gentle_verify->add_option("--trials", trials_i, "Number of random (rho, X) pairs");

  auto* cone = app.add_subcommand("cone", "Stretched-theory cone membership");
  cone->require_subcommand(1);
  auto* cone_state = cone->add_subcommand("state", "State-set membership");
  auto* cone_effect = cone->add_subcommand("effect", "Qubit effect-cone membership");
  for (auto* sub : {cone_state, cone_effect}) {
    sub->add_option("--tau", tau, "Stretching parameter")->required();
    sub->add_option("--file", file, "Matrix JSON file")->required();
  }

  auto* chsh = app.add_subcommand("chsh", "CHSH value of an isotropic box");
  chsh->add_option("--lambda", lambda, "Isotropic mixing weight")->required();

  auto* bound = app.add_subcommand("bound", "GMP-derived bounds");
  bound->require_subcommand(1);
  auto* bound_lambda = bound->add_subcommand("lambda", "lambda <= 1 - 2 eta^{-1}(1/4)");
  auto* bound_tau = bound->add_subcommand("tau", "Largest tau compatible with the Fano bound");
  for (auto* sub : {bound_lambda, bound_tau}) sub->add_option("--eta", eta_spec, "quantum or file:PATH");

  auto* vandam = app.add_subcommand("vandam", "Nested van Dam protocol");
  vandam->require_subcommand(1);
  auto* vandam_exact = vandam->add_subcommand("exact", "Exact success probability and J_n");
  vandam_exact->add_option("--tau", tau)->required();
  vandam_exact->add_option("--n", range, "Layer range A..B")->required();
  auto* vandam_mc = vandam->add_subcommand("mc", "Monte Carlo run");
  vandam_mc->add_option("--tau", tau)->required();
  vandam_mc->add_option("--n", layers, "Layer count")->required();
  vandam_mc->add_option("--trials", trials_ll, "Trials per target");
  vandam_mc->add_option("--targets", targets, "all or comma-separated indices");
  auto* vandam_threshold = vandam->add_subcommand("threshold", "Smallest n with J_n > 1");
  vandam_threshold->add_option("--tau", tau)->required();

  auto* jn_lb = app.add_subcommand("jn-lb", "Lower bound on J_n");
  jn_lb->add_option("--tau", tau)->required();
  jn_lb->add_option("--n,--n-range", range, "Layer range A..B")->required();

  auto* lemma35 = app.add_subcommand("lemma35", "Randomized square-root concavity sweep");
  lemma35->add_option("--trials", trials_i, "Instances per function family");

  auto* suite = app.add_subcommand("suite", "Experiment suites");
  suite->require_subcommand(1);
  auto* suite_acceptance = suite->add_subcommand("acceptance", "Run every acceptance criterion");

  std::vector<std::string> reversed(args.rbegin(), std::prev(args.rend()));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (*gentle_verify) return run_gentle_verify(c, dim, trials_i);
    if (*cone_state) return run_cone_state(c, tau, file);
    if (*cone_effect) return run_cone_effect(c, tau, file);
    if (*chsh) return run_chsh(c, lambda);
    if (*bound_lambda) return run_bound_lambda(c, eta_spec);
    if (*bound_tau) return run_bound_tau(c, eta_spec);
    if (*vandam_exact) return run_vandam_exact(c, tau, range);
    if (*vandam_mc) return run_vandam_mc(c, tau, layers, trials_ll, targets);
    if (*vandam_threshold) return run_vandam_threshold(c, tau);
    if (*jn_lb) return run_jn_lb(c, tau, range);
    if (*lemma35) return run_lemma35(c, trials_i);
    if (*suite_acceptance) return run_suite_acceptance(c);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ToleranceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace gmplab::cli
