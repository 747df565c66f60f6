// Copyright 2026 The mpor Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "mpor/audit_stats.hpp"
#include "mpor/shacham_waters.hpp"
#include "scenario.hpp"

namespace mpor::cli {

namespace fs = std::filesystem;

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_json(const fs::path& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

Json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string() + " (run setup first?)");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument("malformed " + path.string() + ": " + e.what());
  }
}

fs::path prover_file(const fs::path& dir, std::size_t i) { return dir / ("prover_" + std::to_string(i) + ".json"); }

struct Loaded {
  VerifierState verifier;
  std::vector<ProverState> provers;
};

Loaded load_state(const fs::path& dir, const Scenario& sc, const MporSystem& system) {
  Loaded l;
  l.verifier = verifier_from_json(read_json(dir / "verifier.json"), sc.q);
  if (l.verifier.kind != sc.kind) throw std::invalid_argument("verifier.json was written for another scheme kind");
  for (std::size_t i = 1; i <= system.rho(); ++i) l.provers.push_back(prover_from_json(read_json(prover_file(dir, i)), sc.q));
  return l;
}

Json do_setup(const fs::path& dir, const Scenario& sc, const MporSystem& system) {
  const auto message = scenario_message(sc, system);
  const SetupResult r = system.setup_with_coins(message, scenario_coins(sc, system));
  fs::create_directories(dir);
  write_json(dir / "verifier.json", to_json(r.verifier, sc.q));
  Json shares = Json::array();
  for (const auto& p : r.provers) {
    write_json(prover_file(dir, p.index), to_json(p));
    shares.push_back({{"prover", p.index}, {"share", elements_to_json(p.share)}});
  }
  return {{"kind", to_string(sc.kind)},
          {"message", elements_to_json(message)},
          {"shares", shares},
          {"storage", to_json(system.storage_accounting(r.verifier))}};
}

Json do_audit(const fs::path& dir, const Scenario& sc, const MporSystem& system, std::uint64_t rounds) {
  Loaded l = load_state(dir, sc, system);
  const auto provers = build_provers(sc, system, std::move(l.provers));
  AuditTranscript transcript;
  const std::uint64_t gamma = system.base().challenge_count();
  for (const auto& [i, prover] : provers) {
    SeededRng rng = SeededRng(sc.seed).stream(2).stream(i);
    for (std::uint64_t r = 0; r < rounds; ++r) system.audit(l.verifier, i, prover, rng.uniform(gamma), &transcript);
  }
  write_json(dir / "transcript.json", to_json(transcript));
  const TranscriptCounts counts = transcript_to_counts(transcript);
  const TestOutcome outcome = audit_hypothesis_test(counts.b, counts.c, counts.rho, sc.eta, sc.alpha);
  Json j = to_json(outcome);
  j["c"] = counts.c;
  j["rho"] = counts.rho;
  j["eta"] = sc.eta;
  write_json(dir / "outcome.json", j);
  return j;
}

Json do_extract(const fs::path& dir, const Scenario& sc, const MporSystem& system, ExtractionMode mode,
                const std::vector<std::size_t>& subset) {
  Loaded l = load_state(dir, sc, system);
  const auto provers = build_provers(sc, system, std::move(l.provers));
  const ExtractionReport report = mode == ExtractionMode::WorstCase
                                      ? system.extract_worst_case(l.verifier, provers, subset)
                                      : system.extract_average(l.verifier, provers);
  const Json j = to_json(report);
  write_json(dir / "extraction.json", j);
  return j;
}

ExtractionMode parse_mode(const std::string& s) {
  if (s == "worst-case") return ExtractionMode::WorstCase;
  if (s == "average-case") return ExtractionMode::AverageCase;
  throw std::invalid_argument("mode must be worst-case or average-case");
}

struct Preset {
  const char* name;
  std::vector<double> f;
  std::uint64_t t;
  std::vector<std::uint64_t> b;
};

const std::vector<Preset>& presets() {
  static const std::vector<Preset> list = {
      {"uniform-0.1", {0.1, 0.1, 0.1, 0.1, 0.1}, 200, {5, 10, 50, 100}},
      {"uniform-0.01", {0.01, 0.01, 0.01, 0.01, 0.01}, 200, {5, 10, 20, 50}},
      {"skewed-0.2", {0.2, 0.01, 0.02, 0.03, 0.04}, 200, {5, 10, 20, 50}},
      {"mixed-0.05", {0.01, 0.01, 0.03, 0.04, 0.05}, 200, {5, 10, 20, 50}},
      {"short-0.01", {0.01, 0.01, 0.01, 0.01, 0.01}, 40, {0, 5, 10, 15, 20}},
      {"tail-0.02", {0.02, 0.0075, 0.0075, 0.0075, 0.0075}, 20, {0, 5, 10, 15, 20}},
  };
  return list;
}

void print_table1(std::ostream& out, const std::vector<double>& f, std::uint64_t t, const std::vector<std::uint64_t>& b) {
  std::string fv;
  for (std::size_t i = 0; i < f.size(); ++i) fv += (i ? ";" : "") + num(f[i]);
  for (const auto& row : poisson_vs_exact_report(f, t, b)) {
    out << fv << ',' << t << ',' << row.b << ',' << num(row.exact) << ',' << num(row.poisson) << ',' << num(row.gap)
        << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multi-prover proof-of-retrievability simulator"};
  app.require_subcommand(1);
  std::string workdir = ".";
  app.add_option("--workdir", workdir, "Directory for scenario-relative paths and artifacts");

  std::string scenario_path;
  auto* setup = app.add_subcommand("setup", "Share, encode and tag a message; writes verifier.json and prover_<i>.json");
  setup->add_option("--scenario", scenario_path, "Scenario file")->required();

  std::uint64_t rounds = 0;
  bool rounds_given = false;
  std::string transcript_path;
  double eta = 0.9;
  double alpha = 0.05;
  auto* audit = app.add_subcommand("audit", "Audit every prover; writes transcript.json and outcome.json");
  auto* audit_scenario = audit->add_option("--scenario", scenario_path, "Scenario file");
  auto* rounds_opt = audit->add_option("--rounds", rounds, "Challenges per prover (default: scenario audits_per_prover)");
  auto* transcript_opt = audit->add_option("--transcript", transcript_path, "Test an existing transcript instead");
  auto* eta_opt = audit->add_option("--eta", eta, "Success threshold eta (default: scenario value or 0.9)");
  auto* alpha_opt = audit->add_option("--alpha", alpha, "Significance level (default: scenario value or 0.05)");
  transcript_opt->excludes(rounds_opt);

  std::string mode_name;
  std::vector<std::size_t> subset;
  auto* extract = app.add_subcommand("extract", "Run an extractor; writes extraction.json");
  extract->add_option("--scenario", scenario_path, "Scenario file")->required();
  auto* mode_opt = extract->add_option("--mode", mode_name, "worst-case or average-case (default: scenario)");
  auto* subset_opt = extract->add_option("--subset", subset, "Provers for worst-case extraction, e.g. 1,3,4,6")->delimiter(',');

  auto* simulate = app.add_subcommand("simulate", "setup, audit and extract in one run");
  simulate->add_option("--scenario", scenario_path, "Scenario file")->required();

  auto* stats = app.add_subcommand("stats", "Statistics tables (CSV on stdout)");
  stats->require_subcommand(1);
  std::vector<double> f;
  std::uint64_t t = 0;
  std::vector<std::uint64_t> bs;
  std::string preset;
  auto* table1 = stats->add_subcommand("table1", "Exact Poisson-binomial vs Poisson CDF");
  auto* f_opt = table1->add_option("--f", f, "Per-prover failure probabilities")->delimiter(',');
  table1->add_option("--t", t, "Trials per prover");
  table1->add_option("--b", bs, "Failure counts")->delimiter(',');
  auto* preset_opt = table1->add_option("--preset", preset, "Named parameter set (see --list)");
  bool list = false;
  table1->add_flag("--list", list, "List presets");
  preset_opt->excludes(f_opt);

  std::uint64_t b = 0;
  auto* ci = stats->add_subcommand("ci", "Upper confidence bound lambda_U");
  ci->add_option("--b", b, "Observed failures")->required();
  ci->add_option("--alpha", alpha, "Significance level");

  std::size_t n = 0, ell = 0, d = 0;
  std::uint64_t q = 0;
  auto* dstar = stats->add_subcommand("dstar", "Approximate Shacham-Waters response-code distance");
  dstar->add_option("--n", n, "Blocks")->required();
  dstar->add_option("--l", ell, "Challenge weight")->required();
  dstar->add_option("--d", d, "Distance of the encoded message space")->required();
  dstar->add_option("--q", q, "Field size (prime)")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const fs::path dir(workdir);
  const auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? fs::path(p) : dir / p; };
  try {
    if (*setup) {
      const Scenario sc = load_scenario(resolve(scenario_path));
      out << do_setup(dir, sc, build_system(sc)).dump(2) << '\n';
    } else if (*audit) {
      if (!transcript_path.empty()) {
        const FieldModulus m = scenario_path.empty() ? FieldModulus(2305843009213693951ULL)
                                                     : load_scenario(resolve(scenario_path)).q;
        const AuditTranscript tr = transcript_from_json(read_json(resolve(transcript_path)), m);
        const TranscriptCounts counts = transcript_to_counts(tr);
        Json j = to_json(audit_hypothesis_test(counts.b, counts.c, counts.rho, eta, alpha));
        j["c"] = counts.c;
        j["rho"] = counts.rho;
        j["eta"] = eta;
        out << j.dump(2) << '\n';
      } else {
        if (audit_scenario->count() == 0) throw std::invalid_argument("audit needs --scenario or --transcript");
        Scenario sc = load_scenario(resolve(scenario_path));
        if (*eta_opt) sc.eta = eta;
        if (*alpha_opt) sc.alpha = alpha;
        rounds_given = rounds_opt->count() > 0;
        out << do_audit(dir, sc, build_system(sc), rounds_given ? rounds : sc.audits_per_prover).dump(2) << '\n';
      }
    } else if (*extract) {
      const Scenario sc = load_scenario(resolve(scenario_path));
      const ExtractionMode mode = *mode_opt ? parse_mode(mode_name) : sc.extract_mode;
      out << do_extract(dir, sc, build_system(sc), mode, *subset_opt ? subset : sc.subset).dump(2) << '\n';
    } else if (*simulate) {
      const Scenario sc = load_scenario(resolve(scenario_path));
      const MporSystem system = build_system(sc);
      Json j;
      j["setup"] = do_setup(dir, sc, system);
      j["audit"] = do_audit(dir, sc, system, sc.audits_per_prover);
      j["extraction"] = do_extract(dir, sc, system, sc.extract_mode, sc.subset);
      write_json(dir / "simulation.json", j);
      out << j.dump(2) << '\n';
    } else if (*table1) {
      if (list) {
        for (const auto& p : presets()) out << p.name << '\n';
        return 0;
      }
      out << "f_vector,t,b,exact,poisson,gap\n";
      if (!preset.empty()) {
        const Preset* found = nullptr;
        for (const auto& p : presets()) found = p.name == preset ? &p : found;
        if (found == nullptr) throw std::invalid_argument("unknown preset '" + preset + "'");
        print_table1(out, found->f, found->t, found->b);
      } else {
        if (f.empty() || t == 0 || bs.empty()) throw std::invalid_argument("table1 needs --f, --t and --b, or --preset");
        print_table1(out, f, t, bs);
      }
    } else if (*ci) {
      out << "b,alpha,lambda_u\n" << b << ',' << num(alpha) << ',' << num(lambda_upper(b, alpha)) << '\n';
    } else if (*dstar) {
      const Rational v = sw_dstar(n, ell, d, FieldModulus(q));
      out << "n,l,d,q,dstar,dstar_decimal\n"
          << n << ',' << ell << ',' << d << ',' << q << ',' << to_string(v) << ',' << num(to_double(v)) << '\n';
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mpor::cli
