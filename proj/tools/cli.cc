// Copyright 2026 The maxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "maxlab/generators.h"
#include "maxlab/io.h"
#include "maxlab/maximal.h"
#include "maxlab/metric.h"
#include "maxlab/theorem_lab.h"

namespace maxlab::cli {
namespace {

using io::json;

struct Outcome {
  json result;
  int code = kExitOk;
};

// Loaded inputs plus their provenance for the report header.
class Inputs {
 public:
  explicit Inputs(const RunConfig& cfg) : cfg_(cfg) {}

  const FiniteMetricSpace& space() {
    if (!space_) {
      require(cfg_.space_path, "--space");
      record("space", cfg_.space_path);
      auto raw = io::load_raw_space(cfg_.space_path);
      space_ = FiniteMetricSpace::create(std::move(raw.dist), std::move(raw.labels));
    }
    return *space_;
  }

  DiscreteMeasure measure() {
    require(cfg_.measure_path, "--measure");
    return io::measure_from_json(load_json("measure", cfg_.measure_path), space().size());
  }

  SampleFunction function() {
    require(cfg_.function_path, "--fn");
    return io::function_from_json(load_json("fn", cfg_.function_path), space().size());
  }

  json load_json(const std::string& role, const std::string& path) {
    record(role, path);
    return io::parse_json(io::read_file(path), path);
  }

  void record(const std::string& role, const std::string& path) {
    if (provenance_.contains(role)) return;
    provenance_[role] = {{"path", path}, {"content_hash", io::content_hash(io::read_file(path))}};
  }

  const json& provenance() const { return provenance_; }

 private:
  static void require(const std::string& path, const char* flag) {
    if (path.empty()) throw InputError(std::string("missing required flag ") + flag);
  }

  const RunConfig& cfg_;
  std::optional<FiniteMetricSpace> space_;
  json provenance_ = json::object();
};

// --expect handling: `observed` is "equal" or "distinct".
int expectation_code(const RunConfig& cfg, const std::string& observed) {
  if (cfg.expect.empty() || cfg.expect == observed) return kExitOk;
  return kExitFalsified;
}

Outcome cmd_validate(const RunConfig& cfg, Inputs& in) {
  if (cfg.space_path.empty()) throw InputError("missing required flag --space");
  in.record("space", cfg.space_path);
  auto raw = io::load_raw_space(cfg.space_path);
  const auto result = validate_space(std::move(raw.dist), std::move(raw.labels));
  json j = io::validation_to_json(result);
  if (result.ok()) {
    const auto um = is_ultrametric(*result.space);
    j["ultrametric"] = um.ultrametric;
  }
  return {std::move(j), result.ok() ? kExitOk : kExitInputError};
}

Outcome cmd_balls(const RunConfig&, Inputs& in) {
  const auto& space = in.space();
  return {io::balls_to_json(space, enumerate_balls(space))};
}

Outcome cmd_maximal(const RunConfig& cfg, Inputs& in) {
  const auto& space = in.space();
  const auto mu = in.measure();
  const auto f = in.function();
  const auto report = maximal_field(f, mu, space, cfg.parallel);
  return {io::maximal_report_to_json(space, report),
          expectation_code(cfg, report.coincide() ? "equal" : "distinct")};
}

Outcome cmd_coincide(const RunConfig& cfg, Inputs& in) {
  const auto& space = in.space();
  const auto mu = in.measure();
  CoincidenceVerdict verdict;
  if (cfg.mode == "exact") {
    verdict = coincidence_exact(space, mu);
  } else if (cfg.mode == "randomized") {
    verdict = coincidence_randomized(space, mu, cfg.trials, cfg.seed.value_or(0), cfg.range);
  } else {
    throw InputError("--mode must be exact or randomized");
  }
  json j = io::verdict_to_json(space, verdict);
  const bool verified = verify_verdict(space, mu, verdict);
  j["verified"] = verified;
  if (!verified) return {std::move(j), kExitFalsified};
  return {std::move(j), expectation_code(cfg, to_string(verdict.verdict))};
}

Outcome cmd_witness(const RunConfig& cfg, Inputs& in) {
  const auto& space = in.space();
  const auto um = is_ultrametric(space);
  json j;
  j["ultrametric"] = um.ultrametric;
  if (um.ultrametric) {
    j["witness"] = nullptr;
    const std::string expect = cfg.expect.empty() ? "distinct" : cfg.expect;
    return {std::move(j), expect == "equal" ? kExitOk : kExitFalsified};
  }
  const auto& t = *um.violation;
  const Witness w = construct_witness(space, t);
  j["triple"] = {{"x", space.label(t.x)}, {"y", space.label(t.y)}, {"z", space.label(t.z)}};
  j["witness"] = io::witness_to_json(space, w);
  const bool verified = verify_witness(space, w);
  j["verified"] = verified;
  if (!verified) return {std::move(j), kExitFalsified};
  return {std::move(j), expectation_code(cfg, "distinct")};
}

Outcome cmd_ball_infimum(const RunConfig& cfg, Inputs& in) {
  const auto& space = in.space();
  const auto report = check_ball_infimum(space, in.measure());
  return {io::ball_infimum_to_json(space, report),
          expectation_code(cfg, report.all_hold() ? "equal" : "distinct")};
}

Outcome cmd_lsc(const RunConfig& cfg, Inputs& in) {
  const auto& space = in.space();
  const auto mu = in.measure();
  if (cfg.nu_path.empty()) throw InputError("missing required flag --nu");
  const json nu = in.load_json("nu", cfg.nu_path);
  if (!nu.contains("sequence") || !nu.at("sequence").is_array()) {
    throw InputError("nu: missing array \"sequence\"");
  }
  std::vector<DiscreteMeasure> seq;
  for (std::size_t i = 0; i < nu.at("sequence").size(); ++i) {
    auto w = io::scalars_from_json(nu.at("sequence")[i], "nu.sequence[" + std::to_string(i) + "]");
    if (w.size() != space.size()) throw InputError("nu.sequence: wrong length");
    seq.emplace_back(std::move(w));
  }
  if (!nu.contains("limit")) throw InputError("nu: missing \"limit\"");
  auto lw = io::scalars_from_json(nu.at("limit"), "nu.limit");
  if (lw.size() != space.size()) throw InputError("nu.limit: wrong length");
  const DiscreteMeasure limit(std::move(lw));
  if (!nu.contains("point") || !nu.at("point").is_string())
    throw InputError("nu: missing \"point\"");
  const auto x = space.find(nu.at("point").get<std::string>());
  if (!x) throw InputError("nu.point: unknown label");
  const Rational bound =
      nu.contains("bound") ? io::scalar_from_json(nu.at("bound"), "nu.bound") : Rational(1, 10);
  const auto report = lsc_check(mu, space, seq, limit, *x, bound);
  return {io::lsc_to_json(space, report), report.ok() ? kExitOk : kExitFalsified};
}

Outcome cmd_demo_grid(const RunConfig& cfg, Inputs&) {
  const auto demo = build_grid_demo(cfg.n);
  const bool ok = demo.gap.is_positive() && demo.gap == demo.closed_form_gap;
  return {io::grid_demo_to_json(demo), ok ? expectation_code(cfg, "distinct") : kExitFalsified};
}

Outcome cmd_gen(const RunConfig& cfg, Inputs&) {
  const std::uint64_t seed = cfg.seed.value_or(0);
  std::optional<FiniteMetricSpace> space;
  if (cfg.family == "ultrametric") {
    space = gen_ultrametric(cfg.n, seed);
  } else if (cfg.family == "taxicab") {
    space = gen_taxicab(cfg.n, cfg.dim, cfg.range, seed);
  } else if (cfg.family == "graph") {
    space = gen_graph_metric(cfg.n, cfg.probability, {Rational(1), Rational(5)}, seed);
  } else {
    throw InputError("--family must be ultrametric, taxicab or graph");
  }
  const auto mu = gen_measure(*space, derive_seed(seed, 1), cfg.zero_fraction);
  const auto f = gen_function(*space, derive_seed(seed, 2), cfg.range);
  json j;
  j["family"] = cfg.family;
  j["space"] = io::space_to_json(*space);
  j["measure"] = io::measure_file_json(mu, &f);
  j["ultrametric"] = is_ultrametric(*space).ultrametric;
  if (!cfg.space_out_path.empty()) {
    io::write_file(cfg.space_out_path, io::space_to_json(*space).dump(2) + "\n");
  }
  if (!cfg.measure_out_path.empty()) {
    io::write_file(cfg.measure_out_path, io::measure_file_json(mu, &f).dump(2) + "\n");
  }
  return {std::move(j)};
}

void add_common(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--space", cfg.space_path, "Space file (JSON or .csv)");
  sub->add_option("--measure", cfg.measure_path, "Measure file with \"weights\"");
  sub->add_option("--fn", cfg.function_path, "Function file with \"f\"");
  sub->add_option("--mode", cfg.mode, "exact | randomized");
  sub->add_option("--trials", cfg.trials, "Randomized trials");
  sub->add_option("--seed", cfg.seed, "64-bit seed (falls back to MAXLAB_SEED)");
  sub->add_option("--expect", cfg.expect, "equal | distinct")
      ->check(CLI::IsMember({"equal", "distinct"}));
  sub->add_option("--out", cfg.out_path, "Report path (stdout when absent)");
  sub->add_flag("--parallel", cfg.parallel, "Concurrent per-point evaluation");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact Hardy-Littlewood maximal operators on finite metric measure spaces",
               "maxlab"};
  app.require_subcommand(1);

  const std::map<std::string, std::function<Outcome(const RunConfig&, Inputs&)>> handlers{
      {"validate", cmd_validate}, {"balls", cmd_balls},         {"maximal", cmd_maximal},
      {"coincide", cmd_coincide}, {"witness", cmd_witness},     {"ball-infimum", cmd_ball_infimum},
      {"lsc", cmd_lsc},           {"demo-grid", cmd_demo_grid}, {"gen", cmd_gen}};
  const std::map<std::string, std::string> blurbs{
      {"validate", "Check the metric axioms and report every violation"},
      {"balls", "Enumerate the distinct closed balls"},
      {"maximal", "Centered and non-centered maximal functions on the support"},
      {"coincide", "Decide whether the two operators agree for every function"},
      {"witness", "Build a strict-gap witness from a non-ultrametric triple"},
      {"ball-infimum", "Check the ball-infimum inequality and its symmetric form"},
      {"lsc", "Lower semicontinuity along a convergent measure sequence"},
      {"demo-grid", "Uniform grid on [0,2] with the indicator of [0,1]"},
      {"gen", "Generate a seeded space with a measure and a function"}};
  for (const auto& [name, blurb] : blurbs) {
    CLI::App* sub = app.add_subcommand(name, blurb);
    add_common(sub, cfg);
    if (name == "lsc") sub->add_option("--nu", cfg.nu_path, "Sequence file");
    if (name == "demo-grid" || name == "gen") sub->add_option("--n", cfg.n, "Size parameter");
    if (name == "gen") {
      sub->add_option("--family", cfg.family, "ultrametric | taxicab | graph");
      sub->add_option("--dim", cfg.dim, "Taxicab dimension");
      sub->add_option("--range", cfg.range, "Coordinate / function value range");
      sub->add_option("--probability", cfg.probability, "Graph edge probability");
      sub->add_option("--zero-fraction", cfg.zero_fraction, "Fraction of weightless points");
      sub->add_option("--space-out", cfg.space_out_path, "Also write the space file here");
      sub->add_option("--measure-out", cfg.measure_out_path, "Also write the measure file here");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  for (const auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

  if (cfg.seed) {
    cfg.seed_source = "flag";
  } else if (const char* env = std::getenv("MAXLAB_SEED")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used, 10);
      if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
      cfg.seed_source = "MAXLAB_SEED";
    } catch (const std::exception&) {
      err << "error: MAXLAB_SEED is not a 64-bit unsigned integer\n";
      return kExitInputError;
    }
  }

  Inputs inputs(cfg);
  Outcome outcome;
  try {
    outcome = handlers.at(cfg.subcommand)(cfg, inputs);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitInputError;
  }

  json report;
  report["subcommand"] = cfg.subcommand;
  report["seed"] = cfg.seed ? json(*cfg.seed) : json(nullptr);
  report["seed_source"] = cfg.seed_source;
  report["inputs"] = inputs.provenance();
  if (!cfg.expect.empty()) report["expect"] = cfg.expect;
  report["status"] = outcome.code == kExitOk          ? "as_expected"
                     : outcome.code == kExitFalsified ? "falsified"
                                                      : "input_error";
  report["result"] = std::move(outcome.result);

  const std::string text = report.dump(2) + "\n";
  try {
    if (cfg.out_path.empty()) {
      out << text;
    } else {
      io::write_file(cfg.out_path, text);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return outcome.code;
}

}  // namespace maxlab::cli
