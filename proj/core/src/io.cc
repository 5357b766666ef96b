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

#include "maxlab/io.h"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace maxlab::io {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(
        trim(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

json labels_json(const FiniteMetricSpace& space, const std::vector<PointIndex>& points) {
  return json(labels_of(space, points));
}

std::vector<PointIndex> points_from_labels(const FiniteMetricSpace& space, const json& j,
                                           const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of labels");
  std::vector<PointIndex> out;
  for (const auto& item : j)
    out.push_back(space.find(item.get<std::string>()).value_or(space.size()));
  for (PointIndex p : out) {
    if (p >= space.size()) throw InputError(where + ": unknown label");
  }
  return out;
}

PointIndex point_from_label(const FiniteMetricSpace& space, const json& j,
                            const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a label string");
  auto p = space.find(j.get<std::string>());
  if (!p) throw InputError(where + ": unknown label '" + j.get<std::string>() + "'");
  return *p;
}

const json& require_key(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(where + ": missing key \"" + key + "\"");
  }
  return j.at(key);
}

json ball_json(const FiniteMetricSpace& space, const Ball& ball) {
  json j;
  j["center"] = space.label(ball.center);
  put_scalar(j, "radius", ball.radius);
  j["members"] = labels_json(space, ball.members);
  return j;
}

}  // namespace

Rational scalar_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) {
      return Rational::parse(j.dump());
    }
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
  if (j.is_number_float()) {
    throw InputError(where + ": floating-point JSON number " + j.dump() +
                     " is not exact; quote it as a decimal string");
  }
  throw InputError(where + ": expected an integer or a scalar string");
}

json scalar_to_json(const Rational& r) { return r.str(); }

void put_scalar(json& obj, const std::string& key, const Rational& r) {
  obj[key] = r.str();
  obj[key + "_decimal"] = r.to_double();
}

std::vector<Rational> scalars_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(scalar_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json scalars_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

RawSpace raw_space_from_json(const json& j) {
  RawSpace raw;
  const json& dist = require_key(j, "dist", "space");
  if (!dist.is_array()) throw InputError("space.dist: expected an array of rows");
  for (std::size_t i = 0; i < dist.size(); ++i) {
    raw.dist.push_back(scalars_from_json(dist[i], "space.dist[" + std::to_string(i) + "]"));
  }
  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_array()) throw InputError("space.labels: expected an array of strings");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string()) {
        throw InputError("space.labels[" + std::to_string(i) + "]: expected a string");
      }
      raw.labels.push_back(labels[i].get<std::string>());
    }
  }
  return raw;
}

RawSpace raw_space_from_csv(std::string_view text) {
  RawSpace raw;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_csv_line(line);
    std::vector<Rational> row;
    bool numeric = true;
    for (const auto& c : cells) {
      try {
        row.push_back(Rational::parse(c));
      } catch (const InputError&) {
        numeric = false;
        break;
      }
    }
    if (!numeric) {
      if (!first) {
        throw InputError("csv line " + std::to_string(line_no) + ": invalid scalar in row");
      }
      raw.labels = cells;
    } else {
      raw.dist.push_back(std::move(row));
    }
    first = false;
  }
  return raw;
}

FiniteMetricSpace space_from_json(const json& j) {
  RawSpace raw = raw_space_from_json(j);
  return FiniteMetricSpace::create(std::move(raw.dist), std::move(raw.labels));
}

json space_to_json(const FiniteMetricSpace& space) {
  json j;
  j["labels"] = space.labels();
  json rows = json::array();
  for (const auto& row : space.matrix()) rows.push_back(scalars_to_json(row));
  j["dist"] = std::move(rows);
  return j;
}

DiscreteMeasure measure_from_json(const json& j, std::size_t n) {
  auto w = scalars_from_json(require_key(j, "weights", "measure"), "measure.weights");
  if (w.size() != n) {
    throw InputError("measure.weights: expected " + std::to_string(n) + " entries, got " +
                     std::to_string(w.size()));
  }
  return DiscreteMeasure(std::move(w));
}

SampleFunction function_from_json(const json& j, std::size_t n) {
  auto v = scalars_from_json(require_key(j, "f", "function"), "function.f");
  if (v.size() != n) {
    throw InputError("function.f: expected " + std::to_string(n) + " entries, got " +
                     std::to_string(v.size()));
  }
  return SampleFunction(std::move(v));
}

json measure_file_json(const DiscreteMeasure& mu, const SampleFunction* f) {
  json j;
  j["weights"] = scalars_to_json(mu.weights());
  if (f) j["f"] = scalars_to_json(f->values());
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

json parse_json(std::string_view text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(where + ": " + e.what());
  }
}

RawSpace load_raw_space(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) {
    return raw_space_from_csv(text);
  }
  try {
    return raw_space_from_json(parse_json(text, path));
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string content_hash(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> labels_of(const FiniteMetricSpace& space,
                                   const std::vector<PointIndex>& points) {
  std::vector<std::string> out;
  out.reserve(points.size());
  for (PointIndex p : points) out.push_back(space.label(p));
  return out;
}

json validation_to_json(const ValidationResult& result) {
  json j;
  j["valid"] = result.ok();
  json v = json::array();
  for (const auto& violation : result.violations) {
    v.push_back({{"kind", to_string(violation.kind)}, {"indices", violation.indices}});
  }
  j["violations"] = std::move(v);
  if (result.ok()) j["n"] = result.space->size();
  return j;
}

json balls_to_json(const FiniteMetricSpace& space, const BallFamily& family) {
  json j;
  json balls = json::array();
  for (const auto& b : family.balls) balls.push_back(ball_json(space, b));
  j["balls"] = std::move(balls);
  j["count"] = family.balls.size();
  json per_point = json::array();
  for (PointIndex x = 0; x < family.point_count(); ++x) {
    per_point.push_back({{"label", space.label(x)},
                         {"containing", family.containing[x]},
                         {"centered", family.centered[x]}});
  }
  j["per_point"] = std::move(per_point);
  return j;
}

json maximal_report_to_json(const FiniteMetricSpace& space, const MaximalReport& report) {
  json points = json::array();
  for (const auto& p : report.points) {
    json e;
    e["label"] = space.label(p.point);
    put_scalar(e, "centered", p.centered.value);
    put_scalar(e, "noncentered", p.noncentered.value);
    e["centered_ball"] = labels_json(space, p.centered.ball.members);
    e["noncentered_ball"] = labels_json(space, p.noncentered.ball.members);
    points.push_back(std::move(e));
  }
  json j;
  j["points"] = std::move(points);
  j["coincide"] = report.coincide();
  return j;
}

json witness_to_json(const FiniteMetricSpace& space, const Witness& w) {
  json j;
  j["point"] = space.label(w.point);
  j["weights"] = scalars_to_json(w.measure.weights());
  j["f"] = scalars_to_json(w.function.values());
  put_scalar(j, "centered", w.centered_value);
  put_scalar(j, "noncentered", w.noncentered_value);
  put_scalar(j, "gap", w.noncentered_value - w.centered_value);
  return j;
}

Witness witness_from_json(const FiniteMetricSpace& space, const json& j) {
  return Witness{measure_from_json(j, space.size()), function_from_json(j, space.size()),
                 point_from_label(space, require_key(j, "point", "witness"), "witness.point"),
                 scalar_from_json(require_key(j, "centered", "witness"), "witness.centered"),
                 scalar_from_json(require_key(j, "noncentered", "witness"), "witness.noncentered")};
}

json verdict_to_json(const FiniteMetricSpace& space, const CoincidenceVerdict& v) {
  json j;
  j["verdict"] = to_string(v.verdict);
  j["method"] = to_string(v.method);
  j["witness"] = v.witness ? witness_to_json(space, *v.witness) : json(nullptr);
  json certs = json::array();
  for (const auto& c : v.certificates) {
    json terms = json::array();
    for (const auto& t : c.terms) {
      terms.push_back({{"centered_ball", labels_json(space, t.centered_ball)},
                       {"coefficient", t.coefficient.str()}});
    }
    certs.push_back({{"point", space.label(c.point)},
                     {"containing_ball", labels_json(space, c.containing_ball)},
                     {"terms", std::move(terms)}});
  }
  j["certificates"] = std::move(certs);
  if (v.method == DecisionMethod::kRandomized) {
    j["phase"] = v.phase;
    j["trials_run"] = v.trials_run;
    if (v.verdict == Verdict::kEqual) j["conclusive"] = false;
  } else {
    j["lp_solves"] = v.lp_solves;
  }
  return j;
}

CoincidenceVerdict verdict_from_json(const FiniteMetricSpace& space, const json& j) {
  CoincidenceVerdict v;
  const auto verdict = require_key(j, "verdict", "verdict").get<std::string>();
  if (verdict != "equal" && verdict != "distinct") throw InputError("verdict: unknown value");
  v.verdict = verdict == "equal" ? Verdict::kEqual : Verdict::kDistinct;
  const auto method = require_key(j, "method", "verdict").get<std::string>();
  if (method != "exact" && method != "randomized")
    throw InputError("verdict.method: unknown value");
  v.method = method == "exact" ? DecisionMethod::kExact : DecisionMethod::kRandomized;
  if (j.contains("witness") && !j.at("witness").is_null()) {
    v.witness = witness_from_json(space, j.at("witness"));
  }
  if (j.contains("certificates")) {
    for (const auto& c : j.at("certificates")) {
      HullCertificate cert{
          point_from_label(space, require_key(c, "point", "certificate"), "certificate.point"),
          points_from_labels(space, require_key(c, "containing_ball", "certificate"),
                             "certificate.containing_ball"),
          {}};
      for (const auto& t : require_key(c, "terms", "certificate")) {
        cert.terms.push_back(
            {points_from_labels(space, require_key(t, "centered_ball", "term"),
                                "term.centered_ball"),
             scalar_from_json(require_key(t, "coefficient", "term"), "term.coefficient")});
      }
      v.certificates.push_back(std::move(cert));
    }
  }
  v.phase = j.value("phase", 0);
  v.trials_run = j.value("trials_run", std::size_t{0});
  v.lp_solves = j.value("lp_solves", std::size_t{0});
  return v;
}

json ball_infimum_to_json(const FiniteMetricSpace& space, const BallInfimumReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    json e;
    e["x"] = space.label(p.x);
    e["y"] = space.label(p.y);
    put_scalar(e, "lhs", p.lhs);
    put_scalar(e, "inf", p.inf);
    put_scalar(e, "rhs_sym", p.rhs_sym);
    put_scalar(e, "dirac_value", p.dirac_value);
    e["inequality_holds"] = p.inequality_holds;
    e["symmetry_holds"] = p.symmetry_holds;
    e["dirac_bound_holds"] = p.dirac_bound_holds;
    e["dirac_identity_holds"] = p.dirac_identity_holds;
    pairs.push_back(std::move(e));
  }
  json j;
  j["pairs"] = std::move(pairs);
  j["failures"] = r.failures();
  j["all_hold"] = r.all_hold();
  return j;
}

json lsc_to_json(const FiniteMetricSpace& space, const LscReport& r) {
  json j;
  j["point"] = space.label(r.point);
  put_scalar(j, "limit_noncentered", r.limit_noncentered);
  put_scalar(j, "limit_centered", r.limit_centered);
  put_scalar(j, "min_containing_mass", r.min_containing_mass);
  json steps = json::array();
  for (const auto& s : r.steps) {
    json e;
    put_scalar(e, "deviation", s.deviation);
    put_scalar(e, "noncentered", s.noncentered);
    put_scalar(e, "centered", s.centered);
    put_scalar(e, "bound", s.bound);
    e["within_bound"] = s.within_bound;
    e["liminf_ok"] = s.liminf_ok;
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  j["converged"] = r.converged;
  j["tail_ok"] = r.tail_ok;
  j["all_within_bound"] = r.all_within_bound;
  j["ok"] = r.ok();
  return j;
}

json grid_demo_to_json(const GridDemo& demo) {
  const auto& space = demo.space;
  json j;
  j["n"] = demo.subdivisions;
  j["points"] = space.size();
  j["eval_point"] = space.label(demo.eval_point);
  put_scalar(j, "centered", demo.centered.value);
  put_scalar(j, "noncentered", demo.noncentered.value);
  put_scalar(j, "gap", demo.gap);
  put_scalar(j, "closed_form_gap", demo.closed_form_gap);
  j["gap_matches_closed_form"] = demo.gap == demo.closed_form_gap;
  j["centered_ball"] = ball_json(space, demo.centered.ball);
  j["noncentered_ball"] = ball_json(space, demo.noncentered.ball);
  j["ball_count"] = demo.ball_count;
  j["midpoint_config_count"] = demo.midpoint_config_count;
  j["interior_midpoints_present"] = demo.interior_midpoints_present;
  j["midpoint_chain"] = labels_json(space, demo.midpoint_chain);
  json chain = json::array();
  for (const auto& b : demo.chain_balls) {
    json e;
    e["center"] = space.label(b.center);
    put_scalar(e, "radius", b.radius);
    put_scalar(e, "mass", b.mass);
    e["size"] = b.members.size();
    e["nested_in_previous"] = b.nested_in_previous;
    e["forced_inequality_holds"] = b.forced_inequality_holds;
    chain.push_back(std::move(e));
  }
  j["chain_balls"] = std::move(chain);
  j["chain_nested"] = demo.chain_nested;
  j["chain_forced_inequalities_hold"] = demo.chain_forced_inequalities_hold;
  j["note"] = demo.note;
  return j;
}

}  // namespace maxlab::io
