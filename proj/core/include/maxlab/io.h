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

// File formats.
//
//   space:    { "labels": [string], "dist": [[scalar]] }   (or a CSV matrix)
//   measure:  { "weights": [scalar], "f": [scalar] }       (either key optional)
//
// A scalar is a JSON integer, or a string holding an integer, a finite
// decimal ("0.25") or a fraction ("3/4"). Emitted scalars are always exact
// strings; report fields carry a sibling "<name>_decimal" double for humans.

#ifndef MAXLAB_IO_H_
#define MAXLAB_IO_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "maxlab/generators.h"
#include "maxlab/maximal.h"
#include "maxlab/measure.h"
#include "maxlab/metric.h"
#include "maxlab/rational.h"
#include "maxlab/theorem_lab.h"

namespace maxlab::io {

using nlohmann::json;

/// `where` names the location used in error messages.
Rational scalar_from_json(const json& j, const std::string& where);
json scalar_to_json(const Rational& r);
/// Sets obj[key] = "p/q" and obj[key + "_decimal"] = double.
void put_scalar(json& obj, const std::string& key, const Rational& r);

std::vector<Rational> scalars_from_json(const json& j, const std::string& where);
json scalars_to_json(const std::vector<Rational>& v);

/// Raw matrix and labels, before metric validation.
struct RawSpace {
  Matrix dist;
  std::vector<std::string> labels;
};

RawSpace raw_space_from_json(const json& j);
RawSpace raw_space_from_csv(std::string_view text);
FiniteMetricSpace space_from_json(const json& j);
json space_to_json(const FiniteMetricSpace& space);

DiscreteMeasure measure_from_json(const json& j, std::size_t n);
SampleFunction function_from_json(const json& j, std::size_t n);
json measure_file_json(const DiscreteMeasure& mu, const SampleFunction* f = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
json parse_json(std::string_view text, const std::string& where);
/// JSON, or CSV when the path ends in ".csv".
RawSpace load_raw_space(const std::string& path);

/// FNV-1a 64 of the bytes, as 16 hex digits.
std::string content_hash(std::string_view bytes);

std::vector<std::string> labels_of(const FiniteMetricSpace& space,
                                   const std::vector<PointIndex>& points);

json validation_to_json(const ValidationResult& result);
json balls_to_json(const FiniteMetricSpace& space, const BallFamily& family);
json maximal_report_to_json(const FiniteMetricSpace& space, const MaximalReport& report);
json witness_to_json(const FiniteMetricSpace& space, const Witness& w);
Witness witness_from_json(const FiniteMetricSpace& space, const json& j);
json verdict_to_json(const FiniteMetricSpace& space, const CoincidenceVerdict& v);
CoincidenceVerdict verdict_from_json(const FiniteMetricSpace& space, const json& j);
json ball_infimum_to_json(const FiniteMetricSpace& space, const BallInfimumReport& r);
json lsc_to_json(const FiniteMetricSpace& space, const LscReport& r);
json grid_demo_to_json(const GridDemo& demo);

}  // namespace maxlab::io

#endif  // MAXLAB_IO_H_
