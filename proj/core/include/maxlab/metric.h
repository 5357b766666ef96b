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

#ifndef MAXLAB_METRIC_H_
#define MAXLAB_METRIC_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maxlab/rational.h"

namespace maxlab {

using PointIndex = std::size_t;
using Matrix = std::vector<std::vector<Rational>>;

/// One failed metric axiom. `indices` holds the offending (i, j) or (i, j, k).
struct AxiomViolation {
  enum class Kind {
    kNotSquare,
    kLabelMismatch,
    kDuplicateLabel,
    kNonzeroDiagonal,
    kAsymmetry,
    kZeroOffDiagonal,
    kNegative,
    kTriangle
  };
  Kind kind;
  std::vector<PointIndex> indices;

  std::string describe() const;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

std::string to_string(AxiomViolation::Kind kind);

struct ValidationResult;

/// Finite metric space on points {0, ..., n-1}. Only constructible through
/// validate_space / FiniteMetricSpace::create, so every instance satisfies the
/// metric axioms exactly.
class FiniteMetricSpace {
 public:
  /// Throws InputError listing every violation if `dist` is not a metric.
  static FiniteMetricSpace create(Matrix dist, std::vector<std::string> labels = {});

  std::size_t size() const { return labels_.size(); }
  const Rational& dist(PointIndex i, PointIndex j) const { return dist_[i][j]; }
  const Matrix& matrix() const { return dist_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(PointIndex i) const { return labels_[i]; }
  /// Index of `label`, or nullopt.
  std::optional<PointIndex> find(const std::string& label) const;

  friend bool operator==(const FiniteMetricSpace&, const FiniteMetricSpace&) = default;

 private:
  FiniteMetricSpace(Matrix dist, std::vector<std::string> labels)
      : dist_(std::move(dist)), labels_(std::move(labels)) {}

  friend ValidationResult validate_space(Matrix dist, std::vector<std::string> labels);

  Matrix dist_;
  std::vector<std::string> labels_;
};

struct ValidationResult {
  std::optional<FiniteMetricSpace> space;
  std::vector<AxiomViolation> violations;

  bool ok() const { return space.has_value(); }
};

/// Checks every metric axiom and reports all violations. An empty label list
/// is replaced with "0", "1", ...
ValidationResult validate_space(Matrix dist, std::vector<std::string> labels = {});

/// (x, y, z) with d(x,z) <= d(x,y) < d(z,y).
struct UltrametricViolation {
  PointIndex x;
  PointIndex y;
  PointIndex z;
  friend bool operator==(const UltrametricViolation&, const UltrametricViolation&) = default;
};

struct UltrametricResult {
  bool ultrametric = true;
  std::optional<UltrametricViolation> violation;
};

/// Exhaustive triple scan of d(a,c) <= max(d(a,b), d(b,c)). The first
/// violation found is renamed so that x = b, y is the one of a, c farther
/// from b (c on ties) and z is the other.
UltrametricResult is_ultrametric(const FiniteMetricSpace& space);

enum class BallKind { kClosed, kOpen };

/// Metric ball resolved to its member set.
struct Ball {
  PointIndex center = 0;
  Rational radius;
  BallKind kind = BallKind::kClosed;
  std::vector<PointIndex> members;  // sorted ascending

  bool contains(PointIndex p) const;
};

Ball closed_ball(const FiniteMetricSpace& space, PointIndex center, const Rational& radius);
Ball open_ball(const FiniteMetricSpace& space, PointIndex center, const Rational& radius);

/// Every distinct closed-ball member set of a space, with per-point views.
struct BallFamily {
  std::vector<Ball> balls;
  /// containing[x]: indices into `balls` of the sets that contain x.
  std::vector<std::vector<std::size_t>> containing;
  /// centered[x]: indices of the sets realized as B(x, r) for some r >= 0.
  std::vector<std::vector<std::size_t>> centered;

  std::size_t point_count() const { return containing.size(); }
};

/// Radii are drawn from each center's distance row (which includes 0), which
/// realizes every closed ball since membership only changes at those radii.
BallFamily enumerate_balls(const FiniteMetricSpace& space);

/// d(a,m) = d(m,b) = d(a,b)/2 with a < b.
struct MidpointConfig {
  PointIndex a;
  PointIndex m;
  PointIndex b;
  friend bool operator==(const MidpointConfig&, const MidpointConfig&) = default;
};

/// Sorted by (a, b, m).
std::vector<MidpointConfig> find_midpoint_configs(const FiniteMetricSpace& space);

}  // namespace maxlab

#endif  // MAXLAB_METRIC_H_
