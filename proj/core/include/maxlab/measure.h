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

#ifndef MAXLAB_MEASURE_H_
#define MAXLAB_MEASURE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "maxlab/metric.h"
#include "maxlab/rational.h"

namespace maxlab {

/// Nonnegative point weights with nonempty support.
class DiscreteMeasure {
 public:
  /// Throws InputError on a negative weight or an all-zero vector.
  explicit DiscreteMeasure(std::vector<Rational> weights);

  static DiscreteMeasure uniform(std::size_t n);
  /// Sum of unit masses at `points`.
  static DiscreteMeasure sum_of_diracs(std::size_t n, std::span<const PointIndex> points);

  std::size_t size() const { return weights_.size(); }
  const Rational& weight(PointIndex p) const { return weights_[p]; }
  const std::vector<Rational>& weights() const { return weights_; }
  bool in_support(PointIndex p) const { return weights_[p].is_positive(); }
  std::vector<PointIndex> support() const;
  Rational total() const;

  DiscreteMeasure scaled(const Rational& c) const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  std::vector<Rational> weights_;
};

/// Signed per-point values.
class SampleFunction {
 public:
  SampleFunction() = default;
  explicit SampleFunction(std::vector<Rational> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](PointIndex p) const { return values_[p]; }
  const std::vector<Rational>& values() const { return values_; }

  SampleFunction scaled(const Rational& c) const;
  friend SampleFunction operator+(const SampleFunction& f, const SampleFunction& g);

  friend bool operator==(const SampleFunction&, const SampleFunction&) = default;

 private:
  std::vector<Rational> values_;
};

/// Sum over members of f[p] * w[p]. Throws InputError on size mismatch.
Rational integrate(const SampleFunction& f, const DiscreteMeasure& mu, const Ball& ball);

Rational measure_of(const DiscreteMeasure& mu, const Ball& ball);
Rational measure_of(const DiscreteMeasure& mu, std::span<const PointIndex> members);

/// integrate / measure_of, or exactly 0 when the ball has zero mass.
Rational ball_average(const SampleFunction& f, const DiscreteMeasure& mu, const Ball& ball);

DiscreteMeasure dirac(const FiniteMetricSpace& space, PointIndex x);

/// 1/mu(S) on S and 0 elsewhere. Throws PreconditionError when mu(S) = 0.
SampleFunction normalized_indicator(const FiniteMetricSpace& space,
                                    std::span<const PointIndex> points, const DiscreteMeasure& mu);

}  // namespace maxlab

#endif  // MAXLAB_MEASURE_H_
