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

#ifndef MAXLAB_MAXIMAL_H_
#define MAXLAB_MAXIMAL_H_

#include <cstddef>
#include <span>
#include <vector>

#include "maxlab/measure.h"
#include "maxlab/metric.h"
#include "maxlab/rational.h"

namespace maxlab {

/// A maximal (or minimal) value together with the ball that attains it.
struct MaximalValue {
  Rational value;
  std::size_t ball_index = 0;  // into the BallFamily it was computed from
  Ball ball;
};

/// True when `a` wins a tie against `b`: fewer members, then the
/// lexicographically smaller member list.
bool ball_precedes(const Ball& a, const Ball& b);

/// Evaluates both maximal operators against a fixed (family, mu) pair. Ball
/// masses are computed once at construction. The family and measure must
/// outlive the evaluator.
class MaximalEvaluator {
 public:
  MaximalEvaluator(const BallFamily& family, const DiscreteMeasure& mu);

  const BallFamily& family() const { return *family_; }
  const DiscreteMeasure& measure() const { return *mu_; }
  const Rational& mass(std::size_t ball) const { return mass_[ball]; }

  /// Average of f over ball `b` with the mu(B) = 0 convention.
  Rational average(const SampleFunction& f, std::size_t b) const;
  /// nu(B) / mu(B) with the same convention.
  Rational ratio(const DiscreteMeasure& nu, std::size_t b) const;

  MaximalValue centered(const SampleFunction& f, PointIndex x) const;
  MaximalValue noncentered(const SampleFunction& f, PointIndex x) const;
  MaximalValue centered_measure(const DiscreteMeasure& nu, PointIndex x) const;
  MaximalValue noncentered_measure(const DiscreteMeasure& nu, PointIndex x) const;

  /// Smallest mu(B) over balls containing both x and y.
  MaximalValue inf_pair(PointIndex x, PointIndex y) const;

 private:
  void require_support(PointIndex x) const;
  template <typename Score>
  MaximalValue best_of(std::span<const std::size_t> candidates, Score score) const;

  const BallFamily* family_;
  const DiscreteMeasure* mu_;
  std::vector<Rational> mass_;
};

MaximalValue centered_maximal(const SampleFunction& f, const DiscreteMeasure& mu,
                              const BallFamily& family, PointIndex x);
MaximalValue noncentered_maximal(const SampleFunction& f, const DiscreteMeasure& mu,
                                 const BallFamily& family, PointIndex x);
MaximalValue centered_maximal_measure(const DiscreteMeasure& nu, const DiscreteMeasure& mu,
                                      const BallFamily& family, PointIndex x);
MaximalValue noncentered_maximal_measure(const DiscreteMeasure& nu, const DiscreteMeasure& mu,
                                         const BallFamily& family, PointIndex x);
MaximalValue inf_ball_measure_pair(const DiscreteMeasure& mu, const BallFamily& family,
                                   PointIndex x, PointIndex y);

struct PointMaximal {
  PointIndex point;
  MaximalValue centered;
  MaximalValue noncentered;
};

/// Both operators at every support point, in increasing point order.
/// Points outside the support are absent.
struct MaximalReport {
  std::vector<PointMaximal> points;

  bool coincide() const;
  /// First support point where the two values differ, if any.
  const PointMaximal* first_gap() const;
};

MaximalReport maximal_field(const SampleFunction& f, const MaximalEvaluator& eval,
                            bool parallel = false);
MaximalReport maximal_field(const SampleFunction& f, const DiscreteMeasure& mu,
                            const FiniteMetricSpace& space, bool parallel = false);

}  // namespace maxlab

#endif  // MAXLAB_MAXIMAL_H_
