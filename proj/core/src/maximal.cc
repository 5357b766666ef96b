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

#include "maxlab/maximal.h"

#include <algorithm>
#include <string>
#include <thread>

namespace maxlab {

bool ball_precedes(const Ball& a, const Ball& b) {
  if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
  return a.members < b.members;
}

MaximalEvaluator::MaximalEvaluator(const BallFamily& family, const DiscreteMeasure& mu)
    : family_(&family), mu_(&mu) {
  if (mu.size() != family.point_count()) {
    throw InputError("measure has " + std::to_string(mu.size()) + " weights but space has " +
                     std::to_string(family.point_count()) + " points");
  }
  mass_.reserve(family.balls.size());
  for (const auto& ball : family.balls) mass_.push_back(measure_of(mu, ball));
}

Rational MaximalEvaluator::average(const SampleFunction& f, std::size_t b) const {
  if (mass_[b].is_zero()) return Rational(0);
  return integrate(f, *mu_, family_->balls[b]) / mass_[b];
}

Rational MaximalEvaluator::ratio(const DiscreteMeasure& nu, std::size_t b) const {
  if (nu.size() != mu_->size()) throw InputError("measure size mismatch");
  if (mass_[b].is_zero()) return Rational(0);
  return measure_of(nu, family_->balls[b]) / mass_[b];
}

void MaximalEvaluator::require_support(PointIndex x) const {
  if (x >= mu_->size() || !mu_->in_support(x)) {
    throw PreconditionError("point " + std::to_string(x) + " is not in the support of the measure");
  }
}

template <typename Score>
MaximalValue MaximalEvaluator::best_of(std::span<const std::size_t> candidates, Score score) const {
  const auto& balls = family_->balls;
  std::size_t best = candidates.front();
  Rational best_value = score(best);
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const std::size_t b = candidates[i];
    Rational v = score(b);
    const auto order = v <=> best_value;
    if (order > 0 || (order == 0 && ball_precedes(balls[b], balls[best]))) {
      best = b;
      best_value = std::move(v);
    }
  }
  return MaximalValue{std::move(best_value), best, balls[best]};
}

MaximalValue MaximalEvaluator::centered(const SampleFunction& f, PointIndex x) const {
  require_support(x);
  return best_of(family_->centered[x], [&](std::size_t b) { return average(f, b); });
}

MaximalValue MaximalEvaluator::noncentered(const SampleFunction& f, PointIndex x) const {
  require_support(x);
  return best_of(family_->containing[x], [&](std::size_t b) { return average(f, b); });
}

MaximalValue MaximalEvaluator::centered_measure(const DiscreteMeasure& nu, PointIndex x) const {
  require_support(x);
  return best_of(family_->centered[x], [&](std::size_t b) { return ratio(nu, b); });
}

MaximalValue MaximalEvaluator::noncentered_measure(const DiscreteMeasure& nu, PointIndex x) const {
  require_support(x);
  return best_of(family_->containing[x], [&](std::size_t b) { return ratio(nu, b); });
}

MaximalValue MaximalEvaluator::inf_pair(PointIndex x, PointIndex y) const {
  const std::size_t n = family_->point_count();
  if (x >= n || y >= n) throw PreconditionError("point index out of range");
  std::vector<std::size_t> both;
  for (std::size_t b : family_->containing[x]) {
    if (family_->balls[b].contains(y)) both.push_back(b);
  }
  // Maximizing -mu(B) keeps the same tie-break as the maximal operators.
  MaximalValue best = best_of(both, [&](std::size_t b) { return -mass_[b]; });
  best.value = -best.value;
  return best;
}

MaximalValue centered_maximal(const SampleFunction& f, const DiscreteMeasure& mu,
                              const BallFamily& family, PointIndex x) {
  return MaximalEvaluator(family, mu).centered(f, x);
}

MaximalValue noncentered_maximal(const SampleFunction& f, const DiscreteMeasure& mu,
                                 const BallFamily& family, PointIndex x) {
  return MaximalEvaluator(family, mu).noncentered(f, x);
}

MaximalValue centered_maximal_measure(const DiscreteMeasure& nu, const DiscreteMeasure& mu,
                                      const BallFamily& family, PointIndex x) {
  return MaximalEvaluator(family, mu).centered_measure(nu, x);
}

MaximalValue noncentered_maximal_measure(const DiscreteMeasure& nu, const DiscreteMeasure& mu,
                                         const BallFamily& family, PointIndex x) {
  return MaximalEvaluator(family, mu).noncentered_measure(nu, x);
}

MaximalValue inf_ball_measure_pair(const DiscreteMeasure& mu, const BallFamily& family,
                                   PointIndex x, PointIndex y) {
  return MaximalEvaluator(family, mu).inf_pair(x, y);
}

bool MaximalReport::coincide() const { return first_gap() == nullptr; }

const PointMaximal* MaximalReport::first_gap() const {
  for (const auto& p : points) {
    if (p.centered.value != p.noncentered.value) return &p;
  }
  return nullptr;
}

MaximalReport maximal_field(const SampleFunction& f, const MaximalEvaluator& eval, bool parallel) {
  if (f.size() != eval.measure().size()) throw InputError("function size does not match space");
  const auto support = eval.measure().support();
  MaximalReport report;
  report.points.resize(support.size());
  auto evaluate = [&](std::size_t i) {
    const PointIndex x = support[i];
    report.points[i] = PointMaximal{x, eval.centered(f, x), eval.noncentered(f, x)};
  };

  const std::size_t workers =
      parallel
          ? std::min<std::size_t>(support.size(), std::max(1u, std::thread::hardware_concurrency()))
          : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < support.size(); ++i) evaluate(i);
    return report;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < support.size(); i += workers) evaluate(i);
    });
  }
  pool.clear();
  return report;
}

MaximalReport maximal_field(const SampleFunction& f, const DiscreteMeasure& mu,
                            const FiniteMetricSpace& space, bool parallel) {
  if (mu.size() != space.size()) throw InputError("measure size does not match space");
  const BallFamily family = enumerate_balls(space);
  const MaximalEvaluator eval(family, mu);
  return maximal_field(f, eval, parallel);
}

}  // namespace maxlab
