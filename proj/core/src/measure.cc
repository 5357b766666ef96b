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

#include "maxlab/measure.h"

#include <algorithm>
#include <string>

namespace maxlab {
namespace {

void check_index(std::size_t n, PointIndex p) {
  if (p >= n) throw InputError("point index " + std::to_string(p) + " out of range");
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Rational> weights) : weights_(std::move(weights)) {
  bool any_positive = false;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].is_negative()) {
      throw InputError("negative weight " + weights_[i].str() + " at point " + std::to_string(i));
    }
    any_positive = any_positive || weights_[i].is_positive();
  }
  if (!any_positive) throw InputError("measure has empty support");
}

DiscreteMeasure DiscreteMeasure::uniform(std::size_t n) {
  return DiscreteMeasure(std::vector<Rational>(n, Rational(1)));
}

DiscreteMeasure DiscreteMeasure::sum_of_diracs(std::size_t n, std::span<const PointIndex> points) {
  std::vector<Rational> w(n);
  for (PointIndex p : points) {
    check_index(n, p);
    w[p] += Rational(1);
  }
  return DiscreteMeasure(std::move(w));
}

std::vector<PointIndex> DiscreteMeasure::support() const {
  std::vector<PointIndex> s;
  for (PointIndex p = 0; p < weights_.size(); ++p) {
    if (in_support(p)) s.push_back(p);
  }
  return s;
}

Rational DiscreteMeasure::total() const {
  Rational t;
  for (const auto& w : weights_) t += w;
  return t;
}

DiscreteMeasure DiscreteMeasure::scaled(const Rational& c) const {
  if (!c.is_positive()) throw PreconditionError("measure scale must be positive");
  std::vector<Rational> w = weights_;
  for (auto& x : w) x *= c;
  return DiscreteMeasure(std::move(w));
}

SampleFunction SampleFunction::scaled(const Rational& c) const {
  std::vector<Rational> v = values_;
  for (auto& x : v) x *= c;
  return SampleFunction(std::move(v));
}

SampleFunction operator+(const SampleFunction& f, const SampleFunction& g) {
  if (f.size() != g.size()) throw InputError("function size mismatch");
  std::vector<Rational> v = f.values_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += g.values_[i];
  return SampleFunction(std::move(v));
}

Rational integrate(const SampleFunction& f, const DiscreteMeasure& mu, const Ball& ball) {
  if (f.size() != mu.size()) {
    throw InputError("function has " + std::to_string(f.size()) + " values but measure has " +
                     std::to_string(mu.size()) + " weights");
  }
  Rational sum;
  for (PointIndex p : ball.members) {
    check_index(mu.size(), p);
    if (mu.in_support(p)) sum += f[p] * mu.weight(p);
  }
  return sum;
}

Rational measure_of(const DiscreteMeasure& mu, std::span<const PointIndex> members) {
  Rational sum;
  for (PointIndex p : members) {
    check_index(mu.size(), p);
    sum += mu.weight(p);
  }
  return sum;
}

Rational measure_of(const DiscreteMeasure& mu, const Ball& ball) {
  return measure_of(mu, std::span<const PointIndex>(ball.members));
}

Rational ball_average(const SampleFunction& f, const DiscreteMeasure& mu, const Ball& ball) {
  const Rational mass = measure_of(mu, ball);
  if (mass.is_zero()) return Rational(0);
  return integrate(f, mu, ball) / mass;
}

DiscreteMeasure dirac(const FiniteMetricSpace& space, PointIndex x) {
  const PointIndex points[] = {x};
  return DiscreteMeasure::sum_of_diracs(space.size(), points);
}

SampleFunction normalized_indicator(const FiniteMetricSpace& space,
                                    std::span<const PointIndex> points, const DiscreteMeasure& mu) {
  if (mu.size() != space.size()) throw InputError("measure size does not match space");
  std::vector<PointIndex> set(points.begin(), points.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  const Rational mass = measure_of(mu, set);
  if (mass.is_zero()) throw PreconditionError("normalized_indicator of a zero-measure set");
  std::vector<Rational> values(space.size());
  const Rational level = Rational(1) / mass;
  for (PointIndex p : set) values[p] = level;
  return SampleFunction(std::move(values));
}

}  // namespace maxlab
