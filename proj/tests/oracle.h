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

// Test-only fixtures and brute-force oracles. The oracles recompute balls
// from (center, radius) pairs on every call and never touch BallFamily or
// MaximalEvaluator.

#ifndef MAXLAB_TESTS_ORACLE_H_
#define MAXLAB_TESTS_ORACLE_H_

#include <optional>
#include <set>
#include <vector>

#include "maxlab/measure.h"
#include "maxlab/metric.h"
#include "maxlab/rational.h"

namespace maxlab::testing {

inline Rational Q(long p, long q = 1) { return Rational(p, q); }

inline Matrix line_matrix(std::size_t n) {
  Matrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = Rational(std::labs(long(i) - long(j)));
  }
  return d;
}

inline FiniteMetricSpace line3() { return FiniteMetricSpace::create(line_matrix(3)); }

inline FiniteMetricSpace equilateral(std::size_t n) {
  Matrix d(n, std::vector<Rational>(n, Rational(1)));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = Rational(0);
  return FiniteMetricSpace::create(std::move(d));
}

inline SampleFunction fn(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return SampleFunction(std::move(out));
}

inline DiscreteMeasure weights(std::initializer_list<Rational> v) {
  return DiscreteMeasure(std::vector<Rational>(v));
}

/// All member sets {q : d(c,q) <= d(c,p)} over every (c, p).
inline std::set<std::vector<PointIndex>> oracle_ball_sets(const FiniteMetricSpace& s) {
  std::set<std::vector<PointIndex>> out;
  for (PointIndex c = 0; c < s.size(); ++c) {
    for (PointIndex p = 0; p < s.size(); ++p) {
      std::vector<PointIndex> m;
      for (PointIndex q = 0; q < s.size(); ++q) {
        if (s.dist(c, q) <= s.dist(c, p)) m.push_back(q);
      }
      out.insert(m);
    }
  }
  return out;
}

/// Brute-force sup of nu(B)/mu(B) (nu given as the weights f*w when
/// `f` is set). centered restricts to balls centered at x.
inline Rational oracle_maximal(const FiniteMetricSpace& s, const DiscreteMeasure& mu,
                               const std::vector<Rational>& numerator_weights, PointIndex x,
                               bool centered) {
  std::optional<Rational> best;
  for (PointIndex c = 0; c < s.size(); ++c) {
    if (centered && c != x) continue;
    for (PointIndex p = 0; p < s.size(); ++p) {
      Rational num, den;
      bool has_x = false;
      for (PointIndex q = 0; q < s.size(); ++q) {
        if (s.dist(c, q) <= s.dist(c, p)) {
          num += numerator_weights[q];
          den += mu.weight(q);
          has_x = has_x || q == x;
        }
      }
      if (!has_x) continue;
      const Rational v = den.is_zero() ? Rational(0) : num / den;
      if (!best || *best < v) best = v;
    }
  }
  return *best;
}

inline Rational oracle_fn(const FiniteMetricSpace& s, const DiscreteMeasure& mu,
                          const SampleFunction& f, PointIndex x, bool centered) {
  std::vector<Rational> nw(s.size());
  for (PointIndex q = 0; q < s.size(); ++q) nw[q] = f[q] * mu.weight(q);
  return oracle_maximal(s, mu, nw, x, centered);
}

inline Rational oracle_measure(const FiniteMetricSpace& s, const DiscreteMeasure& mu,
                               const DiscreteMeasure& nu, PointIndex x, bool centered) {
  return oracle_maximal(s, mu, nu.weights(), x, centered);
}

}  // namespace maxlab::testing

#endif  // MAXLAB_TESTS_ORACLE_H_
