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

#ifndef MAXLAB_SIMPLEX_H_
#define MAXLAB_SIMPLEX_H_

#include <span>
#include <vector>

#include "maxlab/metric.h"
#include "maxlab/rational.h"

namespace maxlab {

/// Outcome of deciding {x >= 0 : A x = b}.
///
/// Feasible: `solution` satisfies A x = b, x >= 0.
/// Infeasible: `farkas` is a y with y^T A <= 0 componentwise and y^T b > 0,
/// which proves no such x exists.
struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> solution;
  std::vector<Rational> farkas;
};

/// Phase-one simplex in exact arithmetic with Bland's rule. `a` is row-major,
/// m rows of k columns; `b` has m entries.
FeasibilityResult solve_feasibility(const Matrix& a, std::span<const Rational> b);

/// Convex-hull membership of `target` in conv(points): lambda >= 0,
/// sum lambda = 1, sum lambda_i points[i] = target. When infeasible, `farkas`
/// has dim + 1 entries (g, t) with g.p + t <= 0 for every point and
/// g.target + t > 0.
FeasibilityResult convex_combination(std::span<const std::vector<Rational>> points,
                                     std::span<const Rational> target);

}  // namespace maxlab

#endif  // MAXLAB_SIMPLEX_H_
