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

#include "maxlab/simplex.h"

#include <optional>

namespace maxlab {

FeasibilityResult solve_feasibility(const Matrix& a, std::span<const Rational> b) {
  const std::size_t m = b.size();
  if (a.size() != m) throw PreconditionError("constraint matrix and rhs disagree on row count");
  const std::size_t k = m == 0 ? 0 : a.front().size();
  for (const auto& row : a) {
    if (row.size() != k) throw PreconditionError("ragged constraint matrix");
  }
  const std::size_t cols = k + m;

  // Tableau over structural columns then one artificial per row. Rows with a
  // negative rhs are negated so the all-artificial basis starts feasible.
  Matrix tableau(m, std::vector<Rational>(cols));
  std::vector<Rational> rhs(m);
  std::vector<int> row_sign(m, 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    row_sign[i] = b[i].is_negative() ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) tableau[i][j] = row_sign[i] < 0 ? -a[i][j] : a[i][j];
    tableau[i][k + i] = Rational(1);
    rhs[i] = row_sign[i] < 0 ? -b[i] : b[i];
    basis[i] = k + i;
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> reduced(cols);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m; ++i) reduced[j] -= tableau[i][j];
  }

  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t j = 0; j < cols; ++j) {
      if (reduced[j].is_negative()) {
        entering = j;
        break;
      }
    }
    if (!entering) break;
    const std::size_t e = *entering;

    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (!tableau[i][e].is_positive()) continue;
      Rational r = rhs[i] / tableau[i][e];
      if (!leaving || r < best_ratio || (r == best_ratio && basis[i] < basis[*leaving])) {
        leaving = i;
        best_ratio = std::move(r);
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (!leaving) throw std::logic_error("phase-one simplex reported unbounded");
    const std::size_t p = *leaving;

    const Rational pivot = tableau[p][e];
    for (auto& v : tableau[p]) v /= pivot;
    rhs[p] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == p || tableau[i][e].is_zero()) continue;
      const Rational factor = tableau[i][e];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!tableau[p][j].is_zero()) tableau[i][j] -= factor * tableau[p][j];
      }
      rhs[i] -= factor * rhs[p];
    }
    if (!reduced[e].is_zero()) {
      const Rational factor = reduced[e];
      for (std::size_t j = 0; j < cols; ++j) {
        if (!tableau[p][j].is_zero()) reduced[j] -= factor * tableau[p][j];
      }
    }
    basis[p] = e;
  }

  Rational residual;
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] >= k) residual += rhs[i];
  }

  FeasibilityResult result;
  if (residual.is_zero()) {
    result.feasible = true;
    result.solution.assign(k, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] < k) result.solution[basis[i]] = rhs[i];
    }
  } else {
    result.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      Rational y = Rational(1) - reduced[k + i];
      result.farkas[i] = row_sign[i] < 0 ? -y : y;
    }
  }
  return result;
}

FeasibilityResult convex_combination(std::span<const std::vector<Rational>> points,
                                     std::span<const Rational> target) {
  const std::size_t dim = target.size();
  for (const auto& p : points) {
    if (p.size() != dim) throw PreconditionError("point dimension mismatch in hull test");
  }
  Matrix a(dim + 1, std::vector<Rational>(points.size()));
  std::vector<Rational> b(dim + 1);
  for (std::size_t d = 0; d < dim; ++d) {
    for (std::size_t i = 0; i < points.size(); ++i) a[d][i] = points[i][d];
    b[d] = target[d];
  }
  for (std::size_t i = 0; i < points.size(); ++i) a[dim][i] = Rational(1);
  b[dim] = Rational(1);
  return solve_feasibility(a, b);
}

}  // namespace maxlab
