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

// Checkers for the relationship between the centered and non-centered
// maximal operators on finite metric measure spaces.
//
// Every verdict carries a certificate that can be re-checked without the
// code path that produced it:
//   * a Witness (measure, function, point) re-evaluates to a strict gap;
//   * a set of HullCertificates shows that every containing-ball averaging
//     functional at every support point is a convex combination of the
//     centered-ball functionals there, which forces the two operators to
//     agree for every function.

#ifndef MAXLAB_THEOREM_LAB_H_
#define MAXLAB_THEOREM_LAB_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxlab/maximal.h"
#include "maxlab/measure.h"
#include "maxlab/metric.h"
#include "maxlab/rational.h"

namespace maxlab {

// ---------------------------------------------------------------------------
// Ball-infimum inequality.

struct PairCheck {
  PointIndex x;
  PointIndex y;
  Rational lhs;                       // mu B(y, d(x,y))
  Rational inf;                       // min over closed balls containing x and y
  Rational rhs_sym;                   // mu B(x, d(x,y))
  Rational dirac_value;               // non-centered maximal of delta_x at y
  bool inequality_holds = false;      // lhs <= inf
  bool symmetry_holds = false;        // lhs == rhs_sym
  bool dirac_bound_holds = false;     // dirac_value <= 1 / lhs
  bool dirac_identity_holds = false;  // dirac_value * inf == 1
};

struct BallInfimumReport {
  std::vector<PairCheck> pairs;  // ordered pairs of distinct support points

  bool all_hold() const;
  std::size_t failures() const;
  const PairCheck* find(PointIndex x, PointIndex y) const;
};

BallInfimumReport check_ball_infimum(const FiniteMetricSpace& space, const DiscreteMeasure& mu);

/// Normalized indicator of the open ball U(x, radius) with the open ball
/// U(y, d(x,y)) removed.
SampleFunction shrinking_indicator(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                                   PointIndex x, PointIndex y, const Rational& radius);

struct ShrinkingIndicatorStep {
  Rational radius;
  Rational centered_at_y;
  Rational noncentered_at_y;
};

struct ShrinkingIndicatorReport {
  PointIndex x;
  PointIndex y;
  std::vector<ShrinkingIndicatorStep> steps;
  Rational centered_bound;     // 1 / mu B(y, d(x,y))
  Rational dirac_noncentered;  // non-centered maximal of the Dirac mass at x, at y
  /// The smallest radius's centered value respects centered_bound.
  bool centered_bound_holds = false;
  /// The smallest radius's non-centered value reaches dirac_noncentered.
  bool noncentered_limit_reached = false;
};

/// Evaluates shrinking_indicator for each radius (any order; the smallest is
/// treated as the limit representative).
ShrinkingIndicatorReport check_shrinking_indicators(const FiniteMetricSpace& space,
                                                    const DiscreteMeasure& mu, PointIndex x,
                                                    PointIndex y, std::span<const Rational> radii);

// ---------------------------------------------------------------------------
// Witnesses and coincidence decisions.

struct Witness {
  DiscreteMeasure measure;
  SampleFunction function;
  PointIndex point;
  Rational centered_value;
  Rational noncentered_value;
};

/// Re-evaluates both operators from scratch by brute force over
/// (center, radius) pairs and checks the recorded values and the strict gap.
bool verify_witness(const FiniteMetricSpace& space, const Witness& witness);

/// nu = unit atoms at x, y and z, f = normalized indicator of {y},
/// evaluated at x. Requires d(x,z) <= d(x,y) < d(z,y).
Witness construct_witness(const FiniteMetricSpace& space, const UltrametricViolation& triple);

/// Subspace on `points` (in the given order).
FiniteMetricSpace restrict_space(const FiniteMetricSpace& space,
                                 std::span<const PointIndex> points);

enum class Verdict { kEqual, kDistinct };
enum class DecisionMethod { kExact, kRandomized };

std::string to_string(Verdict v);
std::string to_string(DecisionMethod m);

struct HullTerm {
  std::vector<PointIndex> centered_ball;  // members of B(point, r)
  Rational coefficient;
};

/// The averaging functional of `containing_ball` at `point` equals
/// sum coefficient * (functional of centered_ball).
struct HullCertificate {
  PointIndex point;
  std::vector<PointIndex> containing_ball;
  std::vector<HullTerm> terms;
};

struct CoincidenceVerdict {
  Verdict verdict = Verdict::kEqual;
  DecisionMethod method = DecisionMethod::kExact;
  std::optional<Witness> witness;
  std::vector<HullCertificate> certificates;  // exact + equal only
  int phase = 0;                              // randomized: 1 or 2 where the witness appeared
  std::size_t trials_run = 0;                 // randomized: phase-two trials evaluated
  std::size_t lp_solves = 0;                  // exact: number of LP instances
};

/// Phase 1 tries the normalized indicator of every support point; phase 2
/// draws `trials` integer functions with entries in [-range, range].
CoincidenceVerdict coincidence_randomized(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                                          std::size_t trials, std::uint64_t seed,
                                          std::int64_t range = 9);

/// How a distinct exact verdict picks its witness function.
enum class WitnessStyle {
  kIndicatorFirst,  // a separating singleton indicator if any, else kSeparating
  kSeparating,      // the LP's Farkas functional, scaled to integers
};

/// Exact decision by convex-hull membership of averaging functionals.
CoincidenceVerdict coincidence_exact(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                                     WitnessStyle style = WitnessStyle::kIndicatorFirst);

/// Checks a verdict against (space, mu) without the LP: witnesses by direct
/// evaluation, equal certificates by exact arithmetic plus an independent
/// enumeration proving that every containing ball at every support point is
/// covered.
bool verify_verdict(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                    const CoincidenceVerdict& verdict);

// ---------------------------------------------------------------------------
// Lower semicontinuity along a weakly convergent sequence.

struct LscStep {
  Rational deviation;  // sum_p |nu_n(p) - nu(p)|
  Rational noncentered;
  Rational centered;
  Rational bound;             // deviation / min mass of a ball containing x
  bool within_bound = false;  // both |M nu_n - M nu| <= bound
  bool liminf_ok = false;     // both M nu_n >= M nu - bound
};

struct LscReport {
  PointIndex point;
  Rational limit_noncentered;
  Rational limit_centered;
  Rational min_containing_mass;
  std::vector<LscStep> steps;
  bool converged = false;  // last deviation <= caller bound
  /// min over the second half of the sequence >= limit - max bound there.
  bool tail_ok = false;
  bool all_within_bound = false;

  bool ok() const { return converged && tail_ok && all_within_bound; }
};

LscReport lsc_check(const DiscreteMeasure& mu, const FiniteMetricSpace& space,
                    std::span<const DiscreteMeasure> sequence, const DiscreteMeasure& limit,
                    PointIndex x, const Rational& deviation_bound);

// ---------------------------------------------------------------------------
// Uniform grid on [0, 2] with counting measure.

struct ChainBall {
  PointIndex center;
  Rational radius;
  std::vector<PointIndex> members;
  Rational mass;
  bool nested_in_previous = true;
  /// mass(previous) <= mass(this); a coincidence hypothesis would force it.
  bool forced_inequality_holds = true;
};

struct GridDemo {
  std::size_t subdivisions;
  FiniteMetricSpace space;
  DiscreteMeasure mu;
  SampleFunction f;
  PointIndex eval_point;
  MaximalValue centered;
  MaximalValue noncentered;
  Rational gap;
  Rational closed_form_gap;  // (n+1)/(n+2) - (n+1)/(2n+1)
  std::size_t ball_count = 0;
  std::size_t midpoint_config_count = 0;
  bool interior_midpoints_present = false;
  /// Longest sequence with x[i+2] the midpoint of x[i], x[i+1].
  std::vector<PointIndex> midpoint_chain;
  /// B(x[i+2], d(x[i+1], x[i+2])) along the chain.
  std::vector<ChainBall> chain_balls;
  bool chain_nested = true;
  bool chain_forced_inequalities_hold = true;
  std::string note;
};

/// Grid {k/n : 0 <= k <= 2n}, f = indicator of [0, 1], evaluated at 1 + 1/n.
/// Only length 2 is supported.
GridDemo build_grid_demo(std::size_t n, const Rational& length = Rational(2));

}  // namespace maxlab

#endif  // MAXLAB_THEOREM_LAB_H_
