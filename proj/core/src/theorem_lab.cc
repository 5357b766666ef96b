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

#include "maxlab/theorem_lab.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "maxlab/generators.h"
#include "maxlab/simplex.h"

namespace maxlab {
namespace {

using MemberSet = std::vector<PointIndex>;

void require_support(const DiscreteMeasure& mu, PointIndex x) {
  if (x >= mu.size() || !mu.in_support(x)) {
    throw PreconditionError("point " + std::to_string(x) + " is not in the support of the measure");
  }
}

Rational mass_of(const DiscreteMeasure& mu, const MemberSet& members) {
  return measure_of(mu, std::span<const PointIndex>(members));
}

// Brute-force closed balls: one member set per (center, radius in row).
struct BruteBall {
  PointIndex center;
  MemberSet members;
};

std::vector<BruteBall> brute_balls(const FiniteMetricSpace& space) {
  std::vector<BruteBall> out;
  const std::size_t n = space.size();
  for (PointIndex c = 0; c < n; ++c) {
    for (PointIndex p = 0; p < n; ++p) {
      MemberSet members;
      for (PointIndex q = 0; q < n; ++q) {
        if (space.dist(c, q) <= space.dist(c, p)) members.push_back(q);
      }
      out.push_back({c, std::move(members)});
    }
  }
  return out;
}

Rational brute_average(const SampleFunction& f, const DiscreteMeasure& mu, const MemberSet& m) {
  Rational num, den;
  for (PointIndex p : m) {
    num += f[p] * mu.weight(p);
    den += mu.weight(p);
  }
  return den.is_zero() ? Rational(0) : num / den;
}

bool is_closed_ball(const FiniteMetricSpace& space, PointIndex center, const MemberSet& members) {
  if (members.empty() || !std::is_sorted(members.begin(), members.end())) return false;
  Rational radius;
  for (PointIndex p : members) {
    if (p >= space.size()) return false;
    radius = max(radius, space.dist(center, p));
  }
  return closed_ball(space, center, radius).members == members;
}

// Averaging functional of a member set, restricted to support coordinates.
std::vector<Rational> functional(const DiscreteMeasure& mu, std::span<const PointIndex> support,
                                 const MemberSet& members, const Rational& mass) {
  std::vector<Rational> v(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (std::binary_search(members.begin(), members.end(), support[i])) {
      v[i] = mu.weight(support[i]) / mass;
    }
  }
  return v;
}

// Smallest positive integer multiple of `values` (clears denominators).
SampleFunction integerize(std::vector<Rational> values) {
  mpz_class lcm = 1;
  for (const auto& v : values) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.raw().get_den_mpz_t());
  mpz_class gcd = 0;
  for (auto& v : values) {
    v *= Rational(mpq_class(lcm));
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v.raw().get_num_mpz_t());
  }
  if (gcd > 1) {
    for (auto& v : values) v /= Rational(mpq_class(gcd));
  }
  return SampleFunction(std::move(values));
}

std::optional<Witness> first_gap(const MaximalEvaluator& eval, const SampleFunction& f) {
  const auto& mu = eval.measure();
  for (PointIndex x = 0; x < mu.size(); ++x) {
    if (!mu.in_support(x)) continue;
    Rational c = eval.centered(f, x).value;
    Rational nc = eval.noncentered(f, x).value;
    if (c != nc) return Witness{mu, f, x, std::move(c), std::move(nc)};
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------

bool BallInfimumReport::all_hold() const { return failures() == 0; }

std::size_t BallInfimumReport::failures() const {
  return static_cast<std::size_t>(std::count_if(pairs.begin(), pairs.end(), [](const PairCheck& p) {
    return !(p.inequality_holds && p.symmetry_holds && p.dirac_bound_holds);
  }));
}

const PairCheck* BallInfimumReport::find(PointIndex x, PointIndex y) const {
  for (const auto& p : pairs) {
    if (p.x == x && p.y == y) return &p;
  }
  return nullptr;
}

BallInfimumReport check_ball_infimum(const FiniteMetricSpace& space, const DiscreteMeasure& mu) {
  if (mu.size() != space.size()) throw InputError("measure size does not match space");
  const BallFamily family = enumerate_balls(space);
  const MaximalEvaluator eval(family, mu);
  const auto support = mu.support();
  BallInfimumReport report;
  for (PointIndex x : support) {
    const DiscreteMeasure delta = dirac(space, x);
    for (PointIndex y : support) {
      if (x == y) continue;
      const Rational& r = space.dist(x, y);
      PairCheck pc{x,
                   y,
                   measure_of(mu, closed_ball(space, y, r)),
                   eval.inf_pair(x, y).value,
                   measure_of(mu, closed_ball(space, x, r)),
                   eval.noncentered_measure(delta, y).value};
      pc.inequality_holds = pc.lhs <= pc.inf;
      pc.symmetry_holds = pc.lhs == pc.rhs_sym;
      pc.dirac_bound_holds = pc.dirac_value * pc.lhs <= Rational(1);
      pc.dirac_identity_holds = pc.dirac_value * pc.inf == Rational(1);
      report.pairs.push_back(std::move(pc));
    }
  }
  return report;
}

SampleFunction shrinking_indicator(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                                   PointIndex x, PointIndex y, const Rational& radius) {
  if (!radius.is_positive()) throw PreconditionError("radius must be positive");
  if (x >= space.size() || y >= space.size() || x == y) {
    throw PreconditionError("shrinking_indicator needs two distinct points");
  }
  const Rational& r = space.dist(x, y);
  std::vector<PointIndex> set;
  for (PointIndex p = 0; p < space.size(); ++p) {
    if (space.dist(x, p) < radius && !(space.dist(y, p) < r)) set.push_back(p);
  }
  return normalized_indicator(space, set, mu);
}

ShrinkingIndicatorReport check_shrinking_indicators(const FiniteMetricSpace& space,
                                                    const DiscreteMeasure& mu, PointIndex x,
                                                    PointIndex y, std::span<const Rational> radii) {
  require_support(mu, x);
  require_support(mu, y);
  if (radii.empty()) throw PreconditionError("need at least one radius");
  const BallFamily family = enumerate_balls(space);
  const MaximalEvaluator eval(family, mu);

  ShrinkingIndicatorReport report{x, y, {}, {}, {}};
  report.centered_bound = Rational(1) / measure_of(mu, closed_ball(space, y, space.dist(x, y)));
  report.dirac_noncentered = eval.noncentered_measure(dirac(space, x), y).value;

  std::size_t smallest = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const SampleFunction f = shrinking_indicator(space, mu, x, y, radii[i]);
    report.steps.push_back({radii[i], eval.centered(f, y).value, eval.noncentered(f, y).value});
    if (radii[i] < radii[smallest]) smallest = i;
  }
  const auto& last = report.steps[smallest];
  report.centered_bound_holds = last.centered_at_y <= report.centered_bound;
  report.noncentered_limit_reached = last.noncentered_at_y >= report.dirac_noncentered;
  return report;
}

// ---------------------------------------------------------------------------

bool verify_witness(const FiniteMetricSpace& space, const Witness& w) {
  if (w.measure.size() != space.size() || w.function.size() != space.size()) return false;
  if (w.point >= space.size() || !w.measure.in_support(w.point)) return false;
  std::optional<Rational> centered, noncentered;
  for (const auto& ball : brute_balls(space)) {
    if (!std::binary_search(ball.members.begin(), ball.members.end(), w.point)) continue;
    const Rational avg = brute_average(w.function, w.measure, ball.members);
    if (ball.center == w.point && (!centered || *centered < avg)) centered = avg;
    if (!noncentered || *noncentered < avg) noncentered = avg;
  }
  return centered && noncentered && *centered == w.centered_value &&
         *noncentered == w.noncentered_value && w.centered_value < w.noncentered_value;
}

Witness construct_witness(const FiniteMetricSpace& space, const UltrametricViolation& t) {
  const std::size_t n = space.size();
  if (t.x >= n || t.y >= n || t.z >= n || t.x == t.y || t.y == t.z || t.x == t.z) {
    throw PreconditionError("witness triple needs three distinct valid points");
  }
  if (!(space.dist(t.x, t.z) <= space.dist(t.x, t.y) &&
        space.dist(t.x, t.y) < space.dist(t.z, t.y))) {
    throw PreconditionError("witness triple must satisfy d(x,z) <= d(x,y) < d(z,y)");
  }
  const PointIndex atoms[] = {t.x, t.y, t.z};
  DiscreteMeasure nu = DiscreteMeasure::sum_of_diracs(n, atoms);
  const PointIndex target[] = {t.y};
  SampleFunction f = normalized_indicator(space, target, nu);
  const BallFamily family = enumerate_balls(space);
  const MaximalEvaluator eval(family, nu);
  Rational c = eval.centered(f, t.x).value;
  Rational nc = eval.noncentered(f, t.x).value;
  return Witness{std::move(nu), std::move(f), t.x, std::move(c), std::move(nc)};
}

FiniteMetricSpace restrict_space(const FiniteMetricSpace& space,
                                 std::span<const PointIndex> points) {
  Matrix d(points.size(), std::vector<Rational>(points.size()));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i] >= space.size()) throw PreconditionError("restriction index out of range");
    labels.push_back(space.label(points[i]));
    for (std::size_t j = 0; j < points.size(); ++j) d[i][j] = space.dist(points[i], points[j]);
  }
  return FiniteMetricSpace::create(std::move(d), std::move(labels));
}

std::string to_string(Verdict v) { return v == Verdict::kEqual ? "equal" : "distinct"; }
std::string to_string(DecisionMethod m) {
  return m == DecisionMethod::kExact ? "exact" : "randomized";
}

namespace {

// Support points for the singleton-indicator pass: the y of a violating
// triple first (when it carries mass), then index order.
std::vector<PointIndex> indicator_order(const FiniteMetricSpace& space, const DiscreteMeasure& mu) {
  auto order = mu.support();
  const auto um = is_ultrametric(space);
  if (!um.ultrametric && mu.in_support(um.violation->y)) {
    const auto it = std::find(order.begin(), order.end(), um.violation->y);
    std::rotate(order.begin(), it, it + 1);
  }
  return order;
}

SampleFunction singleton_indicator(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                                   PointIndex p) {
  const PointIndex single[] = {p};
  return normalized_indicator(space, single, mu);
}

}  // namespace

CoincidenceVerdict coincidence_randomized(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                                          std::size_t trials, std::uint64_t seed,
                                          std::int64_t range) {
  if (mu.size() != space.size()) throw InputError("measure size does not match space");
  const BallFamily family = enumerate_balls(space);
  const MaximalEvaluator eval(family, mu);
  CoincidenceVerdict verdict;
  verdict.method = DecisionMethod::kRandomized;

  for (PointIndex p : indicator_order(space, mu)) {
    if (auto w = first_gap(eval, singleton_indicator(space, mu, p))) {
      verdict.verdict = Verdict::kDistinct;
      verdict.witness = std::move(w);
      verdict.phase = 1;
      return verdict;
    }
  }
  SeededRng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<Rational> values(space.size());
    for (auto& v : values) v = Rational(static_cast<long>(rng.uniform_int(-range, range)));
    verdict.trials_run = t + 1;
    if (auto w = first_gap(eval, SampleFunction(std::move(values)))) {
      verdict.verdict = Verdict::kDistinct;
      verdict.witness = std::move(w);
      verdict.phase = 2;
      return verdict;
    }
  }
  verdict.verdict = Verdict::kEqual;
  verdict.phase = 2;
  return verdict;
}

namespace {

// Witness at x once the LP has failed there. A singleton indicator is
// preferred when one already separates; otherwise the Farkas vector (g, t)
// is used: g . c + t <= 0 on the hull and g . target + t > 0, so f = g gives
// M f(x) >= g . target > max over the hull = M^c f(x).
Witness separating_witness(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                           const MaximalEvaluator& eval, PointIndex x,
                           const std::vector<PointIndex>& support,
                           const std::vector<Rational>& farkas, WitnessStyle style) {
  for (PointIndex p : style == WitnessStyle::kIndicatorFirst ? indicator_order(space, mu)
                                                             : std::vector<PointIndex>{}) {
    SampleFunction f = singleton_indicator(space, mu, p);
    Rational c = eval.centered(f, x).value;
    Rational nc = eval.noncentered(f, x).value;
    if (c < nc) return Witness{mu, std::move(f), x, std::move(c), std::move(nc)};
  }
  std::vector<Rational> values(space.size());
  for (std::size_t i = 0; i < support.size(); ++i) values[support[i]] = farkas[i];
  SampleFunction f = integerize(std::move(values));
  Rational c = eval.centered(f, x).value;
  Rational nc = eval.noncentered(f, x).value;
  if (!(c < nc)) throw std::logic_error("separating function failed to produce a gap");
  return Witness{mu, std::move(f), x, std::move(c), std::move(nc)};
}

}  // namespace

CoincidenceVerdict coincidence_exact(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                                     WitnessStyle style) {
  if (mu.size() != space.size()) throw InputError("measure size does not match space");
  const BallFamily family = enumerate_balls(space);
  const MaximalEvaluator eval(family, mu);
  const auto support = mu.support();
  CoincidenceVerdict verdict;
  verdict.method = DecisionMethod::kExact;

  for (PointIndex x : support) {
    const auto& centered = family.centered[x];
    std::vector<std::vector<Rational>> hull;
    hull.reserve(centered.size());
    for (std::size_t b : centered) {
      hull.push_back(functional(mu, support, family.balls[b].members, eval.mass(b)));
    }
    for (std::size_t d : family.containing[x]) {
      HullCertificate cert{x, family.balls[d].members, {}};
      const auto self = std::find(centered.begin(), centered.end(), d);
      if (self != centered.end()) {
        cert.terms.push_back({family.balls[d].members, Rational(1)});
        verdict.certificates.push_back(std::move(cert));
        continue;
      }
      const auto target = functional(mu, support, family.balls[d].members, eval.mass(d));
      ++verdict.lp_solves;
      const FeasibilityResult lp = convex_combination(hull, target);
      if (lp.feasible) {
        for (std::size_t i = 0; i < centered.size(); ++i) {
          if (!lp.solution[i].is_zero()) {
            cert.terms.push_back({family.balls[centered[i]].members, lp.solution[i]});
          }
        }
        verdict.certificates.push_back(std::move(cert));
        continue;
      }
      verdict.verdict = Verdict::kDistinct;
      verdict.witness = separating_witness(space, mu, eval, x, support, lp.farkas, style);
      verdict.certificates.clear();
      return verdict;
    }
  }
  verdict.verdict = Verdict::kEqual;
  return verdict;
}

bool verify_verdict(const FiniteMetricSpace& space, const DiscreteMeasure& mu,
                    const CoincidenceVerdict& verdict) {
  if (mu.size() != space.size()) return false;
  if (verdict.verdict == Verdict::kDistinct) {
    return verdict.witness && verdict.witness->measure == mu &&
           verify_witness(space, *verdict.witness);
  }
  if (verdict.method == DecisionMethod::kRandomized) return !verdict.witness;

  const auto support = mu.support();
  std::set<std::pair<PointIndex, MemberSet>> covered;
  for (const auto& cert : verdict.certificates) {
    if (cert.point >= space.size() || !mu.in_support(cert.point)) return false;
    const auto& d = cert.containing_ball;
    if (!std::binary_search(d.begin(), d.end(), cert.point)) return false;
    bool realized = false;
    for (PointIndex c = 0; c < space.size() && !realized; ++c)
      realized = is_closed_ball(space, c, d);
    if (!realized) return false;

    std::vector<Rational> combo(support.size());
    Rational total;
    for (const auto& term : cert.terms) {
      if (term.coefficient.is_negative()) return false;
      if (!is_closed_ball(space, cert.point, term.centered_ball)) return false;
      const Rational m = mass_of(mu, term.centered_ball);
      const auto v = functional(mu, support, term.centered_ball, m);
      for (std::size_t i = 0; i < v.size(); ++i) combo[i] += term.coefficient * v[i];
      total += term.coefficient;
    }
    if (total != Rational(1)) return false;
    if (combo != functional(mu, support, d, mass_of(mu, d))) return false;
    covered.insert({cert.point, d});
  }
  // Every containing closed ball at every support point needs a certificate.
  for (const auto& ball : brute_balls(space)) {
    for (PointIndex x : ball.members) {
      if (mu.in_support(x) && !covered.count({x, ball.members})) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

LscReport lsc_check(const DiscreteMeasure& mu, const FiniteMetricSpace& space,
                    std::span<const DiscreteMeasure> sequence, const DiscreteMeasure& limit,
                    PointIndex x, const Rational& deviation_bound) {
  if (mu.size() != space.size() || limit.size() != space.size()) {
    throw InputError("measure size does not match space");
  }
  require_support(mu, x);
  if (sequence.empty()) throw PreconditionError("lsc_check needs a nonempty sequence");
  const BallFamily family = enumerate_balls(space);
  const MaximalEvaluator eval(family, mu);

  LscReport report{
      x, eval.noncentered_measure(limit, x).value, eval.centered_measure(limit, x).value, {}, {}};
  report.min_containing_mass = eval.inf_pair(x, x).value;

  for (const auto& nu : sequence) {
    if (nu.size() != space.size()) throw InputError("sequence measure size does not match space");
    LscStep step;
    for (PointIndex p = 0; p < space.size(); ++p)
      step.deviation += abs(nu.weight(p) - limit.weight(p));
    step.noncentered = eval.noncentered_measure(nu, x).value;
    step.centered = eval.centered_measure(nu, x).value;
    step.bound = step.deviation / report.min_containing_mass;
    step.within_bound = abs(step.noncentered - report.limit_noncentered) <= step.bound &&
                        abs(step.centered - report.limit_centered) <= step.bound;
    step.liminf_ok = step.noncentered >= report.limit_noncentered - step.bound &&
                     step.centered >= report.limit_centered - step.bound;
    report.steps.push_back(std::move(step));
  }

  report.converged = report.steps.back().deviation <= deviation_bound;
  report.all_within_bound = std::all_of(report.steps.begin(), report.steps.end(),
                                        [](const LscStep& s) { return s.within_bound; });
  const std::size_t tail = report.steps.size() / 2;
  Rational tol, min_nc = report.steps[tail].noncentered, min_c = report.steps[tail].centered;
  for (std::size_t i = tail; i < report.steps.size(); ++i) {
    tol = max(tol, report.steps[i].bound);
    min_nc = min(min_nc, report.steps[i].noncentered);
    min_c = min(min_c, report.steps[i].centered);
  }
  report.tail_ok = min_nc >= report.limit_noncentered - tol && min_c >= report.limit_centered - tol;
  return report;
}

// ---------------------------------------------------------------------------

GridDemo build_grid_demo(std::size_t n, const Rational& length) {
  if (n < 2) throw PreconditionError("grid demo needs n >= 2");
  if (length != Rational(2)) throw PreconditionError("grid demo supports the interval [0, 2] only");
  const std::size_t count = 2 * n + 1;
  const long ln = static_cast<long>(n);

  Matrix d(count, std::vector<Rational>(count));
  std::vector<std::string> labels(count);
  for (std::size_t i = 0; i < count; ++i) {
    labels[i] = Rational(static_cast<long>(i), ln).str();
    for (std::size_t j = 0; j < count; ++j) {
      d[i][j] = Rational(std::abs(static_cast<long>(i) - static_cast<long>(j)), ln);
    }
  }
  FiniteMetricSpace space = FiniteMetricSpace::create(std::move(d), std::move(labels));
  DiscreteMeasure mu = DiscreteMeasure::uniform(count);
  std::vector<Rational> values(count);
  for (std::size_t i = 0; i <= n; ++i) values[i] = Rational(1);
  SampleFunction f(std::move(values));
  const PointIndex x = n + 1;

  const BallFamily family = enumerate_balls(space);
  const MaximalEvaluator eval(family, mu);
  MaximalValue c = eval.centered(f, x);
  MaximalValue nc = eval.noncentered(f, x);
  Rational gap = nc.value - c.value;
  const Rational closed_form = Rational(ln + 1, ln + 2) - Rational(ln + 1, 2 * ln + 1);

  const auto configs = find_midpoint_configs(space);
  std::map<std::pair<PointIndex, PointIndex>, PointIndex> midpoint;
  for (const auto& m : configs) midpoint[{m.a, m.b}] = m.m;
  bool interior = true;
  for (PointIndex k = 1; k + 1 < count; ++k) {
    auto it = midpoint.find({k - 1, k + 1});
    interior = interior && it != midpoint.end() && it->second == k;
  }

  auto extend = [&](PointIndex a, PointIndex b) {
    std::vector<PointIndex> chain{a, b};
    for (;;) {
      const PointIndex p = chain[chain.size() - 2], q = chain.back();
      auto it = midpoint.find({std::min(p, q), std::max(p, q)});
      if (it == midpoint.end()) break;
      chain.push_back(it->second);
    }
    return chain;
  };
  std::vector<PointIndex> best;
  for (const auto& [ends, m] : midpoint) {
    for (auto chain : {extend(ends.first, ends.second), extend(ends.second, ends.first)}) {
      if (chain.size() > best.size()) best = std::move(chain);
    }
  }

  std::vector<ChainBall> chain_balls;
  bool nested = true, forced = true;
  for (std::size_t i = 0; i + 2 < best.size(); ++i) {
    const PointIndex center = best[i + 2];
    const Rational radius = space.dist(best[i + 1], best[i + 2]);
    Ball ball = closed_ball(space, center, radius);
    ChainBall cb{center, radius, ball.members, measure_of(mu, ball)};
    if (!chain_balls.empty()) {
      const auto& prev = chain_balls.back();
      cb.nested_in_previous = std::includes(prev.members.begin(), prev.members.end(),
                                            cb.members.begin(), cb.members.end());
      cb.forced_inequality_holds = prev.mass <= cb.mass;
    }
    nested = nested && cb.nested_in_previous;
    forced = forced && cb.forced_inequality_holds;
    chain_balls.push_back(std::move(cb));
  }

  return GridDemo{
      n,
      std::move(space),
      std::move(mu),
      std::move(f),
      x,
      std::move(c),
      std::move(nc),
      std::move(gap),
      closed_form,
      family.balls.size(),
      configs.size(),
      interior,
      std::move(best),
      std::move(chain_balls),
      nested,
      forced,
      "finite counting-measure grid; a non-atomic measure is not representable, so this is "
      "discretized evidence only"};
}

}  // namespace maxlab
