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
// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Limits below are wall-clock seconds on a single core.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "maxlab/generators.h"
#include "maxlab/maximal.h"
#include "maxlab/measure.h"
#include "maxlab/metric.h"
#include "maxlab/theorem_lab.h"

namespace {

using namespace maxlab;

constexpr std::uint64_t kCorpusSeed = 20260101;
constexpr std::size_t kSpacesPerFamily = 200;

constexpr double kLimit1 = 0.001;
constexpr double kLimit2 = 10;
constexpr double kLimit3 = 60;
constexpr double kLimit4 = 60;
constexpr double kLimit5 = 300;
constexpr double kLimit7 = 30;
constexpr double kLimit8 = 1;
constexpr std::size_t kRandomTrials = 1000;
constexpr long kLscSteps = 50;

struct Outcome {
  bool ok = true;
  std::string detail;
  double limit = 0;  // 0: untimed
};

// Run `body` and print the verdict line.
bool criterion(int id, const char* title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o = body();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = o.ok;
  std::string timing = std::to_string(s) + " s";
  if (o.limit > 0) {
    timing += " / limit " + std::to_string(o.limit) + " s";
    if (s >= o.limit) {
      ok = false;
      o.detail += " [too slow]";
    }
  }
  std::printf("%s [%d] %s: %s (%s)\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              timing.c_str());
  std::fflush(stdout);
  return ok;
}

struct Instance {
  FiniteMetricSpace space;
  std::uint64_t seed;
};

// Non-ultrametric taxicab and graph spaces, n in [3, 12].
std::vector<Instance> non_ultrametric_corpus() {
  std::vector<Instance> out;
  for (int family = 0; family < 2; ++family) {
    std::size_t kept = 0;
    for (std::uint64_t k = 0; kept < kSpacesPerFamily / 2; ++k) {
      const std::uint64_t seed = derive_seed(kCorpusSeed + family, k);
      const std::size_t n = 3 + seed % 10;
      auto s = family == 0 ? gen_taxicab(n, 1 + seed % 3, 8, seed)
                           : gen_graph_metric(n, 0.3, {Rational(1), Rational(4)}, seed);
      if (is_ultrametric(s).ultrametric) continue;
      out.push_back({std::move(s), seed});
      ++kept;
    }
  }
  return out;
}

std::vector<Instance> ultrametric_corpus() {
  std::vector<Instance> out;
  for (std::uint64_t k = 0; k < kSpacesPerFamily; ++k) {
    const std::uint64_t seed = derive_seed(kCorpusSeed + 7, k);
    out.push_back({gen_ultrametric(1 + seed % 12, seed), seed});
  }
  return out;
}

FiniteMetricSpace line3() {
  Matrix d(3, std::vector<Rational>(3));
  for (long i = 0; i < 3; ++i) {
    for (long j = 0; j < 3; ++j) d[i][j] = Rational(std::labs(i - j));
  }
  return FiniteMetricSpace::create(std::move(d));
}

Outcome proof_values() {
  const auto s = line3();
  const auto r = check_ball_infimum(s, DiscreteMeasure::uniform(3));
  const auto* p = r.find(1, 2);
  Outcome o{p && p->lhs == Rational(2) && p->rhs_sym == Rational(3), "", kLimit1};
  if (p) o.detail = "muB(y,d(x,y)) = " + p->lhs.str() + ", muB(x,d(x,y)) = " + p->rhs_sym.str();
  return o;
}

Outcome witness_values(const std::vector<Instance>& corpus) {
  std::size_t restricted_ok = 0, full_ok = 0;
  for (const auto& inst : corpus) {
    const auto t = *is_ultrametric(inst.space).violation;
    const PointIndex pts[] = {t.x, t.y, t.z};
    const auto sub = restrict_space(inst.space, pts);
    const auto w = construct_witness(sub, {0, 1, 2});
    if (w.noncentered_value == Rational(1, 2) && w.centered_value == Rational(1, 3) &&
        verify_witness(sub, w)) {
      ++restricted_ok;
    }
    const auto full = construct_witness(inst.space, t);
    if (full.noncentered_value > full.centered_value && verify_witness(inst.space, full)) ++full_ok;
  }
  return {restricted_ok == corpus.size() && full_ok == corpus.size() && corpus.size() == 200,
          std::to_string(restricted_ok) + "/" + std::to_string(corpus.size()) +
              " restricted witnesses at 1/2 vs 1/3, " + std::to_string(full_ok) +
              " full-space gaps",
          kLimit2};
}

Outcome forward_direction(const std::vector<Instance>& corpus) {
  std::size_t evaluations = 0, failures = 0, points = 0;
  for (const auto& inst : corpus) {
    const BallFamily family = enumerate_balls(inst.space);
    for (std::uint64_t m = 0; m < 5; ++m) {
      const auto mu = gen_measure(inst.space, derive_seed(inst.seed, 10 + m), 0.1 * double(m));
      const MaximalEvaluator eval(family, mu);
      for (std::uint64_t k = 0; k < 5; ++k) {
        const auto f = gen_function(inst.space, derive_seed(inst.seed, 100 + 5 * m + k));
        const auto report = maximal_field(f, eval);
        ++evaluations;
        points += report.points.size();
        for (const auto& p : report.points) {
          if (p.centered.value != p.noncentered.value) ++failures;
        }
      }
    }
  }
  return {failures == 0 && evaluations == 5000,
          std::to_string(evaluations) + " fields, " + std::to_string(points) + " points, " +
              std::to_string(failures) + " mismatches",
          kLimit3};
}

Outcome dirac_identity(const std::vector<Instance>& ultra, const std::vector<Instance>& other) {
  std::size_t pairs = 0, failures = 0;
  for (const auto* corpus : {&ultra, &other}) {
    for (const auto& inst : *corpus) {
      const BallFamily family = enumerate_balls(inst.space);
      const auto mu = gen_measure(inst.space, derive_seed(inst.seed, 1), 0.3);
      const MaximalEvaluator eval(family, mu);
      const auto support = mu.support();
      for (PointIndex x : support) {
        const auto delta = dirac(inst.space, x);
        for (PointIndex y : support) {
          ++pairs;
          if (eval.noncentered_measure(delta, y).value * eval.inf_pair(x, y).value != Rational(1)) {
            ++failures;
          }
        }
      }
    }
  }
  return {failures == 0,
          std::to_string(pairs) + " support pairs, " + std::to_string(failures) + " failures",
          kLimit4};
}

// Every metric on n <= 4 points with distances in {1, 2, 3}, one per
// relabeling class.
std::vector<FiniteMetricSpace> small_spaces() {
  std::vector<FiniteMetricSpace> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    std::set<std::vector<int>> seen;
    std::size_t combos = 1;
    for (std::size_t e = 0; e < edges.size(); ++e) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      std::vector<std::vector<int>> d(n, std::vector<int>(n, 0));
      std::size_t c = code;
      for (const auto& [i, j] : edges) {
        d[i][j] = d[j][i] = 1 + static_cast<int>(c % 3);
        c /= 3;
      }
      bool metric = true;
      for (std::size_t i = 0; i < n && metric; ++i) {
        for (std::size_t j = 0; j < n && metric; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            if (d[i][j] > d[i][k] + d[k][j]) metric = false;
          }
        }
      }
      if (!metric) continue;
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::vector<int> canon;
      do {
        std::vector<int> flat;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) flat.push_back(d[perm[i]][perm[j]]);
        }
        if (canon.empty() || flat < canon) canon = std::move(flat);
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(canon).second) continue;
      Matrix m(n, std::vector<Rational>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(d[i][j]);
      }
      out.push_back(FiniteMetricSpace::create(std::move(m)));
    }
  }
  return out;
}

// Weights in {0, 1, 2} with nonempty support.
std::vector<DiscreteMeasure> weight_grid(std::size_t n) {
  std::vector<DiscreteMeasure> out;
  std::size_t combos = 1;
  for (std::size_t i = 0; i < n; ++i) combos *= 3;
  for (std::size_t code = 1; code < combos; ++code) {
    std::vector<Rational> w(n);
    std::size_t c = code;
    for (auto& v : w) {
      v = Rational(static_cast<long>(c % 3));
      c /= 3;
    }
    out.emplace_back(std::move(w));
  }
  return out;
}

struct DecidedInstance {
  const FiniteMetricSpace* space;
  DiscreteMeasure mu;
  Verdict exact;
};

Outcome decision_soundness(const std::vector<FiniteMetricSpace>& spaces,
                           std::vector<DecidedInstance>& decided) {
  std::size_t instances = 0, contradictions = 0, unverified = 0, distinct = 0, rnd_distinct = 0;
  for (const auto& s : spaces) {
    for (auto& mu : weight_grid(s.size())) {
      const std::uint64_t seed = derive_seed(kCorpusSeed + 5, instances);
      const auto exact = coincidence_exact(s, mu);
      const auto rnd = coincidence_randomized(s, mu, kRandomTrials, seed);
      ++instances;
      if (!verify_verdict(s, mu, exact)) ++unverified;
      if (!verify_verdict(s, mu, rnd)) ++unverified;
      if (rnd.verdict == Verdict::kDistinct && exact.verdict != Verdict::kDistinct)
        ++contradictions;
      if (exact.verdict == Verdict::kDistinct) ++distinct;
      if (rnd.verdict == Verdict::kDistinct) ++rnd_distinct;
      decided.push_back({&s, std::move(mu), exact.verdict});
    }
  }
  return {contradictions == 0 && unverified == 0 && instances > 0,
          std::to_string(spaces.size()) + " spaces, " + std::to_string(instances) +
              " instances, exact distinct " + std::to_string(distinct) + ", randomized distinct " +
              std::to_string(rnd_distinct) + ", " + std::to_string(contradictions) +
              " contradictions, " + std::to_string(unverified) + " unverified certificates",
          kLimit5};
}

Outcome infimum_implication(const std::vector<DecidedInstance>& small,
                            const std::vector<Instance>& ultra,
                            const std::vector<Instance>& other) {
  std::size_t equal = 0, failures = 0;
  auto check = [&](const FiniteMetricSpace& s, const DiscreteMeasure& mu) {
    ++equal;
    for (const auto& p : check_ball_infimum(s, mu).pairs) {
      if (!p.inequality_holds || !p.symmetry_holds) ++failures;
    }
  };
  for (const auto& d : small) {
    if (d.exact == Verdict::kEqual) check(*d.space, d.mu);
  }
  std::size_t generated = 0;
  for (const auto* corpus : {&ultra, &other}) {
    for (const auto& inst : *corpus) {
      const auto mu = gen_measure(inst.space, derive_seed(inst.seed, 2), 0.5);
      ++generated;
      if (coincidence_exact(inst.space, mu).verdict == Verdict::kEqual) check(inst.space, mu);
    }
  }
  return {failures == 0 && equal > 0, std::to_string(equal) + " equal instances (of " +
                                          std::to_string(small.size() + generated) + "), " +
                                          std::to_string(failures) + " failing pairs"};
}

Outcome grid_demo() {
  struct Expected {
    std::size_t n;
    Rational centered, noncentered;
  };
  const Expected table[] = {{10, Rational(11, 21), Rational(11, 12)},
                            {20, Rational(21, 41), Rational(21, 22)},
                            {50, Rational(51, 101), Rational(51, 52)},
                            {100, Rational(101, 201), Rational(101, 102)}};
  bool ok = true;
  std::string detail;
  for (const auto& e : table) {
    const auto g = build_grid_demo(e.n);
    const Rational m(static_cast<long>(e.n));
    const Rational closed = (m + 1) / (m + 2) - (m + 1) / (2 * m + 1);
    const bool row = g.centered.value == e.centered && g.noncentered.value == e.noncentered &&
                     g.gap == closed && g.closed_form_gap == closed;
    ok = ok && row;
    detail += "n=" + std::to_string(e.n) + " gap " + g.gap.str() + (row ? "" : " MISMATCH") + "; ";
    if (e.n == 10) ok = ok && g.gap == Rational(11, 28);
    if (e.n == 100) {
      ok = ok && g.gap == Rational(9999, 20502);
      detail += std::to_string(g.ball_count) + " distinct balls at n=100";
    }
  }
  return {ok, detail, kLimit7};
}

Outcome lsc() {
  const auto s = line3();
  const auto mu = DiscreteMeasure::uniform(3);
  struct Case {
    const char* name;
    PointIndex x;
    std::function<std::vector<Rational>(long)> at;
    std::vector<Rational> limit;
  };
  const std::vector<Case> cases = {
      {"leak",
       0,
       [](long n) { return std::vector<Rational>{Rational(n - 1, n), 0, Rational(1, n)}; },
       {1, 0, 0}},
      {"constant", 1, [](long) { return std::vector<Rational>{1, 2, 0}; }, {1, 2, 0}},
      {"vanishing",
       2,
       [](long n) { return std::vector<Rational>{Rational(1, n), 0, 1}; },
       {0, 0, 1}}};
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    std::vector<DiscreteMeasure> seq;
    for (long n = 1; n <= kLscSteps; ++n) seq.emplace_back(c.at(n));
    const DiscreteMeasure limit(c.limit);
    const auto r = lsc_check(mu, s, seq, limit, c.x, Rational(2, kLscSteps));
    // C = max_n n * deviation_n / (smallest mass of a ball containing x).
    Rational constant;
    for (long n = 1; n <= kLscSteps; ++n) {
      constant = max(constant, Rational(n) * r.steps[n - 1].deviation / r.min_containing_mass);
    }
    bool rate = true, liminf = true;
    for (long n = 1; n <= kLscSteps; ++n) {
      const auto& st = r.steps[n - 1];
      const Rational tol = constant / Rational(n);
      rate = rate && abs(st.noncentered - r.limit_noncentered) <= tol &&
             abs(st.centered - r.limit_centered) <= tol;
      liminf = liminf && st.noncentered >= r.limit_noncentered - tol &&
               st.centered >= r.limit_centered - tol;
    }
    const bool case_ok = rate && liminf && r.ok();
    ok = ok && case_ok;
    detail += std::string(c.name) + ": M -> " + r.limit_noncentered.str() +
              ", C = " + constant.str() + (case_ok ? "" : " FAILED") + "; ";
  }
  return {ok, detail, kLimit8};
}

}  // namespace

int main() {
  bool all = true;
  all &= criterion(1, "proof values on LINE3", proof_values);

  std::vector<Instance> other, ultra;
  {
    const auto t0 = std::chrono::steady_clock::now();
    other = non_ultrametric_corpus();
    ultra = ultrametric_corpus();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("corpus: %zu non-ultrametric, %zu ultrametric spaces (%f s)\n", other.size(),
                ultra.size(), s);
  }
  all &= criterion(2, "witness values", [&] { return witness_values(other); });
  all &= criterion(3, "ultrametric forward direction", [&] { return forward_direction(ultra); });
  all &= criterion(4, "dirac identity", [&] { return dirac_identity(ultra, other); });

  const auto spaces = small_spaces();
  std::vector<DecidedInstance> decided;
  all &= criterion(5, "decision soundness n <= 4",
                   [&] { return decision_soundness(spaces, decided); });
  all &= criterion(6, "ball-infimum implication",
                   [&] { return infimum_implication(decided, ultra, other); });
  all &= criterion(7, "grid demo", grid_demo);
  all &= criterion(8, "lower semicontinuity on LINE3", lsc);

  std::printf("%s\n", all ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL");
  return all ? 0 : 1;
}
