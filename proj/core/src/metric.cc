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

#include "maxlab/metric.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace maxlab {
namespace {

struct MemberSetHash {
  std::size_t operator()(const std::vector<PointIndex>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (PointIndex p : v) {
      h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace

std::string to_string(AxiomViolation::Kind kind) {
  switch (kind) {
    case AxiomViolation::Kind::kNotSquare:
      return "not_square";
    case AxiomViolation::Kind::kLabelMismatch:
      return "label_count_mismatch";
    case AxiomViolation::Kind::kDuplicateLabel:
      return "duplicate_label";
    case AxiomViolation::Kind::kNonzeroDiagonal:
      return "nonzero_diagonal";
    case AxiomViolation::Kind::kAsymmetry:
      return "asymmetry";
    case AxiomViolation::Kind::kZeroOffDiagonal:
      return "zero_off_diagonal";
    case AxiomViolation::Kind::kNegative:
      return "negative_distance";
    case AxiomViolation::Kind::kTriangle:
      return "triangle";
  }
  return "unknown";
}

std::string AxiomViolation::describe() const {
  std::ostringstream os;
  os << to_string(kind);
  if (!indices.empty()) {
    os << " at (";
    for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << ")";
  }
  return os.str();
}

ValidationResult validate_space(Matrix dist, std::vector<std::string> labels) {
  ValidationResult result;
  auto& bad = result.violations;
  const std::size_t n = dist.size();

  if (n == 0) {
    bad.push_back({AxiomViolation::Kind::kNotSquare, {}});
    return result;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i].size() != n) bad.push_back({AxiomViolation::Kind::kNotSquare, {i}});
  }
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  } else if (labels.size() != n) {
    bad.push_back({AxiomViolation::Kind::kLabelMismatch, {}});
  }
  if (!bad.empty()) return result;

  std::set<std::string> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (!seen.insert(labels[i]).second) bad.push_back({AxiomViolation::Kind::kDuplicateLabel, {i}});
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!dist[i][i].is_zero()) bad.push_back({AxiomViolation::Kind::kNonzeroDiagonal, {i, i}});
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (dist[i][j].is_negative()) bad.push_back({AxiomViolation::Kind::kNegative, {i, j}});
      if (i < j && dist[i][j] != dist[j][i])
        bad.push_back({AxiomViolation::Kind::kAsymmetry, {i, j}});
      if (i < j && (dist[i][j].is_zero() || dist[j][i].is_zero())) {
        bad.push_back({AxiomViolation::Kind::kZeroOffDiagonal, {i, j}});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i == k || j == i || j == k) continue;
        if (dist[i][k] > dist[i][j] + dist[j][k]) {
          bad.push_back({AxiomViolation::Kind::kTriangle, {i, j, k}});
        }
      }
    }
  }
  if (bad.empty()) result.space = FiniteMetricSpace(std::move(dist), std::move(labels));
  return result;
}

FiniteMetricSpace FiniteMetricSpace::create(Matrix dist, std::vector<std::string> labels) {
  auto result = validate_space(std::move(dist), std::move(labels));
  if (!result.ok()) {
    std::string message = "invalid metric:";
    for (const auto& v : result.violations) message += " " + v.describe() + ";";
    throw InputError(message);
  }
  return std::move(*result.space);
}

std::optional<PointIndex> FiniteMetricSpace::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<PointIndex>(it - labels_.begin());
}

UltrametricResult is_ultrametric(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  for (PointIndex a = 0; a < n; ++a) {
    for (PointIndex c = a + 1; c < n; ++c) {
      for (PointIndex b = 0; b < n; ++b) {
        if (b == a || b == c) continue;
        if (space.dist(a, c) > max(space.dist(a, b), space.dist(b, c))) {
          const bool a_farther = space.dist(b, a) > space.dist(b, c);
          const PointIndex y = a_farther ? a : c;
          const PointIndex z = a_farther ? c : a;
          return {false, UltrametricViolation{b, y, z}};
        }
      }
    }
  }
  return {true, std::nullopt};
}

bool Ball::contains(PointIndex p) const {
  return std::binary_search(members.begin(), members.end(), p);
}

namespace {

Ball make_ball(const FiniteMetricSpace& space, PointIndex center, const Rational& radius,
               BallKind kind) {
  if (center >= space.size()) throw PreconditionError("ball center out of range");
  if (radius.is_negative()) throw PreconditionError("negative ball radius " + radius.str());
  Ball ball{center, radius, kind, {}};
  for (PointIndex p = 0; p < space.size(); ++p) {
    const auto& d = space.dist(center, p);
    if (kind == BallKind::kClosed ? d <= radius : d < radius) ball.members.push_back(p);
  }
  return ball;
}

}  // namespace

Ball closed_ball(const FiniteMetricSpace& space, PointIndex center, const Rational& radius) {
  return make_ball(space, center, radius, BallKind::kClosed);
}

Ball open_ball(const FiniteMetricSpace& space, PointIndex center, const Rational& radius) {
  return make_ball(space, center, radius, BallKind::kOpen);
}

BallFamily enumerate_balls(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  BallFamily family;
  family.containing.resize(n);
  family.centered.resize(n);

  std::unordered_map<std::vector<PointIndex>, std::size_t, MemberSetHash> index_of;
  std::vector<PointIndex> order(n);
  for (PointIndex c = 0; c < n; ++c) {
    std::iota(order.begin(), order.end(), PointIndex{0});
    std::stable_sort(order.begin(), order.end(), [&](PointIndex p, PointIndex q) {
      return space.dist(c, p) < space.dist(c, q);
    });
    std::vector<PointIndex> prefix;
    std::size_t k = 0;
    while (k < n) {
      const Rational& radius = space.dist(c, order[k]);
      while (k < n && space.dist(c, order[k]) == radius) prefix.push_back(order[k++]);
      std::vector<PointIndex> members = prefix;
      std::sort(members.begin(), members.end());
      auto [it, inserted] = index_of.try_emplace(members, family.balls.size());
      if (inserted) family.balls.push_back(Ball{c, radius, BallKind::kClosed, std::move(members)});
      family.centered[c].push_back(it->second);
    }
  }
  for (std::size_t b = 0; b < family.balls.size(); ++b) {
    for (PointIndex p : family.balls[b].members) family.containing[p].push_back(b);
  }
  for (auto& list : family.centered) std::sort(list.begin(), list.end());
  return family;
}

std::vector<MidpointConfig> find_midpoint_configs(const FiniteMetricSpace& space) {
  const std::size_t n = space.size();
  const Rational two(2);
  std::vector<MidpointConfig> configs;
  for (PointIndex a = 0; a < n; ++a) {
    for (PointIndex b = a + 1; b < n; ++b) {
      const Rational& span = space.dist(a, b);
      for (PointIndex m = 0; m < n; ++m) {
        if (two * space.dist(a, m) == span && two * space.dist(m, b) == span) {
          configs.push_back({a, m, b});
        }
      }
    }
  }
  return configs;
}

}  // namespace maxlab
