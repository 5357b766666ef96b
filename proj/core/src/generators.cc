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

#include "maxlab/generators.h"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>

namespace maxlab {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("SeededRng::below with zero bound");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t SeededRng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("empty integer range");
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  return lo + static_cast<std::int64_t>(below(span));
}

double SeededRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Dendrogram::Dendrogram(std::size_t leaf_count)
    : leaf_count_(leaf_count), nodes_(leaf_count), merged_(leaf_count, false) {
  if (leaf_count == 0) throw PreconditionError("dendrogram needs at least one leaf");
}

std::size_t Dendrogram::merge(std::size_t a, std::size_t b, const Rational& height) {
  if (a == b || a >= nodes_.size() || b >= nodes_.size()) {
    throw PreconditionError("invalid dendrogram merge operands");
  }
  if (merged_[a] || merged_[b]) throw PreconditionError("dendrogram node merged twice");
  if (!height.is_positive() || height <= nodes_[a].height || height <= nodes_[b].height) {
    throw PreconditionError("merge height " + height.str() + " must exceed child heights");
  }
  merged_[a] = merged_[b] = true;
  nodes_.push_back(Node{static_cast<std::ptrdiff_t>(a), static_cast<std::ptrdiff_t>(b), height});
  merged_.push_back(false);
  return nodes_.size() - 1;
}

Matrix Dendrogram::distances() const {
  if (!complete()) throw PreconditionError("dendrogram is not fully merged");
  const std::size_t n = leaf_count_;
  Matrix d(n, std::vector<Rational>(n));
  std::vector<std::vector<PointIndex>> leaves(nodes_.size());
  for (std::size_t i = 0; i < n; ++i) leaves[i] = {i};
  for (std::size_t v = n; v < nodes_.size(); ++v) {
    const auto& left = leaves[static_cast<std::size_t>(nodes_[v].left)];
    const auto& right = leaves[static_cast<std::size_t>(nodes_[v].right)];
    for (PointIndex a : left) {
      for (PointIndex b : right) d[a][b] = d[b][a] = nodes_[v].height;
    }
    leaves[v] = left;
    leaves[v].insert(leaves[v].end(), right.begin(), right.end());
  }
  return d;
}

FiniteMetricSpace Dendrogram::to_space() const { return FiniteMetricSpace::create(distances()); }

FiniteMetricSpace gen_ultrametric(std::size_t n, std::uint64_t seed, const RationalRange& heights) {
  if (n == 0) throw PreconditionError("gen_ultrametric needs n >= 1");
  if (heights.lo.is_negative() || heights.hi <= heights.lo) {
    throw PreconditionError("height range must satisfy 0 <= lo < hi");
  }
  SeededRng rng(seed);
  const std::size_t steps = std::max<std::size_t>(64, 4 * n);
  std::vector<std::size_t> grid(steps);
  std::iota(grid.begin(), grid.end(), std::size_t{1});
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::swap(grid[i], grid[i + rng.below(steps - i)]);
  }
  std::vector<std::size_t> picks(grid.begin(), grid.begin() + static_cast<std::ptrdiff_t>(n - 1));
  std::sort(picks.begin(), picks.end());

  const Rational step = (heights.hi - heights.lo) / Rational(static_cast<long>(steps));
  Dendrogram tree(n);
  std::vector<std::size_t> roots(n);
  std::iota(roots.begin(), roots.end(), std::size_t{0});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const std::size_t i = rng.below(roots.size());
    std::size_t j = rng.below(roots.size() - 1);
    if (j >= i) ++j;
    const Rational h = heights.lo + step * Rational(static_cast<long>(picks[k]));
    const std::size_t joined = tree.merge(roots[i], roots[j], h);
    roots[std::min(i, j)] = joined;
    roots.erase(roots.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
  }
  return tree.to_space();
}

FiniteMetricSpace taxicab_space(std::span<const std::vector<Rational>> points) {
  const std::size_t n = points.size();
  Matrix d(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i].size() != points[j].size()) throw PreconditionError("point dimension mismatch");
      Rational s;
      for (std::size_t k = 0; k < points[i].size(); ++k) s += abs(points[i][k] - points[j][k]);
      d[i][j] = d[j][i] = s;
    }
  }
  return FiniteMetricSpace::create(std::move(d));
}

FiniteMetricSpace gen_taxicab(std::size_t n, std::size_t dim, std::int64_t coord_range,
                              std::uint64_t seed) {
  if (n == 0 || dim == 0) throw PreconditionError("gen_taxicab needs n >= 1 and dim >= 1");
  if (coord_range < 0) throw PreconditionError("coord_range must be nonnegative");
  SeededRng rng(seed);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::vector<Rational>> points;
  std::size_t attempts = 0;
  const std::size_t budget = 1000 * n;
  while (points.size() < n) {
    if (++attempts > budget) throw PreconditionError("gen_taxicab: resample limit exceeded");
    std::vector<std::int64_t> halves(dim);
    for (auto& h : halves) h = rng.uniform_int(0, 2 * coord_range);
    if (!seen.insert(halves).second) continue;
    std::vector<Rational> p;
    p.reserve(dim);
    for (auto h : halves) p.emplace_back(static_cast<long>(h), 2L);
    points.push_back(std::move(p));
  }
  return taxicab_space(points);
}

FiniteMetricSpace shortest_path_metric(std::size_t n, std::span<const WeightedEdge> edges) {
  if (n == 0) throw PreconditionError("graph needs at least one vertex");
  std::vector<std::vector<std::optional<Rational>>> d(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = Rational(0);
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n || e.u == e.v) throw PreconditionError("invalid graph edge");
    if (!e.weight.is_positive()) throw PreconditionError("edge weights must be positive");
    auto& cur = d[e.u][e.v];
    if (!cur || e.weight < *cur) d[e.u][e.v] = d[e.v][e.u] = e.weight;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!d[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!d[k][j]) continue;
        Rational via = *d[i][k] + *d[k][j];
        if (!d[i][j] || via < *d[i][j]) d[i][j] = std::move(via);
      }
    }
  }
  Matrix out(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!d[i][j]) throw PreconditionError("graph is disconnected");
      out[i][j] = *d[i][j];
    }
  }
  return FiniteMetricSpace::create(std::move(out));
}

FiniteMetricSpace gen_graph_metric(std::size_t n, double edge_probability,
                                   const RationalRange& weights, std::uint64_t seed) {
  if (n == 0) throw PreconditionError("gen_graph_metric needs n >= 1");
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
    throw PreconditionError("edge probability must lie in [0, 1]");
  }
  if (!weights.lo.is_positive() || weights.hi < weights.lo) {
    throw PreconditionError("weight range must satisfy 0 < lo <= hi");
  }
  SeededRng rng(seed);
  const Rational half(1, 2);
  // Half-steps from lo; the count is floor((hi - lo) / (1/2)).
  const mpq_class span_q = (weights.hi - weights.lo).raw() * 2;
  const mpz_class steps = span_q.get_num() / span_q.get_den();
  const std::int64_t max_step = steps.get_si();
  auto draw_weight = [&] {
    return weights.lo + half * Rational(static_cast<long>(rng.uniform_int(0, max_step)));
  };

  std::vector<WeightedEdge> edges;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (PointIndex u = 0; u < n; ++u) {
    for (PointIndex v = u + 1; v < n; ++v) {
      if (!rng.bernoulli(edge_probability)) continue;
      edges.push_back({u, v, draw_weight()});
      parent[find(u)] = find(v);
    }
  }
  std::vector<PointIndex> representatives;
  for (PointIndex v = 0; v < n; ++v) {
    if (find(v) == v) representatives.push_back(v);
  }
  for (std::size_t i = 1; i < representatives.size(); ++i) {
    edges.push_back({representatives[i - 1], representatives[i], draw_weight()});
  }
  return shortest_path_metric(n, edges);
}

DiscreteMeasure gen_measure(const FiniteMetricSpace& space, std::uint64_t seed,
                            double zero_fraction) {
  if (!(zero_fraction >= 0.0 && zero_fraction < 1.0)) {
    throw PreconditionError("zero_fraction must lie in [0, 1)");
  }
  SeededRng rng(seed);
  std::vector<Rational> w(space.size());
  bool any = false;
  for (auto& x : w) {
    const bool zero = rng.bernoulli(zero_fraction);
    const auto halves = rng.uniform_int(1, 12);
    if (!zero) {
      x = Rational(static_cast<long>(halves), 2L);
      any = true;
    }
  }
  if (!any) w[rng.below(w.size())] = Rational(1);
  return DiscreteMeasure(std::move(w));
}

SampleFunction gen_function(const FiniteMetricSpace& space, std::uint64_t seed,
                            std::int64_t range) {
  if (range < 0) throw PreconditionError("function range must be nonnegative");
  SeededRng rng(seed);
  std::vector<Rational> v(space.size());
  for (auto& x : v) x = Rational(static_cast<long>(rng.uniform_int(-range, range)));
  return SampleFunction(std::move(v));
}

}  // namespace maxlab
