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

#ifndef MAXLAB_GENERATORS_H_
#define MAXLAB_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "maxlab/measure.h"
#include "maxlab/metric.h"
#include "maxlab/rational.h"

namespace maxlab {

/// Seeded generator with platform-independent output. std::mt19937_64 is
/// fully specified by the standard; the distributions on top of it are
/// implemented here because the std:: ones are not.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1) with 53 random bits.
  double unit();
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 of (base, stream): independent seeds for corpus members.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

/// Rooted binary merge tree. Nodes [0, leaf_count) are leaves; each merge
/// appends an internal node whose height exceeds both children's.
class Dendrogram {
 public:
  struct Node {
    std::ptrdiff_t left = -1;
    std::ptrdiff_t right = -1;
    Rational height;
  };

  explicit Dendrogram(std::size_t leaf_count);

  /// Joins two current roots. Throws PreconditionError if either is already
  /// merged or `height` does not exceed both child heights (or is not > 0).
  std::size_t merge(std::size_t a, std::size_t b, const Rational& height);

  std::size_t leaf_count() const { return leaf_count_; }
  const std::vector<Node>& nodes() const { return nodes_; }
  bool complete() const { return nodes_.size() == 2 * leaf_count_ - 1; }

  /// d(a, b) = height of the lowest common ancestor. Requires complete().
  Matrix distances() const;
  FiniteMetricSpace to_space() const;

 private:
  std::size_t leaf_count_;
  std::vector<Node> nodes_;
  std::vector<bool> merged_;
};

struct RationalRange {
  Rational lo;
  Rational hi;
};

/// Random dendrogram with heights drawn as distinct grid values in
/// (lo, hi], assigned in increasing order along the merge sequence.
FiniteMetricSpace gen_ultrametric(std::size_t n, std::uint64_t seed,
                                  const RationalRange& heights = {Rational(1), Rational(10)});

/// L1 distances between points with coordinates in {0, 1/2, ..., coord_range}.
/// Duplicate points are resampled; throws PreconditionError when the
/// resample budget runs out.
FiniteMetricSpace gen_taxicab(std::size_t n, std::size_t dim, std::int64_t coord_range,
                              std::uint64_t seed);
FiniteMetricSpace taxicab_space(std::span<const std::vector<Rational>> points);

struct WeightedEdge {
  PointIndex u;
  PointIndex v;
  Rational weight;
};

/// All-pairs shortest paths. Throws PreconditionError when disconnected or a
/// weight is not positive.
FiniteMetricSpace shortest_path_metric(std::size_t n, std::span<const WeightedEdge> edges);

/// Erdos-Renyi edges with weights in {lo, lo + 1/2, ..., hi}; components are
/// then chained together so the graph is connected.
FiniteMetricSpace gen_graph_metric(std::size_t n, double edge_probability,
                                   const RationalRange& weights, std::uint64_t seed);

/// Weights in {1/2, 1, ..., 6}; each point is weightless with probability
/// zero_fraction, but at least one point always keeps mass.
DiscreteMeasure gen_measure(const FiniteMetricSpace& space, std::uint64_t seed,
                            double zero_fraction = 0.0);
/// Integer values in [-range, range].
SampleFunction gen_function(const FiniteMetricSpace& space, std::uint64_t seed,
                            std::int64_t range = 9);

}  // namespace maxlab

#endif  // MAXLAB_GENERATORS_H_
