// Copyright 2026 The ARC-P Consensus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "arcp/digraph.hpp"

namespace arcp {

enum class TimeMode { kDiscrete, kContinuous };

/// LCP uses every neighbour; ARC-P with parameter F first discards up to F
/// values strictly above and F strictly below the node's own value.
struct Protocol {
  enum class Kind { kLcp, kArcp };
  Kind kind = Kind::kArcp;
  std::size_t F = 0;

  static Protocol lcp() { return {Kind::kLcp, 0}; }
  static Protocol arcp(std::size_t f) { return {Kind::kArcp, f}; }

  friend bool operator==(const Protocol&, const Protocol&) = default;
};

enum class WeightRule { kUniform, kCustom };

/// Weight bounds and the rule producing neighbour weights.
///
/// Uniform rule: discrete weights 1/(1 + d_i - |R_i|) for each kept neighbour,
/// continuous weights 1. Custom rule: `table[{i, j}]` is the weight node i
/// gives neighbour j, indexed by neighbour id; in continuous mode it is
/// re-ordered internally to the sorted-offset order. Custom weights must be
/// >= alpha (and <= beta in continuous mode); the discrete self weight
/// -sum(kept) must be >= alpha - 1.
struct WeightPolicy {
  double alpha = 0.01;
  double beta = 1.0;
  WeightRule rule = WeightRule::kUniform;
  std::map<std::pair<NodeId, NodeId>, double> table;

  /// Throws ConfigError when the bounds themselves are inconsistent for the
  /// mode (alpha <= 0, alpha >= 1 in discrete mode, beta < alpha, a uniform
  /// continuous weight of 1 outside [alpha, beta]).
  void validate(TimeMode mode) const;

  friend bool operator==(const WeightPolicy&, const WeightPolicy&) = default;
};

/// Lower bound on every convex-combination coefficient a discrete run can
/// use on `g`: 1/(1 + max in-degree) for the uniform rule, `alpha` otherwise.
double effective_alpha(const WeightPolicy& policy, const Digraph& g);

struct NeighborValue {
  NodeId id = 0;
  double value = 0.0;
};

struct FilterOutcome {
  NodeId self = 0;
  NodeSet removed;  // R_i
  NodeSet kept;     // J_i \ R_i, always contains self
  std::size_t removed_above = 0;
  std::size_t removed_below = 0;
};

/// ARC-P extreme-value filter. Among values strictly larger than
/// `self_value`, all are removed when there are fewer than F, otherwise
/// exactly the F largest; equal values are removed larger-id first, so the
/// smaller ids are kept. Symmetrically below. Values equal to `self_value`
/// are never removed. Throws InputError on duplicate ids or a neighbour
/// carrying the self id.
FilterOutcome arcp_filter(NodeId self_id, double self_value,
                          std::span<const NeighborValue> neighbors,
                          std::size_t F);

struct WeightedNode {
  NodeId id = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedNode&, const WeightedNode&) = default;
};

/// Discrete weights over `kept`, sorted by id and including the self weight.
/// Rows sum to zero (forward-difference form).
std::vector<WeightedNode> discrete_weights(const FilterOutcome& kept,
                                           const WeightPolicy& policy,
                                           std::size_t in_degree);

/// x_i + sum over kept of w_ij x_j. The exact value is a convex combination
/// of the kept values; the result is clamped to their range so rounding can
/// never leave it.
double discrete_step_value(double self_value, double self_weight,
                           std::span<const double> kept_values,
                           std::span<const double> kept_weights);

/// Stable ascending sort.
std::vector<double> sort_ascending(std::vector<double> z);

/// Permutation p with z[p[0]] <= z[p[1]] <= ..., ties keeping input order.
std::vector<std::size_t> sort_permutation(std::span<const double> z);

/// Weighted zero-selective reduce over an ascending `z`: for k > 2F the F
/// smallest entries contribute only when >= 0 and the F largest only when
/// <= 0; for F < k <= 2F the first k - F entries contribute when >= 0 and
/// entries F+1..k when <= 0; for k <= F the result is 0. Throws InputError
/// when `z` is unsorted or the lengths differ.
double reduce_zero_selective(std::span<const double> z,
                             std::span<const double> w, std::size_t F);

/// reduce_zero_selective(sort_ascending(z), w, F), with `w` indexed by sorted
/// rank.
double phi(std::span<const double> z, std::span<const double> w,
           std::size_t F);

/// dx_i/dt under ARC-P: offsets x_j - x_i over V_i, ordered by (offset,
/// offset < 0 ? -id : id) so ties are removed larger id first, then phi with
/// the policy's continuous weights re-ordered to match.
double continuous_rate(NodeId i, std::span<const double> x, const Digraph& g,
                       std::size_t F, const WeightPolicy& policy);

/// LCP next value in discrete time: sum over J_i of w_ij x_j added to x_i.
double lcp_step(NodeId i, std::span<const double> x, const Digraph& g,
                const WeightPolicy& policy);

/// LCP rate in continuous time. Terms are accumulated in the same order as
/// continuous_rate, so ARC-P with F = 0 reproduces it bit for bit.
double lcp_rate(NodeId i, std::span<const double> x, const Digraph& g,
                const WeightPolicy& policy);

/// One discrete ARC-P update for node i; `outcome` receives the filter result
/// when non-null.
double arcp_step(NodeId i, std::span<const double> x, const Digraph& g,
                 std::size_t F, const WeightPolicy& policy,
                 FilterOutcome* outcome = nullptr);

/// Continuous weight node i assigns to neighbour j under `policy`.
double continuous_weight(const WeightPolicy& policy, NodeId i, NodeId j);

/// Neighbour values of node i as read from the state vector.
std::vector<NeighborValue> neighbor_values(NodeId i, std::span<const double> x,
                                           const Digraph& g);

}  // namespace arcp
