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

#include "arcp/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "arcp/errors.hpp"

namespace arcp {

void WeightPolicy::validate(TimeMode mode) const {
  if (!(alpha > 0.0)) throw ConfigError("weight lower bound alpha must be > 0");
  if (mode == TimeMode::kDiscrete && !(alpha < 1.0))
    throw ConfigError("discrete weight lower bound alpha must be < 1");
  if (mode == TimeMode::kContinuous) {
    if (!(beta >= alpha)) throw ConfigError("weight upper bound beta must be >= alpha");
    if (rule == WeightRule::kUniform && (alpha > 1.0 || beta < 1.0))
      throw ConfigError("uniform continuous weights are 1, outside [alpha, beta]");
  }
  if (rule == WeightRule::kCustom) {
    for (const auto& [key, w] : table) {
      if (key.first == key.second)
        throw ConfigError("custom weight table may not contain self weights");
      if (!(w >= alpha))
        throw ConfigError("custom weight w(" + std::to_string(key.first) + "," +
                          std::to_string(key.second) + ") is below alpha");
      if (mode == TimeMode::kContinuous && w > beta)
        throw ConfigError("custom weight w(" + std::to_string(key.first) + "," +
                          std::to_string(key.second) + ") exceeds beta");
    }
  }
}

double effective_alpha(const WeightPolicy& policy, const Digraph& g) {
  if (policy.rule == WeightRule::kCustom) return policy.alpha;
  std::size_t max_degree = 0;
  for (NodeId i = 0; i < g.size(); ++i)
    max_degree = std::max(max_degree, g.in_degree(i));
  return 1.0 / static_cast<double>(1 + max_degree);
}

FilterOutcome arcp_filter(NodeId self_id, double self_value,
                          std::span<const NeighborValue> neighbors,
                          std::size_t F) {
  std::vector<NeighborValue> above;
  std::vector<NeighborValue> below;
  NodeSet ids;
  ids.reserve(neighbors.size());
  for (const auto& nv : neighbors) {
    if (nv.id == self_id)
      throw InputError("neighbour list contains the node itself");
    ids.push_back(nv.id);
    if (nv.value > self_value) above.push_back(nv);
    if (nv.value < self_value) below.push_back(nv);
  }
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw InputError("duplicate neighbour id");

  // Largest first; among equal values the larger id goes first.
  std::sort(above.begin(), above.end(), [](const auto& a, const auto& b) {
    return a.value != b.value ? a.value > b.value : a.id > b.id;
  });
  // Smallest first; among equal values the larger id goes first.
  std::sort(below.begin(), below.end(), [](const auto& a, const auto& b) {
    return a.value != b.value ? a.value < b.value : a.id > b.id;
  });

  FilterOutcome out;
  out.self = self_id;
  out.removed_above = std::min(F, above.size());
  out.removed_below = std::min(F, below.size());
  for (std::size_t k = 0; k < out.removed_above; ++k)
    out.removed.push_back(above[k].id);
  for (std::size_t k = 0; k < out.removed_below; ++k)
    out.removed.push_back(below[k].id);
  out.removed = make_node_set(std::move(out.removed));

  out.kept.push_back(self_id);
  for (NodeId j : ids)
    if (!std::binary_search(out.removed.begin(), out.removed.end(), j))
      out.kept.push_back(j);
  out.kept = make_node_set(std::move(out.kept));
  return out;
}

std::vector<WeightedNode> discrete_weights(const FilterOutcome& kept,
                                           const WeightPolicy& policy,
                                           std::size_t in_degree) {
  const std::size_t removed = kept.removed.size();
  if (removed > in_degree || kept.kept.size() != 1 + in_degree - removed)
    throw InputError("filter outcome is inconsistent with the in-degree");

  std::vector<WeightedNode> row;
  row.reserve(kept.kept.size());
  if (policy.rule == WeightRule::kUniform) {
    const double denom = static_cast<double>(1 + in_degree - removed);
    const double neighbor = 1.0 / denom;
    const double self = (static_cast<double>(removed) -
                         static_cast<double>(in_degree)) / denom;
    for (NodeId j : kept.kept)
      row.push_back({j, j == kept.self ? self : neighbor});
    return row;
  }

  double sum = 0.0;
  for (NodeId j : kept.kept) {
    if (j == kept.self) continue;
    auto it = policy.table.find({kept.self, j});
    if (it == policy.table.end())
      throw ConfigError("custom weight table has no entry w(" +
                        std::to_string(kept.self) + "," + std::to_string(j) + ")");
    if (!(it->second >= policy.alpha))
      throw ConfigError("custom weight w(" + std::to_string(kept.self) + "," +
                        std::to_string(j) + ") is below alpha");
    sum += it->second;
  }
  const double self = -sum;
  if (!(self >= policy.alpha - 1.0))
    throw ConfigError("self weight of node " + std::to_string(kept.self) +
                      " is below alpha - 1 (kept weights sum above 1 - alpha)");
  for (NodeId j : kept.kept)
    row.push_back({j, j == kept.self ? self : policy.table.at({kept.self, j})});
  return row;
}

double discrete_step_value(double self_value, double self_weight,
                           std::span<const double> kept_values,
                           std::span<const double> kept_weights) {
  if (kept_values.size() != kept_weights.size())
    throw InputError("kept values and weights differ in length");
  double acc = self_weight * self_value;
  double lo = self_value;
  double hi = self_value;
  for (std::size_t k = 0; k < kept_values.size(); ++k) {
    acc += kept_weights[k] * kept_values[k];
    lo = std::min(lo, kept_values[k]);
    hi = std::max(hi, kept_values[k]);
  }
  return std::clamp(self_value + acc, lo, hi);
}

std::vector<std::size_t> sort_permutation(std::span<const double> z) {
  std::vector<std::size_t> p(z.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::stable_sort(p.begin(), p.end(),
                   [&](std::size_t a, std::size_t b) { return z[a] < z[b]; });
  return p;
}

std::vector<double> sort_ascending(std::vector<double> z) {
  std::stable_sort(z.begin(), z.end());
  return z;
}

double reduce_zero_selective(std::span<const double> z,
                             std::span<const double> w, std::size_t F) {
  if (z.size() != w.size())
    throw InputError("values and weights differ in length");
  if (!std::is_sorted(z.begin(), z.end()))
    throw InputError("zero-selective reduce requires ascending input");
  const std::size_t k = z.size();
  auto nonneg = [](double v) { return v >= 0.0 ? v : 0.0; };
  auto nonpos = [](double v) { return v <= 0.0 ? v : 0.0; };

  double acc = 0.0;
  if (k > 2 * F) {
    for (std::size_t l = 0; l < F; ++l) acc += w[l] * nonneg(z[l]);
    for (std::size_t l = F; l < k - F; ++l) acc += w[l] * z[l];
    for (std::size_t l = k - F; l < k; ++l) acc += w[l] * nonpos(z[l]);
  } else if (k > F) {
    for (std::size_t l = 0; l < k - F; ++l) acc += w[l] * nonneg(z[l]);
    for (std::size_t l = F; l < k; ++l) acc += w[l] * nonpos(z[l]);
  }
  return acc;
}

double phi(std::span<const double> z, std::span<const double> w,
           std::size_t F) {
  if (z.size() != w.size())
    throw InputError("values and weights differ in length");
  return reduce_zero_selective(sort_ascending({z.begin(), z.end()}), w, F);
}

double continuous_weight(const WeightPolicy& policy, NodeId i, NodeId j) {
  if (policy.rule == WeightRule::kUniform) return 1.0;
  auto it = policy.table.find({i, j});
  if (it == policy.table.end())
    throw ConfigError("custom weight table has no entry w(" + std::to_string(i) +
                      "," + std::to_string(j) + ")");
  if (!(it->second >= policy.alpha && it->second <= policy.beta))
    throw ConfigError("custom weight w(" + std::to_string(i) + "," +
                      std::to_string(j) + ") is outside [alpha, beta]");
  return it->second;
}

std::vector<NeighborValue> neighbor_values(NodeId i, std::span<const double> x,
                                           const Digraph& g) {
  std::vector<NeighborValue> out;
  const auto nbrs = g.in_neighbors(i);
  out.reserve(nbrs.size());
  for (NodeId j : nbrs) out.push_back({j, x[j]});
  return out;
}

namespace {

struct Offset {
  NodeId id;
  double z;
};

// Ascending offsets; ties among negative offsets put larger ids first and
// ties among non-negative offsets put smaller ids first, so the entries the
// reduce discards at either end match the discrete filter's choice.
std::vector<Offset> ordered_offsets(NodeId i, std::span<const double> x,
                                    const Digraph& g) {
  std::vector<Offset> offs;
  const auto nbrs = g.in_neighbors(i);
  offs.reserve(nbrs.size());
  for (NodeId j : nbrs) offs.push_back({j, x[j] - x[i]});
  std::sort(offs.begin(), offs.end(), [](const Offset& a, const Offset& b) {
    if (a.z != b.z) return a.z < b.z;
    return a.z < 0.0 ? a.id > b.id : a.id < b.id;
  });
  return offs;
}

}  // namespace

double continuous_rate(NodeId i, std::span<const double> x, const Digraph& g,
                       std::size_t F, const WeightPolicy& policy) {
  const auto offs = ordered_offsets(i, x, g);
  std::vector<double> z(offs.size());
  std::vector<double> w(offs.size());
  for (std::size_t l = 0; l < offs.size(); ++l) {
    z[l] = offs[l].z;
    w[l] = continuous_weight(policy, i, offs[l].id);
  }
  return phi(z, w, F);
}

double lcp_rate(NodeId i, std::span<const double> x, const Digraph& g,
                const WeightPolicy& policy) {
  double acc = 0.0;
  for (const Offset& o : ordered_offsets(i, x, g))
    acc += continuous_weight(policy, i, o.id) * o.z;
  return acc;
}

namespace {

double step_with(const FilterOutcome& outcome, std::span<const double> x,
                 const Digraph& g, const WeightPolicy& policy) {
  const NodeId i = outcome.self;
  const auto row = discrete_weights(outcome, policy, g.in_degree(i));
  std::vector<double> values;
  std::vector<double> weights;
  values.reserve(row.size());
  weights.reserve(row.size());
  double self_weight = 0.0;
  for (const auto& [j, w] : row) {
    if (j == i) {
      self_weight = w;
    } else {
      values.push_back(x[j]);
      weights.push_back(w);
    }
  }
  return discrete_step_value(x[i], self_weight, values, weights);
}

}  // namespace

double arcp_step(NodeId i, std::span<const double> x, const Digraph& g,
                 std::size_t F, const WeightPolicy& policy,
                 FilterOutcome* outcome) {
  FilterOutcome filtered = arcp_filter(i, x[i], neighbor_values(i, x, g), F);
  const double next = step_with(filtered, x, g, policy);
  if (outcome != nullptr) *outcome = std::move(filtered);
  return next;
}

double lcp_step(NodeId i, std::span<const double> x, const Digraph& g,
                const WeightPolicy& policy) {
  FilterOutcome all;
  all.self = i;
  all.kept = g.inclusive_neighbors(i);
  return step_with(all, x, g, policy);
}

}  // namespace arcp
