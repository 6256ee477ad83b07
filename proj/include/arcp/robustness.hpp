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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "arcp/digraph.hpp"

namespace arcp {

/// Exact robustness checks enumerate every assignment of nodes to
/// {S1, S2, neither}; the cost is Theta(3^n). Graphs larger than this many
/// nodes are refused unless the caller raises the limit.
inline constexpr std::size_t kDefaultEnumerationLimit = 15;

/// Hard ceiling of the bitmask representation used by the enumerator.
inline constexpr std::size_t kMaxEnumerationLimit = 30;

struct RobustnessQuery {
  std::size_t r = 0;
  std::size_t s = 1;
};

/// A pair of disjoint nonempty node sets on which all three robustness
/// conditions fail, together with their reach counts.
struct Witness {
  NodeSet s1;
  NodeSet s2;
  std::size_t reach1 = 0;
  std::size_t reach2 = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct RobustnessCertificate {
  std::size_t r = 0;
  std::size_t s = 1;
  bool verdict = false;
  std::optional<Witness> witness;  // present iff !verdict and n >= 2

  explicit operator bool() const { return verdict; }
};

/// |{ i in S : |V_i \ S| >= r }|, the largest s for which S is
/// (r,s)-reachable. Throws InputError on an empty or out-of-range S.
std::size_t reach_count(const Digraph& g, const NodeSet& S, std::size_t r);

bool is_r_reachable(const Digraph& g, const NodeSet& S, std::size_t r);

/// True iff the pair violates conditions (i)-(iii): neither set has every node
/// r-reaching outside and the two reach counts sum to less than s.
bool pair_violates(const Digraph& g, const NodeSet& s1, const NodeSet& s2,
                   std::size_t r, std::size_t s);

/// Exact (r,s)-robustness. On failure the witness is the first violating
/// pair in enumeration order: unions U = S1 | S2 by increasing bitmask, then
/// S1 by increasing submask of U, with the lowest node of U always in S1.
RobustnessCertificate is_rs_robust(
    const Digraph& g, std::size_t r, std::size_t s,
    std::size_t enumeration_limit = kDefaultEnumerationLimit);

RobustnessCertificate is_r_robust(
    const Digraph& g, std::size_t r,
    std::size_t enumeration_limit = kDefaultEnumerationLimit);

struct MaximalRobustness {
  std::size_t r = 0;
  std::size_t s = 1;

  friend bool operator==(const MaximalRobustness&,
                         const MaximalRobustness&) = default;
};

/// r* = max r with r-robustness, s* = max s in [1, n] with (r*, s)-robustness.
/// Both searches are binary searches over the monotone predicates.
MaximalRobustness maximal_robustness(
    const Digraph& g, std::size_t enumeration_limit = kDefaultEnumerationLimit);

std::size_t min_in_degree(const Digraph& g);

enum class PreconditionStatus { kVerified, kUnchecked };

struct GrowResult {
  Digraph graph;
  PreconditionStatus seed_status = PreconditionStatus::kUnchecked;
};

/// Adds node n wired from each of `targets` (and back to them when
/// `symmetric`). With |targets| >= r + s - 1 an (r,s)-robust seed yields an
/// (r,s)-robust result. The seed is verified when it fits the enumeration
/// limit; a seed that fails verification is an InputError.
GrowResult grow(const Digraph& g, std::size_t r, std::size_t s,
                const NodeSet& targets, bool symmetric = true,
                std::size_t enumeration_limit = kDefaultEnumerationLimit);

/// k distinct nodes drawn without replacement with probability proportional
/// to current total degree (in + out). Zero-degree nodes are drawn uniformly
/// once every positive-degree node is taken.
NodeSet preferential_targets(const Digraph& g, std::size_t k,
                             std::uint64_t rng_seed);

struct GrowthRun {
  Digraph graph;
  std::vector<NodeSet> attachments;  // targets of each added node, in order
  PreconditionStatus seed_status = PreconditionStatus::kUnchecked;
};

/// `count` preferential-attachment growth steps with `attachments` targets
/// each (default r + s - 1). The rng seed of step k is derived from
/// `rng_seed` and k.
GrowthRun grow_preferential(const Digraph& seed, std::size_t r, std::size_t s,
                            std::size_t count, std::uint64_t rng_seed,
                            std::size_t attachments = 0, bool symmetric = true,
                            std::size_t enumeration_limit =
                                kDefaultEnumerationLimit);

}  // namespace arcp
