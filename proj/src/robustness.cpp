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

#include "arcp/robustness.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <string>

#include "arcp/errors.hpp"

namespace arcp {
namespace {

using Mask = std::uint64_t;

// Above this size the per-subset reach table (one byte per subset) is not
// materialised and counts are computed per pair.
constexpr std::size_t kReachTableLimit = 24;

std::vector<Mask> in_masks(const Digraph& g) {
  std::vector<Mask> masks(g.size(), 0);
  for (const Edge& e : g.edges()) masks[e.to] |= Mask{1} << e.from;
  return masks;
}

std::size_t reach_of(std::span<const Mask> in, Mask S, std::size_t r) {
  std::size_t count = 0;
  for (Mask rest = S; rest != 0; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    if (static_cast<std::size_t>(std::popcount(in[i] & ~S)) >= r) ++count;
  }
  return count;
}

NodeSet to_set(Mask m) {
  NodeSet out;
  for (; m != 0; m &= m - 1) out.push_back(static_cast<NodeId>(std::countr_zero(m)));
  return out;
}

Mask to_mask(const Digraph& g, const NodeSet& S) {
  if (S.empty()) throw InputError("node set must be nonempty");
  if (g.size() > 64) throw CapacityError("bitmask sets support at most 64 nodes");
  Mask m = 0;
  for (NodeId i : S) {
    if (i >= g.size())
      throw InputError("node " + std::to_string(i) + " is not in the graph");
    m |= Mask{1} << i;
  }
  return m;
}

void check_capacity(std::size_t n, std::size_t limit) {
  if (limit > kMaxEnumerationLimit) {
    throw CapacityError("enumeration limit " + std::to_string(limit) +
                        " exceeds the supported maximum of " +
                        std::to_string(kMaxEnumerationLimit));
  }
  if (n > limit) {
    throw CapacityError("exact robustness check on " + std::to_string(n) +
                        " nodes needs ~3^" + std::to_string(n) +
                        " subset-pair evaluations; the enumeration limit is " +
                        std::to_string(limit) + " nodes");
  }
}

bool violates(std::size_t size1, std::size_t reach1, std::size_t size2,
              std::size_t reach2, std::size_t s) {
  return reach1 != size1 && reach2 != size2 && reach1 + reach2 < s;
}

}  // namespace

std::size_t reach_count(const Digraph& g, const NodeSet& S, std::size_t r) {
  const Mask m = to_mask(g, S);
  return reach_of(in_masks(g), m, r);
}

bool is_r_reachable(const Digraph& g, const NodeSet& S, std::size_t r) {
  return reach_count(g, S, r) >= 1;
}

bool pair_violates(const Digraph& g, const NodeSet& s1, const NodeSet& s2,
                   std::size_t r, std::size_t s) {
  const Mask a = to_mask(g, s1);
  const Mask b = to_mask(g, s2);
  if ((a & b) != 0) throw InputError("witness sets must be disjoint");
  const auto in = in_masks(g);
  return violates(static_cast<std::size_t>(std::popcount(a)), reach_of(in, a, r),
                  static_cast<std::size_t>(std::popcount(b)), reach_of(in, b, r),
                  s);
}

RobustnessCertificate is_rs_robust(const Digraph& g, std::size_t r,
                                   std::size_t s,
                                   std::size_t enumeration_limit) {
  const std::size_t n = g.size();
  if (s == 0) throw InputError("s = 0 is not allowed in (r,s)-robustness");
  if (s > std::max<std::size_t>(n, 1))
    throw InputError("s = " + std::to_string(s) + " exceeds n = " +
                     std::to_string(n));
  RobustnessCertificate cert{r, s, true, std::nullopt};

  // Conventions for empty and trivial graphs; there are no subset pairs.
  if (n <= 1) {
    cert.verdict = (r == 0) || (n == 1 && r == 1);
    return cert;
  }
  check_capacity(n, enumeration_limit);

  const auto in = in_masks(g);
  const Mask full = (Mask{1} << n) - 1;

  std::vector<std::uint8_t> table;
  const bool tabulated = n <= kReachTableLimit;
  if (tabulated) {
    table.resize(std::size_t{1} << n);
    for (Mask S = 1; S <= full; ++S)
      table[S] = static_cast<std::uint8_t>(reach_of(in, S, r));
  }
  auto reach = [&](Mask S) -> std::size_t {
    return tabulated ? table[S] : reach_of(in, S, r);
  };

  for (Mask U = 1; U <= full; ++U) {
    if (std::popcount(U) < 2) continue;
    const Mask low = U & (~U + 1);
    const Mask rest = U ^ low;
    // Submasks T of `rest` in increasing order; S1 = low | T keeps the
    // lowest node of U in S1 so each unordered pair is visited once.
    Mask T = 0;
    while (T != rest) {
      const Mask s1 = low | T;
      const Mask s2 = rest ^ T;
      const std::size_t r1 = reach(s1);
      const std::size_t r2 = reach(s2);
      if (violates(static_cast<std::size_t>(std::popcount(s1)), r1,
                   static_cast<std::size_t>(std::popcount(s2)), r2, s)) {
        cert.verdict = false;
        cert.witness = Witness{to_set(s1), to_set(s2), r1, r2};
        return cert;
      }
      T = (T - rest) & rest;
    }
  }
  return cert;
}

RobustnessCertificate is_r_robust(const Digraph& g, std::size_t r,
                                  std::size_t enumeration_limit) {
  return is_rs_robust(g, r, 1, enumeration_limit);
}

MaximalRobustness maximal_robustness(const Digraph& g,
                                     std::size_t enumeration_limit) {
  const std::size_t n = g.size();
  if (n == 0) return {0, 1};
  if (n == 1) return {1, 1};
  check_capacity(n, enumeration_limit);

  // Largest value in [lo, hi] satisfying a predicate that holds at lo and is
  // monotone decreasing.
  auto last_true = [](std::size_t lo, std::size_t hi, auto&& pred) {
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      if (pred(mid)) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    return lo;
  };
  const std::size_t r_star = last_true(0, n, [&](std::size_t r) {
    return is_r_robust(g, r, enumeration_limit).verdict;
  });
  const std::size_t s_star = last_true(1, n, [&](std::size_t s) {
    return is_rs_robust(g, r_star, s, enumeration_limit).verdict;
  });
  return {r_star, s_star};
}

std::size_t min_in_degree(const Digraph& g) {
  if (g.size() == 0) return 0;
  std::size_t best = g.size();
  for (NodeId i = 0; i < g.size(); ++i) best = std::min(best, g.in_degree(i));
  return best;
}

GrowResult grow(const Digraph& g, std::size_t r, std::size_t s,
                const NodeSet& targets, bool symmetric,
                std::size_t enumeration_limit) {
  const NodeSet chosen = make_node_set(targets);
  if (chosen.size() != targets.size())
    throw InputError("attachment targets must be distinct");
  const std::size_t needed = r + s - 1;
  if (s == 0) throw InputError("s = 0 is not allowed");
  if (chosen.size() < needed) {
    throw InputError("growth needs at least r + s - 1 = " +
                     std::to_string(needed) + " attachment targets, got " +
                     std::to_string(chosen.size()));
  }
  for (NodeId t : chosen)
    if (t >= g.size())
      throw InputError("attachment target " + std::to_string(t) +
                       " is not in the graph");

  GrowResult result;
  if (g.size() >= 2 && g.size() <= enumeration_limit &&
      g.size() <= kMaxEnumerationLimit) {
    if (!is_rs_robust(g, r, s, enumeration_limit).verdict) {
      throw InputError("seed graph is not (" + std::to_string(r) + "," +
                       std::to_string(s) + ")-robust");
    }
    result.seed_status = PreconditionStatus::kVerified;
  }

  const auto v = static_cast<NodeId>(g.size());
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (NodeId t : chosen) {
    edges.push_back({t, v});
    if (symmetric) edges.push_back({v, t});
  }
  result.graph = Digraph(g.size() + 1, std::move(edges));
  return result;
}

NodeSet preferential_targets(const Digraph& g, std::size_t k,
                             std::uint64_t rng_seed) {
  const std::size_t n = g.size();
  if (k > n)
    throw InputError("cannot draw " + std::to_string(k) +
                     " distinct targets from " + std::to_string(n) + " nodes");
  std::mt19937_64 rng(rng_seed);
  std::vector<double> weight(n);
  for (NodeId i = 0; i < n; ++i)
    weight[i] = static_cast<double>(g.in_degree(i) + g.out_degree(i));
  std::vector<bool> taken(n, false);
  NodeSet chosen;
  while (chosen.size() < k) {
    double total = 0.0;
    for (NodeId i = 0; i < n; ++i)
      if (!taken[i]) total += weight[i];
    const bool uniform = total <= 0.0;
    if (uniform) total = static_cast<double>(n - chosen.size());
    double u = std::uniform_real_distribution<double>(0.0, total)(rng);
    NodeId pick = 0;
    for (NodeId i = 0; i < n; ++i) {
      if (taken[i]) continue;
      const double w = uniform ? 1.0 : weight[i];
      if (w <= 0.0) continue;
      pick = i;
      if (u < w) break;
      u -= w;
    }
    taken[pick] = true;
    chosen.push_back(pick);
  }
  return make_node_set(std::move(chosen));
}

GrowthRun grow_preferential(const Digraph& seed, std::size_t r, std::size_t s,
                            std::size_t count, std::uint64_t rng_seed,
                            std::size_t attachments, bool symmetric,
                            std::size_t enumeration_limit) {
  if (attachments == 0) attachments = r + s - 1;
  GrowthRun run{seed, {}, PreconditionStatus::kUnchecked};
  std::seed_seq seq{rng_seed, std::uint64_t{0x9e3779b97f4a7c15ULL}};
  std::mt19937_64 master(seq);
  for (std::size_t k = 0; k < count; ++k) {
    const NodeSet targets = preferential_targets(run.graph, attachments, master());
    // Only the original seed needs verification; later graphs are robust by
    // construction.
    GrowResult step = grow(run.graph, r, s, targets, symmetric,
                           k == 0 ? enumeration_limit : 0);
    if (k == 0) run.seed_status = step.seed_status;
    run.graph = std::move(step.graph);
    run.attachments.push_back(targets);
  }
  if (count == 0 && seed.size() >= 2 && seed.size() <= enumeration_limit) {
    if (!is_rs_robust(seed, r, s, enumeration_limit).verdict)
      throw InputError("seed graph is not (r,s)-robust");
    run.seed_status = PreconditionStatus::kVerified;
  }
  return run;
}

}  // namespace arcp
