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

// Acceptance checks. `arcp_acceptance` runs all of them; `arcp_acceptance N`
// runs criterion N. Each prints one PASS/FAIL line.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "arcp/adversaries.hpp"
#include "arcp/engine.hpp"
#include "arcp/figures.hpp"
#include "arcp/robustness.hpp"
#include "arcp/scenario.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace arcp;

namespace {

struct Result {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed sub-check; the first few are kept in the detail line.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (failures < 4) detail << (failures ? "; " : "") << what;
    pass = false;
    ++failures;
  }
  int failures = 0;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string set_text(const NodeSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

AdversaryStrategy canned(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 3.0);
  switch (rng() % 4) {
    case 0:
      return AdversaryStrategy::constant(u(rng));
    case 1:
      return AdversaryStrategy::ramp(u(rng), 0.01 * u(rng), u(rng));
    case 2:
      return AdversaryStrategy::sine(u(rng), std::abs(u(rng)), 5.0 + 20.0 * std::abs(u(rng)));
    default:
      return AdversaryStrategy::pull(u(rng), 0.05 + 0.1 * std::abs(u(rng)));
  }
}

std::vector<double> unit_values(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

// Normal-node range of the initial state.
std::pair<double, double> normal_range(const RunTrace& t) {
  double lo = INFINITY, hi = -INFINITY;
  for (NodeId i = 0; i < t.n; ++i)
    if (t.is_normal(i)) {
      lo = std::min(lo, t.values.front()[i]);
      hi = std::max(hi, t.values.front()[i]);
    }
  return {lo, hi};
}

// Up to `limit` nodes, chosen in random order, keeping the set within `scope`.
NodeSet random_placement(const Digraph& g, const ThreatScope& scope, std::size_t limit,
                         std::mt19937_64& rng) {
  std::vector<NodeId> order(g.size());
  for (NodeId i = 0; i < g.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  NodeSet chosen;
  for (NodeId i : order) {
    if (chosen.size() >= limit) break;
    NodeSet trial = chosen;
    trial.push_back(i);
    trial = make_node_set(trial);
    if (validate_scope(g, trial, scope).ok) chosen = trial;
  }
  return chosen;
}

AdversaryPlan plan_for(const NodeSet& nodes, const ThreatScope& scope, std::mt19937_64& rng) {
  AdversaryPlan p;
  for (NodeId i : nodes) p.assignments.push_back({i, canned(rng)});
  p.scope = scope;
  return p;
}

bool same_trace(const RunTrace& a, const RunTrace& b) {
  return a.times == b.times && a.values == b.values && a.psi == b.psi && a.m == b.m &&
         a.M == b.M && a.verdict == b.verdict && a.L == b.L;
}

// ---------------------------------------------------------------------------

Result checker_vs_figures() {
  Result r;
  {
    const auto t0 = Clock::now();
    const Digraph g = two_clique_figure();
    NodeSet X, Y;
    for (NodeId i = 0; i < 4; ++i) X.push_back(i);
    for (NodeId i = 4; i < 9; ++i) Y.push_back(i);
    r.require(is_r_robust(g, 2).verdict, "two-clique not 2-robust");
    const auto c3 = is_r_robust(g, 3);
    r.require(!c3.verdict, "two-clique 3-robust");
    r.require(pair_violates(g, X, Y, 3, 1), "(X,Y) is not a 3-robustness witness");
    r.require(c3.witness && pair_violates(g, c3.witness->s1, c3.witness->s2, 3, 1),
              "returned witness does not violate");
    const double dt = seconds_since(t0);
    r.require(dt < 1.0, "two-clique checks took " + std::to_string(dt) + " s");
  }
  {
    const auto t0 = Clock::now();
    const Digraph g = seven_node_figure();
    const NodeSet s1 = testutil::labels({1, 3, 5, 6, 7});
    const NodeSet s2 = testutil::labels({2, 4});
    r.require(is_rs_robust(g, 3, 1).verdict, "seven-node not (3,1)-robust");
    r.require(!is_rs_robust(g, 3, 2).verdict, "seven-node (3,2)-robust");
    r.require(pair_violates(g, s1, s2, 3, 2),
              set_text(s1) + "/" + set_text(s2) + " is not a (3,2) witness");
    const double dt = seconds_since(t0);
    r.require(dt < 1.0, "seven-node checks took " + std::to_string(dt) + " s");
  }
  {
    const auto t0 = Clock::now();
    const Digraph k5 = complete_graph(5);
    r.require(is_rs_robust(k5, 3, 3).verdict, "K5 not (3,3)-robust");
    const MaximalRobustness m = maximal_robustness(k5);
    r.require(m == MaximalRobustness{3, 3}, "K5 maximal = (" + std::to_string(m.r) + "," +
                                                std::to_string(m.s) + "), expected (3,3)");
    const double dt = seconds_since(t0);
    r.require(dt < 1.0, "K5 checks took " + std::to_string(dt) + " s");
  }
  if (r.pass) r.detail << "two-clique, seven-node and K5 checks match";
  return r;
}

// Every labelled digraph on n <= 4 nodes, then random 5-node digraphs.
Result checker_self_consistency() {
  Result r;
  const auto t0 = Clock::now();
  std::size_t graphs = 0;
  auto check = [&](const Digraph& g) {
    ++graphs;
    const std::size_t n = g.size();
    const auto adj = testutil::adjacency(g);
    const std::size_t rmax = (n + 1) / 2 + 1;
    std::vector<std::vector<bool>> robust(rmax + 1, std::vector<bool>(n + 2, false));
    for (std::size_t rr = 1; rr <= rmax; ++rr) {
      r.require(is_r_robust(g, rr).verdict == is_rs_robust(g, rr, 1).verdict,
                "is_r_robust differs from is_rs_robust(r,1)");
      for (std::size_t s = 1; s <= n; ++s) {
        const auto c = is_rs_robust(g, rr, s);
        robust[rr][s] = c.verdict;
        r.require(c.verdict == oracle::rs_robust(adj, rr, s), "oracle disagreement");
        if (!c.verdict && n >= 2) {  // smaller graphs have no subset pairs
          r.require(c.witness.has_value(), "missing witness");
          if (c.witness) {
            r.require(pair_violates(g, c.witness->s1, c.witness->s2, rr, s),
                      "witness does not re-validate");
            r.require(reach_count(g, c.witness->s1, rr) == c.witness->reach1 &&
                          reach_count(g, c.witness->s2, rr) == c.witness->reach2,
                      "witness reach counts wrong");
          }
        }
      }
    }
    for (std::size_t rr = 1; rr <= rmax; ++rr)
      for (std::size_t s = 1; s <= n; ++s)
        if (robust[rr][s]) {
          if (rr > 1) r.require(robust[rr - 1][s], "not monotone in r");
          if (s > 1) r.require(robust[rr][s - 1], "not monotone in s");
        }
  };
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<std::pair<NodeId, NodeId>> slots;
    for (NodeId a = 0; a < n; ++a)
      for (NodeId b = 0; b < n; ++b)
        if (a != b) slots.push_back({a, b});
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (mask >> k & 1) edges.push_back({slots[k].first, slots[k].second});
      check(Digraph(n, edges));
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> p(0.2, 0.95);
  for (int rep = 0; rep < 10000; ++rep) check(testutil::random_digraph(5, p(rng), rng));
  const double dt = seconds_since(t0);
  r.require(dt < 300.0, "took " + std::to_string(dt) + " s");
  if (r.pass) r.detail << graphs << " digraphs consistent in " << dt << " s";
  return r;
}

Result growth() {
  Result r;
  int certified = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t count = 1 + seed % 5;  // n from 6 to 10
    const GrowthRun g = grow_preferential(complete_graph(5), 3, 2, count, seed, 4);
    const bool ok = g.graph.size() == 5 + count && is_rs_robust(g.graph, 3, 2).verdict;
    r.require(ok, "seed " + std::to_string(seed) + " not (3,2)-robust");
    certified += ok;
  }
  if (r.pass) r.detail << certified << "/500 grown graphs certified (3,2)-robust";
  return r;
}

Result prop1() {
  Result r;
  const ScenarioConfig c = preset("prop1-two-clique");
  const RunTrace t = run_scenario(c);
  r.require(t.psi.size() == 1001, "expected 1001 samples");
  for (double p : t.psi) r.require(p == 1.0, "Psi != 1");
  for (const auto& row : t.values) r.require(row == t.values.front(), "a value changed");
  r.require(t.verdict == Verdict::kStalled, "verdict " + to_string(t.verdict));
  if (r.pass) r.detail << "Psi = 1 exactly over " << t.psi.size() << " samples";
  return r;
}

Result sufficiency() {
  Result r;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> nd(5, 12);
  std::uniform_real_distribution<double> pd(0.5, 0.95);
  int graphs = 0;
  double worst = 0.0;
  std::size_t largest = 0;
  while (graphs < 100) {
    const Digraph g = testutil::random_graph(nd(rng), pd(rng), rng);
    if (!is_rs_robust(g, 2, 2).verdict) continue;
    ++graphs;
    const NodeSet adv = random_placement(g, ThreatScope::total(1), 1, rng);
    const AdversaryPlan plan = plan_for(adv, ThreatScope::total(1), rng);
    RunConfig cfg;
    cfg.horizon = 10000;
    const RunTrace t =
        run_discrete(SwitchingSchedule(g), Protocol::arcp(1), {}, plan, unit_values(g.size(), rng), cfg);
    const std::string tag = "graph " + std::to_string(graphs) + ": ";
    r.require(t.verdict == Verdict::kConsensus, tag + to_string(t.verdict));
    r.require(t.psi.back() < 1e-6 * t.psi.front(), tag + "Psi above tolerance");
    const auto [m0, M0] = normal_range(t);
    r.require(t.L >= m0 && t.L <= M0, tag + "L outside [m0, M0]");
    const std::size_t N = g.size() - adv.size();
    const ContractionReport rep = measure_contraction(t, N, effective_alpha({}, g));
    r.require(rep.within_bound, tag + "window ratio " + std::to_string(rep.max_ratio) +
                                       " > c = " + std::to_string(rep.bound));
    worst = std::max(worst, rep.max_ratio / rep.bound);
    largest = std::max(largest, g.size());
  }
  if (r.pass)
    r.detail << "100 graphs (n <= " << largest << ") reach consensus; max ratio/c = " << worst;
  return r;
}

Result necessity() {
  Result r;
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::size_t> nd(4, 10);
  std::uniform_real_distribution<double> pd(0.2, 0.7);
  int graphs = 0;
  while (graphs < 100) {
    const Digraph g = testutil::random_graph(nd(rng), pd(rng), rng);
    if (is_rs_robust(g, 2, 2).verdict) continue;
    ++graphs;
    const std::string tag = "graph " + std::to_string(graphs) + ": ";
    const auto attack = necessity_attack(g, 1);
    r.require(attack.has_value(), tag + "no attack");
    if (!attack) continue;
    RunConfig cfg;
    cfg.horizon = 1000;
    cfg.stop_on_stall = false;
    const RunTrace t = run_discrete(SwitchingSchedule(g), Protocol::arcp(1), {}, attack->plan,
                                    attack->initial_values, cfg);
    r.require(t.verdict == Verdict::kStalled, tag + to_string(t.verdict));
    r.require(t.psi.size() == 1001, tag + "run stopped early");
    for (double p : t.psi)
      r.require(p >= 0.5 * (attack->b - attack->a), tag + "Psi fell below (b-a)/2");
  }
  if (r.pass) r.detail << "100 non-robust graphs held apart for 1000 rounds";
  return r;
}

Result local_model() {
  Result r;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> nd(7, 12);
  std::uniform_real_distribution<double> pd(0.45, 0.95);
  const ThreatScope scope = ThreatScope::local(1);
  int graphs = 0;
  std::size_t most = 0;
  while (graphs < 50) {
    const Digraph g = testutil::random_graph(nd(rng), pd(rng), rng);
    if (!is_r_robust(g, 3).verdict) continue;
    ++graphs;
    const NodeSet adv = random_placement(g, scope, g.size(), rng);
    r.require(validate_scope(g, adv, scope).ok, "placement not 1-local");
    most = std::max(most, adv.size());
    RunConfig cfg;
    cfg.horizon = 10000;
    const RunTrace t = run_discrete(SwitchingSchedule(g), Protocol::arcp(1), {},
                                    plan_for(adv, scope, rng), unit_values(g.size(), rng), cfg);
    r.require(t.verdict == Verdict::kConsensus,
              "graph " + std::to_string(graphs) + ": " + to_string(t.verdict));
  }
  const ScenarioConfig fig = preset("fig2-local");
  r.require(validate_scope(fig.schedule().graph_at(0), make_node_set({0, 3}), scope).ok,
            "{1,4} not 1-local on the seven-node graph");
  const RunTrace t = run_scenario(fig);
  r.require(t.verdict == Verdict::kConsensus, "fig2-local: " + to_string(t.verdict));
  if (r.pass)
    r.detail << "50 3-robust graphs (up to " << most
             << " adversaries) and fig2-local reach consensus, L = " << t.L;
  return r;
}

RunTrace sec6_arcp() {
  ScenarioConfig c = preset("sec6-hub");
  c.run.record_stride = 1;
  c.run.record_rates = true;
  return run_scenario(c);
}

Result sec6() {
  Result r;
  const RunTrace lcp = run_scenario(preset("sec6-hub", Protocol::lcp()));
  double gap = 0.0;
  for (NodeId i = 0; i < lcp.n; ++i)
    if (lcp.is_normal(i)) gap = std::max(gap, std::abs(lcp.values.back()[i] - 2.0));
  r.require(gap <= 1e-3, "LCP max |x - 2| = " + std::to_string(gap));

  const RunTrace t = sec6_arcp();
  r.require(t.verdict == Verdict::kConsensus, "ARC-P " + to_string(t.verdict));
  r.require(t.L >= 0.0 && t.L <= 1.0, "ARC-P L = " + std::to_string(t.L));
  r.require(t.safety_violations.empty(), "engine reported safety violations");
  for (const auto& row : t.values)
    for (NodeId i = 0; i < t.n; ++i)
      if (t.is_normal(i))
        r.require(row[i] >= -1e-9 && row[i] <= 1.0 + 1e-9, "ARC-P value left [0,1]");
  if (r.pass)
    r.detail << "LCP within " << gap << " of 2; ARC-P consensus at L = " << t.L << " (t = "
             << t.final_time << ")";
  return r;
}

Result safety() {
  Result r;
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<std::size_t> nd(3, 10);
  std::uniform_real_distribution<double> pd(0.2, 0.9);
  std::size_t adversaries = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    const std::size_t F = rep % 3;
    const bool local = rep % 5 == 4;
    const ThreatScope scope = local ? ThreatScope::local(F) : ThreatScope::total(F);
    const Digraph g = rep % 2 ? testutil::random_graph(nd(rng), pd(rng), rng)
                              : testutil::random_digraph(nd(rng), pd(rng), rng);
    const NodeSet adv = random_placement(g, scope, local ? g.size() - 1 : F, rng);
    adversaries += adv.size();
    RunConfig cfg;
    cfg.mode = rep % 4 < 2 ? TimeMode::kDiscrete : TimeMode::kContinuous;
    cfg.horizon = cfg.mode == TimeMode::kDiscrete ? 500 : 20;
    const RunTrace t = run(SwitchingSchedule(g), Protocol::arcp(F), {}, plan_for(adv, scope, rng),
                           unit_values(g.size(), rng), cfg);
    const std::string tag = "scenario " + std::to_string(rep) + ": ";
    r.require(t.safety_violations.empty(), tag + "safety violation");
    r.require(t.psi_increases == 0, tag + "Psi increased");
  }
  if (r.pass) r.detail << "1000 scenarios, " << adversaries << " adversaries, no violations";
  return r;
}

Result envelopes() {
  Result r;
  const RunTrace t = sec6_arcp();
  const ScenarioConfig c = preset("sec6-hub");
  const double B = rate_gain(c.weights.beta, t.n, c.protocol.F);
  const auto bad = check_rate_bounds(t, B);
  r.require(bad.empty(), std::to_string(bad.size()) + " rate samples outside the envelope");

  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(-2, 2);
  const double beta = 1.7;
  std::uniform_real_distribution<double> wu(0.0, beta);
  double worst = 0.0;
  for (int rep = 0; rep < 10000; ++rep) {
    const std::size_t k = 1 + rep % 12;
    const std::size_t F = rep % 4;
    std::vector<double> z(k), y(k), w(k);
    double dist = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      z[l] = u(rng);
      y[l] = rep % 3 ? z[l] + 1e-3 * u(rng) : u(rng);
      w[l] = wu(rng);
      dist += std::abs(z[l] - y[l]);
    }
    const double gap = std::abs(phi(z, w, F) - phi(y, w, F));
    r.require(gap <= beta * dist + 1e-12, "phi Lipschitz bound broken");
    if (dist > 0) worst = std::max(worst, gap / dist);
  }
  if (r.pass)
    r.detail << t.times.size() << " rate samples inside the envelope (B = " << B
             << "); phi ratio <= " << worst << " <= beta = " << beta;
  return r;
}

Result degeneration() {
  Result r;
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> nd(2, 10);
  std::uniform_real_distribution<double> pd(0.2, 0.9);
  for (int rep = 0; rep < 100; ++rep) {
    const Digraph g = testutil::random_digraph(nd(rng), pd(rng), rng);
    const NodeSet adv = random_placement(g, ThreatScope::total(1), rep % 2, rng);
    const AdversaryPlan plan = plan_for(adv, ThreatScope::total(1), rng);
    const auto init = unit_values(g.size(), rng);
    RunConfig cfg;
    cfg.horizon = 300;
    const SwitchingSchedule s(g);
    r.require(same_trace(run_discrete(s, Protocol::arcp(0), {}, plan, init, cfg),
                         run_discrete(s, Protocol::lcp(), {}, plan, init, cfg)),
              "scenario " + std::to_string(rep) + " differs");
  }
  if (r.pass) r.detail << "100 scenarios bit-identical";
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Result()>> criteria{
      checker_vs_figures, checker_self_consistency, growth,   prop1,
      sufficiency,      necessity,                local_model, sec6,
      safety,           envelopes,                degeneration};
  std::size_t only = 0;
  if (argc > 1) {
    only = std::strtoul(argv[1], nullptr, 10);
    if (only < 1 || only > criteria.size()) {
      std::cerr << "usage: arcp_acceptance [1-" << criteria.size() << "]\n";
      return 1;
    }
  }
  bool all = true;
  for (std::size_t k = 1; k <= criteria.size(); ++k) {
    if (only && k != only) continue;
    Result res;
    const auto t0 = Clock::now();
    try {
      res = criteria[k - 1]();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail << "exception: " << e.what();
    }
    std::cout << "AC" << k << ' ' << (res.pass ? "PASS" : "FAIL") << ' ' << res.detail.str()
              << " [" << seconds_since(t0) << " s]" << std::endl;
    all &= res.pass;
  }
  return all ? 0 : 1;
}
