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
#include <iosfwd>
#include <string>
#include <vector>

#include "arcp/adversaries.hpp"
#include "arcp/digraph.hpp"
#include "arcp/protocols.hpp"

namespace arcp {

enum class Verdict { kConsensus, kStalled, kSafetyViolated };

std::string to_string(Verdict v);

/// Process exit status for a verdict: 0 consensus, 2 stalled, 3 safety
/// violated. Errors use 1.
int exit_code(Verdict v);

struct RunConfig {
  TimeMode mode = TimeMode::kDiscrete;
  /// Rounds in discrete mode, time units in continuous mode.
  double horizon = 1000.0;
  /// Continuous step size; 0 selects min(dwell / 1000, horizon / 10^4).
  double step = 0.0;
  /// Consensus when Ψ < consensus_tol * Ψ[0].
  double consensus_tol = 1e-6;
  /// Stalled when Ψ drops by less than 10^-12 * Ψ[0] over this many steps.
  std::size_t stall_window = 100;
  bool stop_on_stall = true;
  /// Run even when the adversary plan violates its declared scope.
  bool force = false;
  bool log_removed = false;
  /// Store the rate of every node at every recorded sample (continuous).
  bool record_rates = false;
  /// Record every k-th step; the final state is always recorded.
  std::size_t record_stride = 1;

  /// Throws ConfigError on a non-positive horizon, step or tolerance.
  void validate() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

struct RemovedEntry {
  double t = 0.0;
  NodeId node = 0;
  NodeSet removed;
};

struct SafetyViolation {
  double t = 0.0;
  NodeId node = 0;
  double value = 0.0;
};

struct RunTrace {
  std::size_t n = 0;
  NodeSet adversaries;
  std::vector<double> times;
  std::vector<std::vector<double>> values;  // values[k][i] at times[k]
  std::vector<double> psi;                  // over normal nodes only
  std::vector<double> m;
  std::vector<double> M;
  std::vector<std::vector<double>> rates;   // when record_rates; 0 for adversaries
  std::vector<RemovedEntry> removed_log;
  double safety_lo = 0.0;
  double safety_hi = 0.0;
  std::vector<SafetyViolation> safety_violations;
  /// Steps where Ψ rose above the previous step by more than the tolerance.
  std::size_t psi_increases = 0;
  Verdict verdict = Verdict::kStalled;
  double L = 0.0;
  double final_time = 0.0;
  std::size_t steps = 0;
  double step_size = 1.0;
  std::size_t record_stride = 1;

  bool is_normal(NodeId i) const;
};

/// Synchronous rounds: every normal node reads the round-t state and applies
/// the protocol; adversaries then emit strategy(t+1, 1, previous). Throws
/// ScopeError when the plan violates its declared scope and `cfg.force` is
/// unset.
RunTrace run_discrete(const SwitchingSchedule& schedule, const Protocol& protocol,
                      const WeightPolicy& weights, const AdversaryPlan& plan,
                      const std::vector<double>& init, const RunConfig& cfg);

/// Explicit Euler on dx_i/dt = rate_i, steps split at switching instants.
/// Throws ConfigError when h exceeds dwell / 10 or h * w_max * d_max > 1.
RunTrace run_continuous(const SwitchingSchedule& schedule,
                        const Protocol& protocol, const WeightPolicy& weights,
                        const AdversaryPlan& plan,
                        const std::vector<double>& init, const RunConfig& cfg);

/// Dispatches on cfg.mode.
RunTrace run(const SwitchingSchedule& schedule, const Protocol& protocol,
             const WeightPolicy& weights, const AdversaryPlan& plan,
             const std::vector<double>& init, const RunConfig& cfg);

/// Step size a continuous run would use.
double resolve_step(const SwitchingSchedule& schedule, const RunConfig& cfg);

struct ContractionReport {
  double bound = 1.0;  // c = 1 - alpha^(N-1) / 2
  std::vector<std::size_t> starts;
  std::vector<double> ratios;  // Ψ[t0 + N - 1] / Ψ[t0]
  double max_ratio = 0.0;
  bool within_bound = true;
};

/// Sliding-window ratios over a discrete trace recorded every round; windows
/// starting at Ψ = 0 are skipped.
ContractionReport measure_contraction(const RunTrace& trace, std::size_t N,
                                      double alpha);

/// B = beta * (n - F - 1).
double rate_gain(double beta, std::size_t n, std::size_t F);

struct RateViolation {
  double t = 0.0;
  NodeId node = 0;
  double rate = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

/// Checks B (m - x_i) <= rate_i <= B (M - x_i) at every recorded sample of a
/// trace run with `record_rates`. `slack` is absolute.
std::vector<RateViolation> check_rate_bounds(const RunTrace& trace, double gain,
                                             double slack = 1e-12);

struct RunSummary {
  Verdict verdict = Verdict::kStalled;
  double final_psi = 0.0;
  double L = 0.0;
  double final_time = 0.0;
  std::size_t steps = 0;
  std::size_t safety_violations = 0;
};

RunSummary summarize(const RunTrace& trace);

/// Header `t,node_0,...,node_{n-1},psi,m,M`.
void write_trace_csv(std::ostream& out, const RunTrace& trace);
/// Header `t,node,removed_ids`, ids space-separated.
void write_removed_csv(std::ostream& out, const RunTrace& trace);

}  // namespace arcp
