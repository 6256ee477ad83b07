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

#include "arcp/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "arcp/errors.hpp"

namespace arcp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kConsensus:
      return "consensus";
    case Verdict::kStalled:
      return "stalled";
    case Verdict::kSafetyViolated:
      return "safety-violated";
  }
  return "unknown";
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kConsensus:
      return 0;
    case Verdict::kStalled:
      return 2;
    case Verdict::kSafetyViolated:
      return 3;
  }
  return 1;
}

void RunConfig::validate() const {
  if (!(horizon > 0.0) || !std::isfinite(horizon))
    throw ConfigError("horizon must be positive and finite");
  if (!(step >= 0.0) || !std::isfinite(step))
    throw ConfigError("step size must be positive (or 0 for the default)");
  if (!(consensus_tol > 0.0)) throw ConfigError("consensus_tol must be > 0");
  if (stall_window == 0) throw ConfigError("stall_window must be >= 1");
  if (record_stride == 0) throw ConfigError("record_stride must be >= 1");
}

bool RunTrace::is_normal(NodeId i) const {
  return !std::binary_search(adversaries.begin(), adversaries.end(), i);
}

namespace {

// Relative threshold below which a window's drop in Ψ counts as no progress.
constexpr double kStallFraction = 1e-12;
// Continuous-mode slack on safety and Ψ monotonicity, relative to Ψ[0].
constexpr double kIntegrationSlack = 1e-9;

std::size_t max_in_degree(const SwitchingSchedule& schedule) {
  std::size_t d = 0;
  for (const Segment& seg : schedule.segments())
    for (NodeId i = 0; i < seg.graph.size(); ++i)
      d = std::max(d, seg.graph.in_degree(i));
  return d;
}

double max_weight(const WeightPolicy& w) {
  if (w.rule == WeightRule::kUniform) return 1.0;
  double best = 0.0;
  for (const auto& [key, v] : w.table) best = std::max(best, v);
  return best;
}

class Runner {
 public:
  Runner(const SwitchingSchedule& schedule, const Protocol& protocol,
         const WeightPolicy& weights, const AdversaryPlan& plan,
         const std::vector<double>& init, const RunConfig& cfg)
      : schedule_(schedule), protocol_(protocol), weights_(weights),
        plan_(plan), cfg_(cfg), x_(init) {
    cfg.validate();
    weights.validate(cfg.mode);
    const std::size_t n = schedule.size();
    if (init.size() != n)
      throw InputError("initial state has " + std::to_string(init.size()) +
                       " values for " + std::to_string(n) + " nodes");
    for (double v : init)
      if (!std::isfinite(v)) throw InputError("initial values must be finite");

    trace_.n = n;
    is_adv_.assign(n, false);
    for (const auto& a : plan.assignments) {
      if (a.node >= n)
        throw InputError("adversary " + std::to_string(a.node) +
                         " is not in the graph");
      if (is_adv_[a.node])
        throw InputError("adversary " + std::to_string(a.node) +
                         " is assigned twice");
      a.strategy.validate();
      is_adv_[a.node] = true;
    }
    trace_.adversaries = plan.nodes();
    if (trace_.adversaries.size() == n)
      throw InputError("every node is an adversary");

    if (plan.scope) {
      const ScopeReport report =
          validate_scope(schedule, trace_.adversaries, *plan.scope);
      if (!report.ok && !cfg.force) {
        const ScopeViolation& v = report.violations.front();
        std::string what = v.node
            ? "node " + std::to_string(*v.node) + " has " +
                  std::to_string(v.count) + " adversarial in-neighbours in segment " +
                  std::to_string(v.segment)
            : std::to_string(v.count) + " adversaries declared";
        throw ScopeError("adversary placement violates the declared scope (" +
                         what + "); use force to run anyway");
      }
    }
    for (const auto& a : plan.assignments)
      x_[a.node] = a.strategy.value(0.0, 0.0, init[a.node]);
  }

  RunTrace run_discrete() {
    begin(0.0);
    if (finished_) return std::move(trace_);
    const auto rounds = static_cast<std::size_t>(std::llround(cfg_.horizon));
    std::vector<double> next(x_.size());
    FilterOutcome outcome;
    for (std::size_t t = 0; t < rounds && !finished_; ++t) {
      const double now = static_cast<double>(t);
      const Digraph& g = schedule_.graph_at(now);
      for (NodeId i = 0; i < x_.size(); ++i) {
        if (is_adv_[i]) continue;
        if (protocol_.kind == Protocol::Kind::kLcp) {
          next[i] = lcp_step(i, x_, g, weights_);
        } else {
          next[i] = arcp_step(i, x_, g, protocol_.F, weights_, &outcome);
          if (cfg_.log_removed && !outcome.removed.empty())
            trace_.removed_log.push_back({now, i, outcome.removed});
        }
      }
      for (const auto& a : plan_.assignments)
        next[a.node] = a.strategy.value(now + 1.0, 1.0, x_[a.node]);
      x_.swap(next);
      after_step(now + 1.0);
    }
    return finish();
  }

  RunTrace run_continuous() {
    const double h = resolve_step(schedule_, cfg_);
    const double wmax = max_weight(weights_);
    const std::size_t dmax = max_in_degree(schedule_);
    if (h * wmax * static_cast<double>(dmax) > 1.0 + 1e-12)
      throw ConfigError("step size h = " + std::to_string(h) +
                        " violates h * w_max * d_max <= 1 (w_max * d_max = " +
                        std::to_string(wmax * static_cast<double>(dmax)) + ")");
    trace_.step_size = h;
    begin(0.0);
    if (finished_) return std::move(trace_);

    std::vector<double> rate(x_.size(), 0.0);
    double t = 0.0;
    std::size_t k = 0;  // completed grid steps
    while (t < cfg_.horizon && !finished_) {
      const double grid = std::min(static_cast<double>(k + 1) * h, cfg_.horizon);
      const double t_next = std::min(grid, schedule_.next_switch_after(t));
      const double dt = t_next - t;
      const Digraph& g = schedule_.graph_at(t);
      compute_rates(g, x_, rate);
      for (NodeId i = 0; i < x_.size(); ++i)
        if (!is_adv_[i]) x_[i] += dt * rate[i];
      for (const auto& a : plan_.assignments)
        x_[a.node] = a.strategy.value(t_next, dt, x_[a.node]);
      if (t_next == grid) ++k;
      t = t_next;
      after_step(t);
    }
    return finish();
  }

 private:
  void compute_rates(const Digraph& g, const std::vector<double>& x,
                     std::vector<double>& rate) const {
    for (NodeId i = 0; i < x.size(); ++i) {
      if (is_adv_[i]) {
        rate[i] = 0.0;
      } else if (protocol_.kind == Protocol::Kind::kLcp) {
        rate[i] = lcp_rate(i, x, g, weights_);
      } else {
        rate[i] = continuous_rate(i, x, g, protocol_.F, weights_);
      }
    }
  }

  std::pair<double, double> extremes() const {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (NodeId i = 0; i < x_.size(); ++i) {
      if (is_adv_[i]) continue;
      lo = std::min(lo, x_[i]);
      hi = std::max(hi, x_[i]);
    }
    return {lo, hi};
  }

  void record(double t) {
    const auto [lo, hi] = extremes();
    trace_.times.push_back(t);
    trace_.values.push_back(x_);
    trace_.psi.push_back(hi - lo);
    trace_.m.push_back(lo);
    trace_.M.push_back(hi);
    if (cfg_.record_rates) {
      std::vector<double> rate(x_.size(), 0.0);
      compute_rates(schedule_.graph_at(t), x_, rate);
      trace_.rates.push_back(std::move(rate));
    }
    if (cfg_.mode == TimeMode::kContinuous && cfg_.log_removed &&
        protocol_.kind == Protocol::Kind::kArcp) {
      const Digraph& g = schedule_.graph_at(t);
      for (NodeId i = 0; i < x_.size(); ++i) {
        if (is_adv_[i]) continue;
        FilterOutcome f = arcp_filter(i, x_[i], neighbor_values(i, x_, g), protocol_.F);
        if (!f.removed.empty()) trace_.removed_log.push_back({t, i, f.removed});
      }
    }
    last_recorded_ = step_;
  }

  void begin(double t0) {
    const auto [lo, hi] = extremes();
    trace_.safety_lo = lo;
    trace_.safety_hi = hi;
    trace_.record_stride = cfg_.record_stride;
    psi0_ = hi - lo;
    slack_ = cfg_.mode == TimeMode::kContinuous ? kIntegrationSlack * psi0_ : 0.0;
    psi_steps_.push_back(psi0_);
    record(t0);
    const std::size_t normals = x_.size() - trace_.adversaries.size();
    if (psi0_ == 0.0 || normals == 1) {
      trace_.verdict = Verdict::kConsensus;
      trace_.L = lo + (hi - lo) / 2.0;
      trace_.final_time = t0;
      finished_ = true;
    }
  }

  void after_step(double t) {
    ++step_;
    now_ = t;
    const auto [lo, hi] = extremes();
    const double psi = hi - lo;
    for (NodeId i = 0; i < x_.size(); ++i) {
      if (is_adv_[i]) continue;
      if (x_[i] < trace_.safety_lo - slack_ || x_[i] > trace_.safety_hi + slack_)
        trace_.safety_violations.push_back({t, i, x_[i]});
    }
    if (psi > psi_steps_.back() + slack_) ++trace_.psi_increases;
    psi_steps_.push_back(psi);
    if (step_ % cfg_.record_stride == 0) record(t);

    if (psi < cfg_.consensus_tol * psi0_ && trace_.safety_violations.empty()) {
      trace_.verdict = Verdict::kConsensus;
      finished_ = true;
      return;
    }
    const std::size_t w = cfg_.stall_window;
    if (cfg_.stop_on_stall && psi_steps_.size() > w &&
        trace_.safety_violations.empty()) {
      const double drop = psi_steps_[psi_steps_.size() - 1 - w] - psi;
      if (drop < kStallFraction * psi0_) {
        trace_.verdict = Verdict::kStalled;
        finished_ = true;
      }
    }
  }

  RunTrace finish() {
    if (last_recorded_ != step_) record(now_);
    if (!trace_.safety_violations.empty()) {
      trace_.verdict = Verdict::kSafetyViolated;
    } else if (!finished_) {
      // Horizon exhausted above the consensus tolerance.
      trace_.verdict = psi_steps_.back() < cfg_.consensus_tol * psi0_
                           ? Verdict::kConsensus
                           : Verdict::kStalled;
    }
    trace_.steps = step_;
    trace_.final_time = now_;
    trace_.L = trace_.m.back() + trace_.psi.back() / 2.0;
    return std::move(trace_);
  }

  const SwitchingSchedule& schedule_;
  const Protocol& protocol_;
  const WeightPolicy& weights_;
  const AdversaryPlan& plan_;
  const RunConfig& cfg_;
  std::vector<double> x_;
  std::vector<bool> is_adv_;
  RunTrace trace_;
  std::vector<double> psi_steps_;
  double psi0_ = 0.0;
  double slack_ = 0.0;
  std::size_t step_ = 0;
  std::size_t last_recorded_ = 0;
  double now_ = 0.0;
  bool finished_ = false;
};

}  // namespace

double resolve_step(const SwitchingSchedule& schedule, const RunConfig& cfg) {
  const bool switching = !schedule.is_static() && schedule.dwell() > 0.0;
  double h = cfg.step;
  if (h == 0.0) {
    h = cfg.horizon / 1e4;
    if (switching) h = std::min(h, schedule.dwell() / 1000.0);
  }
  if (switching && h > schedule.dwell() / 10.0)
    throw ConfigError("step size " + std::to_string(h) +
                      " exceeds dwell / 10 = " +
                      std::to_string(schedule.dwell() / 10.0));
  return h;
}

RunTrace run_discrete(const SwitchingSchedule& schedule, const Protocol& protocol,
                      const WeightPolicy& weights, const AdversaryPlan& plan,
                      const std::vector<double>& init, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.mode = TimeMode::kDiscrete;
  return Runner(schedule, protocol, weights, plan, init, c).run_discrete();
}

RunTrace run_continuous(const SwitchingSchedule& schedule,
                        const Protocol& protocol, const WeightPolicy& weights,
                        const AdversaryPlan& plan,
                        const std::vector<double>& init, const RunConfig& cfg) {
  RunConfig c = cfg;
  c.mode = TimeMode::kContinuous;
  return Runner(schedule, protocol, weights, plan, init, c).run_continuous();
}

RunTrace run(const SwitchingSchedule& schedule, const Protocol& protocol,
             const WeightPolicy& weights, const AdversaryPlan& plan,
             const std::vector<double>& init, const RunConfig& cfg) {
  return cfg.mode == TimeMode::kDiscrete
             ? run_discrete(schedule, protocol, weights, plan, init, cfg)
             : run_continuous(schedule, protocol, weights, plan, init, cfg);
}

ContractionReport measure_contraction(const RunTrace& trace, std::size_t N,
                                      double alpha) {
  if (trace.record_stride != 1)
    throw InputError("contraction needs a trace recorded every round");
  ContractionReport rep;
  rep.bound = 1.0 - std::pow(alpha, static_cast<double>(N) - 1.0) / 2.0;
  if (N < 2) return rep;
  const std::size_t w = N - 1;
  for (std::size_t t0 = 0; t0 + w < trace.psi.size(); ++t0) {
    if (trace.psi[t0] == 0.0) continue;
    const double ratio = trace.psi[t0 + w] / trace.psi[t0];
    rep.starts.push_back(t0);
    rep.ratios.push_back(ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
    if (ratio > rep.bound) rep.within_bound = false;
  }
  return rep;
}

double rate_gain(double beta, std::size_t n, std::size_t F) {
  if (n < F + 1) throw InputError("rate_gain needs n >= F + 1");
  return beta * static_cast<double>(n - F - 1);
}

std::vector<RateViolation> check_rate_bounds(const RunTrace& trace, double gain,
                                             double slack) {
  if (trace.rates.size() != trace.values.size())
    throw InputError("trace was recorded without rates");
  std::vector<RateViolation> out;
  for (std::size_t k = 0; k < trace.values.size(); ++k) {
    for (NodeId i = 0; i < trace.n; ++i) {
      if (!trace.is_normal(i)) continue;
      const double x = trace.values[k][i];
      const double lower = gain * (trace.m[k] - x);
      const double upper = gain * (trace.M[k] - x);
      const double f = trace.rates[k][i];
      if (f < lower - slack || f > upper + slack)
        out.push_back({trace.times[k], i, f, lower, upper});
    }
  }
  return out;
}

RunSummary summarize(const RunTrace& trace) {
  RunSummary s;
  s.verdict = trace.verdict;
  s.final_psi = trace.psi.empty() ? 0.0 : trace.psi.back();
  s.L = trace.L;
  s.final_time = trace.final_time;
  s.steps = trace.steps;
  s.safety_violations = trace.safety_violations.size();
  return s;
}

void write_trace_csv(std::ostream& out, const RunTrace& trace) {
  const auto old = out.precision(17);
  out << "t";
  for (std::size_t i = 0; i < trace.n; ++i) out << ",node_" << i;
  out << ",psi,m,M\n";
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    out << trace.times[k];
    for (double v : trace.values[k]) out << ',' << v;
    out << ',' << trace.psi[k] << ',' << trace.m[k] << ',' << trace.M[k] << '\n';
  }
  out.precision(old);
}

void write_removed_csv(std::ostream& out, const RunTrace& trace) {
  const auto old = out.precision(17);
  out << "t,node,removed_ids\n";
  for (const RemovedEntry& e : trace.removed_log) {
    out << e.t << ',' << e.node << ',';
    for (std::size_t k = 0; k < e.removed.size(); ++k)
      out << (k ? " " : "") << e.removed[k];
    out << '\n';
  }
  out.precision(old);
}

}  // namespace arcp
