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

#include "arcp/adversaries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "arcp/errors.hpp"
#include "arcp/text.hpp"

namespace arcp {

ScopeReport validate_scope(const SwitchingSchedule& schedule,
                           const NodeSet& adversaries, ThreatScope scope) {
  ScopeReport report;
  const NodeSet A = make_node_set(adversaries);
  for (NodeId a : A)
    if (a >= schedule.size())
      throw InputError("adversary " + std::to_string(a) + " is not in the graph");

  if (scope.kind == ThreatScope::Kind::kTotal) {
    if (A.size() > scope.F) {
      report.ok = false;
      report.violations.push_back({0, 0.0, std::nullopt, A.size()});
    }
    return report;
  }

  const auto segments = schedule.segments();
  for (std::size_t k = 0; k < segments.size(); ++k) {
    const Digraph& g = segments[k].graph;
    for (NodeId i = 0; i < g.size(); ++i) {
      if (std::binary_search(A.begin(), A.end(), i)) continue;
      std::size_t seen = 0;
      for (NodeId j : g.in_neighbors(i))
        if (std::binary_search(A.begin(), A.end(), j)) ++seen;
      if (seen > scope.F) {
        report.ok = false;
        report.violations.push_back({k, segments[k].start, i, seen});
      }
    }
  }
  return report;
}

ScopeReport validate_scope(const Digraph& g, const NodeSet& adversaries,
                           ThreatScope scope) {
  return validate_scope(SwitchingSchedule(g), adversaries, scope);
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string fmt(double v) { return format_number(v); }

}  // namespace

double AdversaryStrategy::value(double t, double dt, double previous) const {
  return std::visit(
      Overloaded{
          [](const strategy::Constant& c) { return c.value; },
          [&](const strategy::Ramp& r) {
            const double v = r.start + r.slope * t;
            return r.slope >= 0.0 ? std::min(v, r.clamp) : std::max(v, r.clamp);
          },
          [&](const strategy::Sine& s) {
            return s.center +
                   s.amplitude * std::sin(2.0 * std::numbers::pi * t / s.period);
          },
          [&](const strategy::Pull& p) {
            const double step = p.rate * dt;
            return previous + std::clamp(p.target - previous, -step, step);
          },
          [&](const strategy::Custom& c) { return c.fn(t, dt, previous); },
      },
      v_);
}

void AdversaryStrategy::validate() const {
  auto finite = [](std::initializer_list<double> xs) {
    return std::all_of(xs.begin(), xs.end(),
                       [](double x) { return std::isfinite(x); });
  };
  std::visit(
      Overloaded{
          [&](const strategy::Constant& c) {
            if (!finite({c.value})) throw ConfigError("constant value must be finite");
          },
          [&](const strategy::Ramp& r) {
            if (!finite({r.start, r.slope, r.clamp}))
              throw ConfigError("ramp parameters must be finite");
          },
          [&](const strategy::Sine& s) {
            if (!finite({s.center, s.amplitude, s.period}) || !(s.period > 0.0))
              throw ConfigError("sine needs finite parameters and a positive period");
          },
          [&](const strategy::Pull& p) {
            if (!finite({p.target, p.rate}) || p.rate < 0.0)
              throw ConfigError("pull needs a finite target and a non-negative rate");
          },
          [&](const strategy::Custom& c) {
            if (!c.fn) throw ConfigError("custom strategy has no function");
          },
      },
      v_);
}

std::string AdversaryStrategy::describe() const {
  return std::visit(
      Overloaded{
          [](const strategy::Constant& c) { return "constant " + fmt(c.value); },
          [](const strategy::Ramp& r) {
            return "ramp " + fmt(r.start) + " " + fmt(r.slope) + " " + fmt(r.clamp);
          },
          [](const strategy::Sine& s) {
            return "sine " + fmt(s.center) + " " + fmt(s.amplitude) + " " +
                   fmt(s.period);
          },
          [](const strategy::Pull& p) {
            return "pull " + fmt(p.target) + " rate " + fmt(p.rate);
          },
          [](const strategy::Custom& c) { return "custom " + c.name; },
      },
      v_);
}

AdversaryStrategy AdversaryStrategy::parse(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw ConfigError("missing adversary strategy");
  auto num = [&](std::size_t k) {
    if (k >= tokens.size())
      throw ConfigError("strategy `" + tokens[0] + "` is missing a parameter");
    const auto v = parse_number(tokens[k]);
    if (!v) throw ConfigError("`" + tokens[k] + "` is not a number");
    return *v;
  };
  auto arity = [&](std::size_t n) {
    if (tokens.size() != n)
      throw ConfigError("strategy `" + tokens[0] + "` expects " +
                        std::to_string(n - 1) + " parameters");
  };
  AdversaryStrategy s;
  const std::string& kind = tokens[0];
  if (kind == "constant") {
    arity(2);
    s = constant(num(1));
  } else if (kind == "ramp") {
    arity(4);
    s = ramp(num(1), num(2), num(3));
  } else if (kind == "sine") {
    arity(4);
    s = sine(num(1), num(2), num(3));
  } else if (kind == "pull") {
    arity(4);
    if (tokens[2] != "rate") throw ConfigError("expected `pull TARGET rate RHO`");
    s = pull(num(1), num(3));
  } else {
    throw ConfigError("unknown adversary strategy `" + kind + "`");
  }
  s.validate();
  return s;
}

bool operator==(const AdversaryStrategy& a, const AdversaryStrategy& b) {
  if (a.v_.index() != b.v_.index()) return false;
  return std::visit(
      Overloaded{
          [&](const strategy::Constant& x) {
            return x.value == std::get<strategy::Constant>(b.v_).value;
          },
          [&](const strategy::Ramp& x) {
            const auto& y = std::get<strategy::Ramp>(b.v_);
            return x.start == y.start && x.slope == y.slope && x.clamp == y.clamp;
          },
          [&](const strategy::Sine& x) {
            const auto& y = std::get<strategy::Sine>(b.v_);
            return x.center == y.center && x.amplitude == y.amplitude &&
                   x.period == y.period;
          },
          [&](const strategy::Pull& x) {
            const auto& y = std::get<strategy::Pull>(b.v_);
            return x.target == y.target && x.rate == y.rate;
          },
          [&](const strategy::Custom& x) {
            return x.name == std::get<strategy::Custom>(b.v_).name;
          },
      },
      a.v_);
}

double adversary_value(const AdversaryStrategy& s, double t, double dt,
                       double previous) {
  return s.value(t, dt, previous);
}

NodeSet AdversaryPlan::nodes() const {
  NodeSet out;
  for (const auto& a : assignments) out.push_back(a.node);
  return make_node_set(std::move(out));
}

NecessityAttack necessity_attack_from(const Digraph& g, std::size_t F,
                                      const Witness& witness, double a,
                                      double b, double interior) {
  if (!(a < b) || !(interior > a && interior < b))
    throw InputError("necessity attack needs a < interior < b");
  if (!pair_violates(g, witness.s1, witness.s2, F + 1, F + 1))
    throw InputError("witness does not violate (F+1,F+1)-robustness");

  NecessityAttack attack;
  attack.witness = witness;
  attack.witness.reach1 = reach_count(g, witness.s1, F + 1);
  attack.witness.reach2 = reach_count(g, witness.s2, F + 1);
  attack.a = a;
  attack.b = b;
  attack.initial_values.assign(g.size(), interior);
  for (NodeId i : witness.s1) attack.initial_values[i] = a;
  for (NodeId i : witness.s2) attack.initial_values[i] = b;

  // Reaching nodes X_S1 and X_S2: at least F+1 in-neighbours outside their set.
  auto reaching = [&](const NodeSet& S) {
    NodeSet out;
    for (NodeId i : S) {
      std::size_t outside = 0;
      for (NodeId j : g.in_neighbors(i))
        if (!std::binary_search(S.begin(), S.end(), j)) ++outside;
      if (outside >= F + 1) out.push_back(i);
    }
    return out;
  };
  for (NodeId i : reaching(witness.s1))
    attack.plan.assignments.push_back({i, AdversaryStrategy::constant(a)});
  for (NodeId i : reaching(witness.s2))
    attack.plan.assignments.push_back({i, AdversaryStrategy::constant(b)});
  std::sort(attack.plan.assignments.begin(), attack.plan.assignments.end(),
            [](const auto& x, const auto& y) { return x.node < y.node; });
  attack.plan.scope = ThreatScope::total(F);
  return attack;
}

std::optional<NecessityAttack> necessity_attack(const Digraph& g, std::size_t F,
                                                double a, double b,
                                                double interior,
                                                std::size_t enumeration_limit) {
  if (!(a < b) || !(interior > a && interior < b))
    throw InputError("necessity attack needs a < interior < b");
  if (g.size() < 2) return std::nullopt;
  const std::size_t s = std::min(F + 1, g.size());
  const RobustnessCertificate cert = is_rs_robust(g, F + 1, s, enumeration_limit);
  if (cert.verdict) return std::nullopt;
  return necessity_attack_from(g, F, *cert.witness, a, b, interior);
}

}  // namespace arcp
