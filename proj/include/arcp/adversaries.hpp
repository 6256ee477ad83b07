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
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "arcp/digraph.hpp"
#include "arcp/robustness.hpp"

namespace arcp {

struct ThreatScope {
  enum class Kind { kTotal, kLocal };
  Kind kind = Kind::kTotal;
  std::size_t F = 0;

  static ThreatScope total(std::size_t f) { return {Kind::kTotal, f}; }
  static ThreatScope local(std::size_t f) { return {Kind::kLocal, f}; }

  friend bool operator==(const ThreatScope&, const ThreatScope&) = default;
};

struct ScopeViolation {
  std::size_t segment = 0;
  double segment_start = 0.0;
  std::optional<NodeId> node;  // empty for an F-total cardinality violation
  std::size_t count = 0;       // adversaries seen by `node` (or in total)
};

struct ScopeReport {
  bool ok = true;
  std::vector<ScopeViolation> violations;
};

/// F-total: |A| <= F. F-local: every normal node has at most F adversary
/// in-neighbours, checked exhaustively on every schedule segment.
ScopeReport validate_scope(const SwitchingSchedule& schedule,
                           const NodeSet& adversaries, ThreatScope scope);
ScopeReport validate_scope(const Digraph& g, const NodeSet& adversaries,
                           ThreatScope scope);

namespace strategy {

struct Constant {
  double value = 0.0;
};

/// start + slope * t, saturating at `clamp`.
struct Ramp {
  double start = 0.0;
  double slope = 0.0;
  double clamp = 0.0;
};

struct Sine {
  double center = 0.0;
  double amplitude = 0.0;
  double period = 1.0;
};

/// Moves the previous value toward `target` by at most rate * dt.
struct Pull {
  double target = 0.0;
  double rate = 0.0;
};

/// User extension point: value(t, dt, previous). Continuous-time runs require
/// the function to be uniformly continuous in t; this is not checked.
struct Custom {
  std::string name;
  std::function<double(double t, double dt, double previous)> fn;
};

}  // namespace strategy

/// Behaviour of one malicious node. The engine stores one value per node and
/// round, so every out-neighbour observes the same value.
class AdversaryStrategy {
 public:
  using Variant = std::variant<strategy::Constant, strategy::Ramp,
                               strategy::Sine, strategy::Pull, strategy::Custom>;

  AdversaryStrategy() = default;
  AdversaryStrategy(Variant v) : v_(std::move(v)) {}  // NOLINT: implicit

  static AdversaryStrategy constant(double v) { return Variant(strategy::Constant{v}); }
  static AdversaryStrategy ramp(double v0, double slope, double clamp) {
    return Variant(strategy::Ramp{v0, slope, clamp});
  }
  static AdversaryStrategy sine(double center, double amplitude, double period) {
    return Variant(strategy::Sine{center, amplitude, period});
  }
  static AdversaryStrategy pull(double target, double rate) {
    return Variant(strategy::Pull{target, rate});
  }

  /// Value emitted at time t, `dt` after the previous emission `previous`.
  double value(double t, double dt, double previous) const;

  /// Throws ConfigError on non-finite parameters, a non-positive sine period
  /// or a negative pull rate.
  void validate() const;

  const Variant& variant() const { return v_; }

  /// Scenario-file spelling, e.g. `constant 2` or `pull 2 rate 0.5`.
  std::string describe() const;

  /// Inverse of describe(); throws ConfigError on unknown or malformed specs.
  static AdversaryStrategy parse(const std::vector<std::string>& tokens);

  friend bool operator==(const AdversaryStrategy& a, const AdversaryStrategy& b);

 private:
  Variant v_ = strategy::Constant{};
};

/// Free-function form of AdversaryStrategy::value.
double adversary_value(const AdversaryStrategy& s, double t, double dt,
                       double previous);

struct AdversaryAssignment {
  NodeId node = 0;
  AdversaryStrategy strategy;

  friend bool operator==(const AdversaryAssignment&,
                         const AdversaryAssignment&) = default;
};

struct AdversaryPlan {
  std::vector<AdversaryAssignment> assignments;
  std::optional<ThreatScope> scope;

  NodeSet nodes() const;

  friend bool operator==(const AdversaryPlan&, const AdversaryPlan&) = default;
};

/// The attack that defeats ARC-P(F) on a graph that is not (F+1,F+1)-robust:
/// S1 starts at a, S2 at b, every other node strictly between, and the
/// reaching nodes of both sets turn malicious and hold their values.
struct NecessityAttack {
  Witness witness;
  AdversaryPlan plan;
  std::vector<double> initial_values;
  double a = 0.0;
  double b = 1.0;
};

/// The attack for a given pair violating (F+1,F+1)-robustness; throws
/// InputError when the pair does not violate it.
NecessityAttack necessity_attack_from(const Digraph& g, std::size_t F,
                                      const Witness& witness, double a = 0.0,
                                      double b = 1.0, double interior = 0.5);

/// Empty when `g` is (F+1,F+1)-robust. Throws CapacityError above the
/// enumeration limit.
std::optional<NecessityAttack> necessity_attack(
    const Digraph& g, std::size_t F, double a = 0.0, double b = 1.0,
    double interior = 0.5,
    std::size_t enumeration_limit = kDefaultEnumerationLimit);

}  // namespace arcp
