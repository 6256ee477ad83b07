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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arcp/adversaries.hpp"
#include "arcp/digraph.hpp"
#include "arcp/engine.hpp"
#include "arcp/protocols.hpp"

namespace arcp {

/// Where a topology comes from. `build` resolves relative file paths against
/// `base_dir`.
struct GraphSource {
  enum class Kind { kFile, kComplete, kTwoClique, kGrow, kInline };
  Kind kind = Kind::kComplete;

  std::string path;      // kFile, and the grow seed when seed_n == 0
  std::size_t n = 0;     // kComplete, kInline
  std::size_t n1 = 0;    // kTwoClique
  std::size_t n2 = 0;
  std::size_t cross = 0;
  // kGrow: seed is K_{seed_n}, or the file `path` when seed_n == 0.
  std::size_t seed_n = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t count = 0;
  std::size_t attachments = 0;  // 0 means r + s - 1
  std::uint64_t rng = 0;
  std::vector<Edge> edges;  // kInline, as arcs

  Digraph build(const std::filesystem::path& base_dir = {}) const;

  static GraphSource complete(std::size_t n);
  static GraphSource two_clique(std::size_t n1, std::size_t n2, std::size_t cross);
  static GraphSource inline_graph(const Digraph& g);

  friend bool operator==(const GraphSource&, const GraphSource&) = default;
};

struct TopologySegment {
  double start = 0.0;
  GraphSource source;

  friend bool operator==(const TopologySegment&, const TopologySegment&) = default;
};

struct InitSpec {
  enum class Kind { kValues, kRandom };
  Kind kind = Kind::kValues;
  std::vector<double> values;
  double lo = 0.0;  // kRandom: uniform on [lo, hi] from the scenario rng
  double hi = 1.0;

  friend bool operator==(const InitSpec&, const InitSpec&) = default;
};

struct ScenarioConfig {
  std::string name = "scenario";
  std::vector<TopologySegment> topology;  // one segment for a static graph
  double dwell = 0.0;
  Protocol protocol = Protocol::arcp(1);
  WeightPolicy weights;
  AdversaryPlan adversaries;
  RunConfig run;
  InitSpec init;
  std::uint64_t rng = 1;
  std::string output;  // trace directory; empty writes nothing
  std::filesystem::path base_dir;

  SwitchingSchedule schedule() const;
  std::vector<double> initial_values(std::size_t n) const;

  friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

/// Parses the line-oriented scenario format. Every problem found is reported
/// in one ParseError with its 1-based line (0 for a missing required key).
ScenarioConfig parse_scenario(const std::string& text,
                              const std::filesystem::path& base_dir = {});
ScenarioConfig load_scenario(const std::filesystem::path& file);

/// Canonical text; parse_scenario(serialize_scenario(c)) == c.
std::string serialize_scenario(const ScenarioConfig& config);

/// 16 hex digits of a 64-bit FNV-1a hash of the canonical text.
std::string scenario_hash(const ScenarioConfig& config);

std::vector<std::string> preset_names();

/// Ready-to-run reference scenarios. Each preset certifies its robustness
/// precondition and scope at construction and throws Error if either fails.
ScenarioConfig preset(const std::string& name,
                      std::optional<Protocol> protocol = std::nullopt);

RunTrace run_scenario(const ScenarioConfig& config);

struct BatchRow {
  std::string name;
  std::string hash;
  bool ok = false;
  std::string error;
  RunSummary summary;
  std::string trace_path;
};

/// Runs every config on up to `parallelism` threads and returns rows in input
/// order. Traces go to `output_dir` when nonempty, otherwise to each config's
/// own `output`; the ARCP_OUTPUT_DIR environment variable overrides both.
/// A failing run yields a row with `ok == false` and the batch continues.
std::vector<BatchRow> run_batch(const std::vector<ScenarioConfig>& configs,
                                std::size_t parallelism,
                                const std::filesystem::path& output_dir = {});

void print_summary(std::ostream& out, const std::vector<BatchRow>& rows);

/// Writes `<stem>.csv`, `<stem>.removed.csv` and a gnuplot script `<stem>.gp`
/// into `dir`; returns the trace path.
std::filesystem::path write_outputs(const std::filesystem::path& dir,
                                    const std::string& stem,
                                    const RunTrace& trace);

}  // namespace arcp
