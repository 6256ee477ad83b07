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

// arcp: run scenarios and presets, check and grow robust graphs.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "arcp/errors.hpp"
#include "arcp/robustness.hpp"
#include "arcp/scenario.hpp"

namespace fs = std::filesystem;
using namespace arcp;

namespace {

void print_nodes(const char* key, const NodeSet& s) {
  std::cout << key;
  for (NodeId i : s) std::cout << ' ' << i;
  std::cout << '\n';
}

fs::path output_dir(const std::string& flag, const ScenarioConfig& c) {
  if (const char* env = std::getenv("ARCP_OUTPUT_DIR"); env && *env) return env;
  if (!flag.empty()) return flag;
  return c.output;
}

int run_one(const ScenarioConfig& c, const std::string& out_flag) {
  const RunTrace trace = run_scenario(c);
  BatchRow row{c.name, scenario_hash(c), true, {}, summarize(trace), {}};
  if (const fs::path dir = output_dir(out_flag, c); !dir.empty())
    row.trace_path = write_outputs(dir, c.name + "-" + row.hash, trace).string();
  print_summary(std::cout, {row});
  if (!row.trace_path.empty()) std::cout << "# trace " << row.trace_path << '\n';
  return exit_code(trace.verdict);
}

void report_parse_error(const std::string& file, const ParseError& e) {
  for (const Diagnostic& d : e.diagnostics())
    std::cerr << file << ':' << d.line << ": " << d.message << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ARC-P resilient consensus simulator and robustness checker"};
  app.require_subcommand(1);

  std::string out_flag;

  auto* run = app.add_subcommand("run", "Run a scenario file");
  std::string scenario_file;
  run->add_option("FILE", scenario_file, "Scenario file")->required()->check(CLI::ExistingFile);
  run->add_option("--output", out_flag, "Trace directory");

  auto* pre = app.add_subcommand("preset", "Run or print a built-in scenario");
  std::string preset_name;
  std::string protocol_flag;
  std::size_t preset_f = 0;
  bool print_only = false;
  pre->add_option("NAME", preset_name, "Preset name")
      ->required()
      ->check(CLI::IsMember(preset_names()));
  pre->add_option("--protocol", protocol_flag, "Override the protocol")
      ->check(CLI::IsMember({"lcp", "arcp"}));
  pre->add_option("--F", preset_f, "ARC-P parameter with --protocol arcp");
  pre->add_flag("--print", print_only, "Print the scenario text instead of running");
  pre->add_option("--output", out_flag, "Trace directory");

  auto* check = app.add_subcommand("check", "Exact (r,s)-robustness check");
  std::string graph_file;
  std::size_t r = 0;
  std::size_t s = 1;
  std::size_t limit = kDefaultEnumerationLimit;
  bool maximal = false;
  check->add_option("--graph", graph_file, "Edge-list file")->required()->check(CLI::ExistingFile);
  auto* r_opt = check->add_option("--r", r, "r");
  check->add_option("--s", s, "s (default 1)");
  check->add_flag("--maximal", maximal, "Report the maximal (r*, s*) instead");
  check->add_option("--limit", limit, "Enumeration limit in nodes")
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerationLimit));

  auto* growc = app.add_subcommand("grow", "Preferential-attachment robust growth");
  std::string seed_file;
  std::size_t gr = 0, gs = 0, count = 0, attach = 0;
  std::uint64_t rng = 1;
  bool directed = false;
  std::string grow_out;
  growc->add_option("--seed-graph", seed_file, "Seed edge-list file")
      ->required()
      ->check(CLI::ExistingFile);
  growc->add_option("--r", gr, "r")->required();
  growc->add_option("--s", gs, "s")->required();
  growc->add_option("--count", count, "Nodes to add")->required();
  growc->add_option("--rng", rng, "RNG seed")->required();
  growc->add_option("--attach", attach, "Attachments per node (default r+s-1)");
  growc->add_flag("--directed", directed, "Add only in-edges to each new node");
  growc->add_option("--limit", limit, "Enumeration limit for seed verification")
      ->check(CLI::Range(std::size_t{1}, kMaxEnumerationLimit));
  growc->add_option("--out", grow_out, "Write the edge list here instead of stdout");

  auto* batch = app.add_subcommand("batch", "Run every *.scn file in a directory");
  std::string batch_dir;
  std::size_t jobs = 1;
  batch->add_option("DIR", batch_dir, "Scenario directory")->required()->check(CLI::ExistingDirectory);
  batch->add_option("-j,--jobs", jobs, "Parallel runs")->check(CLI::PositiveNumber);
  batch->add_option("--output", out_flag, "Trace directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;  // --help is not an error
  }

  try {
    if (*run) {
      try {
        return run_one(load_scenario(scenario_file), out_flag);
      } catch (const ParseError& e) {
        report_parse_error(scenario_file, e);
        return 1;
      }
    }

    if (*pre) {
      std::optional<Protocol> proto;
      if (protocol_flag == "lcp") proto = Protocol::lcp();
      if (protocol_flag == "arcp") proto = Protocol::arcp(preset_f);
      const ScenarioConfig c = preset(preset_name, proto);
      if (print_only) {
        std::cout << serialize_scenario(c);
        return 0;
      }
      return run_one(c, out_flag);
    }

    if (*check) {
      const Digraph g = read_edge_list(graph_file);
      if (maximal) {
        const MaximalRobustness m = maximal_robustness(g, limit);
        std::cout << "n " << g.size() << "\nr_star " << m.r << "\ns_star " << m.s << '\n';
        return 0;
      }
      if (r_opt->count() == 0) throw InputError("check needs --r or --maximal");
      const RobustnessCertificate cert = is_rs_robust(g, r, s, limit);
      std::cout << "n " << g.size() << "\nr " << cert.r << "\ns " << cert.s
                << "\nrobust " << (cert.verdict ? "true" : "false") << '\n';
      if (cert.witness) {
        print_nodes("witness_s1", cert.witness->s1);
        print_nodes("witness_s2", cert.witness->s2);
        std::cout << "reach_s1 " << cert.witness->reach1 << "\nreach_s2 "
                  << cert.witness->reach2 << '\n';
      }
      return cert.verdict ? 0 : 2;
    }

    if (*growc) {
      const Digraph seed = read_edge_list(seed_file);
      const GrowthRun g = grow_preferential(seed, gr, gs, count, rng, attach, !directed, limit);
      std::ofstream file;
      if (!grow_out.empty()) {
        file.open(grow_out);
        if (!file) throw InputError("cannot write " + grow_out);
      }
      std::ostream& out = grow_out.empty() ? std::cout : file;
      out << "# seed " << (g.seed_status == PreconditionStatus::kVerified ? "verified" : "unchecked")
          << " (" << gr << "," << gs << ")-robust\n";
      for (std::size_t k = 0; k < g.attachments.size(); ++k) {
        out << "# node " << seed.size() + k << " <-";
        for (NodeId t : g.attachments[k]) out << ' ' << t;
        out << '\n';
      }
      write_edge_list(out, g.graph);
      return 0;
    }

    if (*batch) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(batch_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".scn")
          files.push_back(entry.path());
      std::sort(files.begin(), files.end());

      std::vector<ScenarioConfig> configs;
      std::vector<std::optional<BatchRow>> failed(files.size());
      for (std::size_t k = 0; k < files.size(); ++k) {
        try {
          configs.push_back(load_scenario(files[k]));
        } catch (const ParseError& e) {
          report_parse_error(files[k].string(), e);
          failed[k] = BatchRow{files[k].stem().string(), {}, false,
                               e.diagnostics().front().message, {}, {}};
        }
      }
      const std::vector<BatchRow> ran = run_batch(configs, jobs, out_flag);
      std::vector<BatchRow> rows;
      for (std::size_t k = 0, j = 0; k < files.size(); ++k)
        rows.push_back(failed[k] ? *failed[k] : ran[j++]);
      print_summary(std::cout, rows);
      const bool any_failed =
          std::any_of(rows.begin(), rows.end(), [](const BatchRow& b) { return !b.ok; });
      return any_failed ? 1 : 0;
    }
  } catch (const ParseError& e) {
    report_parse_error("<input>", e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
