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

#include "arcp/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "arcp/errors.hpp"
#include "arcp/figures.hpp"
#include "arcp/robustness.hpp"
#include "arcp/text.hpp"

namespace arcp {

namespace fs = std::filesystem;

GraphSource GraphSource::complete(std::size_t n) {
  GraphSource s;
  s.kind = Kind::kComplete;
  s.n = n;
  return s;
}

GraphSource GraphSource::two_clique(std::size_t n1, std::size_t n2,
                                    std::size_t cross) {
  GraphSource s;
  s.kind = Kind::kTwoClique;
  s.n1 = n1;
  s.n2 = n2;
  s.cross = cross;
  return s;
}

GraphSource GraphSource::inline_graph(const Digraph& g) {
  GraphSource s;
  s.kind = Kind::kInline;
  s.n = g.size();
  s.edges.assign(g.edges().begin(), g.edges().end());
  return s;
}

Digraph GraphSource::build(const fs::path& base_dir) const {
  auto resolve = [&](const std::string& p) {
    const fs::path file(p);
    return (file.is_absolute() || base_dir.empty()) ? file : base_dir / file;
  };
  switch (kind) {
    case Kind::kFile:
      return read_edge_list(resolve(path).string());
    case Kind::kComplete:
      return complete_graph(n);
    case Kind::kTwoClique:
      return two_clique_graph(n1, n2, cross);
    case Kind::kInline:
      return Digraph(n, edges);
    case Kind::kGrow: {
      const Digraph seed =
          seed_n > 0 ? complete_graph(seed_n) : read_edge_list(resolve(path).string());
      return grow_preferential(seed, r, s, count, rng, attachments).graph;
    }
  }
  throw InputError("unknown graph source");
}

SwitchingSchedule ScenarioConfig::schedule() const {
  if (topology.empty()) throw ConfigError("scenario has no graph");
  if (topology.size() == 1 && topology.front().start == 0.0)
    return SwitchingSchedule(topology.front().source.build(base_dir));
  std::vector<Segment> segs;
  for (const auto& t : topology) segs.push_back({t.start, t.source.build(base_dir)});
  return SwitchingSchedule(std::move(segs), dwell);
}

std::vector<double> ScenarioConfig::initial_values(std::size_t n) const {
  if (init.kind == InitSpec::Kind::kValues) {
    if (init.values.size() != n)
      throw ConfigError("init lists " + std::to_string(init.values.size()) +
                        " values for " + std::to_string(n) + " nodes");
    return init.values;
  }
  std::mt19937_64 gen(rng);
  std::uniform_real_distribution<double> dist(init.lo, init.hi);
  std::vector<double> x(n);
  for (double& v : x) v = dist(gen);
  return x;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using Tokens = std::vector<std::string>;

class Parser {
 public:
  explicit Parser(fs::path base) { cfg_.base_dir = std::move(base); }

  ScenarioConfig parse(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      const Tokens tok = split_words(raw);
      if (tok.empty()) continue;
      try {
        handle(tok);
      } catch (const Error& e) {
        error(e.what());
      }
    }
    finish();
    if (!diags_.empty()) throw ParseError(std::move(diags_));
    return std::move(cfg_);
  }

 private:
  void error(const std::string& msg, int at = -1) {
    diags_.push_back({at < 0 ? line_ : at, msg});
  }

  [[noreturn]] static void fail(const std::string& msg) { throw ConfigError(msg); }

  static double number(const Tokens& t, std::size_t k) {
    if (k >= t.size()) fail("`" + t[0] + "` is missing a value");
    const auto v = parse_number(t[k]);
    if (!v) fail("`" + t[k] + "` is not a number");
    return *v;
  }

  static unsigned long long integer(const Tokens& t, std::size_t k) {
    if (k >= t.size()) fail("`" + t[0] + "` is missing a value");
    const auto v = parse_unsigned(t[k]);
    if (!v) fail("`" + t[k] + "` is not a non-negative integer");
    return *v;
  }

  static bool boolean(const Tokens& t, std::size_t k) {
    if (k >= t.size()) fail("`" + t[0] + "` is missing a value");
    if (t[k] == "true") return true;
    if (t[k] == "false") return false;
    fail("`" + t[k] + "` is not true or false");
  }

  static void arity(const Tokens& t, std::size_t n) {
    if (t.size() != n)
      fail("`" + t[0] + "` takes " + std::to_string(n - 1) + " value" +
           (n == 2 ? "" : "s"));
  }

  void once(const std::string& key) {
    auto [it, fresh] = seen_.emplace(key, line_);
    if (!fresh)
      fail("duplicate key `" + key + "` (first set on line " +
           std::to_string(it->second) + ")");
  }

  void ref(NodeId id) { refs_.push_back({line_, id}); }

  // Graph source tokens starting at t[k].
  GraphSource source(const Tokens& t, std::size_t k) {
    if (k >= t.size()) fail("missing graph source");
    const std::string& kind = t[k];
    const std::size_t rest = t.size() - k;
    GraphSource s;
    if (kind == "complete") {
      if (rest != 2) fail("expected `complete N`");
      s = GraphSource::complete(integer(t, k + 1));
    } else if (kind == "two-clique") {
      if (rest != 4) fail("expected `two-clique N1 N2 CROSS`");
      s = GraphSource::two_clique(integer(t, k + 1), integer(t, k + 2),
                                  integer(t, k + 3));
    } else if (kind == "file") {
      if (rest != 2) fail("expected `file PATH`");
      s.kind = GraphSource::Kind::kFile;
      s.path = t[k + 1];
    } else if (kind == "inline") {
      if (rest != 2) fail("expected `inline N`");
      s.kind = GraphSource::Kind::kInline;
      s.n = integer(t, k + 1);
    } else if (kind == "grow") {
      s.kind = GraphSource::Kind::kGrow;
      if (rest < 3) fail("expected `grow complete N|file PATH r R s S count K rng SEED`");
      if (t[k + 1] == "complete") {
        s.seed_n = integer(t, k + 2);
        if (s.seed_n == 0) fail("grow seed must have at least one node");
      } else if (t[k + 1] == "file") {
        s.path = t[k + 2];
      } else {
        fail("grow seed must be `complete N` or `file PATH`");
      }
      std::map<std::string, std::size_t*> fields{
          {"r", &s.r}, {"s", &s.s}, {"count", &s.count}, {"attach", &s.attachments}};
      bool have_r = false, have_s = false, have_count = false;
      for (std::size_t j = k + 3; j < t.size(); j += 2) {
        if (j + 1 >= t.size()) fail("grow option `" + t[j] + "` has no value");
        if (t[j] == "rng") {
          s.rng = integer(t, j + 1);
          continue;
        }
        auto it = fields.find(t[j]);
        if (it == fields.end()) fail("unknown grow option `" + t[j] + "`");
        *it->second = integer(t, j + 1);
        have_r |= t[j] == "r";
        have_s |= t[j] == "s";
        have_count |= t[j] == "count";
      }
      if (!have_r || !have_s || !have_count) fail("grow needs r, s and count");
    } else {
      fail("unknown graph source `" + kind + "`");
    }
    if (s.kind == GraphSource::Kind::kInline) inline_ = cfg_.topology.size();
    return s;
  }

  void handle(const Tokens& t) {
    const std::string& key = t[0];
    if (key == "name") {
      arity(t, 2);
      once(key);
      cfg_.name = t[1];
    } else if (key == "graph") {
      once(key);
      if (any_segment_) fail("`graph` cannot be combined with `segment`");
      graph_line_ = line_;
      inline_.reset();
      GraphSource s = source(t, 1);
      cfg_.topology.push_back({0.0, std::move(s)});
    } else if (key == "segment") {
      if (seen_.contains("graph")) fail("`segment` cannot be combined with `graph`");
      any_segment_ = true;
      if (graph_line_ == 0) graph_line_ = line_;
      inline_.reset();
      const double start = number(t, 1);
      GraphSource s = source(t, 2);
      cfg_.topology.push_back({start, std::move(s)});
    } else if (key == "edge" || key == "arc") {
      arity(t, 3);
      if (!inline_) fail("`" + key + "` must follow an `inline` graph");
      GraphSource& g = cfg_.topology[*inline_].source;
      const auto u = static_cast<NodeId>(integer(t, 1));
      const auto v = static_cast<NodeId>(integer(t, 2));
      for (NodeId id : {u, v})
        if (id >= g.n)
          fail("node " + std::to_string(id) + " is not in the " +
               std::to_string(g.n) + "-node inline graph");
      g.edges.push_back({u, v});
      if (key == "edge") g.edges.push_back({v, u});
    } else if (key == "dwell") {
      arity(t, 2);
      once(key);
      cfg_.dwell = number(t, 1);
    } else if (key == "protocol") {
      once(key);
      if (t.size() == 2 && t[1] == "lcp") {
        cfg_.protocol = Protocol::lcp();
      } else if (t.size() == 3 && t[1] == "arcp") {
        cfg_.protocol = Protocol::arcp(integer(t, 2));
      } else {
        fail("expected `protocol arcp F` or `protocol lcp`");
      }
    } else if (key == "weights") {
      once(key);
      if (t.size() < 2) fail("expected `weights uniform|custom [alpha A] [beta B]`");
      if (t[1] == "uniform") {
        cfg_.weights.rule = WeightRule::kUniform;
      } else if (t[1] == "custom") {
        cfg_.weights.rule = WeightRule::kCustom;
      } else {
        fail("unknown weight rule `" + t[1] + "`");
      }
      for (std::size_t j = 2; j < t.size(); j += 2) {
        if (t[j] == "alpha") {
          cfg_.weights.alpha = number(t, j + 1);
        } else if (t[j] == "beta") {
          cfg_.weights.beta = number(t, j + 1);
        } else {
          fail("unknown weights option `" + t[j] + "`");
        }
      }
    } else if (key == "weight") {
      arity(t, 4);
      const auto i = static_cast<NodeId>(integer(t, 1));
      const auto j = static_cast<NodeId>(integer(t, 2));
      ref(i);
      ref(j);
      if (!cfg_.weights.table.emplace(std::pair{i, j}, number(t, 3)).second)
        fail("weight w(" + t[1] + "," + t[2] + ") given twice");
    } else if (key == "adversary") {
      if (t.size() < 3) fail("expected `adversary ID STRATEGY ...`");
      const auto id = static_cast<NodeId>(integer(t, 1));
      ref(id);
      for (const auto& a : cfg_.adversaries.assignments)
        if (a.node == id) fail("adversary " + t[1] + " declared twice");
      cfg_.adversaries.assignments.push_back(
          {id, AdversaryStrategy::parse(Tokens(t.begin() + 2, t.end()))});
    } else if (key == "scope") {
      arity(t, 3);
      once(key);
      const std::size_t f = integer(t, 2);
      if (t[1] == "total") {
        cfg_.adversaries.scope = ThreatScope::total(f);
      } else if (t[1] == "local") {
        cfg_.adversaries.scope = ThreatScope::local(f);
      } else {
        fail("scope must be `total` or `local`");
      }
    } else if (key == "mode") {
      arity(t, 2);
      once(key);
      if (t[1] == "discrete") {
        cfg_.run.mode = TimeMode::kDiscrete;
      } else if (t[1] == "continuous") {
        cfg_.run.mode = TimeMode::kContinuous;
      } else {
        fail("mode must be `discrete` or `continuous`");
      }
    } else if (key == "horizon") {
      arity(t, 2);
      once(key);
      cfg_.run.horizon = number(t, 1);
      if (!(cfg_.run.horizon > 0.0) || !std::isfinite(cfg_.run.horizon))
        fail("horizon must be positive and finite");
    } else if (key == "step") {
      arity(t, 2);
      once(key);
      cfg_.run.step = number(t, 1);
      if (!(cfg_.run.step >= 0.0) || !std::isfinite(cfg_.run.step))
        fail("step must be positive, or 0 for the default");
    } else if (key == "consensus_tol") {
      arity(t, 2);
      once(key);
      cfg_.run.consensus_tol = number(t, 1);
      if (!(cfg_.run.consensus_tol > 0.0)) fail("consensus_tol must be > 0");
    } else if (key == "stall_window") {
      arity(t, 2);
      once(key);
      cfg_.run.stall_window = integer(t, 1);
      if (cfg_.run.stall_window == 0) fail("stall_window must be >= 1");
    } else if (key == "stop_on_stall") {
      arity(t, 2);
      once(key);
      cfg_.run.stop_on_stall = boolean(t, 1);
    } else if (key == "force") {
      arity(t, 2);
      once(key);
      cfg_.run.force = boolean(t, 1);
    } else if (key == "log_removed") {
      arity(t, 2);
      once(key);
      cfg_.run.log_removed = boolean(t, 1);
    } else if (key == "record_rates") {
      arity(t, 2);
      once(key);
      cfg_.run.record_rates = boolean(t, 1);
    } else if (key == "record_stride") {
      arity(t, 2);
      once(key);
      cfg_.run.record_stride = integer(t, 1);
      if (cfg_.run.record_stride == 0) fail("record_stride must be >= 1");
    } else if (key == "init") {
      once(key);
      init_line_ = line_;
      if (t.size() >= 2 && t[1] == "values") {
        cfg_.init.kind = InitSpec::Kind::kValues;
        cfg_.init.values.clear();
        for (std::size_t j = 2; j < t.size(); ++j) cfg_.init.values.push_back(number(t, j));
      } else if (t.size() == 4 && t[1] == "random") {
        cfg_.init.kind = InitSpec::Kind::kRandom;
        cfg_.init.lo = number(t, 2);
        cfg_.init.hi = number(t, 3);
        if (!(cfg_.init.lo <= cfg_.init.hi)) fail("init random needs LO <= HI");
      } else {
        fail("expected `init values V0 V1 ...` or `init random LO HI`");
      }
    } else if (key == "rng") {
      arity(t, 2);
      once(key);
      cfg_.rng = integer(t, 1);
    } else if (key == "output") {
      arity(t, 2);
      once(key);
      cfg_.output = t[1];
    } else {
      fail("unknown key `" + key + "`");
    }
  }

  void finish() {
    if (cfg_.topology.empty()) error("missing required key `graph`", 0);
    if (init_line_ == 0) error("missing required key `init`", 0);
    if (!seen_.contains("protocol")) error("missing required key `protocol`", 0);
    if (cfg_.topology.empty()) return;

    std::size_t n = 0;
    try {
      n = cfg_.schedule().size();
    } catch (const Error& e) {
      error(e.what(), graph_line_);
      return;
    }
    for (auto [at, id] : refs_)
      if (id >= n)
        error("node " + std::to_string(id) + " is not in the " +
                  std::to_string(n) + "-node graph",
              at);
    if (init_line_ != 0 && cfg_.init.kind == InitSpec::Kind::kValues &&
        cfg_.init.values.size() != n)
      error("init lists " + std::to_string(cfg_.init.values.size()) +
                " values for " + std::to_string(n) + " nodes",
            init_line_);
    try {
      cfg_.run.validate();
    } catch (const Error& e) {
      error(e.what(), 0);
    }
    try {
      cfg_.weights.validate(cfg_.run.mode);
    } catch (const Error& e) {
      error(e.what(), seen_.contains("weights") ? seen_["weights"] : 0);
    }
  }

  ScenarioConfig cfg_;
  std::vector<Diagnostic> diags_;
  std::map<std::string, int> seen_;
  std::vector<std::pair<int, NodeId>> refs_;
  std::optional<std::size_t> inline_;
  bool any_segment_ = false;
  int graph_line_ = 0;
  int init_line_ = 0;
  int line_ = 0;
};

std::string source_text(const GraphSource& s) {
  switch (s.kind) {
    case GraphSource::Kind::kFile:
      return "file " + s.path;
    case GraphSource::Kind::kComplete:
      return "complete " + std::to_string(s.n);
    case GraphSource::Kind::kTwoClique:
      return "two-clique " + std::to_string(s.n1) + " " + std::to_string(s.n2) +
             " " + std::to_string(s.cross);
    case GraphSource::Kind::kInline:
      return "inline " + std::to_string(s.n);
    case GraphSource::Kind::kGrow: {
      std::string out = "grow ";
      out += s.seed_n > 0 ? "complete " + std::to_string(s.seed_n) : "file " + s.path;
      out += " r " + std::to_string(s.r) + " s " + std::to_string(s.s) + " count " +
             std::to_string(s.count) + " rng " + std::to_string(s.rng);
      if (s.attachments != 0) out += " attach " + std::to_string(s.attachments);
      return out;
    }
  }
  return {};
}

void inline_edges(std::ostream& out, const GraphSource& s) {
  if (s.kind != GraphSource::Kind::kInline) return;
  // Reciprocal arc pairs are written once as `edge`.
  const Digraph g(s.n, s.edges);
  for (const Edge& e : g.edges()) {
    const bool both = g.has_edge(e.to, e.from);
    if (both && e.from > e.to) continue;
    out << (both ? "edge " : "arc ") << e.from << ' ' << e.to << '\n';
  }
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

ScenarioConfig parse_scenario(const std::string& text, const fs::path& base_dir) {
  ScenarioConfig cfg = Parser(base_dir).parse(text);
  // Inline edge lists are kept canonical (sorted arcs) so equality is by value.
  for (auto& seg : cfg.topology) {
    if (seg.source.kind != GraphSource::Kind::kInline) continue;
    const Digraph g(seg.source.n, seg.source.edges);
    seg.source.edges.assign(g.edges().begin(), g.edges().end());
  }
  return cfg;
}

ScenarioConfig load_scenario(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open scenario file " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), file.parent_path());
}

std::string serialize_scenario(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "name " << c.name << '\n';
  if (c.topology.size() == 1 && c.topology.front().start == 0.0 && c.dwell == 0.0) {
    out << "graph " << source_text(c.topology.front().source) << '\n';
    inline_edges(out, c.topology.front().source);
  } else {
    for (const auto& seg : c.topology) {
      out << "segment " << format_number(seg.start) << ' ' << source_text(seg.source)
          << '\n';
      inline_edges(out, seg.source);
    }
    out << "dwell " << format_number(c.dwell) << '\n';
  }
  if (c.protocol.kind == Protocol::Kind::kLcp) {
    out << "protocol lcp\n";
  } else {
    out << "protocol arcp " << c.protocol.F << '\n';
  }
  out << "weights " << (c.weights.rule == WeightRule::kUniform ? "uniform" : "custom")
      << " alpha " << format_number(c.weights.alpha) << " beta "
      << format_number(c.weights.beta) << '\n';
  for (const auto& [key, w] : c.weights.table)
    out << "weight " << key.first << ' ' << key.second << ' ' << format_number(w)
        << '\n';
  for (const auto& a : c.adversaries.assignments)
    out << "adversary " << a.node << ' ' << a.strategy.describe() << '\n';
  if (c.adversaries.scope)
    out << "scope "
        << (c.adversaries.scope->kind == ThreatScope::Kind::kTotal ? "total" : "local")
        << ' ' << c.adversaries.scope->F << '\n';
  out << "mode " << (c.run.mode == TimeMode::kDiscrete ? "discrete" : "continuous")
      << '\n';
  out << "horizon " << format_number(c.run.horizon) << '\n';
  out << "step " << format_number(c.run.step) << '\n';
  out << "consensus_tol " << format_number(c.run.consensus_tol) << '\n';
  out << "stall_window " << c.run.stall_window << '\n';
  out << "stop_on_stall " << bool_text(c.run.stop_on_stall) << '\n';
  out << "force " << bool_text(c.run.force) << '\n';
  out << "log_removed " << bool_text(c.run.log_removed) << '\n';
  out << "record_rates " << bool_text(c.run.record_rates) << '\n';
  out << "record_stride " << c.run.record_stride << '\n';
  if (c.init.kind == InitSpec::Kind::kValues) {
    out << "init values";
    for (double v : c.init.values) out << ' ' << format_number(v);
    out << '\n';
  } else {
    out << "init random " << format_number(c.init.lo) << ' ' << format_number(c.init.hi)
        << '\n';
  }
  out << "rng " << c.rng << '\n';
  if (!c.output.empty()) out << "output " << c.output << '\n';
  return out.str();
}

std::string scenario_hash(const ScenarioConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_scenario(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k, h >>= 4) out[static_cast<std::size_t>(k)] = digits[h & 0xf];
  return out;
}

// ---------------------------------------------------------------------------
// Presets

namespace {

void certify(bool ok, const std::string& preset, const std::string& claim) {
  if (!ok) throw Error("preset " + preset + " failed its certificate: " + claim);
}

void certify_scope(const ScenarioConfig& c) {
  if (!c.adversaries.scope) return;
  const ScopeReport rep =
      validate_scope(c.schedule(), c.adversaries.nodes(), *c.adversaries.scope);
  certify(rep.ok, c.name, "adversary placement within the declared scope");
}

ScenarioConfig prop1_two_clique() {
  ScenarioConfig c;
  c.name = "prop1-two-clique";
  const Digraph g = two_clique_figure();
  certify(is_r_robust(g, 2).verdict, c.name, "2-robust");
  certify(!is_rs_robust(g, 3, 3).verdict, c.name, "not (3,3)-robust");
  c.topology.push_back({0.0, GraphSource::two_clique(4, 5, 2)});
  c.protocol = Protocol::arcp(2);
  c.run.mode = TimeMode::kDiscrete;
  c.run.horizon = 1000;
  c.run.stop_on_stall = false;
  c.init.values = {0, 0, 0, 0, 1, 1, 1, 1, 1};
  return c;
}

ScenarioConfig fig2_local() {
  ScenarioConfig c;
  c.name = "fig2-local";
  const Digraph g = seven_node_local_figure();
  certify(is_r_robust(g, 3).verdict, c.name, "3-robust");
  c.topology.push_back({0.0, GraphSource::inline_graph(g)});
  c.protocol = Protocol::arcp(1);
  // Nodes 1 and 4 of the figure.
  c.adversaries.assignments = {{0, AdversaryStrategy::constant(2.0)},
                               {3, AdversaryStrategy::constant(-1.0)}};
  c.adversaries.scope = ThreatScope::local(1);
  c.run.mode = TimeMode::kDiscrete;
  c.run.horizon = 10000;
  c.init.values = {2.0, 0.0, 0.25, -1.0, 0.5, 0.75, 1.0};
  certify_scope(c);
  return c;
}

ScenarioConfig grow_k5() {
  ScenarioConfig c;
  c.name = "grow-k5";
  GraphSource src;
  src.kind = GraphSource::Kind::kGrow;
  src.seed_n = 5;
  src.r = 3;
  src.s = 2;
  src.count = 5;
  src.attachments = 4;
  src.rng = 42;
  const Digraph g = src.build();
  certify(is_rs_robust(g, 3, 2).verdict, c.name, "(3,2)-robust");
  certify(is_rs_robust(g, 2, 2).verdict, c.name, "(2,2)-robust");
  c.topology.push_back({0.0, src});
  c.protocol = Protocol::arcp(1);
  c.adversaries.assignments = {{0, AdversaryStrategy::sine(0.5, 2.0, 25.0)}};
  c.adversaries.scope = ThreatScope::total(1);
  c.run.mode = TimeMode::kDiscrete;
  c.run.horizon = 10000;
  c.init.kind = InitSpec::Kind::kRandom;
  c.rng = 42;
  certify_scope(c);
  return c;
}

// K3 grown by preferential attachment to 14 nodes, then a hub that attaches
// to enough nodes to have the strictly largest degree.
Digraph hub_graph() {
  const Digraph base = grow_preferential(complete_graph(3), 2, 2, 11, 6, 3).graph;
  std::size_t base_max = 0;
  for (NodeId i = 0; i < base.size(); ++i)
    base_max = std::max(base_max, base.in_degree(i));
  for (std::size_t k = 3; k <= base.size(); ++k) {
    const Digraph g = grow(base, 2, 2, preferential_targets(base, k, 14)).graph;
    std::size_t others = 0;
    for (NodeId i = 0; i + 1 < g.size(); ++i) others = std::max(others, g.in_degree(i));
    if (g.in_degree(14) > others) return g;
  }
  throw Error("hub graph construction failed");
}

ScenarioConfig sec6_hub() {
  ScenarioConfig c;
  c.name = "sec6-hub";
  const Digraph g = hub_graph();
  certify(is_rs_robust(g, 2, 2).verdict, c.name, "(2,2)-robust");
  c.topology.push_back({0.0, GraphSource::inline_graph(g)});
  c.protocol = Protocol::arcp(1);
  c.adversaries.assignments = {{14, AdversaryStrategy::constant(2.0)}};
  c.adversaries.scope = ThreatScope::total(1);
  c.run.mode = TimeMode::kContinuous;
  c.run.horizon = 40;
  c.run.record_stride = 10;
  for (std::size_t i = 0; i < 14; ++i)
    c.init.values.push_back(static_cast<double>((5 * i) % 14) / 13.0);
  c.init.values.push_back(2.0);
  certify_scope(c);
  return c;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"prop1-two-clique", "fig2-local", "grow-k5", "sec6-hub"};
}

ScenarioConfig preset(const std::string& name, std::optional<Protocol> protocol) {
  ScenarioConfig c;
  if (name == "prop1-two-clique") {
    c = prop1_two_clique();
  } else if (name == "fig2-local") {
    c = fig2_local();
  } else if (name == "grow-k5") {
    c = grow_k5();
  } else if (name == "sec6-hub") {
    c = sec6_hub();
  } else {
    throw InputError("unknown preset `" + name + "`");
  }
  if (protocol) {
    c.protocol = *protocol;
    if (protocol->kind == Protocol::Kind::kLcp) c.name += "-lcp";
  }
  return c;
}

// ---------------------------------------------------------------------------
// Running

RunTrace run_scenario(const ScenarioConfig& config) {
  const SwitchingSchedule schedule = config.schedule();
  return run(schedule, config.protocol, config.weights, config.adversaries,
             config.initial_values(schedule.size()), config.run);
}

fs::path write_outputs(const fs::path& dir, const std::string& stem,
                       const RunTrace& trace) {
  fs::create_directories(dir);
  const fs::path csv = dir / (stem + ".csv");
  {
    std::ofstream out(csv);
    if (!out) throw InputError("cannot write " + csv.string());
    write_trace_csv(out, trace);
  }
  {
    std::ofstream out(dir / (stem + ".removed.csv"));
    write_removed_csv(out, trace);
  }
  std::ofstream gp(dir / (stem + ".gp"));
  gp << "# gnuplot " << stem << ".gp\n"
     << "set datafile separator ','\n"
     << "set key outside autotitle columnhead\n"
     << "set xlabel 't'\nset ylabel 'x'\n"
     << "set terminal pngcairo size 900,600\n"
     << "set output '" << stem << ".png'\n"
     << "plot for [i=2:" << trace.n + 1 << "] '" << stem
     << ".csv' using 1:i with lines\n";
  return csv;
}

std::vector<BatchRow> run_batch(const std::vector<ScenarioConfig>& configs,
                                std::size_t parallelism,
                                const fs::path& output_dir) {
  std::vector<BatchRow> rows(configs.size());
  fs::path override_dir = output_dir;
  if (const char* env = std::getenv("ARCP_OUTPUT_DIR"); env && *env) override_dir = env;

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < configs.size(); k = next++) {
      const ScenarioConfig& c = configs[k];
      BatchRow& row = rows[k];
      row.name = c.name;
      try {
        row.hash = scenario_hash(c);
        const RunTrace trace = run_scenario(c);
        row.summary = summarize(trace);
        const fs::path dir = !override_dir.empty() ? override_dir : fs::path(c.output);
        if (!dir.empty())
          row.trace_path = write_outputs(dir, c.name + "-" + row.hash, trace).string();
        row.ok = true;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const std::size_t threads =
      std::max<std::size_t>(1, std::min(parallelism, configs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return rows;
}

void print_summary(std::ostream& out, const std::vector<BatchRow>& rows) {
  out << "name,hash,verdict,final_psi,L,final_time,steps,safety_violations\n";
  for (const BatchRow& r : rows) {
    out << r.name << ',' << r.hash << ',';
    if (!r.ok) {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      out << "error: " << msg << ",,,,,\n";
      continue;
    }
    const RunSummary& s = r.summary;
    out << to_string(s.verdict) << ',' << format_number(s.final_psi) << ','
        << format_number(s.L) << ',' << format_number(s.final_time) << ','
        << s.steps << ',' << s.safety_violations << '\n';
  }
}

}  // namespace arcp
