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

#include "arcp/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "arcp/errors.hpp"

namespace arcp {

ParseError::ParseError(std::vector<Diagnostic> diagnostics)
    : Error([&] {
        std::string msg;
        for (const auto& d : diagnostics) {
          if (!msg.empty()) msg += '\n';
          msg += "line " + std::to_string(d.line) + ": " + d.message;
        }
        return msg;
      }()),
      diagnostics_(std::move(diagnostics)) {}

NodeSet make_node_set(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  return nodes;
}

Digraph::Digraph(std::size_t n, std::vector<Edge> edges)
    : edges_(std::move(edges)), in_(n), out_(n) {
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    if (e.from >= n || e.to >= n) {
      throw InputError("edge (" + std::to_string(e.from) + "," +
                       std::to_string(e.to) + ") has an endpoint outside [0," +
                       std::to_string(n) + ")");
    }
    if (e.from == e.to) {
      throw InputError("self-loop at node " + std::to_string(e.from));
    }
    if (k > 0 && edges_[k - 1] == e) {
      throw InputError("duplicate edge (" + std::to_string(e.from) + "," +
                       std::to_string(e.to) + ")");
    }
    in_[e.to].push_back(e.from);
    out_[e.from].push_back(e.to);
  }
  for (auto& v : in_) std::sort(v.begin(), v.end());
}

void Digraph::check_node(NodeId i) const {
  if (i >= size()) {
    throw InputError("node " + std::to_string(i) + " is not in a graph of " +
                     std::to_string(size()) + " nodes");
  }
}

std::span<const NodeId> Digraph::in_neighbors(NodeId i) const {
  check_node(i);
  return in_[i];
}

std::span<const NodeId> Digraph::out_neighbors(NodeId i) const {
  check_node(i);
  return out_[i];
}

NodeSet Digraph::inclusive_neighbors(NodeId i) const {
  check_node(i);
  NodeSet result = in_[i];
  result.insert(std::lower_bound(result.begin(), result.end(), i), i);
  return result;
}

bool Digraph::has_edge(NodeId from, NodeId to) const {
  check_node(from);
  check_node(to);
  return std::binary_search(in_[to].begin(), in_[to].end(), from);
}

bool Digraph::is_symmetric() const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{e.to, e.from});
  });
}

Digraph from_undirected(std::span<const std::pair<NodeId, NodeId>> edges,
                        std::size_t n) {
  std::vector<Edge> arcs;
  arcs.reserve(2 * edges.size());
  std::size_t inferred = 0;
  for (auto [a, b] : edges) {
    arcs.push_back({a, b});
    arcs.push_back({b, a});
    inferred = std::max<std::size_t>(inferred, std::max(a, b) + 1);
  }
  return Digraph(n == 0 ? inferred : n, std::move(arcs));
}

Digraph complete_graph(std::size_t n) {
  std::vector<Edge> arcs;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j)
      if (i != j) arcs.push_back({i, j});
  return Digraph(n, std::move(arcs));
}

Digraph two_clique_graph(std::size_t n1, std::size_t n2, std::size_t cross) {
  if (n1 == 0 || n2 == 0) throw InputError("two-clique sizes must be positive");
  if (cross > n2) throw InputError("cross degree exceeds the size of clique Y");
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < n1; ++a)
    for (NodeId b = a + 1; b < n1; ++b) pairs.emplace_back(a, b);
  for (NodeId a = 0; a < n2; ++a)
    for (NodeId b = a + 1; b < n2; ++b)
      pairs.emplace_back(static_cast<NodeId>(n1 + a),
                         static_cast<NodeId>(n1 + b));
  for (NodeId k = 0; k < n1; ++k)
    for (std::size_t j = 0; j < cross; ++j)
      pairs.emplace_back(k, static_cast<NodeId>(n1 + (k + j) % n2));
  return from_undirected(pairs, n1 + n2);
}

SwitchingSchedule::SwitchingSchedule(Digraph graph)
    : SwitchingSchedule(std::vector<Segment>{{0.0, std::move(graph)}}) {}

SwitchingSchedule::SwitchingSchedule(std::vector<Segment> segments,
                                     double dwell)
    : segments_(std::move(segments)), dwell_(dwell) {
  if (segments_.empty()) throw InputError("schedule has no segments");
  if (segments_.front().start != 0.0)
    throw InputError("first segment must start at t = 0");
  if (dwell_ < 0.0) throw InputError("dwell time must be non-negative");
  const std::size_t n = segments_.front().graph.size();
  for (std::size_t k = 1; k < segments_.size(); ++k) {
    if (segments_[k].graph.size() != n)
      throw InputError("schedule segments must share one node set");
    const double length = segments_[k].start - segments_[k - 1].start;
    if (!(length > 0.0))
      throw InputError("segment start times must be strictly increasing");
    if (dwell_ > 0.0 && length < dwell_)
      throw InputError("segment " + std::to_string(k - 1) +
                       " is shorter than the dwell time");
  }
}

std::size_t SwitchingSchedule::segment_index_at(double t) const {
  if (t < 0.0) throw InputError("schedule queried at negative time");
  auto it = std::upper_bound(
      segments_.begin(), segments_.end(), t,
      [](double time, const Segment& s) { return time < s.start; });
  return static_cast<std::size_t>(it - segments_.begin()) - 1;
}

const Digraph& SwitchingSchedule::graph_at(double t) const {
  return segments_[segment_index_at(t)].graph;
}

double SwitchingSchedule::next_switch_after(double t) const {
  for (const auto& s : segments_)
    if (s.start > t) return s.start;
  return std::numeric_limits<double>::infinity();
}

namespace {

bool parse_id(std::string_view token, NodeId& out) {
  const char* first = token.data();
  const char* last = first + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Digraph parse_edge_list(std::istream& in) {
  std::vector<Edge> arcs;
  std::vector<std::pair<NodeId, NodeId>> undirected;
  std::size_t declared = 0;
  std::size_t inferred = 0;
  std::string line;
  int lineno = 0;
  std::vector<Diagnostic> errors;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first[0] == '#') {
      std::string key;
      std::size_t value = 0;
      if (ls >> key && key == "nodes:" && ls >> value) declared = value;
      continue;
    }
    std::vector<std::string> tokens{first};
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    NodeId u = 0;
    NodeId v = 0;
    if (tokens.size() == 2 && parse_id(tokens[0], u) && parse_id(tokens[1], v)) {
      undirected.emplace_back(u, v);
    } else if (tokens.size() == 3 && tokens[1] == "->" &&
               parse_id(tokens[0], u) && parse_id(tokens[2], v)) {
      arcs.push_back({u, v});
    } else {
      errors.push_back({lineno, "expected `u v` or `u -> v`, got `" + line + "`"});
      continue;
    }
    inferred = std::max<std::size_t>(inferred, std::max(u, v) + 1);
  }
  if (!errors.empty()) throw ParseError(std::move(errors));
  for (auto [a, b] : undirected) {
    arcs.push_back({a, b});
    arcs.push_back({b, a});
  }
  return Digraph(std::max(declared, inferred), std::move(arcs));
}

Digraph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file " + path);
  return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Digraph& g) {
  out << "# nodes: " << g.size() << '\n';
  if (g.is_symmetric()) {
    for (const Edge& e : g.edges())
      if (e.from < e.to) out << e.from << ' ' << e.to << '\n';
  } else {
    for (const Edge& e : g.edges()) out << e.from << " -> " << e.to << '\n';
  }
}

void write_dot(std::ostream& out, const Digraph& g,
               std::span<const NodeId> highlighted) {
  const bool symmetric = g.is_symmetric();
  out << (symmetric ? "graph" : "digraph") << " arcp {\n";
  for (NodeId i = 0; i < g.size(); ++i) {
    out << "  " << i;
    if (std::find(highlighted.begin(), highlighted.end(), i) != highlighted.end())
      out << " [style=filled, fillcolor=salmon]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    if (symmetric) {
      if (e.from < e.to) out << "  " << e.from << " -- " << e.to << ";\n";
    } else {
      out << "  " << e.from << " -> " << e.to << ";\n";
    }
  }
  out << "}\n";
}

}  // namespace arcp
