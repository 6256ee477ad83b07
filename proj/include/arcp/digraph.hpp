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
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arcp {

/// Dense node identifier in [0, n). The natural order of the integers is the
/// total order used for every deterministic tie-break.
using NodeId = std::uint32_t;

/// Sorted, duplicate-free list of node ids.
using NodeSet = std::vector<NodeId>;

/// Sorts and deduplicates `nodes`.
NodeSet make_node_set(std::vector<NodeId> nodes);

/// Directed edge: `from` influences `to`.
struct Edge {
  NodeId from = 0;
  NodeId to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple digraph with an immutable edge set.
///
/// Edges are stored both as a sorted edge list and as per-node sorted in- and
/// out-neighbour lists; `in_neighbors(i)` is the set V_i of nodes whose values
/// node i receives.
class Digraph {
 public:
  Digraph() = default;

  /// Throws InputError on self-loops, duplicate edges or out-of-range
  /// endpoints.
  Digraph(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return in_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const NodeId> in_neighbors(NodeId i) const;
  std::span<const NodeId> out_neighbors(NodeId i) const;

  /// V_i together with i itself.
  NodeSet inclusive_neighbors(NodeId i) const;

  std::size_t in_degree(NodeId i) const { return in_neighbors(i).size(); }
  std::size_t out_degree(NodeId i) const { return out_neighbors(i).size(); }
  bool has_edge(NodeId from, NodeId to) const;

  /// True when every edge has its reverse.
  bool is_symmetric() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.size() == b.size() && a.edges_ == b.edges_;
  }

 private:
  void check_node(NodeId i) const;

  std::vector<Edge> edges_;
  std::vector<NodeSet> in_;
  std::vector<NodeSet> out_;
};

/// Each undirected pair {a, b} becomes arcs (a, b) and (b, a). Node count is
/// `n`, or one past the largest endpoint when `n` is zero.
Digraph from_undirected(std::span<const std::pair<NodeId, NodeId>> edges,
                        std::size_t n = 0);

Digraph complete_graph(std::size_t n);

/// Nodes 0..n1-1 form clique X and n1..n1+n2-1 form clique Y. X node k
/// is joined to Y nodes (k + j) mod n2 for j < cross.
Digraph two_clique_graph(std::size_t n1, std::size_t n2, std::size_t cross);

/// One graph of a switching signal, active from `start` until the next
/// segment begins.
struct Segment {
  double start = 0.0;
  Digraph graph;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Piecewise-constant, right-continuous topology schedule.
class SwitchingSchedule {
 public:
  SwitchingSchedule() = default;

  /// Static schedule: a single segment starting at 0.
  explicit SwitchingSchedule(Digraph graph);

  /// `dwell` is the minimum segment length; zero disables the check (discrete
  /// time). Throws InputError on unordered starts, a first start other than 0,
  /// mismatched node counts or segments shorter than `dwell`.
  SwitchingSchedule(std::vector<Segment> segments, double dwell = 0.0);

  std::size_t size() const { return segments_.front().graph.size(); }
  std::span<const Segment> segments() const { return segments_; }
  double dwell() const { return dwell_; }
  bool is_static() const { return segments_.size() == 1; }

  std::size_t segment_index_at(double t) const;

  /// Graph of the last segment whose start is <= t. A switch instant belongs
  /// to the new segment.
  const Digraph& graph_at(double t) const;

  /// Start of the first segment strictly after `t`, or +inf.
  double next_switch_after(double t) const;

  friend bool operator==(const SwitchingSchedule&,
                         const SwitchingSchedule&) = default;

 private:
  std::vector<Segment> segments_;
  double dwell_ = 0.0;
};

// Edge-list text format: one `u v` (undirected) or `u -> v` (directed) pair per
// line, `#` starts a comment. The comment `# nodes: N` fixes the node count so
// isolated nodes survive a round trip.

Digraph parse_edge_list(std::istream& in);
Digraph read_edge_list(const std::string& path);

/// Symmetric graphs are written as undirected pairs, others as arcs.
void write_edge_list(std::ostream& out, const Digraph& g);

void write_dot(std::ostream& out, const Digraph& g,
               std::span<const NodeId> highlighted = {});

}  // namespace arcp
