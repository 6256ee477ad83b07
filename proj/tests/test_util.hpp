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
#include <initializer_list>
#include <random>
#include <vector>

#include "arcp/digraph.hpp"
#include "oracle.hpp"

namespace testutil {

/// Figure labels are 1-based; node ids are label - 1.
inline arcp::NodeSet labels(std::initializer_list<arcp::NodeId> ls) {
  arcp::NodeSet out;
  for (arcp::NodeId l : ls) out.push_back(l - 1);
  return arcp::make_node_set(out);
}

inline oracle::Adjacency adjacency(const arcp::Digraph& g) {
  std::vector<std::pair<unsigned, unsigned>> arcs;
  for (const arcp::Edge& e : g.edges()) arcs.emplace_back(e.from, e.to);
  return oracle::adjacency(g.size(), arcs);
}

/// Each ordered pair becomes an arc with probability p.
inline arcp::Digraph random_digraph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<arcp::Edge> edges;
  for (arcp::NodeId j = 0; j < n; ++j)
    for (arcp::NodeId i = 0; i < n; ++i)
      if (i != j && coin(rng)) edges.push_back({j, i});
  return arcp::Digraph(n, edges);
}

/// Each unordered pair becomes a reciprocal arc pair with probability p.
inline arcp::Digraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<arcp::NodeId, arcp::NodeId>> pairs;
  for (arcp::NodeId a = 0; a < n; ++a)
    for (arcp::NodeId b = a + 1; b < n; ++b)
      if (coin(rng)) pairs.emplace_back(a, b);
  std::vector<arcp::Edge> edges;
  for (auto [a, b] : pairs) {
    edges.push_back({a, b});
    edges.push_back({b, a});
  }
  return arcp::Digraph(n, edges);
}

}  // namespace testutil
