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

#include "arcp/figures.hpp"

#include <utility>
#include <vector>

namespace arcp {
namespace {

Digraph from_labels(const std::vector<std::pair<NodeId, NodeId>>& labelled) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (auto [a, b] : labelled) pairs.emplace_back(a - 1, b - 1);
  return from_undirected(pairs, 7);
}

}  // namespace

Digraph two_clique_figure() { return two_clique_graph(4, 5, 2); }

Digraph seven_node_figure() {
  return from_labels({{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}, {2, 3},
                      {2, 4}, {2, 5}, {2, 6}, {3, 4}, {3, 7}, {5, 6}, {5, 7}});
}

Digraph seven_node_local_figure() {
  return from_labels({{1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {2, 5},
                      {2, 6}, {3, 5}, {3, 6}, {3, 7}, {4, 7}, {5, 7}, {6, 7}});
}

}  // namespace arcp
