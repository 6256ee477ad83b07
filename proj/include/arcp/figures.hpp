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

#include "arcp/digraph.hpp"

namespace arcp {

/// Two cliques X = {0..3} and Y = {4..8}; each X node has exactly two
/// neighbours in Y and each Y node at most two in X. 2-robust, not 3-robust.
Digraph two_clique_figure();

/// Seven-node undirected graph on which S1 = {1,3,5,6,7} / S2 = {2,4} (the
/// figure's 1-based labels; ids are label - 1) violates (3,2)-robustness
/// while S1 = {1,5,6} / S2 = {2,3,4} satisfies the (2,5) condition. 3-robust.
Digraph seven_node_figure();

/// Seven-node 3-robust, (3,2)-fragile variant on which {1,4} (labels) is a
/// 1-local adversary set.
Digraph seven_node_local_figure();

}  // namespace arcp
