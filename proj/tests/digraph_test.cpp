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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "arcp/digraph.hpp"
#include "arcp/errors.hpp"
#include "arcp/figures.hpp"
#include "test_util.hpp"

using namespace arcp;

TEST_CASE("in_neighbors of small graphs") {
  const Digraph k3 = complete_graph(3);
  CHECK(NodeSet(k3.in_neighbors(0).begin(), k3.in_neighbors(0).end()) == NodeSet{1, 2});
  const Digraph empty(3, {});
  CHECK(empty.in_neighbors(0).empty());
  CHECK_THROWS_AS(k3.in_neighbors(3), InputError);
}

TEST_CASE("two-clique X nodes see three peers and two Y nodes") {
  const Digraph g = two_clique_figure();
  for (NodeId x = 0; x < 4; ++x) {
    std::size_t peers = 0, cross = 0;
    for (NodeId j : g.in_neighbors(x)) (j < 4 ? peers : cross)++;
    CHECK(peers == 3);
    CHECK(cross == 2);
  }
  for (NodeId y = 4; y < 9; ++y) {
    std::size_t cross = 0;
    for (NodeId j : g.in_neighbors(y)) cross += j < 4;
    CHECK(cross <= 2);
  }
}

TEST_CASE("inclusive neighbours and degree") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const Digraph g = testutil::random_digraph(6, 0.4, rng);
    for (NodeId i = 0; i < g.size(); ++i) {
      const auto in = g.in_neighbors(i);
      CHECK(std::find(in.begin(), in.end(), i) == in.end());
      const NodeSet inc = g.inclusive_neighbors(i);
      CHECK(std::binary_search(inc.begin(), inc.end(), i));
      CHECK(inc.size() == g.in_degree(i) + 1);
    }
  }
}

TEST_CASE("graph_at is right-continuous") {
  const SwitchingSchedule single(complete_graph(3));
  CHECK(single.graph_at(5.0) == complete_graph(3));

  const Digraph a = complete_graph(4);
  const Digraph b(4, {{0, 1}, {1, 0}});
  const SwitchingSchedule two({{0.0, a}, {10.0, b}}, 1.0);
  CHECK(two.graph_at(10.0) == b);
  CHECK(two.graph_at(9.999) == a);
  CHECK(two.graph_at(0.0) == a);
  CHECK(two.next_switch_after(3.0) == 10.0);
  CHECK(std::isinf(two.next_switch_after(10.0)));
  for (double t = 0.0; t < 10.0; t += 0.37) CHECK(two.graph_at(t) == a);
  CHECK_THROWS_AS(two.graph_at(-1.0), InputError);
}

TEST_CASE("schedule validation") {
  const Digraph a = complete_graph(3);
  CHECK_THROWS_AS(SwitchingSchedule({{1.0, a}}), InputError);
  CHECK_THROWS_AS(SwitchingSchedule({{0.0, a}, {0.0, a}}), InputError);
  CHECK_THROWS_AS(SwitchingSchedule({{0.0, a}, {1.0, complete_graph(4)}}), InputError);
  CHECK_THROWS_AS(SwitchingSchedule({{0.0, a}, {0.5, a}}, 1.0), InputError);
}

TEST_CASE("from_undirected") {
  const std::vector<std::pair<NodeId, NodeId>> one{{0, 1}};
  const Digraph g = from_undirected(one);
  CHECK(g.edges().size() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));

  std::vector<std::pair<NodeId, NodeId>> k4;
  for (NodeId a = 0; a < 4; ++a)
    for (NodeId b = a + 1; b < 4; ++b) k4.emplace_back(a, b);
  CHECK(from_undirected(k4).edge_count() == 12);

  const Digraph fig = seven_node_figure();
  CHECK(fig.size() == 7);
  CHECK(fig.is_symmetric());

  const std::vector<std::pair<NodeId, NodeId>> loop{{2, 2}};
  CHECK_THROWS_AS(from_undirected(loop), InputError);
  const std::vector<std::pair<NodeId, NodeId>> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(from_undirected(dup), InputError);
}

TEST_CASE("digraph rejects bad edges") {
  CHECK_THROWS_AS(Digraph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(Digraph(3, {{0, 3}}), InputError);
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const Digraph g = rep % 2 ? testutil::random_digraph(7, 0.3, rng)
                              : testutil::random_graph(7, 0.3, rng);
    std::stringstream buf;
    write_edge_list(buf, g);
    CHECK(parse_edge_list(buf) == g);
  }
  std::istringstream isolated("# nodes: 5\n0 1\n");
  CHECK(parse_edge_list(isolated).size() == 5);

  std::istringstream bad("0 1\nnonsense here\n2 -> 3\n4 5 6\n");
  try {
    parse_edge_list(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(e.diagnostics().size() == 2);
    CHECK(e.diagnostics()[0].line == 2);
    CHECK(e.diagnostics()[1].line == 4);
  }
}

TEST_CASE("dot export lists every arc") {
  std::ostringstream out;
  const NodeId hi[] = {1};
  write_dot(out, Digraph(3, {{0, 1}, {2, 1}}), hi);
  const std::string dot = out.str();
  CHECK(dot.find("0 -> 1") != std::string::npos);
  CHECK(dot.find("2 -> 1") != std::string::npos);
}
