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

// Reference implementations used only by the tests. They follow the textbook
// definitions as literally as possible and share no code with the library.

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace oracle {

using Adjacency = std::vector<std::vector<bool>>;  // adj[j][i]: j -> i

inline Adjacency adjacency(std::size_t n,
                           const std::vector<std::pair<unsigned, unsigned>>& arcs) {
  Adjacency adj(n, std::vector<bool>(n, false));
  for (auto [j, i] : arcs) adj[j][i] = true;
  return adj;
}

// |{i in S : |V_i \ S| >= r}| with S given as a membership vector.
inline std::size_t reach(const Adjacency& adj, const std::vector<int>& side,
                         int which, std::size_t r) {
  const std::size_t n = adj.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (side[i] != which) continue;
    std::size_t outside = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && adj[j][i] && side[j] != which) ++outside;
    if (outside >= r) ++count;
  }
  return count;
}

// Every labelling of the nodes with {neither, S1, S2}, both orders included.
inline bool rs_robust(const Adjacency& adj, std::size_t r, std::size_t s) {
  const std::size_t n = adj.size();
  if (n <= 1) return r == 0 || (n == 1 && r == 1);
  std::vector<int> side(n, 0);
  while (true) {
    std::size_t c1 = 0, c2 = 0;
    for (int v : side) {
      c1 += v == 1;
      c2 += v == 2;
    }
    if (c1 > 0 && c2 > 0) {
      const std::size_t x1 = reach(adj, side, 1, r);
      const std::size_t x2 = reach(adj, side, 2, r);
      if (!(x1 == c1 || x2 == c2 || x1 + x2 >= s)) return false;
    }
    std::size_t k = 0;
    while (k < n && side[k] == 2) side[k++] = 0;
    if (k == n) break;
    ++side[k];
  }
  return true;
}

struct Value {
  unsigned id;
  double value;
};

// Removes, one at a time, the largest remaining value strictly above `self`
// (largest id among equals) up to F times, then likewise below.
inline std::vector<unsigned> removed_ids(double self, std::vector<Value> nbrs,
                                         std::size_t F) {
  std::vector<unsigned> removed;
  for (int side = 0; side < 2; ++side) {
    for (std::size_t k = 0; k < F; ++k) {
      int best = -1;
      for (std::size_t j = 0; j < nbrs.size(); ++j) {
        const double v = nbrs[j].value;
        const bool eligible = side == 0 ? v > self : v < self;
        if (!eligible) continue;
        if (best < 0) {
          best = static_cast<int>(j);
          continue;
        }
        const Value& b = nbrs[static_cast<std::size_t>(best)];
        const bool more_extreme = side == 0 ? v > b.value : v < b.value;
        if (more_extreme || (v == b.value && nbrs[j].id > b.id)) best = static_cast<int>(j);
      }
      if (best < 0) break;
      removed.push_back(nbrs[static_cast<std::size_t>(best)].id);
      nbrs.erase(nbrs.begin() + best);
    }
  }
  std::sort(removed.begin(), removed.end());
  return removed;
}

inline bool contains(const std::vector<unsigned>& v, unsigned x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

// Uniform discrete ARC-P update: plain average of self and kept neighbours.
inline double arcp_average(double self, const std::vector<Value>& nbrs, std::size_t F) {
  const auto removed = removed_ids(self, nbrs, F);
  double sum = self;
  std::size_t count = 1;
  for (const Value& v : nbrs) {
    if (contains(removed, v.id)) continue;
    sum += v.value;
    ++count;
  }
  return sum / static_cast<double>(count);
}

// Continuous ARC-P rate with unit weights: sum of kept offsets.
inline double arcp_rate(double self, const std::vector<Value>& nbrs, std::size_t F) {
  const auto removed = removed_ids(self, nbrs, F);
  double sum = 0.0;
  for (const Value& v : nbrs)
    if (!contains(removed, v.id)) sum += v.value - self;
  return sum;
}

inline std::vector<double> insertion_sort(std::vector<double> z) {
  for (std::size_t i = 1; i < z.size(); ++i)
    for (std::size_t j = i; j > 0 && z[j - 1] > z[j]; --j) std::swap(z[j - 1], z[j]);
  return z;
}

}  // namespace oracle
