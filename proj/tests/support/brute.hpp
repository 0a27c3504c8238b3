#pragma once

// Test-side ground truth, kept independent of the library code paths it
// checks: generic DFS path enumeration and small fixture graphs.

#include <algorithm>
#include <set>
#include <vector>

#include "oddcycles/decompose.hpp"
#include "oddcycles/graph.hpp"

namespace brute {

// Chorded cycle fixture on vertex ids 0..n-1 in cyclic order.
inline oddcycles::ChordedCycle make_chorded(int n, int chord_from, int chord_to) {
  oddcycles::ChordedCycle c;
  c.order.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) c.order[i] = i;
  c.chord_from = chord_from;
  c.chord_to = chord_to;
  return c;
}

inline oddcycles::Graph chorded_as_graph(const oddcycles::ChordedCycle& c) {
  int n = c.size();
  oddcycles::Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(c.order[i] % n, c.order[(i + 1) % n] % n);
  auto [u, v] = c.chord_edge();
  g.add_edge(u, v);
  return g;
}

// All (a, b)-simple-path lengths by plain DFS over every simple path.
inline std::set<int> ab_path_lengths(const oddcycles::Graph& g, const std::set<int>& a,
                                     const std::set<int>& b) {
  std::set<int> lengths;
  int n = g.n();
  std::vector<char> used(static_cast<size_t>(n), 0);
  std::vector<int> path;
  std::function<void(int)> dfs = [&](int u) {
    if (path.size() >= 2) {
      int s = path.front(), t = path.back();
      if ((a.count(s) && b.count(t)) || (a.count(t) && b.count(s)))
        lengths.insert(static_cast<int>(path.size()) - 1);
    }
    for (int v : g.neighbors(u)) {
      if (used[v]) continue;
      used[v] = 1;
      path.push_back(v);
      dfs(v);
      path.pop_back();
      used[v] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    used[s] = 1;
    path.assign(1, s);
    dfs(s);
    used[s] = 0;
  }
  return lengths;
}

inline oddcycles::Graph petersen() {
  oddcycles::Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);      // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);            // spokes
  }
  return g;
}

inline oddcycles::Graph bowtie() {
  oddcycles::Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  g.add_edge(4, 0);
  return g;
}

inline oddcycles::Graph path_graph(int n) {
  oddcycles::Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace brute
