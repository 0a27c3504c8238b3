#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "oddcycles/graph.hpp"

namespace oddcycles {

// Side assignment whose bichromatic edges form a spanning connected subgraph
// carrying at least half of every vertex's degree.
struct Bipartition {
  std::vector<std::uint8_t> side;
  long long cut_edges = 0;
};

// Local search with two move kinds: single-vertex flips until every vertex
// has at least half its degree across the cut, and whole-component relabels
// of the cut subgraph until it is connected. Both moves strictly increase
// the cut, so the search ends within m improvements.
Bipartition local_search_bipartition(const Graph& g);
Bipartition local_search_bipartition_from(const Graph& g, std::vector<std::uint8_t> side);

Graph cut_subgraph(const Graph& g, const Bipartition& b);

// Lexicographically smallest edge with both ends on one side.
std::pair<int, int> find_odd_closure_edge(const Graph& g, const Bipartition& b);
std::vector<std::pair<int, int>> monochromatic_edges(const Graph& g, const Bipartition& b);

struct BfsLayering {
  int root = -1;
  std::vector<int> parent;  // -1 at the root
  std::vector<int> depth;
  std::vector<std::vector<int>> layers;

  std::vector<int> path_to_root(int v) const;  // v, parent(v), ..., root
  int lca(int a, int b) const;
};

// BFS over a connected bipartite graph, neighbors explored in ascending id
// order. Every edge of the input must join consecutive layers.
BfsLayering bfs_layering(const Graph& cut, int root);

// Tree path between the closure endpoints plus the closure edge itself; the
// two endpoints must sit at even tree distance, which makes the cycle odd.
std::vector<int> base_odd_cycle(const BfsLayering& l, const Graph& host,
                                std::pair<int, int> closure);

struct DenseLayerPair {
  int index = -1;                // i of (L_i, L_{i+1})
  Graph layer_graph;             // induced on L_i  L_{i+1}, relabeled
  std::vector<int> to_host;      // layer-graph id -> host id
  Rational achieved;             // 2 e(L_i, L_{i+1}) / (|L_i| + |L_{i+1}|)
};

// The consecutive pair maximizing average degree, ties to the smaller index.
// The achieved value is at least half the cut subgraph's average degree.
DenseLayerPair densest_layer_pair(const BfsLayering& l, const Graph& cut);

struct ChordedCycle {
  std::vector<int> order;          // cyclic vertex order
  int chord_from = -1, chord_to = -1;  // positions into order

  int size() const { return static_cast<int>(order.size()); }
  std::pair<int, int> chord_edge() const { return {order[chord_from], order[chord_to]}; }
  int position_of(int v) const;
  // Validates consecutive adjacency, the chord, and minimum size against the
  // graph the order's ids refer to.
  void check_valid(const Graph& ambient) const;
};

// Degeneracy peel to a core of minimum degree >= half the average degree,
// then greedy maximal-path growth with rotations; the cycle closes at the
// endpoint's farthest on-path neighbor, which yields length >= core minimum
// degree + 1 and a chord whenever that degree is >= 3. Tries start vertices
// in ascending order until min_len is reached, keeping the longest cycle.
ChordedCycle find_chorded_cycle(const Graph& g, int min_len);

struct SteinerSubtree {
  int root = -1;      // deepest common ancestor of the leaves
  int root_depth = 0; // depth of root in the host layering
  int leaf_depth = 0; // uniform leaf distance from root
  VertexSet leaves;
  std::map<int, int> parent;                // within the subtree, root absent
  std::map<int, std::vector<int>> children; // sorted
  int branch_count = 0;

  bool contains(int v) const;
  std::vector<int> vertices() const;
  std::vector<int> path_up(int from, int ancestor) const;  // from, ..., ancestor
  std::vector<int> leaves_under(int w) const;
  int depth_below_root(int v) const;
};

// Minimal subtree of the BFS tree whose leaf set is exactly the given
// vertices; they must all lie in one layer.
SteinerSubtree steiner_subtree(const BfsLayering& l, const VertexSet& leaves);

}  // namespace oddcycles
