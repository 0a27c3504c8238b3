#pragma once

#include <optional>
#include <vector>

#include "oddcycles/graph.hpp"

namespace oddcycles {

// Exactly one witness form: a two-sided assignment, or a simple odd cycle.
struct BipartiteWitness {
  std::vector<int> sides;      // vertex -> 0/1, filled when bipartite
  std::vector<int> odd_cycle;  // vertex sequence, filled when not
  bool bipartite() const { return odd_cycle.empty(); }
};

// Requires a connected input (throws disconnected); per-component checks are
// a caller-level loop. The odd-cycle witness is a shortest odd cycle.
BipartiteWitness bipartite_check(const Graph& g);

// Proper 2-coloring across all components, or nullopt when some component
// holds an odd cycle.
std::optional<std::vector<int>> two_coloring(const Graph& g);

struct TwoConnectivity {
  enum class Reason { yes, too_small, disconnected, cut_vertex };
  bool two_connected = false;
  Reason reason = Reason::yes;
  int cut_vertex = -1;  // smallest articulation vertex when reason == cut_vertex
};
TwoConnectivity is_two_connected(const Graph& g);

// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Shortest odd cycle length; nullopt for bipartite graphs.
std::optional<int> odd_girth(const Graph& g);

// Vertex sequence of a shortest odd cycle; empty when bipartite.
std::vector<int> shortest_odd_cycle(const Graph& g);

std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace oddcycles
