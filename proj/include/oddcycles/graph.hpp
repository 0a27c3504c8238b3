#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oddcycles/rational.hpp"

namespace oddcycles {

// Simple undirected graph on dense ids 0..n-1. Adjacency lists stay sorted;
// a value is treated as immutable once construction finishes, so concurrent
// readers are safe.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int n() const { return static_cast<int>(adj_.size()); }
  long long m() const { return m_; }
  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

  // Full invariant scan: symmetry, sortedness, no loops or duplicates,
  // edge count. Throws bad_parameter on violation.
  void check_valid() const;

 private:
  void require_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  long long m_ = 0;
};

// Sorted duplicate-free vertex ids with binary-search membership.
class VertexSet {
 public:
  VertexSet() = default;
  static VertexSet of(std::vector<int> ids);

  bool contains(int v) const;
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::vector<int>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

 private:
  std::vector<int> ids_;
};

Rational average_degree(const Graph& g);

struct Induced {
  Graph graph;
  std::vector<int> to_host;  // new id -> host id
};
Induced induced_subgraph(const Graph& g, const VertexSet& s);

struct ParseOptions {
  bool dedup = false;
};

struct ParsedGraph {
  Graph graph;
  std::vector<long long> source_ids;  // graph id -> id in the input text
};

ParsedGraph parse_edge_list(std::string_view text, const ParseOptions& opts = {});
ParsedGraph parse_dimacs(std::string_view text, const ParseOptions& opts = {});
// Detects DIMACS ("p edge ..." header) vs plain edge list.
ParsedGraph parse_graph(std::string_view text, const ParseOptions& opts = {});

// "# n=N" header followed by one "u v" line per edge, sorted. Round-trips
// through parse_edge_list including isolated vertices.
std::string emit_edge_list(const Graph& g);

}  // namespace oddcycles
