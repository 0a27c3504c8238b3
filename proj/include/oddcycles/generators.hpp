#pragma once

#include <cstdint>

#include "oddcycles/graph.hpp"

namespace oddcycles {

Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph cycle_graph(int n);

// Two hub vertices joined by three internally disjoint paths of the given
// edge counts. At most one length may be 1 (two would double the hub edge).
Graph theta(int l1, int l2, int l3);

struct BlowupSpec {
  Graph base;
  int part_size = 1;
};

// Each base vertex becomes an independent set of part_size vertices, each
// base edge a complete bipartite block. Preserves chromatic number and odd
// girth; scales minimum degree by part_size.
Graph blowup(const BlowupSpec& spec);

// K_{m,m} sharing exactly one vertex with a cycle of odd length l: connected,
// non-bipartite, has a cut vertex, and every odd cycle has length exactly l.
// Minimum degree is 2 on the cycle part, so the family trades the largest
// possible minimum degree for having its unique odd cycle length.
Graph cut_vertex_odd_family(int m, int l);

// Seeded G(n,p); identical (n, p, seed) triples give identical edge sets.
Graph gnp(int n, double p, std::uint64_t seed);

}  // namespace oddcycles
