#include "oddcycles/generators.hpp"

#include <random>

#include "oddcycles/errors.hpp"

namespace oddcycles {

Graph complete(int n) {
  if (n < 1) throw Error(errc::bad_parameter, "complete graph needs n >= 1");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw Error(errc::bad_parameter, "complete bipartite needs a,b >= 1");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(errc::bad_parameter, "cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph theta(int l1, int l2, int l3) {
  int ls[3] = {l1, l2, l3};
  int ones = 0;
  for (int l : ls) {
    if (l < 1) throw Error(errc::bad_parameter, "theta path length below 1");
    if (l == 1) ++ones;
  }
  if (ones > 1) throw Error(errc::bad_parameter, "theta allows at most one length-1 path");
  int n = 2 + (l1 - 1) + (l2 - 1) + (l3 - 1);
  Graph g(n);
  int next = 2;
  for (int l : ls) {
    int prev = 0;
    for (int step = 1; step < l; ++step) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, 1);
  }
  return g;
}

Graph blowup(const BlowupSpec& spec) {
  int t = spec.part_size;
  if (t < 1) throw Error(errc::bad_parameter, "blow-up part size below 1");
  const Graph& base = spec.base;
  Graph g(base.n() * t);
  for (auto [u, v] : base.edges())
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) g.add_edge(u * t + i, v * t + j);
  return g;
}

Graph cut_vertex_odd_family(int m, int l) {
  if (m < 2) throw Error(errc::bad_parameter, "core side below 2");
  if (l < 3 || l % 2 == 0) throw Error(errc::bad_parameter, "cycle length must be odd and >= 3");
  // Vertices 0..2m-1 form K_{m,m}; vertex 0 is shared with the cycle
  // 0, 2m, 2m+1, ..., 2m+l-2, 0.
  int n = 2 * m + l - 1;
  Graph g(n);
  for (int u = 0; u < m; ++u)
    for (int v = m; v < 2 * m; ++v) g.add_edge(u, v);
  int prev = 0;
  for (int i = 0; i < l - 1; ++i) {
    g.add_edge(prev, 2 * m + i);
    prev = 2 * m + i;
  }
  g.add_edge(prev, 0);
  return g;
}

Graph gnp(int n, double p, std::uint64_t seed) {
  if (n < 0) throw Error(errc::bad_parameter, "negative n");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(errc::bad_parameter, "p outside [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // Top 53 bits as a uniform double in [0,1); avoids the
      // implementation-defined distributions for cross-platform determinism.
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < p) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace oddcycles
