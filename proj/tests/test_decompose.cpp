#include <algorithm>

#include "doctest.h"
#include "oddcycles/decompose.hpp"
#include "oddcycles/errors.hpp"
#include "oddcycles/generators.hpp"
#include "oddcycles/invariants.hpp"
#include "support/brute.hpp"

using namespace oddcycles;

namespace {

void check_bipartition_postconditions(const Graph& g, const Bipartition& b) {
  long long cut = 0;
  for (int v = 0; v < g.n(); ++v) {
    int across = 0;
    for (int u : g.neighbors(v))
      if (b.side[u] != b.side[v]) ++across;
    CHECK(2 * across >= g.degree(v));
    cut += across;
  }
  CHECK(cut / 2 == b.cut_edges);
  CHECK(2 * b.cut_edges >= g.m());
  auto gb = cut_subgraph(g, b);
  if (g.n() > 0) CHECK(connected_components(gb).size() == 1);
}

}  // namespace

TEST_CASE("local search bipartition postconditions") {
  auto c6 = cycle_graph(6);
  auto b6 = local_search_bipartition(c6);
  CHECK(b6.cut_edges == 6);
  check_bipartition_postconditions(c6, b6);

  auto k33 = complete_bipartite(3, 3);
  auto b33 = local_search_bipartition(k33);
  CHECK(b33.cut_edges == 9);

  auto k4 = complete(4);
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<std::uint8_t> start(4);
    for (int v = 0; v < 4; ++v) start[v] = (mask >> v) & 1;
    auto b = local_search_bipartition_from(k4, start);
    CHECK(b.cut_edges == 4);  // the maximum cut of K_4
    check_bipartition_postconditions(k4, b);
  }

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = gnp(18, 0.35, seed);
    if (connected_components(g).size() != 1) continue;
    check_bipartition_postconditions(g, local_search_bipartition(g));
  }
}

TEST_CASE("odd closure edge") {
  auto tri = cycle_graph(3);
  Bipartition b{{0, 1, 1}, 2};
  CHECK(find_odd_closure_edge(tri, b) == std::pair{1, 2});

  auto c4 = cycle_graph(4);
  auto b4 = local_search_bipartition(c4);
  CHECK_THROWS_AS(find_odd_closure_edge(c4, b4), Error);

  Bipartition bk{{0, 0, 1, 1}, 4};
  CHECK(find_odd_closure_edge(complete(4), bk) == std::pair{0, 1});
}

TEST_CASE("bfs layering shape and the consecutive-layer law") {
  auto l6 = bfs_layering(cycle_graph(6), 0);
  REQUIRE(l6.layers.size() == 4);
  CHECK(l6.layers[0].size() == 1);
  CHECK(l6.layers[1].size() == 2);
  CHECK(l6.layers[2].size() == 2);
  CHECK(l6.layers[3].size() == 1);

  auto star = bfs_layering(complete_bipartite(1, 5), 0);
  REQUIRE(star.layers.size() == 2);
  CHECK(star.layers[1].size() == 5);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = gnp(16, 0.3, seed);
    if (connected_components(g).size() != 1) continue;
    auto b = local_search_bipartition(g);
    auto gb = cut_subgraph(g, b);
    auto lay = bfs_layering(gb, 0);
    for (auto [u, v] : gb.edges()) CHECK(std::abs(lay.depth[u] - lay.depth[v]) == 1);
  }

  Graph two_comp(4);
  two_comp.add_edge(0, 1);
  two_comp.add_edge(2, 3);
  CHECK_THROWS_AS(bfs_layering(two_comp, 0), Error);
}

TEST_CASE("base odd cycle") {
  // Triangle: the cut subgraph is the path 1-0-2 and the closure edge (1,2)
  // sits between two depth-1 vertices.
  auto tri = cycle_graph(3);
  Graph path(3);
  path.add_edge(0, 1);
  path.add_edge(0, 2);
  auto lay = bfs_layering(path, 0);
  auto d = base_odd_cycle(lay, tri, {1, 2});
  CHECK(d.size() == 3);

  // C_5 end to end.
  auto c5 = cycle_graph(5);
  auto b5 = local_search_bipartition(c5);
  auto gb5 = cut_subgraph(c5, b5);
  auto xy = find_odd_closure_edge(c5, b5);
  auto lay5 = bfs_layering(gb5, xy.first);
  auto d5 = base_odd_cycle(lay5, c5, xy);
  CHECK(d5.size() == 5);

  // K_4: any monochromatic edge closes at tree distance 2.
  auto k4 = complete(4);
  auto b4 = local_search_bipartition(k4);
  auto gb4 = cut_subgraph(k4, b4);
  auto xy4 = find_odd_closure_edge(k4, b4);
  auto lay4 = bfs_layering(gb4, xy4.first);
  auto d4 = base_odd_cycle(lay4, k4, xy4);
  CHECK(d4.size() == 3);

  CHECK_THROWS_AS(base_odd_cycle(lay, tri, {0, 1}), Error);  // tree edge
  Graph p4 = brute::path_graph(4);
  Graph host(4);
  host.add_edge(0, 1);
  host.add_edge(1, 2);
  host.add_edge(2, 3);
  host.add_edge(0, 3);
  auto layp = bfs_layering(p4, 0);
  try {
    base_odd_cycle(layp, host, {0, 3});  // depths 0 and 3: odd distance
    FAIL("expected parity error");
  } catch (const Error& e) {
    CHECK(e.code() == errc::closure_parity);
  }
}

TEST_CASE("densest layer pair") {
  auto k33 = complete_bipartite(3, 3);
  auto lay = bfs_layering(k33, 0);
  auto pair = densest_layer_pair(lay, k33);
  CHECK(pair.index == 1);
  CHECK(pair.achieved == Rational::of(12, 5));
  CHECK(pair.layer_graph.n() == 5);
  CHECK(pair.layer_graph.m() == 6);

  auto c6 = cycle_graph(6);
  auto pair6 = densest_layer_pair(bfs_layering(c6, 0), c6);
  CHECK(pair6.achieved >= Rational::whole(1));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = gnp(16, 0.4, seed);
    if (connected_components(g).size() != 1) continue;
    auto b = local_search_bipartition(g);
    auto gb = cut_subgraph(g, b);
    auto l = bfs_layering(gb, 0);
    if (l.layers.size() < 2) continue;
    auto p = densest_layer_pair(l, gb);
    auto half = Rational::of(average_degree(gb).num, 2 * average_degree(gb).den);
    CHECK(p.achieved >= half);
  }

  Graph single(1);
  CHECK_THROWS_AS(densest_layer_pair(bfs_layering(single, 0), single), Error);
}

TEST_CASE("chorded cycle finder") {
  auto got = find_chorded_cycle(complete_bipartite(3, 3), 4);
  CHECK(got.size() >= 4);
  got.check_valid(complete_bipartite(3, 3));

  try {
    find_chorded_cycle(cycle_graph(8), 4);
    FAIL("expected no_chord_found");
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_chord_found);
  }

  auto big = find_chorded_cycle(complete_bipartite(4, 4), 6);
  CHECK(big.size() >= 6);
  CHECK(big.size() % 2 == 0);
  big.check_valid(complete_bipartite(4, 4));

  CHECK_THROWS_AS(find_chorded_cycle(Graph(3), 4), Error);

  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gnp(20, 0.5, seed);
    if (g.m() == 0) continue;
    try {
      auto c = find_chorded_cycle(g, 6);
      c.check_valid(g);
    } catch (const Error& e) {
      CHECK((e.code() == errc::no_chord_found || e.code() == errc::too_sparse));
    }
  }
}

TEST_CASE("steiner subtree") {
  auto lay = bfs_layering(cycle_graph(6), 0);
  auto t = steiner_subtree(lay, VertexSet::of({2, 4}));
  CHECK(t.root == 0);
  CHECK(t.leaf_depth == 2);
  CHECK(t.branch_count == 2);
  CHECK(t.leaves_under(1) == std::vector<int>{2});
  CHECK(t.path_up(2, 0) == std::vector<int>{2, 1, 0});

  auto star = bfs_layering(complete_bipartite(1, 5), 0);
  auto ts = steiner_subtree(star, VertexSet::of({2, 4}));
  CHECK(ts.root == 0);
  CHECK(ts.leaf_depth == 1);

  CHECK_THROWS_AS(steiner_subtree(lay, VertexSet::of({2})), Error);
  try {
    steiner_subtree(lay, VertexSet::of({1, 2}));
    FAIL("expected mixed_layers");
  } catch (const Error& e) {
    CHECK(e.code() == errc::mixed_layers);
  }

  // Every leaf is at the uniform depth and removing the root separates them.
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = gnp(18, 0.35, seed);
    if (connected_components(g).size() != 1) continue;
    auto b = local_search_bipartition(g);
    auto gb = cut_subgraph(g, b);
    auto l = bfs_layering(gb, 0);
    if (l.layers.size() < 3 || l.layers[2].size() < 2) continue;
    auto leaves = VertexSet::of({l.layers[2][0], l.layers[2][1]});
    auto sub = steiner_subtree(l, leaves);
    CHECK(sub.branch_count >= 2);
    for (int leaf : sub.leaves)
      CHECK(static_cast<int>(sub.path_up(leaf, sub.root).size()) == sub.leaf_depth + 1);
  }
}
