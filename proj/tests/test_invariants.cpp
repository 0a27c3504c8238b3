#include <algorithm>

#include "doctest.h"
#include "oddcycles/errors.hpp"
#include "oddcycles/generators.hpp"
#include "oddcycles/invariants.hpp"
#include "oddcycles/oracle.hpp"
#include "support/brute.hpp"

using namespace oddcycles;

namespace {

void check_odd_cycle_witness(const Graph& g, const std::vector<int>& cyc) {
  REQUIRE(cyc.size() >= 3);
  CHECK(cyc.size() % 2 == 1);
  auto sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  for (size_t i = 0; i < cyc.size(); ++i)
    CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
}

}  // namespace

TEST_CASE("bipartite_check produces verifiable witnesses") {
  auto even = bipartite_check(cycle_graph(4));
  REQUIRE(even.bipartite());
  for (auto [u, v] : cycle_graph(4).edges()) CHECK(even.sides[u] != even.sides[v]);

  auto odd = bipartite_check(cycle_graph(5));
  REQUIRE(!odd.bipartite());
  CHECK(odd.odd_cycle.size() == 5);
  check_odd_cycle_witness(cycle_graph(5), odd.odd_cycle);

  auto pet = brute::petersen();
  auto w = bipartite_check(pet);
  REQUIRE(!w.bipartite());
  CHECK(w.odd_cycle.size() == 5);  // shortest odd cycle of the Petersen graph
  check_odd_cycle_witness(pet, w.odd_cycle);

  Graph two(2);
  CHECK_THROWS_AS(bipartite_check(two), Error);
}

TEST_CASE("two connectivity with certificates") {
  auto path3 = is_two_connected(brute::path_graph(3));
  CHECK(!path3.two_connected);
  CHECK(path3.cut_vertex == 1);

  CHECK(is_two_connected(cycle_graph(4)).two_connected);

  auto bow = is_two_connected(brute::bowtie());
  CHECK(!bow.two_connected);
  CHECK(bow.cut_vertex == 0);

  CHECK(!is_two_connected(Graph(2)).two_connected);
  CHECK(is_two_connected(Graph(2)).reason == TwoConnectivity::Reason::too_small);

  // A returned cut vertex really disconnects the graph.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = gnp(12, 0.25, seed);
    auto r = is_two_connected(g);
    if (r.reason != TwoConnectivity::Reason::cut_vertex) continue;
    std::vector<int> rest;
    for (int v = 0; v < g.n(); ++v)
      if (v != r.cut_vertex) rest.push_back(v);
    auto sub = induced_subgraph(g, VertexSet::of(rest)).graph;
    CHECK(connected_components(sub).size() > 1);
  }
}

TEST_CASE("girth") {
  CHECK(girth(complete(4)) == 3);
  CHECK(!girth(brute::path_graph(6)).has_value());
  CHECK(girth(brute::petersen()) == 5);
  CHECK(girth(cycle_graph(9)) == 9);
  CHECK(girth(complete_bipartite(3, 3)) == 4);
}

TEST_CASE("odd girth") {
  CHECK(!odd_girth(complete_bipartite(3, 3)).has_value());
  CHECK(odd_girth(complete(4)) == 3);
  auto blown = blowup(BlowupSpec{cycle_graph(7), 2});
  CHECK(odd_girth(blown) == 7);
  {
    // cross-check against exhaustive enumeration
    auto sp = enumerate_cycles(blown);
    REQUIRE(!sp.truncated);
    int min_odd = 0;
    for (const auto& [len, cnt] : sp.lengths)
      if (len % 2 == 1 && (min_odd == 0 || len < min_odd)) min_odd = len;
    CHECK(min_odd == 7);
  }
  CHECK(odd_girth(cycle_graph(9)) == 9);
}

TEST_CASE("girth and odd girth agree where they must") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    auto g = gnp(14, 0.3, seed);
    auto gi = girth(g);
    auto og = odd_girth(g);
    if (gi && og) {
      CHECK(*gi <= *og);
      if (*gi % 2 == 1) CHECK(*gi == *og);
    }
    auto cyc = shortest_odd_cycle(g);
    if (!cyc.empty()) {
      CHECK(static_cast<int>(cyc.size()) == *og);
      check_odd_cycle_witness(g, cyc);
    } else {
      CHECK(!og.has_value());
    }
  }
}
