#include "oddcycles/decompose.hpp"

#include <algorithm>
#include <queue>

#include "oddcycles/errors.hpp"
#include "oddcycles/invariants.hpp"

namespace oddcycles {

namespace {

std::vector<int> cut_components(const Graph& g, const std::vector<std::uint8_t>& side) {
  std::vector<int> comp(static_cast<size_t>(g.n()), -1);
  int c = 0;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = c;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (side[u] != side[v] && comp[v] < 0) {
          comp[v] = c;
          q.push(v);
        }
    }
    ++c;
  }
  return comp;
}

}  // namespace

Bipartition local_search_bipartition_from(const Graph& g, std::vector<std::uint8_t> side) {
  if (g.n() == 0) throw Error(errc::empty_graph, "bipartition of empty graph");
  if (connected_components(g).size() != 1)
    throw Error(errc::disconnected, "bipartition needs a connected graph");
  if (side.size() != static_cast<size_t>(g.n()))
    throw Error(errc::bad_parameter, "side assignment size mismatch");

  std::vector<int> cut_deg(static_cast<size_t>(g.n()), 0);
  auto recount = [&] {
    long long cut = 0;
    for (int u = 0; u < g.n(); ++u) {
      int c = 0;
      for (int v : g.neighbors(u))
        if (side[u] != side[v]) ++c;
      cut_deg[u] = c;
      cut += c;
    }
    return cut / 2;
  };
  long long cut = recount();

  for (;;) {
    // Flip any vertex with a minority of its edges across the cut.
    bool flipped = true;
    while (flipped) {
      flipped = false;
      for (int v = 0; v < g.n(); ++v) {
        if (2 * cut_deg[v] >= g.degree(v)) continue;
        cut += g.degree(v) - 2 * cut_deg[v];
        side[v] ^= 1;
        cut_deg[v] = g.degree(v) - cut_deg[v];
        for (int u : g.neighbors(v)) cut_deg[u] += (side[u] != side[v]) ? 1 : -1;
        flipped = true;
      }
    }
    // Relabel a whole cut component across the smallest joining edge; every
    // edge between distinct cut components is monochromatic, so the move
    // strictly gains the joining edge.
    auto comp = cut_components(g, side);
    int pick_u = -1, pick_v = -1;
    for (int u = 0; u < g.n() && pick_u < 0; ++u)
      for (int v : g.neighbors(u))
        if (u < v && comp[u] != comp[v]) {
          pick_u = u;
          pick_v = v;
          break;
        }
    if (pick_u < 0) break;  // cut subgraph spans and is connected
    int moved = comp[pick_v];
    for (int w = 0; w < g.n(); ++w)
      if (comp[w] == moved) side[w] ^= 1;
    cut = recount();
  }

  return Bipartition{std::move(side), cut};
}

Bipartition local_search_bipartition(const Graph& g) {
  if (g.n() == 0) throw Error(errc::empty_graph, "bipartition of empty graph");
  std::vector<std::uint8_t> start(static_cast<size_t>(g.n()), 0);
  // BFS parity start: exact on bipartite inputs, a decent cut elsewhere.
  std::vector<int> depth(static_cast<size_t>(g.n()), -1);
  std::queue<int> q;
  depth[0] = 0;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    start[u] = static_cast<std::uint8_t>(depth[u] & 1);
    for (int v : g.neighbors(u))
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        q.push(v);
      }
  }
  return local_search_bipartition_from(g, std::move(start));
}

Graph cut_subgraph(const Graph& g, const Bipartition& b) {
  Graph out(g.n());
  for (auto [u, v] : g.edges())
    if (b.side[u] != b.side[v]) out.add_edge(u, v);
  return out;
}

std::vector<std::pair<int, int>> monochromatic_edges(const Graph& g, const Bipartition& b) {
  std::vector<std::pair<int, int>> out;
  for (auto [u, v] : g.edges())
    if (b.side[u] == b.side[v]) out.emplace_back(u, v);
  return out;
}

std::pair<int, int> find_odd_closure_edge(const Graph& g, const Bipartition& b) {
  for (auto [u, v] : g.edges())
    if (b.side[u] == b.side[v]) return {u, v};
  throw Error(errc::graph_is_bipartite, "no monochromatic edge: graph is bipartite");
}

std::vector<int> BfsLayering::path_to_root(int v) const {
  std::vector<int> path;
  while (v >= 0) {
    path.push_back(v);
    v = parent[v];
  }
  return path;
}

int BfsLayering::lca(int a, int b) const {
  while (depth[a] > depth[b]) a = parent[a];
  while (depth[b] > depth[a]) b = parent[b];
  while (a != b) {
    a = parent[a];
    b = parent[b];
  }
  return a;
}

BfsLayering bfs_layering(const Graph& cut, int root) {
  if (root < 0 || root >= cut.n()) throw Error(errc::out_of_range, "root out of range", {root});
  BfsLayering l;
  l.root = root;
  l.parent.assign(static_cast<size_t>(cut.n()), -1);
  l.depth.assign(static_cast<size_t>(cut.n()), -1);
  std::queue<int> q;
  l.depth[root] = 0;
  q.push(root);
  int reached = 0;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    ++reached;
    if (static_cast<size_t>(l.depth[u]) >= l.layers.size()) l.layers.emplace_back();
    l.layers[l.depth[u]].push_back(u);
    for (int v : cut.neighbors(u))
      if (l.depth[v] < 0) {
        l.depth[v] = l.depth[u] + 1;
        l.parent[v] = u;
        q.push(v);
      }
  }
  if (reached != cut.n())
    throw Error(errc::disconnected, "layering root does not reach every vertex");
  for (auto [u, v] : cut.edges())
    if (l.depth[u] == l.depth[v])
      throw Error(errc::bad_parameter, "layering input is not bipartite");
  for (auto& layer : l.layers) std::sort(layer.begin(), layer.end());
  return l;
}

std::vector<int> base_odd_cycle(const BfsLayering& l, const Graph& host,
                                std::pair<int, int> closure) {
  auto [u, v] = closure;
  if (!host.has_edge(u, v)) throw Error(errc::not_an_edge, "closure pair is not a host edge");
  if (l.parent[u] == v || l.parent[v] == u)
    throw Error(errc::not_an_edge, "closure edge lies in the tree");
  if ((l.depth[u] & 1) != (l.depth[v] & 1))
    throw Error(errc::closure_parity, "closure endpoints at odd tree distance");
  int a = l.lca(u, v);
  // Vertex order u .. a .. v; the closure edge (v, u) closes the cycle. When
  // u is the layering root this is the root-to-v tree path.
  std::vector<int> cyc;
  for (int w = u; w != a; w = l.parent[w]) cyc.push_back(w);
  cyc.push_back(a);
  std::vector<int> tail;
  for (int w = v; w != a; w = l.parent[w]) tail.push_back(w);
  cyc.insert(cyc.end(), tail.rbegin(), tail.rend());
  return cyc;
}

DenseLayerPair densest_layer_pair(const BfsLayering& l, const Graph& cut) {
  if (l.layers.size() < 2) throw Error(errc::single_layer, "layering has a single layer");
  std::vector<long long> between(l.layers.size() - 1, 0);
  for (auto [u, v] : cut.edges()) ++between[std::min(l.depth[u], l.depth[v])];
  int best = -1;
  Rational best_avg{0, 1};
  for (size_t i = 0; i + 1 < l.layers.size(); ++i) {
    auto avg = Rational::of(2 * between[i],
                            static_cast<long long>(l.layers[i].size() + l.layers[i + 1].size()));
    if (best < 0 || best_avg < avg) {
      best = static_cast<int>(i);
      best_avg = avg;
    }
  }
  std::vector<int> members = l.layers[best];
  members.insert(members.end(), l.layers[best + 1].begin(), l.layers[best + 1].end());
  auto ind = induced_subgraph(cut, VertexSet::of(std::move(members)));
  return DenseLayerPair{best, std::move(ind.graph), std::move(ind.to_host), best_avg};
}

int ChordedCycle::position_of(int v) const {
  for (int i = 0; i < size(); ++i)
    if (order[i] == v) return i;
  return -1;
}

void ChordedCycle::check_valid(const Graph& ambient) const {
  int k = size();
  if (k < 4) throw Error(errc::bad_parameter, "chorded cycle below 4 vertices");
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) throw Error(errc::bad_parameter, "repeated cycle vertex");
  for (int i = 0; i < k; ++i)
    if (!ambient.has_edge(order[i], order[(i + 1) % k]))
      throw Error(errc::bad_parameter, "cycle edge missing in ambient graph");
  if (chord_from < 0 || chord_from >= k || chord_to < 0 || chord_to >= k)
    throw Error(errc::bad_parameter, "chord positions out of range");
  int gap = std::abs(chord_from - chord_to);
  if (gap <= 1 || gap == k - 1)
    throw Error(errc::bad_parameter, "chord joins consecutive cycle vertices");
  if (!ambient.has_edge(order[chord_from], order[chord_to]))
    throw Error(errc::bad_parameter, "chord missing in ambient graph");
}

namespace {

struct PathGrower {
  const Graph& g;
  const std::vector<char>& alive;
  std::vector<int> path;
  std::vector<char> on_path;
  long long rotation_budget;

  explicit PathGrower(const Graph& graph, const std::vector<char>& alive_flags, long long budget)
      : g(graph), alive(alive_flags), on_path(static_cast<size_t>(graph.n()), 0),
        rotation_budget(budget) {}

  int free_neighbor(int u) const {
    for (int v : g.neighbors(u))
      if (alive[v] && !on_path[v]) return v;
    return -1;
  }

  void grow(int start) {
    path.assign(1, start);
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[start] = 1;
    for (;;) {
      int u = path.back();
      int ext = free_neighbor(u);
      if (ext >= 0) {
        path.push_back(ext);
        on_path[ext] = 1;
        continue;
      }
      if (!rotate()) break;
    }
  }

  // Posa-style rotation: reversing the tail past an on-path neighbor of the
  // endpoint exposes a new endpoint; taken only when it enables an extension.
  bool rotate() {
    if (rotation_budget <= 0) return false;
    int u = path.back();
    std::vector<int> pos(on_path.size(), -1);
    for (size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
    for (int v : g.neighbors(u)) {
      --rotation_budget;
      if (!alive[v] || pos[v] < 0) continue;
      int i = pos[v];
      if (i + 2 >= static_cast<int>(path.size())) continue;
      int fresh = path[i + 1];
      if (free_neighbor(fresh) < 0) continue;
      std::reverse(path.begin() + i + 1, path.end());
      return true;
    }
    return false;
  }
};

}  // namespace

ChordedCycle find_chorded_cycle(const Graph& g, int min_len) {
  if (g.m() == 0) throw Error(errc::too_sparse, "graph has no edges");
  long long threshold = (g.m() + g.n() - 1) / g.n();  // ceil of half the average degree
  std::vector<char> alive(static_cast<size_t>(g.n()), 1);
  std::vector<int> deg(static_cast<size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v) deg[v] = g.degree(v);
  std::queue<int> peel;
  for (int v = 0; v < g.n(); ++v)
    if (deg[v] < threshold) peel.push(v);
  while (!peel.empty()) {
    int v = peel.front();
    peel.pop();
    if (!alive[v]) continue;
    alive[v] = 0;
    for (int u : g.neighbors(v))
      if (alive[u] && --deg[u] < threshold) peel.push(u);
  }
  int core_min = -1;
  std::vector<int> core;
  for (int v = 0; v < g.n(); ++v)
    if (alive[v]) {
      core.push_back(v);
      if (core_min < 0 || deg[v] < core_min) core_min = deg[v];
    }
  if (core.empty()) throw Error(errc::too_sparse, "degeneracy core is empty");
  if (core_min < 3)
    throw Error(errc::no_chord_found,
                "core minimum degree " + std::to_string(core_min) + " admits no chord",
                {core_min});

  ChordedCycle best;
  PathGrower grower(g, alive, 4LL * g.n() * 8);
  int starts_tried = 0;
  for (int start : core) {
    if (++starts_tried > 48) break;
    grower.grow(start);
    const auto& path = grower.path;
    int u = path.back();
    // All of u's live neighbors lie on the path; close at the farthest one.
    int first = -1;
    std::vector<int> pos(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);
    for (int v : g.neighbors(u))
      if (alive[v] && pos[v] >= 0 && (first < 0 || pos[v] < first)) first = pos[v];
    int len = static_cast<int>(path.size()) - first;
    if (len > best.size()) {
      ChordedCycle cand;
      cand.order.assign(path.begin() + first, path.end());
      int k = cand.size();
      int chord_pos = -1;
      for (int v : g.neighbors(u)) {
        if (!alive[v] || pos[v] < 0) continue;
        int p = pos[v] - first;
        if (p >= 1 && p <= k - 3 && (chord_pos < 0 || p < chord_pos)) chord_pos = p;
      }
      if (chord_pos >= 0) {
        cand.chord_from = chord_pos;
        cand.chord_to = k - 1;
        best = std::move(cand);
      }
    }
    if (best.size() >= std::max(min_len, 4)) break;
  }
  if (best.size() == 0)
    throw Error(errc::no_chord_found, "no cycle with a chord reachable from any endpoint");
  best.check_valid(g);
  return best;
}

bool SteinerSubtree::contains(int v) const {
  return v == root || parent.count(v) > 0;
}

std::vector<int> SteinerSubtree::vertices() const {
  std::vector<int> out;
  out.push_back(root);
  for (const auto& [v, p] : parent) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SteinerSubtree::path_up(int from, int ancestor) const {
  std::vector<int> path;
  int v = from;
  path.push_back(v);
  while (v != ancestor) {
    auto it = parent.find(v);
    if (it == parent.end())
      throw Error(errc::bad_parameter, "no subtree path to requested ancestor", {from, ancestor});
    v = it->second;
    path.push_back(v);
  }
  return path;
}

std::vector<int> SteinerSubtree::leaves_under(int w) const {
  std::vector<int> found;
  std::vector<int> stack{w};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    auto it = children.find(v);
    if (it == children.end() || it->second.empty()) {
      found.push_back(v);
      continue;
    }
    for (int c : it->second) stack.push_back(c);
  }
  std::sort(found.begin(), found.end());
  return found;
}

int SteinerSubtree::depth_below_root(int v) const {
  int d = 0;
  while (v != root) {
    v = parent.at(v);
    ++d;
  }
  return d;
}

SteinerSubtree steiner_subtree(const BfsLayering& l, const VertexSet& leaves) {
  if (leaves.size() < 2)
    throw Error(errc::too_few_leaves, "minimal subtree needs at least two leaves");
  int leaf_layer = l.depth[leaves.ids().front()];
  for (int v : leaves)
    if (l.depth[v] != leaf_layer)
      throw Error(errc::mixed_layers, "leaves span several layers", {v});

  // Lock-step climb: all frontier vertices share a depth, so the first
  // single-vertex frontier is the deepest common ancestor.
  std::vector<int> frontier(leaves.begin(), leaves.end());
  int depth = leaf_layer;
  while (frontier.size() > 1) {
    for (int& v : frontier) v = l.parent[v];
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    --depth;
  }

  SteinerSubtree t;
  t.root = frontier.front();
  t.root_depth = depth;
  t.leaf_depth = leaf_layer - depth;
  t.leaves = leaves;
  for (int leaf : leaves) {
    int v = leaf;
    while (v != t.root && !t.parent.count(v)) {
      t.parent[v] = l.parent[v];
      v = l.parent[v];
    }
  }
  for (const auto& [v, p] : t.parent) t.children[p].push_back(v);
  for (auto& [p, kids] : t.children) std::sort(kids.begin(), kids.end());
  t.branch_count = static_cast<int>(t.children[t.root].size());
  return t;
}

}  // namespace oddcycles
