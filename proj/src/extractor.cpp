#include "oddcycles/extractor.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <queue>

#include "oddcycles/errors.hpp"
#include "oddcycles/invariants.hpp"

namespace oddcycles {

namespace {

std::vector<char> flags_of(int n, const std::vector<int>& verts) {
  std::vector<char> f(static_cast<size_t>(n), 0);
  for (int v : verts) f[v] = 1;
  return f;
}

std::vector<int> reversed(std::vector<int> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

// Concatenates segments that meet at shared junction vertices; drops the
// final echo when the walk closes.
std::vector<int> splice(const std::vector<const std::vector<int>*>& parts) {
  std::vector<int> out;
  for (const auto* part : parts) {
    if (part->empty()) continue;
    if (out.empty()) {
      out = *part;
    } else {
      if (out.back() != part->front()) throw std::logic_error("splice junction mismatch");
      out.insert(out.end(), part->begin() + 1, part->end());
    }
  }
  if (out.size() > 1 && out.front() == out.back()) out.pop_back();
  return out;
}

bool simple_host_cycle(const Graph& g, const std::vector<int>& verts) {
  if (verts.size() < 3) return false;
  std::vector<int> sorted = verts;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return false;
  for (size_t i = 0; i < verts.size(); ++i) {
    int u = verts[i];
    int v = verts[(i + 1) % verts.size()];
    if (u < 0 || u >= g.n() || !g.has_edge(u, v)) return false;
  }
  return true;
}

// Arc of the cyclic order from `from` to `to` whose edge count has the given
// parity; on an odd cycle the two arcs always have opposite parities.
std::vector<int> cycle_arc(const std::vector<int>& cyc, int from, int to, int parity) {
  int n = static_cast<int>(cyc.size());
  int pf = -1, pt = -1;
  for (int i = 0; i < n; ++i) {
    if (cyc[i] == from) pf = i;
    if (cyc[i] == to) pt = i;
  }
  if (pf < 0 || pt < 0 || pf == pt) throw std::logic_error("arc endpoints not on the cycle");
  int fwd = ((pt - pf) % n + n) % n;
  std::vector<int> out;
  if (fwd % 2 == (parity & 1)) {
    for (int i = 0; i <= fwd; ++i) out.push_back(cyc[(pf + i) % n]);
  } else {
    int bwd = n - fwd;
    if (bwd % 2 != (parity & 1)) throw std::logic_error("no arc of requested parity");
    for (int i = 0; i <= bwd; ++i) out.push_back(cyc[((pf - i) % n + n) % n]);
  }
  return out;
}

void check_connector(const Graph& g, const PathRecord& path, int expect_front,
                     const std::vector<char>& hub, const std::vector<char>& in_d) {
  const auto& v = path.vertices;
  if (v.empty() || v.front() != expect_front)
    throw Error(errc::case_hypothesis_violated, "connector does not start at its terminal");
  for (size_t i = 0; i + 1 < v.size(); ++i)
    if (!g.has_edge(v[i], v[i + 1]))
      throw Error(errc::case_hypothesis_violated, "connector edge missing in the host graph");
  if (!in_d[v.back()])
    throw Error(errc::case_hypothesis_violated, "connector does not end on the base cycle");
  for (size_t i = 1; i + 1 < v.size(); ++i)
    if (hub[v[i]] || in_d[v[i]])
      throw Error(errc::case_hypothesis_violated, "connector interior touches hub or base cycle");
}

long long ipow_sat(long long base, long long exp) {
  constexpr long long kCap = 1LL << 40;
  long long r = 1;
  for (long long i = 0; i < exp; ++i) {
    if (r > kCap / std::max(base, 1LL)) return kCap;
    r *= base;
  }
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// two disjoint (hub, base-cycle)-paths via unit vertex capacities

namespace {

struct FlowNet {
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  int add_node() {
    out.emplace_back();
    return static_cast<int>(out.size()) - 1;
  }
  void add_arc(int u, int v, int cap) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0});
  }
  bool augment(int s, int t) {
    std::vector<int> via(out.size(), -1);
    std::queue<int> q;
    q.push(s);
    via[s] = -2;
    while (!q.empty() && via[t] == -1) {
      int u = q.front();
      q.pop();
      for (int id : out[u]) {
        if (arcs[id].cap <= 0) continue;
        int v = arcs[id].to;
        if (via[v] != -1) continue;
        via[v] = id;
        q.push(v);
      }
    }
    if (via[t] == -1) return false;
    for (int v = t; v != s;) {
      int id = via[v];
      --arcs[id].cap;
      ++arcs[id ^ 1].cap;
      v = arcs[id ^ 1].to;
    }
    return true;
  }
};

// Multi-source BFS path whose interior avoids `blocked`; stops at the first
// target. Sources may be blocked themselves, they are endpoints.
std::vector<int> escape_path(const Graph& g, const std::vector<int>& sources,
                             const std::vector<char>& targets, const std::vector<char>& blocked) {
  std::vector<int> pred(static_cast<size_t>(g.n()), -1);
  std::vector<char> seen(static_cast<size_t>(g.n()), 0);
  std::queue<int> q;
  for (int s : sources) {
    if (!seen[s]) {
      seen[s] = 1;
      q.push(s);
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u)) {
      if (seen[v]) continue;
      seen[v] = 1;
      pred[v] = u;
      if (targets[v]) {
        std::vector<int> path{v};
        for (int w = u; w != -1; w = pred[w]) path.push_back(w);
        std::reverse(path.begin(), path.end());
        return path;
      }
      if (!blocked[v]) q.push(v);
    }
  }
  return {};
}

}  // namespace

ConnectorPaths disjoint_connector_paths(const Graph& g, const VertexSet& hub, int root,
                                        const std::vector<int>& d_cycle) {
  if (!hub.contains(root))
    throw Error(errc::case_hypothesis_violated, "root must belong to the hub");
  if (d_cycle.size() < 3) throw Error(errc::case_hypothesis_violated, "base cycle too small");
  auto in_d = flags_of(g.n(), d_cycle);
  std::vector<char> in_hub(static_cast<size_t>(g.n()), 0);
  for (int v : hub) in_hub[v] = 1;
  for (int v : d_cycle)
    if (in_hub[v] && v != root)
      throw Error(errc::case_hypothesis_violated, "base cycle meets the hub away from the root",
                  {v});

  std::vector<char> blocked(static_cast<size_t>(g.n()), 0);
  for (int v = 0; v < g.n(); ++v) blocked[v] = in_hub[v] || in_d[v];

  if (in_d[root]) {
    // The root lies on the base cycle; its connector degenerates to a vertex.
    std::vector<int> sources;
    for (int v : hub)
      if (v != root) sources.push_back(v);
    std::vector<char> targets = in_d;
    targets[root] = 0;
    auto q = escape_path(g, sources, targets, blocked);
    if (q.empty())
      throw Error(errc::no_two_disjoint_paths,
                  "no hub-to-base path avoiding the root: inconsistent with 2-connectivity");
    ConnectorPaths out;
    out.from_root = PathRecord{{root}};
    out.from_anchor = PathRecord{std::move(q)};
    out.anchor = out.from_anchor.vertices.front();
    return out;
  }

  FlowNet net;
  int S = net.add_node();
  int T = net.add_node();
  std::vector<int> node_in(static_cast<size_t>(g.n()), -1);
  std::vector<int> node_out(static_cast<size_t>(g.n()), -1);
  for (int v = 0; v < g.n(); ++v) {
    if (in_hub[v]) {
      node_in[v] = node_out[v] = net.add_node();
      net.add_arc(S, node_in[v], 1);
    } else if (in_d[v]) {
      node_in[v] = node_out[v] = net.add_node();
      net.add_arc(node_in[v], T, 1);
    } else {
      node_in[v] = net.add_node();
      node_out[v] = net.add_node();
      net.add_arc(node_in[v], node_out[v], 1);
    }
  }
  for (auto [u, v] : g.edges()) {
    bool hu = in_hub[u], hv = in_hub[v], du = in_d[u], dv = in_d[v];
    if ((hu && hv) || (du && dv)) continue;
    if (hu) {
      net.add_arc(node_out[u], node_in[v], 1);
    } else if (hv) {
      net.add_arc(node_out[v], node_in[u], 1);
    } else if (du) {
      net.add_arc(node_out[v], node_in[u], 1);  // transit runs into the base only
    } else if (dv) {
      net.add_arc(node_out[u], node_in[v], 1);
    } else {
      net.add_arc(node_out[u], node_in[v], 1);
      net.add_arc(node_out[v], node_in[u], 1);
    }
  }
  int flow = 0;
  while (flow < 2 && net.augment(S, T)) ++flow;
  if (flow < 2)
    throw Error(errc::no_two_disjoint_paths,
                "fewer than two disjoint hub-to-base paths: inconsistent with 2-connectivity");

  std::vector<int> vertex_of(net.out.size(), -1);
  for (int v = 0; v < g.n(); ++v) vertex_of[node_in[v]] = v;
  std::vector<std::vector<int>> paths;
  for (int id : net.out[S]) {
    if ((id & 1) || net.arcs[id].cap != 0) continue;  // skip unsaturated source arcs
    std::vector<int> path;
    int node = net.arcs[id].to;
    while (node != T) {
      if (vertex_of[node] >= 0) path.push_back(vertex_of[node]);
      int next = -1;
      for (int aid : net.out[node]) {
        if (aid & 1) continue;
        if (net.arcs[aid].cap == 0 && net.arcs[aid ^ 1].cap > 0) {
          next = aid;
          break;
        }
      }
      if (next < 0) throw std::logic_error("flow decomposition lost its way");
      net.arcs[next].cap = 1;  // consume the unit so walks cannot re-enter
      net.arcs[next ^ 1].cap = 0;
      node = net.arcs[next].to;
    }
    paths.push_back(std::move(path));
  }
  if (paths.size() != 2) throw std::logic_error("expected exactly two flow paths");

  ConnectorPaths out;
  if (paths[0].front() == root || paths[1].front() == root) {
    if (paths[1].front() == root) std::swap(paths[0], paths[1]);
    out.from_root = PathRecord{std::move(paths[0])};
    out.from_anchor = PathRecord{std::move(paths[1])};
  } else {
    // Escape from the root toward the base cycle and hand over to a flow
    // path at the first meeting vertex.
    std::vector<char> on_flow(static_cast<size_t>(g.n()), 0);
    for (const auto& p : paths)
      for (size_t i = 1; i < p.size(); ++i) on_flow[p[i]] = 1;  // hub sources stay off limits
    std::vector<char> targets(static_cast<size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v) targets[v] = in_d[v] || on_flow[v];
    auto z = escape_path(g, {root}, targets, blocked);
    if (z.empty())
      throw Error(errc::rerouting_failed, "no escape path from the root to the base cycle");
    int meet = z.back();
    out.rerouted = true;
    if (in_d[meet] && !on_flow[meet]) {
      out.from_root = PathRecord{std::move(z)};
      out.from_anchor = PathRecord{std::move(paths[0].back() != meet ? paths[0] : paths[1])};
    } else {
      int which = std::find(paths[0].begin(), paths[0].end(), meet) != paths[0].end() ? 0 : 1;
      auto& donor = paths[which];
      auto it = std::find(donor.begin(), donor.end(), meet);
      z.insert(z.end(), it + 1, donor.end());
      out.from_root = PathRecord{std::move(z)};
      out.from_anchor = PathRecord{std::move(paths[1 - which])};
    }
  }
  out.anchor = out.from_anchor.vertices.front();

  check_connector(g, out.from_root, root, in_hub, in_d);
  check_connector(g, out.from_anchor, out.anchor, in_hub, in_d);
  if (out.from_root.vertices.back() == out.from_anchor.vertices.back())
    throw std::logic_error("connector endpoints coincide on the base cycle");
  {
    auto a = out.from_root.vertices;
    auto b = out.from_anchor.vertices;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<int> inter;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
    if (!inter.empty()) throw std::logic_error("connector paths intersect");
  }
  return out;
}

// ---------------------------------------------------------------------------
// case assembly

namespace {

void place_cycles(const Graph& g, CaseCycles& out, const LengthAtlas& atlas, int lo, int hi,
                  const std::function<std::vector<int>(const PathRecord&)>& assemble) {
  for (int len = lo; len <= hi; len += 2) {
    if (!atlas.has(len)) continue;
    for (const auto& cand : atlas.at(len)) {
      auto cyc = assemble(cand);
      if (cyc.empty() || !simple_host_cycle(g, cyc)) continue;  // next candidate of this length
      out.by_length[static_cast<int>(cyc.size())] = std::move(cyc);
      break;
    }
  }
}

std::vector<int> hub_vertices(const ChordedCycle& c, const SteinerSubtree& t) {
  std::vector<int> hub = c.order;
  for (int v : t.vertices()) hub.push_back(v);
  std::sort(hub.begin(), hub.end());
  hub.erase(std::unique(hub.begin(), hub.end()), hub.end());
  return hub;
}

}  // namespace

CaseCycles case1_cycles(const Graph& g, const ChordedCycle& c, const SteinerSubtree& t,
                        const std::vector<int>& d_cycle, const PathRecord& from_root,
                        const PathRecord& from_anchor, int anchor, long long count) {
  if (count < 1) throw Error(errc::bad_parameter, "cycle count must be positive");
  int z = t.root;
  if (anchor == z) throw Error(errc::case_hypothesis_violated, "anchor equals the subtree root");
  auto in_hub = flags_of(g.n(), hub_vertices(c, t));
  auto in_d = flags_of(g.n(), d_cycle);
  if (!in_hub[anchor])
    throw Error(errc::case_hypothesis_violated, "anchor outside the hub", {anchor});
  for (int v : d_cycle)
    if (in_hub[v] && v != z)
      throw Error(errc::case_hypothesis_violated, "base cycle meets the hub away from the root");
  if (d_cycle.size() % 2 == 0) throw std::logic_error("base cycle must be odd");
  check_connector(g, from_root, z, in_hub, in_d);
  check_connector(g, from_anchor, anchor, in_hub, in_d);
  int p = from_root.vertices.back();
  int q = from_anchor.vertices.back();
  if (p == q) throw Error(errc::case_hypothesis_violated, "connector endpoints coincide");

  CaseCycles out;
  out.anchor = anchor;
  const auto rev_anchor = reversed(from_anchor.vertices);  // q .. anchor

  if (t.contains(anchor)) {
    out.case_id = "1a";
    auto a_leaves = t.leaves_under(anchor);
    std::vector<int> bstar;
    for (int v : t.leaves)
      if (!std::binary_search(a_leaves.begin(), a_leaves.end(), v)) bstar.push_back(v);
    if (bstar.empty())
      throw Error(errc::case_hypothesis_violated, "anchor subtree swallows every leaf");
    std::vector<int> b_side;
    for (int v : c.order)
      if (!std::binary_search(a_leaves.begin(), a_leaves.end(), v)) b_side.push_back(v);
    auto atlas = even_ab_paths_up_to(c, VertexSet::of(a_leaves), VertexSet::of(b_side),
                                     static_cast<int>(2 * count));
    int lead_len = t.leaf_depth - t.depth_below_root(anchor);
    long long fixed = lead_len + from_anchor.length() + from_root.length() + t.leaf_depth;
    auto arc = cycle_arc(d_cycle, p, q, static_cast<int>((1 + fixed) & 1));
    const auto a_flags = flags_of(g.n(), a_leaves);
    const auto bstar_flags = flags_of(g.n(), bstar);
    place_cycles(g, out, atlas, 2, static_cast<int>(2 * count),
                 [&](const PathRecord& cand) -> std::vector<int> {
                   std::vector<int> path = cand.vertices;
                   if (!a_flags[path.front()]) std::reverse(path.begin(), path.end());
                   if (!a_flags[path.front()] || !bstar_flags[path.back()]) return {};
                   auto up_b = t.path_up(path.back(), z);                    // b .. z
                   auto down_a = reversed(t.path_up(path.front(), anchor));  // anchor .. a
                   return splice({&path, &up_b, &from_root.vertices, &arc, &rev_anchor, &down_a});
                 });
  } else {
    out.case_id = "1b";
    if (t.leaves.contains(anchor))
      throw std::logic_error("cycle-side anchor cannot be a subtree leaf");
    auto atlas = odd_anchor_paths_up_to(c, anchor, static_cast<int>(2 * count + 1));
    int arc_parity =
        static_cast<int>((t.leaf_depth + from_root.length() + from_anchor.length()) & 1);
    auto arc = cycle_arc(d_cycle, p, q, arc_parity);
    place_cycles(g, out, atlas, 1, static_cast<int>(2 * count + 1),
                 [&](const PathRecord& cand) -> std::vector<int> {
                   if (!t.leaves.contains(cand.vertices.back())) return {};
                   auto climb = t.path_up(cand.vertices.back(), z);  // u .. z
                   return splice({&cand.vertices, &climb, &from_root.vertices, &arc, &rev_anchor});
                 });
  }
  if (out.by_length.empty())
    throw Error(errc::assembly_overlap, "no atlas path produced a valid cycle");
  return out;
}

CaseCycles case2_cycles(const Graph& g, const ChordedCycle& c, const SteinerSubtree& t,
                        const std::vector<int>& d_cycle, const BfsLayering& layering,
                        long long count) {
  if (count < 1) throw Error(errc::bad_parameter, "cycle count must be positive");
  int z = t.root;
  auto in_hub = flags_of(g.n(), hub_vertices(c, t));
  if (d_cycle.size() < 3 || d_cycle.size() % 2 == 0)
    throw Error(errc::case_hypothesis_violated, "base cycle must be odd");
  if (d_cycle.front() != layering.root)
    throw Error(errc::case_hypothesis_violated, "base cycle must start at the layering root");
  for (size_t i = 1; i < d_cycle.size(); ++i)
    if (layering.parent[d_cycle[i]] != d_cycle[i - 1])
      throw Error(errc::case_hypothesis_violated, "base cycle is not a root chain");

  // Deepest hub vertex on the chain = smallest tree distance to the far end.
  int anchor = -1, anchor_pos = -1;
  for (int i = static_cast<int>(d_cycle.size()) - 1; i >= 1; --i) {
    int v = d_cycle[i];
    if (in_hub[v] && v != z) {
      anchor = v;
      anchor_pos = i;
      break;
    }
  }
  if (anchor < 0)
    throw Error(errc::case_hypothesis_violated, "base cycle does not meet the hub");

  // Connector: anchor, down the chain to its end, across the closure edge to
  // the chain root, then down the tree to the subtree root. When the subtree
  // root sits on the anchor's chain this is exactly the base cycle minus the
  // anchor-to-root tree path; otherwise it is the reroute, flagged below.
  std::vector<int> back(d_cycle.begin() + anchor_pos, d_cycle.end());
  {
    auto root_chain = reversed(layering.path_to_root(z));  // layering.root .. z
    back.insert(back.end(), root_chain.begin(), root_chain.end());
  }
  if (!g.has_edge(d_cycle.back(), d_cycle.front()))
    throw Error(errc::case_hypothesis_violated, "closure edge missing from the host graph");
  {
    std::vector<int> sorted = back;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        throw Error(errc::case_hypothesis_violated, "connector revisits a vertex");
    for (size_t i = 1; i + 1 < back.size(); ++i)
      if (in_hub[back[i]])
        throw Error(errc::case_hypothesis_violated, "connector interior touches the hub");
  }
  bool on_paper_chain = false;
  for (int v = anchor; v >= 0; v = layering.parent[v])
    if (v == z) {
      on_paper_chain = true;
      break;
    }

  CaseCycles out;
  out.anchor = anchor;
  out.back_path = back;
  out.rerouted = !on_paper_chain;
  int back_len = static_cast<int>(back.size()) - 1;
  const auto back_rev = reversed(back);  // z .. anchor

  if (t.contains(anchor)) {
    out.case_id = "2a";
    int d_anchor = t.depth_below_root(anchor);
    if (((back_len ^ (1 + d_anchor)) & 1) != 0)
      throw std::logic_error("case 2a connector parity off");
    auto a_leaves = t.leaves_under(anchor);
    std::vector<int> bstar;
    for (int v : t.leaves)
      if (!std::binary_search(a_leaves.begin(), a_leaves.end(), v)) bstar.push_back(v);
    if (bstar.empty())
      throw Error(errc::case_hypothesis_violated, "anchor subtree swallows every leaf");
    std::vector<int> b_side;
    for (int v : c.order)
      if (!std::binary_search(a_leaves.begin(), a_leaves.end(), v)) b_side.push_back(v);
    auto atlas = even_ab_paths_up_to(c, VertexSet::of(a_leaves), VertexSet::of(b_side),
                                     static_cast<int>(2 * count));
    const auto a_flags = flags_of(g.n(), a_leaves);
    const auto bstar_flags = flags_of(g.n(), bstar);
    place_cycles(g, out, atlas, 2, static_cast<int>(2 * count),
                 [&](const PathRecord& cand) -> std::vector<int> {
                   std::vector<int> path = cand.vertices;
                   if (!a_flags[path.front()]) std::reverse(path.begin(), path.end());
                   if (!a_flags[path.front()] || !bstar_flags[path.back()]) return {};
                   auto up_b = t.path_up(path.back(), z);                    // b .. z
                   auto down_a = reversed(t.path_up(path.front(), anchor));  // anchor .. a
                   return splice({&path, &up_b, &back_rev, &down_a});
                 });
  } else {
    out.case_id = "2b";
    if (c.position_of(anchor) < 0)
      throw Error(errc::case_hypothesis_violated, "anchor neither subtree nor cycle vertex");
    if (((back_len ^ t.leaf_depth) & 1) != 0)
      throw std::logic_error("case 2b connector parity off");
    auto atlas = odd_anchor_paths_up_to(c, anchor, static_cast<int>(2 * count + 1));
    place_cycles(g, out, atlas, 1, static_cast<int>(2 * count + 1),
                 [&](const PathRecord& cand) -> std::vector<int> {
                   if (!t.leaves.contains(cand.vertices.back())) return {};
                   auto climb = t.path_up(cand.vertices.back(), z);  // u .. z
                   return splice({&cand.vertices, &climb, &back_rev});
                 });
  }
  if (out.by_length.empty())
    throw Error(errc::assembly_overlap, "no atlas path produced a valid cycle");
  return out;
}

// ---------------------------------------------------------------------------
// end-to-end pipeline

namespace {

struct PipelineOut {
  ExtractionResult res;
  long long t_capped = 0;
};

PipelineOut run_pipeline(const Graph& g, const ExtractionConfig& cfg, const Graph& gb, int x,
                         int y) {
  auto layering = bfs_layering(gb, x);
  auto d_cycle = base_odd_cycle(layering, g, {x, y});
  auto pair = densest_layer_pair(layering, gb);
  auto layer_girth = girth(pair.layer_graph);
  if (!layer_girth) throw Error(errc::no_chord_found, "layer pair graph is acyclic");
  long long t_target = ipow_sat(cfg.k, (*layer_girth - 1) / 2);
  long long min_len = 2 * (std::min(t_target, 1LL << 29) + 1);

  auto local = find_chorded_cycle(pair.layer_graph, static_cast<int>(min_len));
  ChordedCycle chorded;
  chorded.order.reserve(local.order.size());
  for (int v : local.order) chorded.order.push_back(pair.to_host[v]);
  chorded.chord_from = local.chord_from;
  chorded.chord_to = local.chord_to;
  chorded.check_valid(g);

  long long t_capped = std::min<long long>(t_target, (chorded.size() - 2) / 2);
  std::vector<int> lows;
  for (int v : chorded.order)
    if (layering.depth[v] == pair.index) lows.push_back(v);
  if (static_cast<int>(lows.size()) * 2 != chorded.size())
    throw std::logic_error("chorded cycle does not alternate between the two layers");
  auto subtree = steiner_subtree(layering, VertexSet::of(std::move(lows)));
  auto hub = VertexSet::of(hub_vertices(chorded, subtree));

  bool meets_hub = false;
  for (int v : d_cycle)
    if (hub.contains(v) && v != subtree.root) meets_hub = true;

  CaseCycles cc;
  CaseTrace trace;
  if (!meets_hub) {
    auto conn = disjoint_connector_paths(g, hub, subtree.root, d_cycle);
    cc = case1_cycles(g, chorded, subtree, d_cycle, conn.from_root, conn.from_anchor, conn.anchor,
                      t_capped);
    trace.connector_from_root = conn.from_root.vertices;
    trace.connector_from_anchor = conn.from_anchor.vertices;
    trace.rerouted = conn.rerouted;
  } else {
    cc = case2_cycles(g, chorded, subtree, d_cycle, layering, t_capped);
    trace.back_path = cc.back_path;
    trace.rerouted = cc.rerouted;
  }

  // Longest consecutive odd run among the assembled lengths.
  std::vector<int> lens;
  for (const auto& [len, cyc] : cc.by_length) lens.push_back(len);
  int best_start = -1, best_run = 0;
  for (size_t i = 0; i < lens.size(); ++i) {
    if (i > 0 && lens[i] == lens[i - 1] + 2) continue;
    int r = 1;
    while (std::binary_search(lens.begin(), lens.end(), lens[i] + 2 * r)) ++r;
    if (r > best_run) {
      best_run = r;
      best_start = lens[i];
    }
  }

  ExtractionResult res;
  res.t_target = t_target;
  res.t_achieved = best_run;
  for (int r = 0; r < best_run; ++r) {
    int len = best_start + 2 * r;
    res.lengths.push_back(len);
    res.cycles.push_back(cc.by_length.at(len));
  }
  trace.case_id = cc.case_id;
  trace.closure_edge = {x, y};
  trace.odd_base = d_cycle;
  trace.layer_index = pair.index;
  trace.chorded = chorded.order;
  trace.chord = chorded.chord_edge();
  trace.subtree_root = subtree.root;
  trace.leaf_depth = subtree.leaf_depth;
  trace.anchor = cc.anchor;
  res.trace = std::move(trace);

  auto rep = verify_result(g, res);
  if (!rep.pass)
    throw std::logic_error("internal verification failed: " + rep.failures.front());
  return PipelineOut{std::move(res), t_capped};
}

bool recoverable(errc code) {
  switch (code) {
    case errc::closure_parity:
    case errc::not_an_edge:
    case errc::single_layer:
    case errc::no_chord_found:
    case errc::too_sparse:
    case errc::too_few_leaves:
    case errc::mixed_layers:
    case errc::not_a_partition:
    case errc::bipartition_exception:
    case errc::max_len_too_large:
    case errc::no_two_disjoint_paths:
    case errc::rerouting_failed:
    case errc::assembly_overlap:
    case errc::case_hypothesis_violated:
      return true;
    default:
      return false;
  }
}

}  // namespace

ExtractionResult extract_consecutive_odd(const Graph& g, const ExtractionConfig& cfg) {
  if (cfg.k < 1) throw Error(errc::bad_parameter, "target run length must be at least 1");
  if (cfg.c < 1) throw Error(errc::bad_parameter, "degree constant must be at least 1");

  auto tc = is_two_connected(g);
  if (!tc.two_connected) {
    switch (tc.reason) {
      case TwoConnectivity::Reason::too_small:
        throw Error(errc::not_two_connected, "graph has fewer than 3 vertices");
      case TwoConnectivity::Reason::disconnected:
        throw Error(errc::not_two_connected, "graph is disconnected");
      default:
        throw Error(errc::not_two_connected,
                    "cut vertex " + std::to_string(tc.cut_vertex), {tc.cut_vertex});
    }
  }
  if (auto col = two_coloring(g)) {
    std::vector<long long> sides(col->begin(), col->end());
    throw Error(errc::graph_is_bipartite, "input graph is bipartite", std::move(sides));
  }
  if (cfg.strict_mode) {
    auto avg = average_degree(g);
    auto need = Rational::whole(cfg.c * cfg.k);
    if (avg < need)
      throw Error(errc::degree_too_low,
                  "average degree " + avg.str() + " below required " + need.str());
  }

  auto bip = local_search_bipartition(g);
  auto gb = cut_subgraph(g, bip);
  auto monos = monochromatic_edges(g, bip);

  std::optional<Error> first_err;
  std::optional<ExtractionResult> best;
  int attempts = 0;
  for (auto [x, y] : monos) {
    if (attempts >= 256) break;
    ++attempts;
    try {
      auto piped = run_pipeline(g, cfg, gb, x, y);
      piped.res.trace.closure_attempts = attempts;
      bool full = piped.res.t_achieved >= piped.t_capped &&
                  (!cfg.strict_mode || piped.res.t_achieved >= piped.res.t_target);
      if (full) return std::move(piped.res);
      if (!best || piped.res.t_achieved > best->t_achieved) best = std::move(piped.res);
    } catch (const Error& e) {
      if (!recoverable(e.code())) throw;
      if (!first_err) first_err = e;
    }
  }
  if (cfg.strict_mode) {
    if (best)
      throw Error(errc::count_shortfall,
                  "achieved " + std::to_string(best->t_achieved) + " of " +
                      std::to_string(best->t_target) + " cycles in strict mode",
                  {best->t_achieved, best->t_target});
    throw first_err.value_or(
        Error(errc::no_chord_found, "no closure edge admitted the decomposition"));
  }
  if (best) return std::move(*best);
  throw first_err.value_or(
      Error(errc::no_chord_found, "no closure edge admitted the decomposition"));
}

// ---------------------------------------------------------------------------
// independent verification

VerifyReport verify_result(const Graph& g, const ExtractionResult& r) {
  VerifyReport rep;
  auto fail = [&rep](const std::string& why) { rep.failures.push_back(why); };
  if (r.cycles.size() != r.lengths.size()) fail("cycles/lengths size mismatch");
  if (static_cast<long long>(r.cycles.size()) != r.t_achieved)
    fail("t_achieved does not match the cycle count");
  for (size_t i = 0; i < r.cycles.size() && i < r.lengths.size(); ++i) {
    const auto& cyc = r.cycles[i];
    std::string tag = "cycle " + std::to_string(i) + ": ";
    if (static_cast<int>(cyc.size()) != r.lengths[i]) {
      fail(tag + "length field mismatch");
      continue;
    }
    if (cyc.size() < 3) {
      fail(tag + "too short");
      continue;
    }
    if (r.lengths[i] % 2 == 0) fail(tag + "even length");
    bool ok = true;
    std::vector<int> seen = cyc;
    std::sort(seen.begin(), seen.end());
    for (size_t j = 1; j < seen.size(); ++j)
      if (seen[j] == seen[j - 1]) ok = false;
    if (!ok) {
      fail(tag + "not simple");
      continue;
    }
    for (size_t j = 0; j < cyc.size(); ++j) {
      int u = cyc[j];
      int v = cyc[(j + 1) % cyc.size()];
      if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || !g.has_edge(u, v)) {
        fail(tag + "not a host cycle");
        break;
      }
    }
  }
  for (size_t i = 1; i < r.lengths.size(); ++i)
    if (r.lengths[i] != r.lengths[i - 1] + 2) fail("lengths not consecutive odd");
  rep.pass = rep.failures.empty();
  return rep;
}

std::set<int> run_residues(long long start_length, long long count, int modulus) {
  if (modulus < 2) throw Error(errc::bad_modulus, "modulus must be at least 2", {modulus});
  std::set<int> out;
  long long terms = std::min<long long>(count, modulus);
  for (long long i = 0; i < terms; ++i)
    out.insert(static_cast<int>(((start_length + 2 * i) % modulus + modulus) % modulus));
  return out;
}

}  // namespace oddcycles
