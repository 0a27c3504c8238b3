#include "oddcycles/invariants.hpp"

#include <algorithm>
#include <deque>
#include <queue>

#include "oddcycles/errors.hpp"

namespace oddcycles {

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(static_cast<size_t>(g.n()), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int v : g.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          q.push(v);
        }
    }
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  std::vector<int> color(static_cast<size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = color[u] ^ 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

namespace {

// Extracts a simple odd cycle from a closed odd walk by splitting at a
// repeated vertex; one side of every split stays odd and closed.
std::vector<int> reduce_to_simple_odd(std::vector<int> walk) {
  // walk is closed: walk.front() == walk.back(); length = walk.size() - 1.
  for (;;) {
    std::vector<std::pair<int, int>> dup;
    {
      std::vector<std::pair<int, int>> seen;  // (vertex, position), final echo excluded
      seen.reserve(walk.size());
      for (size_t i = 0; i + 1 < walk.size(); ++i) seen.emplace_back(walk[i], static_cast<int>(i));
      std::sort(seen.begin(), seen.end());
      for (size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first) dup.emplace_back(seen[i - 1].second, seen[i].second);
    }
    if (dup.empty()) {
      walk.pop_back();
      return walk;
    }
    auto [i, j] = dup.front();
    if ((j - i) % 2 == 1) {
      std::vector<int> inner(walk.begin() + i, walk.begin() + j + 1);
      walk = std::move(inner);
    } else {
      std::vector<int> outer(walk.begin(), walk.begin() + i + 1);
      outer.insert(outer.end(), walk.begin() + j + 1, walk.end());
      walk = std::move(outer);
    }
  }
}

}  // namespace

std::vector<int> shortest_odd_cycle(const Graph& g) {
  int n = g.n();
  int best = -1;
  int best_root = -1;
  // Parity-layered BFS per root: dist[v][p] = shortest walk of parity p.
  std::vector<int> dist(static_cast<size_t>(2 * n));
  std::vector<int> par(static_cast<size_t>(2 * n));
  std::vector<int> best_dist, best_par;
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(par.begin(), par.end(), -1);
    std::deque<int> q;
    dist[2 * r] = 0;
    q.push_back(2 * r);
    int found = -1;
    while (!q.empty()) {
      int cur = q.front();
      q.pop_front();
      int u = cur >> 1, p = cur & 1;
      if (best >= 0 && dist[cur] + 1 >= best) continue;
      for (int v : g.neighbors(u)) {
        int nxt = 2 * v + (p ^ 1);
        if (dist[nxt] < 0) {
          dist[nxt] = dist[cur] + 1;
          par[nxt] = cur;
          if (v == r && (p ^ 1) == 1) {
            found = dist[nxt];
            q.clear();
            break;
          }
          q.push_back(nxt);
        }
      }
    }
    if (found >= 0 && (best < 0 || found < best)) {
      best = found;
      best_root = r;
      best_dist = dist;
      best_par = par;
      if (best == 3) break;
    }
  }
  if (best < 0) return {};
  // Rebuild the closed walk from the double-cover parents, then trim.
  std::vector<int> walk;
  int cur = 2 * best_root + 1;
  while (cur >= 0) {
    walk.push_back(cur >> 1);
    cur = best_par[cur];
  }
  std::reverse(walk.begin(), walk.end());
  return reduce_to_simple_odd(std::move(walk));
}

std::optional<int> odd_girth(const Graph& g) {
  auto cyc = shortest_odd_cycle(g);
  if (cyc.empty()) return std::nullopt;
  return static_cast<int>(cyc.size());
}

std::optional<int> girth(const Graph& g) {
  int n = g.n();
  int best = -1;
  std::vector<int> dist(static_cast<size_t>(n));
  std::vector<int> parent(static_cast<size_t>(n));
  for (int r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[r] = 0;
    q.push(r);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      if (best >= 0 && 2 * dist[u] + 1 > best) break;
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u]) {
          int cand = dist[u] + dist[v] + 1;
          if (best < 0 || cand < best) best = cand;
        }
      }
    }
    if (best == 3) break;
  }
  if (best < 0) return std::nullopt;
  return best;
}

BipartiteWitness bipartite_check(const Graph& g) {
  if (connected_components(g).size() != 1)
    throw Error(errc::disconnected, "bipartite check needs a connected graph");
  BipartiteWitness w;
  if (auto col = two_coloring(g)) {
    w.sides = std::move(*col);
    return w;
  }
  w.odd_cycle = shortest_odd_cycle(g);
  return w;
}

TwoConnectivity is_two_connected(const Graph& g) {
  TwoConnectivity r;
  if (g.n() < 3) {
    r.reason = TwoConnectivity::Reason::too_small;
    return r;
  }
  if (connected_components(g).size() != 1) {
    r.reason = TwoConnectivity::Reason::disconnected;
    return r;
  }
  int n = g.n();
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0),
      parent(static_cast<size_t>(n), -1);
  std::vector<char> art(static_cast<size_t>(n), 0);
  // Iterative low-link DFS from 0 (the graph is connected here).
  std::vector<std::pair<int, size_t>> stack;
  int timer = 0;
  disc[0] = low[0] = timer++;
  stack.emplace_back(0, 0);
  int root_children = 0;
  while (!stack.empty()) {
    int u = stack.back().first;
    size_t idx = stack.back().second;
    const auto& nb = g.neighbors(u);
    if (idx < nb.size()) {
      ++stack.back().second;
      int v = nb[idx];
      if (disc[v] < 0) {
        parent[v] = u;
        if (u == 0) ++root_children;
        disc[v] = low[v] = timer++;
        stack.emplace_back(v, 0);
      } else if (v != parent[u]) {
        low[u] = std::min(low[u], disc[v]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().first;
        low[p] = std::min(low[p], low[u]);
        if (p != 0 && low[u] >= disc[p]) art[p] = 1;
      }
    }
  }
  if (root_children > 1) art[0] = 1;
  for (int v = 0; v < n; ++v) {
    if (art[v]) {
      r.reason = TwoConnectivity::Reason::cut_vertex;
      r.cut_vertex = v;
      return r;
    }
  }
  r.two_connected = true;
  r.reason = TwoConnectivity::Reason::yes;
  return r;
}

}  // namespace oddcycles
