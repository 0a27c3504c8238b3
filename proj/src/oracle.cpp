#include "oddcycles/oracle.hpp"

#include <algorithm>

#include "oddcycles/errors.hpp"
#include "oddcycles/invariants.hpp"

namespace oddcycles {

namespace {

struct EnumState {
  const Graph& g;
  const EnumerateOptions& opts;
  const std::function<bool(const std::vector<int>&)>* visit;
  Spectrum sp;
  std::vector<char> on_path;
  std::vector<int> path;
  long long steps = 0;
  bool stop = false;

  // Cycles are rooted at their smallest vertex (only ids above the root may
  // enter the path) and counted in one orientation (second vertex below the
  // last), so each simple cycle is seen exactly once.
  void dfs(int root, int u) {
    for (int v : g.neighbors(u)) {
      if (stop) return;
      if (++steps > opts.max_steps) {
        sp.truncated = true;
        stop = true;
        return;
      }
      if (v == root) {
        if (path.size() >= 3 && path[1] < path.back()) {
          ++sp.lengths[static_cast<int>(path.size())];
          ++sp.total;
          if (visit && *visit && !(*visit)(path)) {
            sp.truncated = true;
            stop = true;
            return;
          }
          if (sp.total >= opts.max_cycles) {
            sp.truncated = true;
            stop = true;
            return;
          }
        }
      } else if (v > root && !on_path[v]) {
        on_path[v] = 1;
        path.push_back(v);
        dfs(root, v);
        path.pop_back();
        on_path[v] = 0;
      }
    }
  }
};

}  // namespace

Spectrum enumerate_cycles(const Graph& g, const EnumerateOptions& opts,
                          const std::function<bool(const std::vector<int>&)>& visit) {
  EnumState st{g, opts, &visit, {}, {}, {}, 0, false};
  st.on_path.assign(static_cast<size_t>(g.n()), 0);
  for (int s = 0; s < g.n() && !st.stop; ++s) {
    st.path.assign(1, s);
    st.on_path[s] = 1;
    st.dfs(s, s);
    st.on_path[s] = 0;
  }
  return std::move(st.sp);
}

Spectrum enumerate_cycles(const Graph& g, const EnumerateOptions& opts) {
  static const std::function<bool(const std::vector<int>&)> none;
  return enumerate_cycles(g, opts, none);
}

std::set<int> residue_coverage(const Spectrum& s, int k) {
  if (k < 2) throw Error(errc::bad_modulus, "modulus must be at least 2", {k});
  std::set<int> out;
  for (const auto& [len, count] : s.lengths) out.insert(len % k);
  return out;
}

ResidueReport check_all_residues(const Spectrum& s, int k) {
  ResidueReport rep;
  rep.covered = residue_coverage(s, k);
  for (int r = 0; r < k; ++r)
    if (!rep.covered.count(r)) rep.missing.insert(r);
  return rep;
}

int longest_consecutive_odd_run(const Spectrum& s) {
  std::set<int> odd;
  for (const auto& [len, count] : s.lengths)
    if (len % 2 == 1) odd.insert(len);
  int best = 0;
  for (int l : odd) {
    if (odd.count(l - 2)) continue;  // not a run start
    int r = 0;
    while (odd.count(l + 2 * r)) ++r;
    best = std::max(best, r);
  }
  return best;
}

namespace {

bool colorable(const Graph& g, int k, const std::vector<int>& order, std::vector<int>& color,
               size_t pos, int max_used) {
  if (pos == order.size()) return true;
  int v = order[pos];
  unsigned used = 0;
  for (int u : g.neighbors(v))
    if (color[u] >= 0) used |= 1u << color[u];
  int limit = std::min(k - 1, max_used + 1);  // new colors in canonical order
  for (int c = 0; c <= limit; ++c) {
    if (used & (1u << c)) continue;
    color[v] = c;
    if (colorable(g, k, order, color, pos + 1, std::max(max_used, c))) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

int chromatic_number(const Graph& g, int max_n) {
  if (g.n() > max_n)
    throw Error(errc::bad_parameter, "exact coloring limited to small graphs", {g.n()});
  if (g.n() == 0) return 0;
  if (g.m() == 0) return 1;
  if (two_coloring(g)) return 2;
  std::vector<int> order(static_cast<size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    return a < b;
  });
  for (int k = 3; k < g.n(); ++k) {
    std::vector<int> color(static_cast<size_t>(g.n()), -1);
    if (colorable(g, k, order, color, 0, -1)) return k;
  }
  return g.n();
}

}  // namespace oddcycles
