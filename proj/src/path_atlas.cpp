#include "oddcycles/path_atlas.hpp"

#include <algorithm>

namespace oddcycles {

std::set<int> LengthAtlas::lengths() const {
  std::set<int> out;
  for (const auto& [len, recs] : paths) out.insert(len);
  return out;
}

namespace {

constexpr int kKeepPerLength = 8;

std::vector<int> canonical(std::vector<int> seq) {
  std::vector<int> rev(seq.rbegin(), seq.rend());
  return std::min(seq, rev);
}

void insert_capped(LengthAtlas& atlas, std::vector<int> seq) {
  seq = canonical(std::move(seq));
  int len = static_cast<int>(seq.size()) - 1;
  auto& bucket = atlas.paths[len];
  PathRecord rec{std::move(seq)};
  auto it = std::lower_bound(bucket.begin(), bucket.end(), rec,
                             [](const PathRecord& x, const PathRecord& y) {
                               return x.vertices < y.vertices;
                             });
  if (it != bucket.end() && it->vertices == rec.vertices) return;
  bucket.insert(it, std::move(rec));
  if (bucket.size() > kKeepPerLength) bucket.pop_back();
}

// Enumerates every simple path of length 1..max_len in cycle + designated
// chord, in position space. With one chord the shapes are closed form:
// plain arcs, and arc-chord-arc with the two arcs disjoint.
template <typename Emit>
void enumerate_shapes(int n, int cf, int ct, int max_len, Emit&& emit) {
  auto wrap = [n](int p) { return ((p % n) + n) % n; };
  int cap = std::min(max_len, n - 1);

  std::vector<int> arc;
  for (int s = 0; s < n; ++s) {
    arc.assign(1, s);
    for (int len = 1; len <= cap; ++len) {
      arc.push_back(wrap(s + len));
      emit(arc);
    }
  }

  std::vector<char> in_a1(static_cast<size_t>(n), 0);
  for (auto [e1, e2] : {std::pair{cf, ct}, std::pair{ct, cf}}) {
    for (int d1 : {1, -1}) {
      std::vector<int> a1{e1};
      in_a1.assign(static_cast<size_t>(n), 0);
      in_a1[e1] = 1;
      for (int l1 = 0; l1 <= n - 2; ++l1) {
        if (l1 > 0) {
          int nxt = wrap(a1.front() - d1);
          if (nxt == e2) break;  // the first arc may never swallow the far end
          a1.insert(a1.begin(), nxt);
          in_a1[nxt] = 1;
        }
        if (l1 + 1 > max_len) break;
        for (int d2 : {1, -1}) {
          std::vector<int> whole = a1;
          whole.push_back(e2);
          if (l1 + 1 <= max_len) emit(whole);
          for (int l2 = 1; l1 + 1 + l2 <= max_len; ++l2) {
            int nxt = wrap(e2 + d2 * l2);
            if (nxt == e1 || in_a1[nxt]) break;
            bool dup = false;
            for (size_t i = a1.size() + 1; i < whole.size(); ++i)
              if (whole[i] == nxt) dup = true;
            if (dup) break;
            whole.push_back(nxt);
            emit(whole);
          }
        }
      }
    }
  }
}

struct PartitionView {
  const VertexSet* a;
  const VertexSet* b;
};

void check_partition(const ChordedCycle& c, const VertexSet& a, const VertexSet& b) {
  if (a.empty() || b.empty())
    throw Error(errc::not_a_partition, "partition sides must be nonempty");
  std::vector<int> joined;
  joined.reserve(a.ids().size() + b.ids().size());
  joined.insert(joined.end(), a.begin(), a.end());
  joined.insert(joined.end(), b.begin(), b.end());
  std::sort(joined.begin(), joined.end());
  for (size_t i = 1; i < joined.size(); ++i)
    if (joined[i] == joined[i - 1])
      throw Error(errc::not_a_partition, "partition sides overlap", {joined[i]});
  std::vector<int> cyc = c.order;
  std::sort(cyc.begin(), cyc.end());
  if (joined != cyc)
    throw Error(errc::not_a_partition, "partition does not cover the cycle vertex set");
}

bool chord_keeps_bipartite(const ChordedCycle& c) {
  if (c.size() % 2 != 0) return false;
  return (std::abs(c.chord_from - c.chord_to) % 2) == 1;
}

bool is_the_bipartition(const ChordedCycle& c, const VertexSet& a, const VertexSet& b) {
  if (!chord_keeps_bipartite(c)) return false;
  std::vector<int> even_class, odd_class;
  for (int i = 0; i < c.size(); ++i)
    (i % 2 == 0 ? even_class : odd_class).push_back(c.order[i]);
  std::sort(even_class.begin(), even_class.end());
  std::sort(odd_class.begin(), odd_class.end());
  return (a.ids() == even_class && b.ids() == odd_class) ||
         (a.ids() == odd_class && b.ids() == even_class);
}

LengthAtlas collect(const ChordedCycle& c, const VertexSet& a, const VertexSet& b, int max_len) {
  LengthAtlas atlas;
  atlas.cycle_size = c.size();
  enumerate_shapes(c.size(), c.chord_from, c.chord_to, max_len, [&](const std::vector<int>& pos) {
    int u = c.order[pos.front()];
    int v = c.order[pos.back()];
    bool forward = a.contains(u) && b.contains(v);
    bool backward = a.contains(v) && b.contains(u);
    if (!forward && !backward) return;
    std::vector<int> verts(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) verts[i] = c.order[pos[i]];
    insert_capped(atlas, std::move(verts));
  });
  return atlas;
}

}  // namespace

LengthAtlas ab_paths_all_lengths(const ChordedCycle& c, const VertexSet& a, const VertexSet& b) {
  check_partition(c, a, b);
  LengthAtlas atlas = collect(c, a, b, c.size() - 1);
  if (is_the_bipartition(c, a, b)) {
    for (const auto& [len, recs] : atlas.paths)
      if (len % 2 == 0)
        throw std::logic_error("even path across the bipartition");
    throw BipartitionException("(a, b) is the bipartition of the chorded cycle", std::move(atlas));
  }
  for (int len = 1; len < c.size(); ++len)
    if (!atlas.has(len))
      throw std::logic_error("path atlas missing length " + std::to_string(len));
  return atlas;
}

LengthAtlas even_ab_paths_up_to(const ChordedCycle& c, const VertexSet& a, const VertexSet& b,
                                int max_len) {
  if (max_len >= c.size())
    throw Error(errc::max_len_too_large, "max length must stay below the cycle size",
                {max_len, c.size()});
  check_partition(c, a, b);
  if (is_the_bipartition(c, a, b)) {
    LengthAtlas ev = collect(c, a, b, max_len);
    throw BipartitionException("(a, b) is the bipartition of the chorded cycle", std::move(ev));
  }
  LengthAtlas all = collect(c, a, b, max_len);
  LengthAtlas atlas;
  atlas.cycle_size = c.size();
  for (auto& [len, recs] : all.paths)
    if (len % 2 == 0) atlas.paths[len] = std::move(recs);
  bool bip = chord_keeps_bipartite(c);
  for (int len = 2; len <= max_len; len += 2) {
    if (!atlas.has(len)) throw std::logic_error("even atlas missing length " + std::to_string(len));
    if (!bip) continue;
    for (const auto& rec : atlas.at(len)) {
      int pu = c.position_of(rec.vertices.front());
      int pv = c.position_of(rec.vertices.back());
      if ((pu & 1) != (pv & 1))
        throw std::logic_error("even path endpoints in opposite classes");
    }
  }
  return atlas;
}

LengthAtlas odd_anchor_paths_up_to(const ChordedCycle& c, int anchor, int max_len) {
  if (max_len >= c.size())
    throw Error(errc::max_len_too_large, "max length must stay below the cycle size",
                {max_len, c.size()});
  int apos = c.position_of(anchor);
  if (apos < 0)
    throw Error(errc::not_a_partition, "anchor is not a cycle vertex", {anchor});
  std::vector<int> rest;
  for (int v : c.order)
    if (v != anchor) rest.push_back(v);
  VertexSet a = VertexSet::of({anchor});
  VertexSet b = VertexSet::of(std::move(rest));
  LengthAtlas all = collect(c, a, b, max_len);
  LengthAtlas atlas;
  atlas.cycle_size = c.size();
  for (auto& [len, recs] : all.paths) {
    if (len % 2 != 1) continue;
    // Reorient so the anchor leads.
    auto& bucket = atlas.paths[len];
    for (auto& rec : recs) {
      std::vector<int> verts = rec.vertices;
      if (verts.back() == anchor) std::reverse(verts.begin(), verts.end());
      bucket.push_back(PathRecord{std::move(verts)});
    }
  }
  bool bip = chord_keeps_bipartite(c);
  for (int len = 1; len <= max_len; len += 2) {
    if (!atlas.has(len)) throw std::logic_error("odd atlas missing length " + std::to_string(len));
    if (!bip) continue;
    for (const auto& rec : atlas.at(len))
      if (((c.position_of(rec.vertices.front()) ^ c.position_of(rec.vertices.back())) & 1) == 0)
        throw std::logic_error("odd path endpoints in one class");
  }
  return atlas;
}

}  // namespace oddcycles
