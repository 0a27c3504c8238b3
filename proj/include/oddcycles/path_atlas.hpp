#pragma once

#include <map>
#include <set>
#include <vector>

#include "oddcycles/decompose.hpp"
#include "oddcycles/errors.hpp"
#include "oddcycles/graph.hpp"

namespace oddcycles {

struct PathRecord {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Per-length candidate paths, lexicographically smallest first. Candidate
// lists are capped; the head entry is the canonical pick.
struct LengthAtlas {
  std::map<int, std::vector<PathRecord>> paths;
  int cycle_size = 0;

  bool has(int len) const { return paths.count(len) > 0; }
  const std::vector<PathRecord>& at(int len) const { return paths.at(len); }
  std::set<int> lengths() const;
};

// Raised when (a, b) is exactly the bipartition of the chorded cycle, the
// lemma's single exception; carries the odd-lengths-only atlas as evidence.
class BipartitionException : public Error {
 public:
  BipartitionException(const std::string& message, LengthAtlas parity_atlas)
      : Error(errc::bipartition_exception, message), atlas(std::move(parity_atlas)) {}
  LengthAtlas atlas;
};

// With a single chord every simple path is a cycle arc or arc-chord-arc, so
// exhaustive enumeration over those shapes is exact. Yields (a, b)-paths of
// every length 1..|C|-1 unless (a, b) is the bipartition of cycle+chord, in
// which case BipartitionException carries the all-odd atlas.
LengthAtlas ab_paths_all_lengths(const ChordedCycle& c, const VertexSet& a, const VertexSet& b);

// Even lengths 2, 4, ..., <= max_len. In a bipartite chorded cycle both
// endpoints of every even path land in one color class, which is checked.
LengthAtlas even_ab_paths_up_to(const ChordedCycle& c, const VertexSet& a, const VertexSet& b,
                                int max_len);

// Odd lengths 1, 3, ..., <= max_len from a single anchor vertex; in a
// bipartite chorded cycle every endpoint is in the class opposite the anchor.
LengthAtlas odd_anchor_paths_up_to(const ChordedCycle& c, int anchor, int max_len);

}  // namespace oddcycles
