#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "oddcycles/decompose.hpp"
#include "oddcycles/graph.hpp"
#include "oddcycles/path_atlas.hpp"

namespace oddcycles {

struct ExtractionConfig {
  long long k = 2;        // target run length
  long long c = 456;      // average-degree constant
  bool strict_mode = false;  // strict refuses under-delivery and low degree
  std::uint64_t seed = 0;    // reserved for randomized fallbacks
};

// Every intermediate object of a run, kept for reproducibility: the odd base
// cycle, the chorded cycle with its chord, the subtree, the anchor, and the
// connector paths, plus which case/subcase fired.
struct CaseTrace {
  std::string case_id;  // "1a", "1b", "2a", "2b"
  std::pair<int, int> closure_edge{-1, -1};
  int closure_attempts = 0;
  std::vector<int> odd_base;
  int layer_index = -1;
  std::vector<int> chorded;
  std::pair<int, int> chord{-1, -1};
  int subtree_root = -1;
  int leaf_depth = 0;
  int anchor = -1;
  std::vector<int> connector_from_root;
  std::vector<int> connector_from_anchor;
  std::vector<int> back_path;
  bool rerouted = false;
  std::string notes;
};

struct ExtractionResult {
  std::vector<std::vector<int>> cycles;  // ascending length
  std::vector<int> lengths;              // odd, step exactly 2
  long long t_target = 0;
  long long t_achieved = 0;
  CaseTrace trace;
};

// End-to-end pipeline: hypothesis checks, bipartition, layering, odd base
// cycle, densest layer pair, chorded cycle, minimal subtree, case dispatch.
// Closure edges are tried in lexicographic order until one admits the full
// decomposition; trace.closure_attempts records how many were consumed.
ExtractionResult extract_consecutive_odd(const Graph& g, const ExtractionConfig& cfg);

struct ConnectorPaths {
  PathRecord from_root;    // starts at the subtree root
  PathRecord from_anchor;  // starts at the anchor
  int anchor = -1;
  bool rerouted = false;
};

// Two vertex-disjoint (hub, base-cycle)-paths, both internally avoiding
// hub and base cycle, one forced to start at the root by rerouting through
// a root escape path when the flow misses it.
ConnectorPaths disjoint_connector_paths(const Graph& g, const VertexSet& hub, int root,
                                        const std::vector<int>& d_cycle);

struct CaseCycles {
  std::map<int, std::vector<int>> by_length;
  std::string case_id;
  int anchor = -1;
  std::vector<int> back_path;
  bool rerouted = false;
};

// Base cycle disjoint from the hub: splice an even or odd path atlas of the
// chorded cycle with the two connector paths and an arc of the base cycle of
// chosen parity.
CaseCycles case1_cycles(const Graph& g, const ChordedCycle& c, const SteinerSubtree& t,
                        const std::vector<int>& d_cycle, const PathRecord& from_root,
                        const PathRecord& from_anchor, int anchor, long long count);

// Base cycle meets the hub: anchor at the deepest hub vertex on it and use
// the complementary arc of the base cycle as the connector, with a
// parity-constrained search fallback when the arc is unusable.
CaseCycles case2_cycles(const Graph& g, const ChordedCycle& c, const SteinerSubtree& t,
                        const std::vector<int>& d_cycle, const BfsLayering& layering,
                        long long count);

struct VerifyReport {
  bool pass = false;
  std::vector<std::string> failures;
};

// Independent re-check of a result against its host graph: simplicity,
// adjacency, odd lengths with step 2, count. Shares no code with assembly.
VerifyReport verify_result(const Graph& g, const ExtractionResult& r);

// Residues mod k covered by the run start, start+2, ..., count terms.
std::set<int> run_residues(long long start_length, long long count, int modulus);

}  // namespace oddcycles
