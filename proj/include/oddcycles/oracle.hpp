#pragma once

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "oddcycles/graph.hpp"

namespace oddcycles {

// Multiset of simple-cycle lengths. truncated means a budget was hit and the
// counts are a prefix of the enumeration, not the full spectrum.
struct Spectrum {
  std::map<int, long long> lengths;
  long long total = 0;
  bool truncated = false;
};

struct EnumerateOptions {
  long long max_cycles = 1'000'000;
  long long max_steps = 50'000'000;  // DFS edge scans, guards sparse blowups
};

// Exact enumeration of simple cycles, each counted once regardless of
// rotation or orientation. The optional visitor sees every cycle as a vertex
// sequence; returning false stops early (flagged as truncation).
Spectrum enumerate_cycles(const Graph& g, const EnumerateOptions& opts = {});
Spectrum enumerate_cycles(const Graph& g, const EnumerateOptions& opts,
                          const std::function<bool(const std::vector<int>&)>& visit);

std::set<int> residue_coverage(const Spectrum& s, int k);

struct ResidueReport {
  std::set<int> covered;
  std::set<int> missing;
};
ResidueReport check_all_residues(const Spectrum& s, int k);

// Largest r such that l, l+2, ..., l+2(r-1) are all present for some odd l.
int longest_consecutive_odd_run(const Spectrum& s);

// Exact chromatic number by backtracking; intended for small instances and
// refuses graphs above the given size.
int chromatic_number(const Graph& g, int max_n = 64);

}  // namespace oddcycles
