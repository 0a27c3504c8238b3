#include "oddcycles/serialize.hpp"

#include "oddcycles/errors.hpp"
#include "oddcycles/invariants.hpp"

namespace oddcycles {

ojson result_to_json(const ExtractionResult& r, bool with_trace) {
  ojson j;
  j["t_target"] = r.t_target;
  j["t_achieved"] = r.t_achieved;
  j["case"] = r.trace.case_id;
  ojson cycles = ojson::array();
  for (size_t i = 0; i < r.cycles.size(); ++i) {
    ojson c;
    c["length"] = r.lengths[i];
    c["vertices"] = r.cycles[i];
    cycles.push_back(std::move(c));
  }
  j["cycles"] = std::move(cycles);
  if (with_trace) {
    const auto& t = r.trace;
    ojson tr;
    tr["closure_edge"] = {t.closure_edge.first, t.closure_edge.second};
    tr["closure_attempts"] = t.closure_attempts;
    tr["odd_base"] = t.odd_base;
    tr["layer_index"] = t.layer_index;
    tr["chorded"] = t.chorded;
    tr["chord"] = {t.chord.first, t.chord.second};
    tr["subtree_root"] = t.subtree_root;
    tr["leaf_depth"] = t.leaf_depth;
    tr["anchor"] = t.anchor;
    tr["connector_from_root"] = t.connector_from_root;
    tr["connector_from_anchor"] = t.connector_from_anchor;
    tr["back_path"] = t.back_path;
    tr["rerouted"] = t.rerouted;
    if (!t.notes.empty()) tr["notes"] = t.notes;
    j["trace"] = std::move(tr);
  }
  return j;
}

ExtractionResult result_from_json(const ojson& j) {
  ExtractionResult r;
  try {
    r.t_target = j.at("t_target").get<long long>();
    r.t_achieved = j.at("t_achieved").get<long long>();
    r.trace.case_id = j.at("case").get<std::string>();
    for (const auto& c : j.at("cycles")) {
      r.lengths.push_back(c.at("length").get<int>());
      r.cycles.push_back(c.at("vertices").get<std::vector<int>>());
    }
  } catch (const ojson::exception& e) {
    throw Error(errc::malformed, std::string("bad result document: ") + e.what());
  }
  return r;
}

ojson spectrum_to_json(const Spectrum& s) {
  ojson j;
  ojson lens = ojson::object();
  for (const auto& [len, count] : s.lengths) lens[std::to_string(len)] = count;
  j["lengths"] = std::move(lens);
  j["total"] = s.total;
  j["truncated"] = s.truncated;
  return j;
}

ojson analyze_record(const Graph& g) {
  ojson j;
  j["n"] = g.n();
  j["m"] = g.m();
  j["avg"] = g.n() > 0 ? average_degree(g).str() : "0";
  j["bipartite"] = two_coloring(g).has_value();
  j["two_connected"] = is_two_connected(g).two_connected;
  auto gi = girth(g);
  if (gi)
    j["girth"] = *gi;
  else
    j["girth"] = nullptr;
  auto og = odd_girth(g);
  if (og)
    j["odd_girth"] = *og;
  else
    j["odd_girth"] = nullptr;
  return j;
}

}  // namespace oddcycles
