#include "oddcycles/errors.hpp"

namespace oddcycles {

const char* errc_name(errc code) {
  switch (code) {
    case errc::self_loop: return "self_loop";
    case errc::duplicate_edge: return "duplicate_edge";
    case errc::malformed: return "malformed";
    case errc::empty_graph: return "empty_graph";
    case errc::out_of_range: return "out_of_range";
    case errc::bad_parameter: return "bad_parameter";
    case errc::bad_modulus: return "bad_modulus";
    case errc::disconnected: return "disconnected";
    case errc::graph_is_bipartite: return "bipartite";
    case errc::not_two_connected: return "not_two_connected";
    case errc::degree_too_low: return "degree_too_low";
    case errc::closure_parity: return "closure_parity";
    case errc::not_an_edge: return "not_an_edge";
    case errc::single_layer: return "single_layer";
    case errc::no_chord_found: return "no_chord_found";
    case errc::too_sparse: return "too_sparse";
    case errc::too_few_leaves: return "too_few_leaves";
    case errc::mixed_layers: return "mixed_layers";
    case errc::not_a_partition: return "not_a_partition";
    case errc::bipartition_exception: return "bipartition_exception";
    case errc::max_len_too_large: return "max_len_too_large";
    case errc::no_two_disjoint_paths: return "no_two_disjoint_paths";
    case errc::rerouting_failed: return "rerouting_failed";
    case errc::assembly_overlap: return "assembly_overlap";
    case errc::case_hypothesis_violated: return "case_hypothesis_violated";
    case errc::count_shortfall: return "count_shortfall";
  }
  return "unknown";
}

}  // namespace oddcycles
