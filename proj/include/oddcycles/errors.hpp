#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oddcycles {

enum class errc {
  self_loop,
  duplicate_edge,
  malformed,
  empty_graph,
  out_of_range,
  bad_parameter,
  bad_modulus,
  disconnected,
  graph_is_bipartite,
  not_two_connected,
  degree_too_low,
  closure_parity,
  not_an_edge,
  single_layer,
  no_chord_found,
  too_sparse,
  too_few_leaves,
  mixed_layers,
  not_a_partition,
  bipartition_exception,
  max_len_too_large,
  no_two_disjoint_paths,
  rerouting_failed,
  assembly_overlap,
  case_hypothesis_violated,
  count_shortfall,
};

const char* errc_name(errc code);

// data() carries small machine-readable payloads (line numbers, vertex ids,
// witness vectors) so callers can emit structured reasons.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message, std::vector<long long> data = {})
      : std::runtime_error(message), code_(code), data_(std::move(data)) {}

  errc code() const { return code_; }
  const std::vector<long long>& data() const { return data_; }

 private:
  errc code_;
  std::vector<long long> data_;
};

}  // namespace oddcycles
