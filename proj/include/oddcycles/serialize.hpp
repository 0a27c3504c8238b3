#pragma once

#include <string>

#include "json.hpp"
#include "oddcycles/extractor.hpp"
#include "oddcycles/graph.hpp"
#include "oddcycles/oracle.hpp"

namespace oddcycles {

using ojson = nlohmann::ordered_json;

// {"t_target":..., "t_achieved":..., "case":"1a|1b|2a|2b",
//  "cycles":[{"length":L,"vertices":[...]}, ...]} with stable field order.
ojson result_to_json(const ExtractionResult& r, bool with_trace = false);
ExtractionResult result_from_json(const ojson& j);

// {"lengths":{"3":4,...}, "total":..., "truncated":...}
ojson spectrum_to_json(const Spectrum& s);

// Stable-key record for the analyze command.
ojson analyze_record(const Graph& g);

}  // namespace oddcycles
