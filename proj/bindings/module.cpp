#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oddcycles/errors.hpp"
#include "oddcycles/extractor.hpp"
#include "oddcycles/generators.hpp"
#include "oddcycles/graph.hpp"
#include "oddcycles/invariants.hpp"
#include "oddcycles/oracle.hpp"
#include "oddcycles/serialize.hpp"

namespace py = pybind11;
using namespace oddcycles;

namespace {

py::object fraction(const Rational& r) {
  auto cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.num, r.den);
}

py::dict result_dict(const ExtractionResult& r) {
  py::dict d;
  d["t_target"] = r.t_target;
  d["t_achieved"] = r.t_achieved;
  d["case"] = r.trace.case_id;
  py::list cycles;
  for (size_t i = 0; i < r.cycles.size(); ++i) {
    py::dict c;
    c["length"] = r.lengths[i];
    c["vertices"] = r.cycles[i];
    cycles.append(std::move(c));
  }
  d["cycles"] = std::move(cycles);
  py::dict tr;
  tr["closure_edge"] = r.trace.closure_edge;
  tr["closure_attempts"] = r.trace.closure_attempts;
  tr["odd_base"] = r.trace.odd_base;
  tr["layer_index"] = r.trace.layer_index;
  tr["chorded"] = r.trace.chorded;
  tr["chord"] = r.trace.chord;
  tr["subtree_root"] = r.trace.subtree_root;
  tr["leaf_depth"] = r.trace.leaf_depth;
  tr["anchor"] = r.trace.anchor;
  tr["rerouted"] = r.trace.rerouted;
  d["trace"] = std::move(tr);
  return d;
}

ExtractionResult result_from_dict(const py::dict& d) {
  ExtractionResult r;
  r.t_target = d["t_target"].cast<long long>();
  r.t_achieved = d["t_achieved"].cast<long long>();
  r.trace.case_id = d["case"].cast<std::string>();
  for (auto item : d["cycles"].cast<py::list>()) {
    auto c = item.cast<py::dict>();
    r.lengths.push_back(c["length"].cast<int>());
    r.cycles.push_back(c["vertices"].cast<std::vector<int>>());
  }
  return r;
}

}  // namespace

PYBIND11_MODULE(_oddcycles, m) {
  m.doc() = "cycles of consecutive odd lengths: extraction pipeline, oracles, generators";

  static py::exception<Error> exc(m, "Error");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::string text = std::string(errc_name(e.code())) + ": " + e.what();
      py::set_error(exc, text.c_str());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v); })
      .def("edges", &Graph::edges)
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("lengths", &Spectrum::lengths)
      .def_readonly("total", &Spectrum::total)
      .def_readonly("truncated", &Spectrum::truncated)
      .def("__repr__", [](const Spectrum& s) {
        return "Spectrum(total=" + std::to_string(s.total) +
               ", truncated=" + (s.truncated ? std::string("True") : std::string("False")) + ")";
      });

  m.def("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"));
  m.def(
      "parse",
      [](const std::string& text, bool dedup) {
        auto parsed = parse_graph(text, ParseOptions{dedup});
        return py::make_tuple(std::move(parsed.graph), parsed.source_ids);
      },
      py::arg("text"), py::arg("dedup") = false);
  m.def("emit", &emit_edge_list);
  m.def("average_degree", [](const Graph& g) { return fraction(average_degree(g)); });

  m.def("bipartite_check", [](const Graph& g) {
    auto w = bipartite_check(g);
    py::dict d;
    d["bipartite"] = w.bipartite();
    if (w.bipartite())
      d["sides"] = w.sides;
    else
      d["odd_cycle"] = w.odd_cycle;
    return d;
  });
  m.def("is_two_connected", [](const Graph& g) {
    auto r = is_two_connected(g);
    py::dict d;
    d["two_connected"] = r.two_connected;
    switch (r.reason) {
      case TwoConnectivity::Reason::yes: d["reason"] = "yes"; break;
      case TwoConnectivity::Reason::too_small: d["reason"] = "too_small"; break;
      case TwoConnectivity::Reason::disconnected: d["reason"] = "disconnected"; break;
      case TwoConnectivity::Reason::cut_vertex:
        d["reason"] = "cut_vertex";
        d["cut_vertex"] = r.cut_vertex;
        break;
    }
    return d;
  });
  m.def("girth", [](const Graph& g) -> py::object {
    auto v = girth(g);
    return v ? py::cast(*v) : py::none();
  });
  m.def("odd_girth", [](const Graph& g) -> py::object {
    auto v = odd_girth(g);
    return v ? py::cast(*v) : py::none();
  });
  m.def("shortest_odd_cycle", &shortest_odd_cycle);

  m.def("complete", &complete);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("cycle_graph", &cycle_graph);
  m.def("theta", &theta);
  m.def(
      "blowup", [](const Graph& base, int t) { return blowup(BlowupSpec{base, t}); },
      py::arg("base"), py::arg("t"));
  m.def("cut_vertex_odd_family", &cut_vertex_odd_family, py::arg("m"), py::arg("l"));
  m.def("gnp", &gnp, py::arg("n"), py::arg("p"), py::arg("seed") = 0);

  m.def(
      "extract",
      [](const Graph& g, long long k, const std::string& mode, long long c, std::uint64_t seed) {
        ExtractionConfig cfg;
        cfg.k = k;
        cfg.c = c;
        cfg.strict_mode = mode == "strict";
        cfg.seed = seed;
        return result_dict(extract_consecutive_odd(g, cfg));
      },
      py::arg("g"), py::arg("k") = 2, py::arg("mode") = "relaxed", py::arg("c") = 456,
      py::arg("seed") = 0);
  m.def(
      "verify",
      [](const Graph& g, const py::dict& result) {
        auto rep = verify_result(g, result_from_dict(result));
        py::dict d;
        d["pass"] = rep.pass;
        d["failures"] = rep.failures;
        return d;
      },
      py::arg("g"), py::arg("result"));
  m.def("run_residues", &run_residues, py::arg("start_length"), py::arg("count"),
        py::arg("modulus"));

  m.def(
      "enumerate_cycles",
      [](const Graph& g, long long max_cycles, long long max_steps) {
        EnumerateOptions opts;
        opts.max_cycles = max_cycles;
        opts.max_steps = max_steps;
        return enumerate_cycles(g, opts);
      },
      py::arg("g"), py::arg("max_cycles") = 1'000'000, py::arg("max_steps") = 50'000'000);
  m.def("residue_coverage", &residue_coverage);
  m.def("check_all_residues", [](const Spectrum& s, int k) {
    auto rep = check_all_residues(s, k);
    py::dict d;
    d["covered"] = rep.covered;
    d["missing"] = rep.missing;
    return d;
  });
  m.def("longest_consecutive_odd_run", &longest_consecutive_odd_run);
  m.def("chromatic_number", &chromatic_number, py::arg("g"), py::arg("max_n") = 64);
}
