#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "oddcycles/errors.hpp"
#include "oddcycles/extractor.hpp"
#include "oddcycles/generators.hpp"
#include "oddcycles/graph.hpp"
#include "oddcycles/invariants.hpp"
#include "oddcycles/oracle.hpp"
#include "oddcycles/serialize.hpp"

namespace oc = oddcycles;
using ojson = oc::ojson;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitShort = 4;
constexpr int kExitVerify = 5;

int exit_code_for(oc::errc code) {
  switch (code) {
    case oc::errc::graph_is_bipartite:
    case oc::errc::not_two_connected:
    case oc::errc::degree_too_low:
      return kExitHypothesis;
    case oc::errc::malformed:
    case oc::errc::self_loop:
    case oc::errc::duplicate_edge:
    case oc::errc::empty_graph:
    case oc::errc::out_of_range:
    case oc::errc::bad_parameter:
    case oc::errc::bad_modulus:
      return kExitParse;
    default:
      return kExitShort;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw oc::Error(oc::errc::malformed, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw oc::Error(oc::errc::malformed, "cannot write " + out_path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
}

std::string dump(const ojson& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

ojson error_record(const oc::Error& e) {
  ojson j;
  j["error"] = oc::errc_name(e.code());
  j["message"] = e.what();
  if (!e.data().empty()) j["data"] = e.data();
  return j;
}

struct Options {
  std::string input;
  std::string result_path;
  std::string out;
  std::string plan_path;
  bool dedup = false;
  bool pretty = false;
  bool with_trace = false;
  long long k = 2;
  std::string mode = "relaxed";
  long long c = 456;
  std::uint64_t seed = 0;
  long long cap = 1'000'000;
  // generate
  std::string family;
  int n = 0, a = 0, b = 0, t = 1, m = 2, l = 3;
  int l1 = 1, l2 = 2, l3 = 3;
  double p = 0.5;
  std::string base_path;
};

oc::Graph load_graph(const Options& opt) {
  auto text = read_file(opt.input);
  return oc::parse_graph(text, oc::ParseOptions{opt.dedup}).graph;
}

int cmd_analyze(const Options& opt) {
  auto g = load_graph(opt);
  auto rec = oc::analyze_record(g);
  write_out(dump(rec, opt.pretty), opt.out);
  if (opt.pretty)
    std::cerr << "n=" << g.n() << " m=" << g.m() << " avg=" << oc::average_degree(g).str()
              << "\n";
  return 0;
}

int cmd_extract(const Options& opt) {
  auto g = load_graph(opt);
  oc::ExtractionConfig cfg;
  cfg.k = opt.k;
  cfg.c = opt.c;
  cfg.strict_mode = opt.mode == "strict";
  cfg.seed = opt.seed;
  try {
    auto res = oc::extract_consecutive_odd(g, cfg);
    write_out(dump(oc::result_to_json(res, opt.with_trace), opt.pretty), opt.out);
    return res.t_achieved >= cfg.k ? 0 : kExitShort;
  } catch (const oc::Error& e) {
    write_out(dump(error_record(e), opt.pretty), opt.out);
    return exit_code_for(e.code());
  }
}

int cmd_verify(const Options& opt) {
  auto g = load_graph(opt);
  ojson doc;
  try {
    doc = ojson::parse(read_file(opt.result_path));
  } catch (const ojson::exception& e) {
    throw oc::Error(oc::errc::malformed, std::string("bad result json: ") + e.what());
  }
  auto res = oc::result_from_json(doc);
  auto rep = oc::verify_result(g, res);
  ojson j;
  j["pass"] = rep.pass;
  j["failures"] = rep.failures;
  write_out(dump(j, opt.pretty), opt.out);
  return rep.pass ? 0 : kExitVerify;
}

int cmd_generate(const Options& opt) {
  oc::Graph g;
  if (opt.family == "complete") {
    g = oc::complete(opt.n);
  } else if (opt.family == "kbip") {
    g = oc::complete_bipartite(opt.a, opt.b);
  } else if (opt.family == "cycle") {
    g = oc::cycle_graph(opt.n);
  } else if (opt.family == "theta") {
    g = oc::theta(opt.l1, opt.l2, opt.l3);
  } else if (opt.family == "blowup") {
    if (opt.base_path.empty())
      throw oc::Error(oc::errc::bad_parameter, "blowup needs --base FILE");
    auto base = oc::parse_graph(read_file(opt.base_path), oc::ParseOptions{opt.dedup}).graph;
    g = oc::blowup(oc::BlowupSpec{std::move(base), opt.t});
  } else if (opt.family == "cutodd") {
    g = oc::cut_vertex_odd_family(opt.m, opt.l);
  } else if (opt.family == "gnp") {
    g = oc::gnp(opt.n, opt.p, opt.seed);
  } else {
    throw oc::Error(oc::errc::bad_parameter, "unknown family " + opt.family);
  }
  write_out(oc::emit_edge_list(g), opt.out);
  return 0;
}

std::string json_number(const ojson& v) { return v.dump(); }

int cmd_experiment(const Options& opt) {
  ojson plan;
  try {
    plan = ojson::parse(read_file(opt.plan_path));
  } catch (const ojson::exception& e) {
    throw oc::Error(oc::errc::malformed, std::string("bad plan json: ") + e.what());
  }
  std::string family;
  long long trials = 0, seed_base = 0, cap = opt.cap;
  std::string mode = "relaxed";
  std::vector<long long> kvals;
  std::vector<std::pair<std::string, std::vector<ojson>>> grid;
  try {
    family = plan.at("family").get<std::string>();
    trials = plan.at("trials").get<long long>();
    if (plan.count("seed_base")) seed_base = plan.at("seed_base").get<long long>();
    if (plan.count("mode")) mode = plan.at("mode").get<std::string>();
    if (plan.count("cap")) cap = plan.at("cap").get<long long>();
    for (const auto& kv : plan.at("k")) kvals.push_back(kv.get<long long>());
    for (auto it = plan.at("grid").begin(); it != plan.at("grid").end(); ++it) {
      std::vector<ojson> vals;
      for (const auto& v : it.value()) vals.push_back(v);
      if (vals.empty()) throw oc::Error(oc::errc::bad_parameter, "empty grid axis " + it.key());
      grid.emplace_back(it.key(), std::move(vals));
    }
  } catch (const ojson::exception& e) {
    throw oc::Error(oc::errc::malformed, std::string("bad plan: ") + e.what());
  }
  if (trials < 1) throw oc::Error(oc::errc::bad_parameter, "trials must be at least 1");
  if (grid.empty()) throw oc::Error(oc::errc::bad_parameter, "empty parameter grid");
  if (kvals.empty()) throw oc::Error(oc::errc::bad_parameter, "empty k list");

  std::ostringstream csv;
  csv << "family,params,k,mode,trial,seed,status,case,t_target,t_achieved,oracle_run\n";

  std::vector<size_t> idx(grid.size(), 0);
  bool done = false;
  while (!done) {
    ojson point = ojson::object();
    std::string params;
    for (size_t i = 0; i < grid.size(); ++i) {
      point[grid[i].first] = grid[i].second[idx[i]];
      if (i) params += ";";
      params += grid[i].first + "=" + json_number(grid[i].second[idx[i]]);
    }
    for (long long k : kvals) {
      for (long long trial = 0; trial < trials; ++trial) {
        long long seed = seed_base + trial;
        std::string status = "ok", case_id = "-";
        std::string tt = "-", ta = "-", oracle = "-";
        try {
          oc::Graph g;
          if (family == "gnp") {
            g = oc::gnp(point.at("n").get<int>(), point.at("p").get<double>(),
                        static_cast<std::uint64_t>(seed));
          } else if (family == "complete") {
            g = oc::complete(point.at("n").get<int>());
          } else if (family == "kbip") {
            g = oc::complete_bipartite(point.at("a").get<int>(), point.at("b").get<int>());
          } else if (family == "cycle") {
            g = oc::cycle_graph(point.at("n").get<int>());
          } else if (family == "cutodd") {
            g = oc::cut_vertex_odd_family(point.at("m").get<int>(), point.at("l").get<int>());
          } else if (family == "theta") {
            g = oc::theta(point.at("l1").get<int>(), point.at("l2").get<int>(),
                          point.at("l3").get<int>());
          } else if (family == "blowup") {
            g = oc::blowup(oc::BlowupSpec{oc::cycle_graph(point.at("base_n").get<int>()),
                                          point.at("t").get<int>()});
          } else {
            throw oc::Error(oc::errc::bad_parameter, "unknown family " + family);
          }
          oc::ExtractionConfig cfg;
          cfg.k = k;
          cfg.strict_mode = mode == "strict";
          cfg.seed = static_cast<std::uint64_t>(seed);
          try {
            auto res = oc::extract_consecutive_odd(g, cfg);
            case_id = res.trace.case_id;
            tt = std::to_string(res.t_target);
            ta = std::to_string(res.t_achieved);
            auto rep = oc::verify_result(g, res);
            if (!rep.pass) status = "verify_failed";
          } catch (const oc::Error& e) {
            status = oc::errc_name(e.code());
          }
          oc::EnumerateOptions eo;
          eo.max_cycles = cap;
          auto sp = oc::enumerate_cycles(g, eo);
          oracle = sp.truncated ? "skipped" : std::to_string(oc::longest_consecutive_odd_run(sp));
        } catch (const oc::Error& e) {
          status = oc::errc_name(e.code());
        }
        csv << family << "," << params << "," << k << "," << mode << "," << trial << "," << seed
            << "," << status << "," << case_id << "," << tt << "," << ta << "," << oracle << "\n";
      }
    }
    done = true;
    for (size_t i = grid.size(); i-- > 0;) {
      if (++idx[i] < grid[i].second.size()) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
  }
  write_out(csv.str(), opt.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycles of consecutive odd lengths: extraction pipeline, oracles, generators"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", opt.out, "write output to PATH instead of stdout");
    cmd->add_flag("--pretty", opt.pretty, "indent JSON and add a human summary");
    cmd->add_flag("--dedup", opt.dedup, "collapse duplicate edges while parsing");
  };

  auto* analyze = app.add_subcommand("analyze", "structural report for a graph file");
  analyze->add_option("input", opt.input, "edge-list or DIMACS file")->required();
  add_common(analyze);

  auto* extract = app.add_subcommand("extract", "extract cycles of consecutive odd lengths");
  extract->add_option("input", opt.input)->required();
  extract->add_option("--k", opt.k, "target run length");
  extract->add_option("--mode", opt.mode)->check(CLI::IsMember({"strict", "relaxed"}));
  extract->add_option("--c", opt.c, "average-degree constant for strict mode");
  extract->add_option("--seed", opt.seed);
  extract->add_flag("--trace", opt.with_trace, "include the case trace in the output");
  add_common(extract);

  auto* verify = app.add_subcommand("verify", "re-check an extraction result");
  verify->add_option("graph", opt.input)->required();
  verify->add_option("result", opt.result_path)->required();
  add_common(verify);

  auto* gen = app.add_subcommand("generate", "emit a generated graph as edge-list text");
  gen->add_option("--family", opt.family)
      ->required()
      ->check(CLI::IsMember({"complete", "kbip", "cycle", "theta", "blowup", "cutodd", "gnp"}));
  gen->add_option("--n", opt.n);
  gen->add_option("--a", opt.a);
  gen->add_option("--b", opt.b);
  gen->add_option("--t", opt.t);
  gen->add_option("--m", opt.m);
  gen->add_option("--l", opt.l);
  gen->add_option("--l1", opt.l1);
  gen->add_option("--l2", opt.l2);
  gen->add_option("--l3", opt.l3);
  gen->add_option("--p", opt.p);
  gen->add_option("--seed", opt.seed);
  gen->add_option("--base", opt.base_path, "base graph file for blowup");
  add_common(gen);

  auto* exp = app.add_subcommand("experiment", "run a trial grid from a JSON plan");
  exp->add_option("plan", opt.plan_path)->required();
  exp->add_option("--cap", opt.cap, "oracle enumeration cap");
  add_common(exp);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return cmd_analyze(opt);
    if (app.got_subcommand(extract)) return cmd_extract(opt);
    if (app.got_subcommand(verify)) return cmd_verify(opt);
    if (app.got_subcommand(gen)) return cmd_generate(opt);
    if (app.got_subcommand(exp)) return cmd_experiment(opt);
  } catch (const oc::Error& e) {
    std::cerr << oc::errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
