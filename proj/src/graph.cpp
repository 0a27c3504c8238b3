#include "oddcycles/graph.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "oddcycles/errors.hpp"

namespace oddcycles {

Graph::Graph(int n) {
  if (n < 0) throw Error(errc::bad_parameter, "negative vertex count");
  adj_.resize(static_cast<size_t>(n));
}

void Graph::require_vertex(int v) const {
  if (v < 0 || v >= n())
    throw Error(errc::out_of_range, "vertex " + std::to_string(v) + " out of range", {v});
}

void Graph::add_edge(int u, int v) {
  require_vertex(u);
  require_vertex(v);
  if (u == v) throw Error(errc::self_loop, "self loop at vertex " + std::to_string(u), {u});
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v)
    throw Error(errc::duplicate_edge,
                "duplicate edge " + std::to_string(u) + " " + std::to_string(v), {u, v});
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v) throw Error(errc::self_loop, "self loop at vertex " + std::to_string(u), {u});
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    for (size_t i = 1; i < a.size(); ++i)
      if (a[i] == a[i - 1])
        throw Error(errc::duplicate_edge, "duplicate edge on vertex " + std::to_string(a[i]),
                    {a[i]});
  }
  g.m_ = static_cast<long long>(edges.size());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  require_vertex(u);
  require_vertex(v);
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

int Graph::degree(int v) const {
  require_vertex(v);
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  require_vertex(v);
  return adj_[v];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(m_));
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::check_valid() const {
  long long half_sum = 0;
  for (int u = 0; u < n(); ++u) {
    const auto& a = adj_[u];
    for (size_t i = 0; i < a.size(); ++i) {
      int v = a[i];
      if (v < 0 || v >= n()) throw Error(errc::bad_parameter, "neighbor out of range");
      if (v == u) throw Error(errc::self_loop, "self loop", {u});
      if (i > 0 && a[i] <= a[i - 1])
        throw Error(errc::bad_parameter, "adjacency not strictly sorted");
      if (!has_edge(v, u)) throw Error(errc::bad_parameter, "asymmetric adjacency");
    }
    half_sum += static_cast<long long>(a.size());
  }
  if (half_sum != 2 * m_) throw Error(errc::bad_parameter, "edge count mismatch");
}

VertexSet VertexSet::of(std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  for (size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 0) throw Error(errc::out_of_range, "negative vertex id", {ids[i]});
    if (i > 0 && ids[i] == ids[i - 1])
      throw Error(errc::bad_parameter, "duplicate id in vertex set", {ids[i]});
  }
  VertexSet s;
  s.ids_ = std::move(ids);
  return s;
}

bool VertexSet::contains(int v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

Rational average_degree(const Graph& g) {
  if (g.n() == 0) throw Error(errc::empty_graph, "average degree of empty graph");
  return Rational::of(2 * g.m(), g.n());
}

Induced induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(errc::bad_parameter, "empty vertex set");
  for (int v : s)
    if (v >= g.n()) throw Error(errc::out_of_range, "vertex not in host graph", {v});
  std::vector<int> local(static_cast<size_t>(g.n()), -1);
  const auto& ids = s.ids();
  for (size_t i = 0; i < ids.size(); ++i) local[ids[i]] = static_cast<int>(i);
  Graph sub(s.size());
  for (int v : ids)
    for (int u : g.neighbors(v))
      if (u > v && local[u] >= 0) sub.add_edge(local[v], local[u]);
  return Induced{std::move(sub), ids};
}

namespace {

struct RawEdges {
  std::vector<std::pair<long long, long long>> edges;
  long long declared_n = -1;
};

long long parse_ll(std::string_view tok, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw Error(errc::malformed, "line " + std::to_string(line_no) + ": bad integer", {line_no});
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

ParsedGraph build(const RawEdges& raw, const ParseOptions& opts) {
  // Dense inputs (or a declared n) keep their ids; sparse ids are compacted
  // with the bijection recorded in source_ids.
  std::map<long long, int> remap;
  long long max_id = -1;
  for (auto [u, v] : raw.edges) {
    remap.emplace(u, 0);
    remap.emplace(v, 0);
    max_id = std::max({max_id, u, v});
  }
  std::vector<long long> source_ids;
  int n = 0;
  bool identity;
  if (raw.declared_n >= 0) {
    if (max_id >= raw.declared_n)
      throw Error(errc::out_of_range, "edge id exceeds declared vertex count", {max_id});
    n = static_cast<int>(raw.declared_n);
    identity = true;
  } else if (static_cast<long long>(remap.size()) == max_id + 1) {
    n = static_cast<int>(max_id + 1);
    identity = true;
  } else {
    n = static_cast<int>(remap.size());
    identity = false;
  }
  if (identity) {
    source_ids.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) source_ids[i] = i;
  } else {
    int next = 0;
    for (auto& [orig, id] : remap) {
      id = next++;
      source_ids.push_back(orig);
    }
  }
  Graph g(n);
  for (auto [u, v] : raw.edges) {
    int a = identity ? static_cast<int>(u) : remap[u];
    int b = identity ? static_cast<int>(v) : remap[v];
    if (opts.dedup && g.has_edge(a, b)) continue;
    g.add_edge(a, b);
  }
  return ParsedGraph{std::move(g), std::move(source_ids)};
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text, const ParseOptions& opts) {
  RawEdges raw;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0].front() == '#') {
      // "# n=N" pins the vertex count so isolated vertices survive.
      for (auto t : toks)
        if (t.size() > 2 && t.substr(0, 2) == "n=") raw.declared_n = parse_ll(t.substr(2), line_no);
      continue;
    }
    if (toks.size() != 2)
      throw Error(errc::malformed, "line " + std::to_string(line_no) + ": expected 'u v'",
                  {line_no});
    long long u = parse_ll(toks[0], line_no);
    long long v = parse_ll(toks[1], line_no);
    if (u < 0 || v < 0)
      throw Error(errc::malformed, "line " + std::to_string(line_no) + ": negative id", {line_no});
    if (u == v)
      throw Error(errc::self_loop, "line " + std::to_string(line_no) + ": self loop", {line_no});
    raw.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  if (!opts.dedup) {
    auto sorted = raw.edges;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1])
        throw Error(errc::duplicate_edge,
                    "duplicate edge " + std::to_string(sorted[i].first) + " " +
                        std::to_string(sorted[i].second));
  } else {
    std::sort(raw.edges.begin(), raw.edges.end());
    raw.edges.erase(std::unique(raw.edges.begin(), raw.edges.end()), raw.edges.end());
  }
  return build(raw, ParseOptions{});
}

ParsedGraph parse_dimacs(std::string_view text, const ParseOptions& opts) {
  RawEdges raw;
  int line_no = 0;
  size_t pos = 0;
  bool seen_header = false;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (toks.size() != 4 || toks[1] != "edge")
        throw Error(errc::malformed, "line " + std::to_string(line_no) + ": bad DIMACS header",
                    {line_no});
      raw.declared_n = parse_ll(toks[2], line_no);
      seen_header = true;
      continue;
    }
    if (toks[0] == "e") {
      if (toks.size() != 3)
        throw Error(errc::malformed, "line " + std::to_string(line_no) + ": bad edge line",
                    {line_no});
      long long u = parse_ll(toks[1], line_no) - 1;  // 1-based in DIMACS
      long long v = parse_ll(toks[2], line_no) - 1;
      if (u < 0 || v < 0)
        throw Error(errc::malformed, "line " + std::to_string(line_no) + ": id below 1",
                    {line_no});
      if (u == v)
        throw Error(errc::self_loop, "line " + std::to_string(line_no) + ": self loop", {line_no});
      raw.edges.emplace_back(std::min(u, v), std::max(u, v));
      continue;
    }
    throw Error(errc::malformed, "line " + std::to_string(line_no) + ": unknown record",
                {line_no});
  }
  if (!seen_header) throw Error(errc::malformed, "missing DIMACS header");
  if (opts.dedup) {
    std::sort(raw.edges.begin(), raw.edges.end());
    raw.edges.erase(std::unique(raw.edges.begin(), raw.edges.end()), raw.edges.end());
  } else {
    auto sorted = raw.edges;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 1; i < sorted.size(); ++i)
      if (sorted[i] == sorted[i - 1]) throw Error(errc::duplicate_edge, "duplicate edge");
  }
  return build(raw, ParseOptions{});
}

ParsedGraph parse_graph(std::string_view text, const ParseOptions& opts) {
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "p") return parse_dimacs(text, opts);
    if (toks[0] == "c" || toks[0] == "e") return parse_dimacs(text, opts);
    break;
  }
  return parse_edge_list(text, opts);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# n=" << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace oddcycles
