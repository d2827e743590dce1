#include "pvc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace pvc {

namespace {

[[noreturn]] void parse_fail(const std::string& source, long long line,
                             const std::string& why) {
  std::ostringstream msg;
  msg << (source.empty() ? "<input>" : source) << ":" << line << ": " << why;
  throw ParseError(msg.str());
}

bool parse_int(const std::string& tok, long long& out) {
  const char* b = tok.data();
  const char* e = b + tok.size();
  auto res = std::from_chars(b, e, out);
  return res.ec == std::errc() && res.ptr == e;
}

}  // namespace

Graph Graph::from_edges(const std::vector<std::pair<NodeId, NodeId>>& edges) {
  Graph g;
  auto intern = [&g](NodeId ext) {
    auto it = g.ext_to_int_.find(ext);
    if (it != g.ext_to_int_.end()) return it->second;
    int id = static_cast<int>(g.ext_.size());
    g.ext_.push_back(ext);
    g.adj_.emplace_back();
    g.ext_to_int_.emplace(ext, id);
    return id;
  };

  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const auto& [eu, ev] : edges) {
    if (eu == ev) continue;
    int u = intern(eu);
    int v = intern(ev);
    int lo = std::min(u, v);
    int hi = std::max(u, v);
    std::uint64_t key =
        (static_cast<std::uint64_t>(lo) << 32) | static_cast<std::uint64_t>(hi);
    if (!seen.insert(key).second) continue;
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.m_;
  }
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<int> Graph::internal_id(NodeId ext) const {
  auto it = ext_to_int_.find(ext);
  if (it == ext_to_int_.end()) return std::nullopt;
  return it->second;
}

bool CoreLabel::contains(NodeId id) const {
  return std::binary_search(ids.begin(), ids.end(), id);
}

CoreLabel make_core_label(std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return CoreLabel{std::move(ids)};
}

TemporalEdgeList parse_edge_list(std::istream& in, std::string source) {
  TemporalEdgeList tel;
  tel.source = std::move(source);

  std::string line;
  long long lineno = 0;
  bool saw_record = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;

    if (toks.size() != 2 && toks.size() != 3) {
      parse_fail(tel.source, lineno,
                 "expected 'u v' or 'u v t', got " +
                     std::to_string(toks.size()) + " tokens");
    }
    long long u, v, t = 0;
    if (!parse_int(toks[0], u) || !parse_int(toks[1], v)) {
      parse_fail(tel.source, lineno, "node ids must be integers");
    }
    if (u < 0 || v < 0) {
      parse_fail(tel.source, lineno, "node ids must be non-negative");
    }
    bool timed = toks.size() == 3;
    if (timed && !parse_int(toks[2], t)) {
      parse_fail(tel.source, lineno, "timestamp must be an integer");
    }
    if (!saw_record) {
      tel.has_timestamps = timed;
      saw_record = true;
    } else if (timed != tel.has_timestamps) {
      parse_fail(tel.source, lineno,
                 "timestamp present on some lines but not others");
    }
    tel.records.push_back(TemporalEdge{u, v, t});
  }
  return tel;
}

TemporalEdgeList load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list: " + path);
  return parse_edge_list(in, path);
}

Graph build_graph(const TemporalEdgeList& tel,
                  std::optional<Timestamp> cutoff) {
  if (cutoff && !tel.has_timestamps) {
    throw std::invalid_argument(
        "build_graph: cutoff given but edge list has no timestamps");
  }
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(tel.records.size());
  for (const auto& r : tel.records) {
    if (cutoff && r.t > *cutoff) continue;
    edges.emplace_back(r.u, r.v);
  }
  return Graph::from_edges(edges);
}

std::vector<std::pair<Timestamp, Graph>> snapshot_series(
    const TemporalEdgeList& tel, Timestamp window) {
  if (window <= 0) throw std::invalid_argument("snapshot_series: window <= 0");
  if (!tel.has_timestamps) {
    throw std::invalid_argument("snapshot_series: edge list has no timestamps");
  }
  std::vector<std::pair<Timestamp, Graph>> out;
  if (tel.records.empty()) return out;

  Timestamp lo = tel.records[0].t;
  Timestamp hi = tel.records[0].t;
  for (const auto& r : tel.records) {
    lo = std::min(lo, r.t);
    hi = std::max(hi, r.t);
  }
  Timestamp span = hi - lo;
  long long count = span / window;
  out.reserve(count);
  for (long long r = 1; r <= count; ++r) {
    Timestamp cutoff = lo + r * window;
    out.emplace_back(cutoff, build_graph(tel, cutoff));
  }
  return out;
}

void write_edge_list(const Graph& g, std::ostream& os) {
  for (int u = 0; u < g.node_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v > u) os << g.external_id(u) << " " << g.external_id(v) << "\n";
    }
  }
}

CoreLabel parse_core_file(std::istream& in, std::string source) {
  std::vector<NodeId> ids;
  std::string line;
  long long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    std::vector<std::string> toks;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty() || toks[0][0] == '#') continue;
    long long id;
    if (toks.size() != 1 || !parse_int(toks[0], id)) {
      parse_fail(source, lineno, "expected one node id per line");
    }
    if (id < 0) parse_fail(source, lineno, "node ids must be non-negative");
    ids.push_back(id);
  }
  return make_core_label(std::move(ids));
}

CoreLabel load_core_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open core file: " + path);
  return parse_core_file(in, path);
}

void write_core_file(const CoreLabel& core, std::ostream& os) {
  for (NodeId id : core.ids) os << id << "\n";
}

}  // namespace pvc
