#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pvc {

using NodeId = long long;     // external id, non-negative
using Timestamp = long long;  // seconds

struct TemporalEdge {
  NodeId u = 0;
  NodeId v = 0;
  Timestamp t = 0;  // meaningful iff the owning list has timestamps
};

// Edge records in file order. Timestamps are all-or-none across the list.
struct TemporalEdgeList {
  std::vector<TemporalEdge> records;
  bool has_timestamps = false;
  std::string source;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Simple undirected graph over a contiguous internal index range.
// Internal indices are assigned by first appearance in the ingested edge
// sequence; the id map back to external ids is a bijection. Self-loops are
// dropped and duplicate edges collapsed at construction, so every node has
// degree >= 1 and adjacency lists are sorted and loop-free.
class Graph {
 public:
  Graph() = default;

  // Builds from external-id pairs, in order. Self-loops dropped, duplicates
  // collapsed, nodes are the endpoints of surviving edges.
  static Graph from_edges(const std::vector<std::pair<NodeId, NodeId>>& edges);

  int node_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;

  NodeId external_id(int v) const { return ext_[v]; }
  // Internal index for an external id, if the node is present.
  std::optional<int> internal_id(NodeId ext) const;

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<NodeId> ext_;
  std::unordered_map<NodeId, int> ext_to_int_;
  long long m_ = 0;
};

// Set of external ids labeled as core. Ids need not all appear in any given
// graph; metrics that consume a CoreLabel count the absent ones too.
struct CoreLabel {
  std::vector<NodeId> ids;  // sorted, unique

  std::size_t size() const { return ids.size(); }
  bool contains(NodeId id) const;
};

CoreLabel make_core_label(std::vector<NodeId> ids);

// Parses whitespace-separated "u v" or "u v t" lines. Blank lines and lines
// whose first non-blank character is '#' are skipped. Node ids must be
// non-negative integers; timestamp presence must be consistent across the
// file. Violations raise ParseError naming the offending line.
TemporalEdgeList parse_edge_list(std::istream& in, std::string source = "");
TemporalEdgeList load_edge_list(const std::string& path);

// Static graph from the records with t <= cutoff (all records when cutoff is
// absent). A cutoff requires timestamps.
Graph build_graph(const TemporalEdgeList& tel,
                  std::optional<Timestamp> cutoff = std::nullopt);

// Cumulative snapshots anchored at the first timestamp: cutoff_r =
// min_t + r * window for r = 1 .. floor((max_t - min_t) / window).
// Requires timestamps and window > 0; an empty list yields no snapshots.
std::vector<std::pair<Timestamp, Graph>> snapshot_series(
    const TemporalEdgeList& tel, Timestamp window);

// One "u v" line per edge in external ids, ordered by internal index pair.
// Re-ingesting the emitted text reproduces the same graph.
void write_edge_list(const Graph& g, std::ostream& os);

// One external id per line, same comment and blank-line rules as edge lists.
CoreLabel parse_core_file(std::istream& in, std::string source = "");
CoreLabel load_core_file(const std::string& path);
void write_core_file(const CoreLabel& core, std::ostream& os);

}  // namespace pvc
