#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

enum class CoverKind { Matching, Minimal, Exact };

// A vertex cover over a graph's internal indices. matching_edges is
// populated only for Matching covers, where nodes are exactly the endpoints
// of the recorded pairwise-disjoint edges.
struct Cover {
  std::vector<int> nodes;  // sorted, unique
  CoverKind kind = CoverKind::Minimal;
  std::vector<std::pair<int, int>> matching_edges;
  std::uint64_t seed = 0;

  bool contains(int v) const;
};

struct KernelResult {
  std::vector<int> forced;  // nodes in every cover of size <= k
  bool feasible = true;     // false when |forced| > k already exceeds budget
};

// Output of the randomized lower/upper bounding procedure for the minimum
// cover size. l and u bracket kstar; l == u certifies it. bound_a and
// bound_b bound the size of the union of all minimal covers of size <= k;
// consumers cap them at trivial_cap (the node count).
struct BoundsReport {
  int k = 0;
  bool k_supplied = false;  // false: k defaulted to u
  int l = 0;
  int u = 0;
  double bound_a = 0.0;  // (k+1)^2/4 + k
  double bound_b = 0.0;  // (k - l + 2) * u
  int trivial_cap = 0;

  bool kstar_certified() const { return l == u; }
  double bound_a_reported() const;
  double bound_b_reported() const;
};

// Partition of a planted cover by the structural conditions that force
// membership in the union of minimal covers: a neighbor outside the cover,
// or (failing that) a neighbor in the cover's interior. The two sets are
// disjoint by construction; `neither` holds the rest.
struct GuaranteedMembers {
  std::vector<int> with_fringe_edge;
  std::vector<int> with_interior_neighbor;
  std::vector<int> neither;
  double frac_fringe_edge = 0.0;
  double frac_interior_neighbor = 0.0;
};

// True iff every edge has an endpoint in s. Duplicates in s are ignored.
bool is_vertex_cover(const Graph& g, const std::vector<int>& s);

// True iff no single node can be dropped from s while remaining a cover,
// equivalently iff every node of s has a neighbor outside s. Requires s to
// be a vertex cover.
bool is_minimal_cover(const Graph& g, const std::vector<int>& s);

// Greedy maximal matching in a seed-determined uniformly random edge order;
// both endpoints of an edge are taken iff neither is taken yet. The result
// covers the graph with at most twice the minimum cover size.
Cover greedy_matching_cover(const Graph& g, std::uint64_t seed);

// Drops redundant nodes from a cover in a seed-determined random order; a
// node is dropped iff all its neighbors are currently in the cover. One
// pass yields a minimal cover: a node kept because some neighbor was
// outside stays non-redundant, since the cover only shrinks.
Cover prune_to_minimal(const Graph& g, const Cover& c, std::uint64_t seed);

// Nodes of degree > k, which belong to every cover of size <= k. When more
// than k nodes are forced, no such cover exists and feasible is false.
KernelResult kernel_high_degree(const Graph& g, int k);

// Size bounds on the union of all minimal covers of size <= k.
double union_bound_a(int k);               // (k+1)^2/4 + k
double union_bound_b(int k, int kstar);    // (k - kstar + 2) * kstar

// Brackets the minimum cover size with n_runs matching covers and their
// pruned forms: l = max matching size / 2, u = min pruned size. When k is
// not supplied it defaults to u. Runs use seeds derived from `seed` by
// counter and may execute on `threads` workers; results are identical
// either way.
BoundsReport approx_kstar_bounds(const Graph& g, int n_runs,
                                 std::uint64_t seed,
                                 std::optional<int> k = std::nullopt,
                                 int threads = 1);

// Matching cover and its pruned form for run `run` under a master seed.
// The bounding procedure and the union ranking both draw covers through
// this schedule, so a (graph, master seed, run index) triple always denotes
// the same pair, independent of how many runs a caller requests.
std::pair<Cover, Cover> sampled_cover_pair(const Graph& g,
                                           std::uint64_t master,
                                           std::uint64_t run);

// Classifies a planted cover's nodes by the membership guarantees above.
// Requires core to be a vertex cover.
GuaranteedMembers guaranteed_members(const Graph& g,
                                     const std::vector<int>& core);

// One external id per line, ascending.
void write_cover(const Graph& g, const Cover& c, std::ostream& os);

// Flat key=value lines.
void write_bounds_report(const BoundsReport& r, std::ostream& os);

}  // namespace pvc
