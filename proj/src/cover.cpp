#include "pvc/cover.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "pvc/parallel.hpp"
#include "pvc/rng.hpp"
#include "pvc/text.hpp"

namespace pvc {

namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& s,
                             const char* who) {
  std::vector<char> in(g.node_count(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.node_count()) {
      throw std::invalid_argument(std::string(who) +
                                  ": node index out of range");
    }
    in[v] = 1;
  }
  return in;
}

}  // namespace

std::pair<Cover, Cover> sampled_cover_pair(const Graph& g,
                                           std::uint64_t master,
                                           std::uint64_t run) {
  Cover m = greedy_matching_cover(g, derive_seed(master, 2 * run));
  Cover pruned = prune_to_minimal(g, m, derive_seed(master, 2 * run + 1));
  return {std::move(m), std::move(pruned)};
}

bool Cover::contains(int v) const {
  return std::binary_search(nodes.begin(), nodes.end(), v);
}

bool is_vertex_cover(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in = membership(g, s, "is_vertex_cover");
  // Each edge is examined once, from its higher endpoint.
  for (int u = 0; u < g.node_count(); ++u) {
    if (in[u]) continue;
    for (int v : g.neighbors(u)) {
      if (v > u) break;
      if (!in[v]) return false;
    }
  }
  return true;
}

bool is_minimal_cover(const Graph& g, const std::vector<int>& s) {
  if (!is_vertex_cover(g, s)) {
    throw std::invalid_argument("is_minimal_cover: s is not a vertex cover");
  }
  std::vector<char> in = membership(g, s, "is_minimal_cover");
  for (int v = 0; v < g.node_count(); ++v) {
    if (!in[v]) continue;
    bool has_outside = false;
    for (int w : g.neighbors(v)) {
      if (!in[w]) {
        has_outside = true;
        break;
      }
    }
    if (!has_outside) return false;  // s minus v still covers everything
  }
  return true;
}

Cover greedy_matching_cover(const Graph& g, std::uint64_t seed) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edge_count());
  for (int u = 0; u < g.node_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v > u) edges.emplace_back(u, v);
    }
  }
  std::mt19937_64 rng(seed);
  shuffle_seeded(edges, rng);

  Cover c;
  c.kind = CoverKind::Matching;
  c.seed = seed;
  std::vector<char> taken(g.node_count(), 0);
  for (const auto& [u, v] : edges) {
    if (taken[u] || taken[v]) continue;
    taken[u] = taken[v] = 1;
    c.matching_edges.emplace_back(u, v);
    c.nodes.push_back(u);
    c.nodes.push_back(v);
  }
  std::sort(c.nodes.begin(), c.nodes.end());
  return c;
}

Cover prune_to_minimal(const Graph& g, const Cover& c, std::uint64_t seed) {
  if (!is_vertex_cover(g, c.nodes)) {
    throw std::invalid_argument("prune_to_minimal: input is not a cover");
  }
  std::vector<char> in = membership(g, c.nodes, "prune_to_minimal");
  std::vector<int> order(c.nodes);
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::mt19937_64 rng(seed);
  shuffle_seeded(order, rng);

  // Single pass suffices: dropping v requires all of v's neighbors to be in
  // the cover, and a node kept because some neighbor lay outside can never
  // become droppable later, as membership only shrinks.
  for (int v : order) {
    bool all_in = true;
    for (int w : g.neighbors(v)) {
      if (!in[w]) {
        all_in = false;
        break;
      }
    }
    if (all_in) in[v] = 0;
  }

  Cover out;
  out.kind = CoverKind::Minimal;
  out.seed = seed;
  for (int v = 0; v < g.node_count(); ++v) {
    if (in[v]) out.nodes.push_back(v);
  }
  return out;
}

KernelResult kernel_high_degree(const Graph& g, int k) {
  KernelResult r;
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > k) r.forced.push_back(v);
  }
  r.feasible = static_cast<int>(r.forced.size()) <= k;
  return r;
}

double union_bound_a(int k) {
  if (k < 0) throw std::invalid_argument("union_bound_a: k < 0");
  double kd = k;
  return (kd + 1) * (kd + 1) / 4.0 + kd;
}

double union_bound_b(int k, int kstar) {
  if (kstar < 0) throw std::invalid_argument("union_bound_b: kstar < 0");
  if (kstar > k) throw std::invalid_argument("union_bound_b: kstar > k");
  return static_cast<double>(k - kstar + 2) * static_cast<double>(kstar);
}

double BoundsReport::bound_a_reported() const {
  return std::min(bound_a, static_cast<double>(trivial_cap));
}

double BoundsReport::bound_b_reported() const {
  return std::min(bound_b, static_cast<double>(trivial_cap));
}

BoundsReport approx_kstar_bounds(const Graph& g, int n_runs,
                                 std::uint64_t seed, std::optional<int> k,
                                 int threads) {
  if (n_runs < 1) throw std::invalid_argument("approx_kstar_bounds: n_runs < 1");

  std::vector<int> matching_size(n_runs);
  std::vector<int> pruned_size(n_runs);
  parallel_for(n_runs, threads, [&](int j) {
    auto [m, pruned] = sampled_cover_pair(g, seed, j);
    matching_size[j] = static_cast<int>(m.nodes.size());
    pruned_size[j] = static_cast<int>(pruned.nodes.size());
  });

  BoundsReport r;
  r.l = 0;
  r.u = g.node_count();
  for (int j = 0; j < n_runs; ++j) {
    r.l = std::max(r.l, matching_size[j] / 2);
    r.u = std::min(r.u, pruned_size[j]);
  }
  r.k_supplied = k.has_value();
  r.k = k.value_or(r.u);
  r.trivial_cap = g.node_count();
  r.bound_a = union_bound_a(r.k);
  r.bound_b = static_cast<double>(r.k - r.l + 2) * static_cast<double>(r.u);
  return r;
}

GuaranteedMembers guaranteed_members(const Graph& g,
                                     const std::vector<int>& core) {
  if (!is_vertex_cover(g, core)) {
    throw std::invalid_argument("guaranteed_members: core is not a cover");
  }
  std::vector<char> in = membership(g, core, "guaranteed_members");

  // interior: core node all of whose neighbors are core too
  std::vector<char> interior(g.node_count(), 0);
  for (int v = 0; v < g.node_count(); ++v) {
    if (!in[v]) continue;
    interior[v] = 1;
    for (int w : g.neighbors(v)) {
      if (!in[w]) {
        interior[v] = 0;
        break;
      }
    }
  }

  GuaranteedMembers out;
  for (int v = 0; v < g.node_count(); ++v) {
    if (!in[v]) continue;
    if (!interior[v]) {
      out.with_fringe_edge.push_back(v);
      continue;
    }
    bool interior_nbr = false;
    for (int w : g.neighbors(v)) {
      if (interior[w]) {
        interior_nbr = true;
        break;
      }
    }
    if (interior_nbr) {
      out.with_interior_neighbor.push_back(v);
    } else {
      out.neither.push_back(v);
    }
  }

  std::size_t total = out.with_fringe_edge.size() +
                      out.with_interior_neighbor.size() + out.neither.size();
  if (total > 0) {
    out.frac_fringe_edge =
        static_cast<double>(out.with_fringe_edge.size()) / total;
    out.frac_interior_neighbor =
        static_cast<double>(out.with_interior_neighbor.size()) / total;
  }
  return out;
}

void write_cover(const Graph& g, const Cover& c, std::ostream& os) {
  std::vector<NodeId> ids;
  ids.reserve(c.nodes.size());
  for (int v : c.nodes) ids.push_back(g.external_id(v));
  std::sort(ids.begin(), ids.end());
  for (NodeId id : ids) os << id << "\n";
}

void write_bounds_report(const BoundsReport& r, std::ostream& os) {
  os << "k=" << r.k << "\n";
  os << "k_supplied=" << (r.k_supplied ? 1 : 0) << "\n";
  os << "l=" << r.l << "\n";
  os << "u=" << r.u << "\n";
  os << "kstar_certified=" << (r.kstar_certified() ? 1 : 0) << "\n";
  os << "bound_a=" << format_double(r.bound_a) << "\n";
  os << "bound_b=" << format_double(r.bound_b) << "\n";
  os << "bound_a_reported=" << format_double(r.bound_a_reported()) << "\n";
  os << "bound_b_reported=" << format_double(r.bound_b_reported()) << "\n";
  os << "trivial_cap=" << r.trivial_cap << "\n";
}

}  // namespace pvc
