#include "pvc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

namespace pvc {

namespace {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;
  Mask all = 0;
};

MaskGraph to_masks(const Graph& g, int node_budget, const char* who) {
  const int n = g.node_count();
  if (n > node_budget) {
    throw BudgetExceeded(std::string(who) + ": graph has " +
                         std::to_string(n) + " nodes, budget is " +
                         std::to_string(node_budget));
  }
  if (n > 64) {
    throw BudgetExceeded(std::string(who) +
                         ": graphs over 64 nodes are not supported");
  }
  MaskGraph mg;
  mg.n = n;
  mg.adj.assign(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) mg.adj[u] |= bit(v);
    mg.all |= bit(u);
  }
  return mg;
}

// Size of a greedy maximal matching among edges not touching `covered`;
// any cover of those edges needs at least this many further nodes.
int matching_lower_bound(const MaskGraph& mg, Mask covered) {
  Mask used = covered;
  int count = 0;
  for (int v = 0; v < mg.n; ++v) {
    if (used & bit(v)) continue;
    Mask cand = mg.adj[v] & ~used;
    if (!cand) continue;
    used |= bit(v) | bit(std::countr_zero(cand));
    ++count;
  }
  return count;
}

// Deterministic maximal matching cover pruned to minimal, as the initial
// upper bound and witness.
Mask greedy_initial_cover(const MaskGraph& mg) {
  Mask cover = 0;
  for (int v = 0; v < mg.n; ++v) {
    if (cover & bit(v)) continue;
    Mask cand = mg.adj[v] & ~cover;
    if (cand) cover |= bit(v) | bit(std::countr_zero(cand));
  }
  for (int v = 0; v < mg.n; ++v) {
    if ((cover & bit(v)) && (mg.adj[v] & ~cover) == 0) cover &= ~bit(v);
  }
  return cover;
}

struct ExactSolver {
  const MaskGraph& mg;
  int best;
  Mask best_mask;

  void search(Mask cover, int size) {
    // Force every vertex whose remaining degree exceeds what a cover
    // smaller than `best` could still spend on it.
    for (;;) {
      if (size >= best) return;
      const int budget = best - 1 - size;
      Mask forced = 0;
      for (Mask rest = mg.all & ~cover; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (std::popcount(mg.adj[v] & ~cover) > budget) forced |= bit(v);
      }
      if (!forced) break;
      cover |= forced;
      size += std::popcount(forced);
    }
    if (size >= best) return;

    int branch_v = -1;
    int branch_deg = 0;
    for (Mask rest = mg.all & ~cover; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      int d = std::popcount(mg.adj[v] & ~cover);
      if (d > branch_deg) {
        branch_deg = d;
        branch_v = v;
      }
    }
    if (branch_deg == 0) {  // no edges left
      best = size;
      best_mask = cover;
      return;
    }
    if (size + matching_lower_bound(mg, cover) >= best) return;

    // Take the max-degree vertex, or commit it to stay out and take its
    // whole remaining neighborhood.
    search(cover | bit(branch_v), size + 1);
    Mask nbrs = mg.adj[branch_v] & ~cover;
    search(cover | nbrs, size + std::popcount(nbrs));
  }
};

std::vector<int> mask_to_nodes(Mask m) {
  std::vector<int> out;
  out.reserve(std::popcount(m));
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

// Maximal-independent-set enumeration with pivoting. A set C is a minimal
// vertex cover iff its complement is a maximal independent set (C covers
// iff V\C is independent; minimality of C iff no node can move across), so
// the union of minimal covers of size <= k is the union of complements of
// maximal independent sets of size >= n - k.
struct UnionSolver {
  const MaskGraph& mg;
  std::vector<Mask> non_nbrs;  // complement adjacency
  int min_is_size;
  Mask result = 0;

  void expand(Mask r, int rsize, Mask p, Mask x) {
    if (result == mg.all) return;  // nothing left to add
    if (!p && !x) {
      if (rsize >= min_is_size) result |= mg.all & ~r;
      return;
    }
    if (rsize + std::popcount(p) < min_is_size) return;

    // pivot with the most candidates excluded
    int pivot = -1;
    int pivot_gain = -1;
    for (Mask rest = p | x; rest; rest &= rest - 1) {
      int u = std::countr_zero(rest);
      int gain = std::popcount(p & non_nbrs[u]);
      if (gain > pivot_gain) {
        pivot_gain = gain;
        pivot = u;
      }
    }
    for (Mask cand = p & ~non_nbrs[pivot]; cand; cand &= cand - 1) {
      int v = std::countr_zero(cand);
      expand(r | bit(v), rsize + 1, p & non_nbrs[v], x & non_nbrs[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  }
};

}  // namespace

ExactResult exact_min_vertex_cover(const Graph& g, int node_budget) {
  MaskGraph mg = to_masks(g, node_budget, "exact_min_vertex_cover");
  Mask init = greedy_initial_cover(mg);
  ExactSolver solver{mg, std::popcount(init), init};
  solver.search(0, 0);

  ExactResult r;
  r.kstar = solver.best;
  r.witness = mask_to_nodes(solver.best_mask);
  r.alpha = mg.n - solver.best;
  return r;
}

std::vector<int> union_minimal_covers_upto(const Graph& g, int k,
                                           int node_budget) {
  if (k < 0) throw std::invalid_argument("union_minimal_covers_upto: k < 0");
  MaskGraph mg = to_masks(g, node_budget, "union_minimal_covers_upto");

  UnionSolver solver{mg, {}, std::max(0, mg.n - k)};
  solver.non_nbrs.assign(mg.n, 0);
  for (int v = 0; v < mg.n; ++v) {
    solver.non_nbrs[v] = mg.all & ~mg.adj[v] & ~bit(v);
  }
  solver.expand(0, 0, mg.all, 0);
  return mask_to_nodes(solver.result);
}

}  // namespace pvc
