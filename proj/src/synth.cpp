#include "pvc/synth.hpp"

#include <cmath>
#include <stdexcept>

#include "pvc/cover.hpp"
#include "pvc/oracle.hpp"
#include "pvc/rng.hpp"

namespace pvc {

namespace {

void validate(const SbmParams& sp) {
  if (sp.core_size < 1 || sp.core_size > sp.n) {
    throw std::invalid_argument("gen_core_fringe_sbm: need 1 <= core_size <= n");
  }
  if (!(sp.p >= 0.0 && sp.p <= 1.0) || !(sp.q >= 0.0 && sp.q <= 1.0)) {
    throw std::invalid_argument("gen_core_fringe_sbm: p, q must be in [0, 1]");
  }
}

}  // namespace

SbmSample gen_core_fringe_sbm(const SbmParams& sp) {
  validate(sp);
  const int k = sp.core_size;
  std::mt19937_64 rng(sp.seed);

  std::vector<std::pair<NodeId, NodeId>> edges;
  // Pairs with i >= k are fringe-fringe and draw nothing.
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < sp.n; ++j) {
      const double prob = (j < k) ? sp.p : sp.q;
      if (uniform_unit(rng) < prob) edges.emplace_back(i, j);
    }
  }

  SbmSample out;
  out.graph = Graph::from_edges(edges);
  std::vector<NodeId> core_ids(k);
  for (int i = 0; i < k; ++i) core_ids[i] = i;
  out.core = make_core_label(std::move(core_ids));
  return out;
}

SbmTheoryReport check_sbm_theory(const Graph& g, const CoreLabel& core,
                                 const SbmParams& params, int union_budget) {
  std::vector<int> core_internal;
  for (int v = 0; v < g.node_count(); ++v) {
    if (core.contains(g.external_id(v))) core_internal.push_back(v);
  }
  if (!is_vertex_cover(g, core_internal)) {
    throw std::invalid_argument(
        "check_sbm_theory: an edge has both endpoints outside the core");
  }

  SbmTheoryReport rep;
  rep.every_core_has_fringe_edge = true;
  for (NodeId id : core.ids) {
    auto v = g.internal_id(id);
    bool fringe_edge = false;
    if (v) {
      for (int w : g.neighbors(*v)) {
        if (!core.contains(g.external_id(w))) {
          fringe_edge = true;
          break;
        }
      }
    }
    if (!fringe_edge) {
      rep.every_core_has_fringe_edge = false;
      break;
    }
  }

  const double k = static_cast<double>(core.size());
  if (params.p > 0.0 && k >= 1.0) {
    rep.union_cap = k * (3.0 * std::log(k) / params.p + 3.0);
  }
  if (g.node_count() <= union_budget) {
    auto u = union_minimal_covers_upto(
        g, static_cast<int>(core.size()), union_budget);
    rep.union_size = static_cast<int>(u.size());
    if (rep.union_cap) {
      rep.union_within_cap = static_cast<double>(u.size()) <= *rep.union_cap;
    }
  }
  return rep;
}

}  // namespace pvc
