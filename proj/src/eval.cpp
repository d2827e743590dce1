#include "pvc/eval.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "pvc/rng.hpp"
#include "pvc/text.hpp"

namespace pvc {

namespace {

void require_core(const CoreLabel& core, const char* who) {
  if (core.size() == 0) {
    throw std::invalid_argument(std::string(who) + ": empty core label");
  }
}

Ranking rank_for(const Graph& g, RankMethod method, const SweepConfig& cfg,
                 std::uint64_t seed) {
  switch (method) {
    case RankMethod::Umvc:
      return umvc_rank(g, cfg.n_covers, seed, cfg.threads);
    case RankMethod::Degree:
      return degree_rank(g);
    case RankMethod::BorgattiEverett:
      return be_scores(g, cfg.be_tol, cfg.be_max_iter);
    case RankMethod::Betweenness:
      return betweenness_rank(g, cfg.threads);
  }
  throw std::invalid_argument("temporal_sweep: unknown method");
}

}  // namespace

double precision_at_core_size(std::span<const NodeId> ranked,
                              const CoreLabel& core) {
  require_core(core, "precision_at_core_size");
  const std::size_t top = std::min(core.size(), ranked.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < top; ++i) {
    if (core.contains(ranked[i])) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(core.size());
}

double precision_at_core_size(const Graph& g, const Ranking& r,
                              const CoreLabel& core) {
  return precision_at_core_size(ranked_ids(g, r), core);
}

double auprc(std::span<const NodeId> ranked, const CoreLabel& core) {
  require_core(core, "auprc");
  std::size_t hits = 0;
  double sum = 0.0;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (core.contains(ranked[i])) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(i + 1);
    }
  }
  return sum / static_cast<double>(core.size());
}

double auprc(const Graph& g, const Ranking& r, const CoreLabel& core) {
  return auprc(ranked_ids(g, r), core);
}

UpperBounds upper_bounds(const Graph& g, const CoreLabel& core,
                         std::uint64_t seed) {
  require_core(core, "upper_bounds");
  std::vector<NodeId> present;
  std::vector<NodeId> rest;
  for (int v = 0; v < g.node_count(); ++v) {
    NodeId id = g.external_id(v);
    (core.contains(id) ? present : rest).push_back(id);
  }
  std::sort(present.begin(), present.end());
  std::mt19937_64 rng(seed);
  shuffle_seeded(rest, rng);

  std::vector<NodeId> ideal = present;
  ideal.insert(ideal.end(), rest.begin(), rest.end());

  UpperBounds ub;
  ub.pcs_upper =
      static_cast<double>(present.size()) / static_cast<double>(core.size());
  ub.auprc_upper = auprc(ideal, core);
  return ub;
}

std::vector<EvalRow> temporal_sweep(const TemporalEdgeList& tel,
                                    const CoreLabel& core,
                                    const SweepConfig& config) {
  require_core(core, "temporal_sweep");
  if (config.methods.empty()) {
    throw std::invalid_argument("temporal_sweep: no methods requested");
  }
  auto snapshots = snapshot_series(tel, config.window);

  std::vector<EvalRow> rows;
  rows.reserve(snapshots.size() * config.methods.size());
  for (std::size_t i = 0; i < snapshots.size(); ++i) {
    const auto& [cutoff, g] = snapshots[i];
    UpperBounds ub = upper_bounds(g, core, derive_seed(config.seed, 2 * i + 1));
    for (RankMethod method : config.methods) {
      Ranking r = rank_for(g, method, config, derive_seed(config.seed, 2 * i));
      auto ids = ranked_ids(g, r);
      EvalRow row;
      row.cutoff = cutoff;
      row.method = method;
      row.pcs = precision_at_core_size(ids, core);
      row.auprc = auprc(ids, core);
      row.pcs_upper = ub.pcs_upper;
      row.auprc_upper = ub.auprc_upper;
      row.n_nodes = g.node_count();
      row.n_edges = g.edge_count();
      rows.push_back(row);
    }
  }
  return rows;
}

void write_eval_csv(const std::vector<EvalRow>& rows, std::ostream& os) {
  os << "cutoff,method,pcs,auprc,pcs_upper,auprc_upper,n,m\n";
  for (const auto& row : rows) {
    os << row.cutoff << "," << to_string(row.method) << ","
       << format_double(row.pcs) << "," << format_double(row.auprc) << ","
       << format_double(row.pcs_upper) << ","
       << format_double(row.auprc_upper) << "," << row.n_nodes << ","
       << row.n_edges << "\n";
  }
}

}  // namespace pvc
