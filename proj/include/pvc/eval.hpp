#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "pvc/graph.hpp"
#include "pvc/rank.hpp"

namespace pvc {

// Both metrics denominate by the full label size, so core nodes missing
// from the ranked graph count against the score. Requires a non-empty core.

// Fraction of the top |core| ranked positions holding core nodes.
double precision_at_core_size(std::span<const NodeId> ranked,
                              const CoreLabel& core);
double precision_at_core_size(const Graph& g, const Ranking& r,
                              const CoreLabel& core);

// Uninterpolated average precision of the ranking against the core.
double auprc(std::span<const NodeId> ranked, const CoreLabel& core);
double auprc(const Graph& g, const Ranking& r, const CoreLabel& core);

struct UpperBounds {
  double pcs_upper = 0.0;    // reachable fraction: present core / all core
  double auprc_upper = 0.0;  // average precision of the ideal ordering
};

// Best scores any ranking of this graph could reach: the ideal ordering
// places present core nodes first (ascending id) and the rest in a seeded
// random order.
UpperBounds upper_bounds(const Graph& g, const CoreLabel& core,
                         std::uint64_t seed);

struct EvalRow {
  Timestamp cutoff = 0;
  RankMethod method = RankMethod::Degree;
  double pcs = 0.0;
  double auprc = 0.0;
  double pcs_upper = 0.0;
  double auprc_upper = 0.0;
  int n_nodes = 0;
  long long n_edges = 0;
};

struct SweepConfig {
  std::vector<RankMethod> methods;
  Timestamp window = 0;  // seconds
  int n_covers = kDefaultCoverCount;
  std::uint64_t seed = 0;
  int threads = 1;
  double be_tol = 1e-10;
  int be_max_iter = 1000;
};

// One row per (snapshot, method), ordered by cutoff then by the given
// method order. Snapshot i draws its method and tie-breaking seeds from the
// master seed by counter.
std::vector<EvalRow> temporal_sweep(const TemporalEdgeList& tel,
                                    const CoreLabel& core,
                                    const SweepConfig& config);

// CSV with header cutoff,method,pcs,auprc,pcs_upper,auprc_upper,n,m.
void write_eval_csv(const std::vector<EvalRow>& rows, std::ostream& os);

}  // namespace pvc
