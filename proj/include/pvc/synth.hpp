#pragma once

#include <cstdint>
#include <optional>

#include "pvc/graph.hpp"

namespace pvc {

// Core-fringe block model: core-core pairs connect with probability p,
// core-fringe pairs with probability q, fringe-fringe pairs never. The core
// is therefore a vertex cover of every realization.
struct SbmParams {
  int core_size = 1;  // 1 <= core_size <= n
  int n = 1;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
};

struct SbmSample {
  Graph graph;     // nodes are the endpoints of realized edges
  CoreLabel core;  // external ids 0 .. core_size-1, isolated ones included
};

// One uniform variate per eligible pair, drawn in the fixed lexicographic
// pair order; identical parameters give byte-identical graphs.
SbmSample gen_core_fringe_sbm(const SbmParams& params);

struct SbmTheoryReport {
  // Whether every labeled core node has at least one edge to a fringe node;
  // when true the whole core lies in the union of minimal covers of size
  // <= |core|.
  bool every_core_has_fringe_edge = false;
  // |core| * (3 ln |core| / p + 3), the high-probability cap on that union's
  // size; absent when p == 0.
  std::optional<double> union_cap;
  // Exact union size and cap comparison, computed only on instances small
  // enough for the enumeration oracle.
  std::optional<int> union_size;
  std::optional<bool> union_within_cap;
};

// Checks the realized sample against the generator's theoretical behavior.
// Requires the label to cover the graph (no fringe-fringe edges).
SbmTheoryReport check_sbm_theory(const Graph& g, const CoreLabel& core,
                                 const SbmParams& params,
                                 int union_budget = 24);

}  // namespace pvc
