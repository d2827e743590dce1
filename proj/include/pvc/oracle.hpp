#pragma once

#include <stdexcept>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : std::runtime_error(what) {}
};

struct ExactResult {
  int kstar = 0;              // minimum vertex cover size
  std::vector<int> witness;   // one minimum cover, sorted
  int alpha = 0;              // maximum independent set size, n - kstar
};

// Exact minimum vertex cover by branch and bound: branch on a maximum-degree
// uncovered vertex (take it, or take its whole remaining neighborhood), with
// a greedy-matching lower bound and the degree > budget forcing rule at each
// node. Refuses graphs larger than node_budget.
ExactResult exact_min_vertex_cover(const Graph& g, int node_budget = 64);

// Union of all minimal vertex covers of size <= k, as a sorted node list.
// Exact: minimal covers are complements of maximal independent sets, which
// are enumerated with size pruning. Refuses graphs larger than node_budget.
std::vector<int> union_minimal_covers_upto(const Graph& g, int k,
                                           int node_budget = 24);

}  // namespace pvc
