#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pvc/graph.hpp"

namespace pvc {

enum class RankMethod { Umvc, Degree, BorgattiEverett, Betweenness };

std::string to_string(RankMethod m);
std::optional<RankMethod> parse_rank_method(std::string_view name);

// A full ordering of a graph's nodes, best candidate first. Ties never
// survive: order is sorted by (in_union desc, score desc, external id asc).
// in_union is all-false except for the union-of-minimal-covers method;
// converged is meaningful only for the iterative scorer.
struct Ranking {
  std::vector<int> order;      // internal indices
  std::vector<double> score;   // by internal index
  std::vector<bool> in_union;  // by internal index
  RankMethod method = RankMethod::Degree;
  std::optional<std::uint64_t> seed;
  bool converged = true;
};

inline constexpr int kDefaultCoverCount = 300;

// Ranks nodes that appear in at least one of n_covers sampled minimal
// covers ahead of everything else, ordering both groups by degree. Covers
// come from the shared master-seed schedule, so the union for a smaller
// n_covers is a subset of the union for a larger one at the same seed. The
// planted cover's size is never consulted.
Ranking umvc_rank(const Graph& g, int n_covers, std::uint64_t seed,
                  int threads = 1);

// Degree ordering.
Ranking degree_rank(const Graph& g);

// Core scores via the shifted power iteration s <- normalize((A + I) s)
// from a normalized-degree start, stopping when the max-norm step falls
// below tol or after max_iter steps (converged=false). The shift keeps
// bipartite components from oscillating between period-2 iterates; fixed
// points and the dominant eigendirection are unchanged. Scores stay
// non-negative with unit Euclidean norm.
Ranking be_scores(const Graph& g, double tol = 1e-10, int max_iter = 1000);

// Exact shortest-path betweenness, each unordered pair counted once.
Ranking betweenness_rank(const Graph& g, int threads = 1);

// CSV with header rank,external_id,score,in_union,method.
void write_ranking_csv(const Graph& g, const Ranking& r, std::ostream& os);

// Ranked external ids, in order.
std::vector<NodeId> ranked_ids(const Graph& g, const Ranking& r);

}  // namespace pvc
