#include <algorithm>
#include <vector>

#include "doctest.h"
#include "pvc/cover.hpp"
#include "pvc/oracle.hpp"
#include "test_util.hpp"

using namespace pvc;

namespace {

std::vector<int> internals(const Graph& g, const std::vector<NodeId>& ext) {
  std::vector<int> out;
  for (NodeId id : ext) out.push_back(*g.internal_id(id));
  std::sort(out.begin(), out.end());
  return out;
}

// Three stars sharing no nodes, center degree k/2 each, for even k >= 2:
// every node lies in some minimal cover of size <= k.
Graph disjoint_stars(int k) {
  REQUIRE(k % 2 == 0);
  int leaves = k / 2;
  std::vector<std::pair<NodeId, NodeId>> edges;
  NodeId next = 0;
  for (int s = 0; s < leaves; ++s) {
    NodeId center = next++;
    for (int l = 0; l < leaves + 1; ++l) edges.emplace_back(center, next++);
  }
  return Graph::from_edges(edges);
}

}  // namespace

TEST_CASE("exact_min_vertex_cover on closed-form graphs") {
  auto p3 = testutil::path(3);
  auto r = exact_min_vertex_cover(p3);
  CHECK(r.kstar == 1);
  CHECK(r.witness == internals(p3, {2}));
  CHECK(r.alpha == 2);

  auto k3 = testutil::clique(3);
  CHECK(exact_min_vertex_cover(k3).kstar == 2);

  auto s7 = testutil::star(7);
  auto rs = exact_min_vertex_cover(s7);
  CHECK(rs.kstar == 1);
  CHECK(rs.witness == internals(s7, {1}));

  // perfect matching: one endpoint per edge
  auto pm = testutil::make_graph({{1, 2}, {3, 4}, {5, 6}});
  CHECK(exact_min_vertex_cover(pm).kstar == 3);

  // complete bipartite K_{3,4}: the smaller side
  std::vector<std::pair<NodeId, NodeId>> kb;
  for (NodeId a = 0; a < 3; ++a) {
    for (NodeId b = 3; b < 7; ++b) kb.emplace_back(a, b);
  }
  CHECK(exact_min_vertex_cover(Graph::from_edges(kb)).kstar == 3);
}

TEST_CASE("exact_min_vertex_cover matches exhaustive search") {
  // frozen by the subset oracle: the 3-regular 10-node Kneser graph needs 6
  auto pet = testutil::petersen();
  CHECK(testutil::brute_min_cover_size(pet) == 6);
  auto r = exact_min_vertex_cover(pet);
  CHECK(r.kstar == 6);
  CHECK(r.alpha == 4);
  CHECK(is_minimal_cover(pet, r.witness));

  for (std::uint64_t s = 0; s < 8; ++s) {
    auto g = testutil::er_graph(13, 0.2 + 0.08 * static_cast<double>(s), s);
    auto er = exact_min_vertex_cover(g);
    CHECK(er.kstar == testutil::brute_min_cover_size(g));
    CHECK(static_cast<int>(er.witness.size()) == er.kstar);
    CHECK(is_vertex_cover(g, er.witness));
    CHECK(er.alpha == g.node_count() - er.kstar);
  }
}

TEST_CASE("exact_min_vertex_cover respects its node budget") {
  auto g = testutil::er_graph(30, 0.2, 1);
  CHECK_THROWS_AS(exact_min_vertex_cover(g, 24), BudgetExceeded);
  CHECK_NOTHROW(exact_min_vertex_cover(g, 30));

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < 70; ++i) edges.emplace_back(i, i + 1);
  auto big = Graph::from_edges(edges);
  CHECK_THROWS_AS(exact_min_vertex_cover(big, 100), BudgetExceeded);
}

TEST_CASE("high-degree forced nodes appear in some minimum witness") {
  for (std::uint64_t s = 0; s < 5; ++s) {
    auto g = testutil::er_graph(12, 0.3, 40 + s);
    auto r = exact_min_vertex_cover(g);
    auto kr = kernel_high_degree(g, r.kstar);
    CHECK(kr.feasible);
    for (int v : kr.forced) {
      CHECK(std::binary_search(r.witness.begin(), r.witness.end(), v));
    }
  }
}

TEST_CASE("union_minimal_covers_upto on stars") {
  // a star's only minimal covers are {center} and the full leaf set
  auto s6 = testutil::star(6);
  CHECK(union_minimal_covers_upto(s6, 2) == internals(s6, {1}));
  CHECK(union_minimal_covers_upto(s6, 5) == internals(s6, {1}));
  auto all = union_minimal_covers_upto(s6, 6);
  CHECK(all.size() == 7);  // leaf set finally fits the budget

  // below the minimum cover size the union is empty
  CHECK(union_minimal_covers_upto(s6, 0).empty());
  auto k3 = testutil::clique(3);
  CHECK(union_minimal_covers_upto(k3, 1).empty());
  CHECK(union_minimal_covers_upto(k3, 2).size() == 3);
}

TEST_CASE("union_minimal_covers_upto saturates on disjoint stars") {
  for (int k : {4, 6, 8}) {
    auto g = disjoint_stars(k);
    CHECK(g.node_count() == (k / 2) * (2 + k / 2));
    auto u = union_minimal_covers_upto(g, k);
    CHECK(static_cast<int>(u.size()) == g.node_count());
    // and the formula bound is tight within rounding
    CHECK(static_cast<double>(u.size()) <= union_bound_a(k));
  }
}

TEST_CASE("union_minimal_covers_upto matches exhaustive enumeration") {
  for (std::uint64_t s = 0; s < 6; ++s) {
    auto g = testutil::er_graph(11, 0.25, 500 + s);
    int kstar = testutil::brute_min_cover_size(g);
    for (int k : {kstar - 1, kstar, kstar + 1, kstar + 3}) {
      if (k < 0) continue;
      CHECK(union_minimal_covers_upto(g, k) ==
            testutil::brute_union_minimal_upto(g, k));
    }
  }
}

TEST_CASE("union grows with the budget and contains pruned covers") {
  for (std::uint64_t s = 0; s < 4; ++s) {
    auto g = testutil::er_graph(12, 0.3, 600 + s);
    int kstar = exact_min_vertex_cover(g).kstar;
    CHECK(union_minimal_covers_upto(g, kstar - 1).empty());

    std::vector<int> prev;
    for (int k = kstar; k <= kstar + 3; ++k) {
      auto cur = union_minimal_covers_upto(g, k);
      CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
      prev = cur;
    }

    auto [m, pruned] = sampled_cover_pair(g, s, 0);
    auto u = union_minimal_covers_upto(
        g, static_cast<int>(pruned.nodes.size()));
    CHECK(std::includes(u.begin(), u.end(), pruned.nodes.begin(),
                        pruned.nodes.end()));
  }
}

TEST_CASE("union_minimal_covers_upto validates arguments") {
  auto g = testutil::er_graph(30, 0.2, 2);
  CHECK_THROWS_AS(union_minimal_covers_upto(g, 10), BudgetExceeded);
  auto p3 = testutil::path(3);
  CHECK_THROWS_AS(union_minimal_covers_upto(p3, -1), std::invalid_argument);
}
