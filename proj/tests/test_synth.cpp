#include <cmath>
#include <sstream>

#include "doctest.h"
#include "pvc/cover.hpp"
#include "pvc/oracle.hpp"
#include "pvc/synth.hpp"
#include "test_util.hpp"

using namespace pvc;

namespace {

std::string graph_bytes(const Graph& g) {
  std::ostringstream os;
  write_edge_list(g, os);
  return os.str();
}

// realized (core-core, core-fringe) edge counts
std::pair<long long, long long> edge_split(const Graph& g, int core_size) {
  long long cc = 0, cf = 0;
  for (int u = 0; u < g.node_count(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      bool uc = g.external_id(u) < core_size;
      bool vc = g.external_id(v) < core_size;
      REQUIRE((uc || vc));  // fringe-fringe edges must never materialize
      (uc && vc ? cc : cf) += 1;
    }
  }
  return {cc, cf};
}

}  // namespace

TEST_CASE("dense parameters realize every eligible pair") {
  auto s = gen_core_fringe_sbm({3, 6, 1.0, 1.0, 5});
  CHECK(s.graph.node_count() == 6);
  CHECK(s.graph.edge_count() == 12);  // C(3,2) + 3*3, fringe-fringe absent
  auto [cc, cf] = edge_split(s.graph, 3);
  CHECK(cc == 3);
  CHECK(cf == 9);
  CHECK(s.core.ids == std::vector<NodeId>{0, 1, 2});
}

TEST_CASE("zero parameters realize nothing") {
  auto s = gen_core_fringe_sbm({3, 6, 0.0, 0.0, 5});
  CHECK(s.graph.node_count() == 0);
  CHECK(s.graph.edge_count() == 0);
  CHECK(s.core.size() == 3);  // the label exists even when isolated
}

TEST_CASE("generator parameter validation") {
  CHECK_THROWS_AS(gen_core_fringe_sbm({0, 5, 0.5, 0.5, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_core_fringe_sbm({6, 5, 0.5, 0.5, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_core_fringe_sbm({2, 5, 1.5, 0.5, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gen_core_fringe_sbm({2, 5, 0.5, -0.1, 1}),
                  std::invalid_argument);
}

TEST_CASE("the core label covers every realization") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = gen_core_fringe_sbm({8, 30, 0.4, 0.15, seed});
    edge_split(s.graph, 8);  // asserts no fringe-fringe edge
    std::vector<int> core_internal;
    for (int v = 0; v < s.graph.node_count(); ++v) {
      if (s.core.contains(s.graph.external_id(v))) core_internal.push_back(v);
    }
    CHECK(is_vertex_cover(s.graph, core_internal));
  }
}

TEST_CASE("identical parameters give byte-identical samples") {
  SbmParams sp{10, 40, 0.3, 0.1, 1234};
  auto a = gen_core_fringe_sbm(sp);
  auto b = gen_core_fringe_sbm(sp);
  CHECK(graph_bytes(a.graph) == graph_bytes(b.graph));
  sp.seed = 1235;
  auto c = gen_core_fringe_sbm(sp);
  CHECK(graph_bytes(a.graph) != graph_bytes(c.graph));
}

TEST_CASE("realized edge counts track the block probabilities") {
  const int k = 20, n = 60;
  const double p = 0.3, q = 0.1;
  const int reps = 50;
  double cc_sum = 0.0, cf_sum = 0.0;
  for (std::uint64_t seed = 0; seed < reps; ++seed) {
    auto s = gen_core_fringe_sbm({k, n, p, q, 9000 + seed});
    auto [cc, cf] = edge_split(s.graph, k);
    cc_sum += static_cast<double>(cc);
    cf_sum += static_cast<double>(cf);
  }
  const double cc_pairs = k * (k - 1) / 2.0;  // 190
  const double cf_pairs = static_cast<double>(k) * (n - k);  // 800
  const double cc_mean = cc_pairs * p;
  const double cf_mean = cf_pairs * q;
  const double cc_tol = 4.0 * std::sqrt(cc_pairs * p * (1 - p) / reps);
  const double cf_tol = 4.0 * std::sqrt(cf_pairs * q * (1 - q) / reps);
  CHECK(std::abs(cc_sum / reps - cc_mean) < cc_tol);
  CHECK(std::abs(cf_sum / reps - cf_mean) < cf_tol);
}

TEST_CASE("theory report freezes the union cap formula") {
  auto s = gen_core_fringe_sbm({10, 20, 0.5, 0.3, 3});
  auto rep = check_sbm_theory(s.graph, s.core, {10, 20, 0.5, 0.3, 3});
  REQUIRE(rep.union_cap.has_value());
  // k (3 ln k / p + 3) at k=10, p=0.5
  CHECK(*rep.union_cap == doctest::Approx(168.1551056).epsilon(1e-8));

  auto rep0 = check_sbm_theory(s.graph, s.core, {10, 20, 0.0, 0.3, 3});
  CHECK_FALSE(rep0.union_cap.has_value());
}

TEST_CASE("core nodes with fringe edges always enter the union") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    auto s = gen_core_fringe_sbm({5, 16, 0.5, 0.5, 100 + seed});
    if (s.graph.node_count() == 0) continue;
    auto u = union_minimal_covers_upto(
        s.graph, static_cast<int>(s.core.size()));
    for (NodeId id : s.core.ids) {
      auto v = s.graph.internal_id(id);
      if (!v) continue;
      bool fringe_edge = false;
      for (int w : s.graph.neighbors(*v)) {
        if (!s.core.contains(s.graph.external_id(w))) fringe_edge = true;
      }
      if (fringe_edge) {
        CHECK(std::binary_search(u.begin(), u.end(), *v));
      }
    }
  }
}

TEST_CASE("theory report on small instances compares union to cap") {
  int fringe_edge_all = 0, within = 0, computed = 0;
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    SbmParams sp{6, 18, 0.6, 0.4, 200 + seed};
    auto s = gen_core_fringe_sbm(sp);
    auto rep = check_sbm_theory(s.graph, s.core, sp);
    if (rep.every_core_has_fringe_edge) ++fringe_edge_all;
    if (rep.union_size) {
      ++computed;
      REQUIRE(rep.union_within_cap.has_value());
      if (*rep.union_within_cap) ++within;
      CHECK(*rep.union_size <= s.graph.node_count());
    }
  }
  CHECK(computed == 15);      // n=18 is under the enumeration budget
  CHECK(within == computed);  // cap exceeds n here, so it must always hold
  CHECK(fringe_edge_all > 10);  // q=0.4 over 12 fringe nodes rarely fails
}

TEST_CASE("theory report flags cores without fringe contact") {
  // no fringe at all
  auto full = gen_core_fringe_sbm({3, 3, 1.0, 0.0, 1});
  auto rep = check_sbm_theory(full.graph, full.core, {3, 3, 1.0, 0.0, 1});
  CHECK_FALSE(rep.every_core_has_fringe_edge);

  // an absent (isolated) core node counts as lacking a fringe edge
  auto sparse = gen_core_fringe_sbm({2, 2, 0.0, 0.0, 1});
  auto rep2 = check_sbm_theory(sparse.graph, sparse.core, {2, 2, 0.0, 0.0, 1});
  CHECK_FALSE(rep2.every_core_has_fringe_edge);
}

TEST_CASE("theory report rejects labels that do not cover") {
  auto g = testutil::make_graph({{0, 5}, {5, 6}});  // 5-6 is fringe-fringe
  auto core = make_core_label({0, 1});
  SbmParams sp{2, 7, 0.5, 0.5, 1};
  CHECK_THROWS_AS(check_sbm_theory(g, core, sp), std::invalid_argument);
}
