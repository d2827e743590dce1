#include "pvc/rank.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "pvc/cover.hpp"
#include "pvc/parallel.hpp"
#include "pvc/text.hpp"

namespace pvc {

namespace {

Ranking finish_ranking(const Graph& g, RankMethod method,
                       std::vector<double> score, std::vector<bool> in_union,
                       std::optional<std::uint64_t> seed, bool converged) {
  Ranking r;
  r.method = method;
  r.score = std::move(score);
  r.in_union = std::move(in_union);
  r.seed = seed;
  r.converged = converged;
  r.order.resize(g.node_count());
  std::iota(r.order.begin(), r.order.end(), 0);
  std::sort(r.order.begin(), r.order.end(), [&](int a, int b) -> bool {
    if (r.in_union[a] != r.in_union[b]) return r.in_union[a];
    if (r.score[a] != r.score[b]) return r.score[a] > r.score[b];
    return g.external_id(a) < g.external_id(b);
  });
  return r;
}

std::vector<double> degree_scores(const Graph& g) {
  std::vector<double> score(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) score[v] = g.degree(v);
  return score;
}

// Single-source shortest-path dependency accumulation. contrib[w] receives
// source s's dependency on w; pair normalization happens at the caller.
void brandes_source(const Graph& g, int s, std::vector<double>& contrib) {
  const int n = g.node_count();
  std::vector<int> dist(n, -1);
  std::vector<double> sigma(n, 0.0);
  std::vector<double> delta(n, 0.0);
  std::vector<int> order;
  order.reserve(n);

  dist[s] = 0;
  sigma[s] = 1.0;
  order.push_back(s);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        order.push_back(w);
      }
      if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
    }
  }
  for (std::size_t i = order.size(); i-- > 1;) {
    int w = order[i];
    for (int v : g.neighbors(w)) {
      if (dist[v] == dist[w] - 1) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
    }
    contrib[w] += delta[w];
  }
}

}  // namespace

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::Umvc:
      return "umvc";
    case RankMethod::Degree:
      return "degree";
    case RankMethod::BorgattiEverett:
      return "be";
    case RankMethod::Betweenness:
      return "betweenness";
  }
  return "unknown";
}

std::optional<RankMethod> parse_rank_method(std::string_view name) {
  if (name == "umvc") return RankMethod::Umvc;
  if (name == "degree") return RankMethod::Degree;
  if (name == "be") return RankMethod::BorgattiEverett;
  if (name == "betweenness") return RankMethod::Betweenness;
  return std::nullopt;
}

Ranking umvc_rank(const Graph& g, int n_covers, std::uint64_t seed,
                  int threads) {
  if (n_covers < 1) throw std::invalid_argument("umvc_rank: n_covers < 1");
  const int n = g.node_count();
  std::vector<unsigned char> member(n, 0);
  parallel_for(n_covers, threads, [&](int j) {
    auto [matching, pruned] = sampled_cover_pair(g, seed, j);
    (void)matching;
    for (int v : pruned.nodes) {
      // monotone flag; relaxed atomic OR keeps workers race-free
      std::atomic_ref<unsigned char>(member[v])
          .store(1, std::memory_order_relaxed);
    }
  });
  std::vector<bool> in_union(n, false);
  for (int v = 0; v < n; ++v) in_union[v] = member[v] != 0;
  return finish_ranking(g, RankMethod::Umvc, degree_scores(g),
                        std::move(in_union), seed, true);
}

Ranking degree_rank(const Graph& g) {
  return finish_ranking(g, RankMethod::Degree, degree_scores(g),
                        std::vector<bool>(g.node_count(), false), std::nullopt,
                        true);
}

Ranking be_scores(const Graph& g, double tol, int max_iter) {
  const int n = g.node_count();
  std::vector<double> s(n, 0.0);
  bool converged = (n == 0);

  if (n > 0) {
    double norm = 0.0;
    for (int v = 0; v < n; ++v) {
      s[v] = g.degree(v);
      norm += s[v] * s[v];
    }
    norm = std::sqrt(norm);
    for (double& x : s) x /= norm;

    std::vector<double> next(n);
    for (int iter = 0; iter < max_iter; ++iter) {
      for (int v = 0; v < n; ++v) {
        double acc = s[v];
        for (int w : g.neighbors(v)) acc += s[w];
        next[v] = acc;
      }
      double nn = 0.0;
      for (double x : next) nn += x * x;
      nn = std::sqrt(nn);
      double step = 0.0;
      for (int v = 0; v < n; ++v) {
        next[v] /= nn;
        step = std::max(step, std::abs(next[v] - s[v]));
      }
      s.swap(next);
      if (step < tol) {
        converged = true;
        break;
      }
    }
  }
  return finish_ranking(g, RankMethod::BorgattiEverett, std::move(s),
                        std::vector<bool>(n, false), std::nullopt, converged);
}

Ranking betweenness_rank(const Graph& g, int threads) {
  const int n = g.node_count();
  std::vector<double> cb(n, 0.0);

  // Sources are processed in fixed-size blocks with one slot per source;
  // slots are summed in source order, so totals do not depend on the
  // worker count.
  constexpr int kBlock = 32;
  std::vector<std::vector<double>> slot(std::min(kBlock, std::max(n, 1)));
  for (int base = 0; base < n; base += kBlock) {
    const int count = std::min(kBlock, n - base);
    parallel_for(count, threads, [&](int i) {
      slot[i].assign(n, 0.0);
      brandes_source(g, base + i, slot[i]);
    });
    for (int i = 0; i < count; ++i) {
      for (int v = 0; v < n; ++v) cb[v] += slot[i][v];
    }
  }
  for (double& x : cb) x /= 2.0;  // each unordered pair accumulated twice

  return finish_ranking(g, RankMethod::Betweenness, std::move(cb),
                        std::vector<bool>(n, false), std::nullopt, true);
}

std::vector<NodeId> ranked_ids(const Graph& g, const Ranking& r) {
  std::vector<NodeId> ids;
  ids.reserve(r.order.size());
  for (int v : r.order) ids.push_back(g.external_id(v));
  return ids;
}

void write_ranking_csv(const Graph& g, const Ranking& r, std::ostream& os) {
  os << "rank,external_id,score,in_union,method\n";
  const std::string method = to_string(r.method);
  for (std::size_t i = 0; i < r.order.size(); ++i) {
    int v = r.order[i];
    os << (i + 1) << "," << g.external_id(v) << ","
       << format_double(r.score[v]) << "," << (r.in_union[v] ? 1 : 0) << ","
       << method << "\n";
  }
}

}  // namespace pvc
