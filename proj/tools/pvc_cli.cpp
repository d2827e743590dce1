#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pvc/cover.hpp"
#include "pvc/eval.hpp"
#include "pvc/graph.hpp"
#include "pvc/oracle.hpp"
#include "pvc/parallel.hpp"
#include "pvc/rank.hpp"
#include "pvc/synth.hpp"

namespace {

constexpr long long kSecondsPerDay = 86400;

// All file outputs go through write-then-rename so a failed run never
// leaves a partial file behind.
void write_file_atomic(const std::string& path,
                       const std::function<void(std::ostream&)>& writer) {
  namespace fs = std::filesystem;
  fs::path tmp = fs::path(path);
  tmp += ".tmp";
  try {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw std::runtime_error("cannot open " + tmp.string());
    writer(os);
    os.flush();
    if (!os) throw std::runtime_error("write failed: " + tmp.string());
    os.close();
    fs::rename(tmp, fs::path(path));
  } catch (...) {
    std::error_code ec;
    fs::remove(tmp, ec);
    throw;
  }
}

void emit(const std::optional<std::string>& out,
          const std::function<void(std::ostream&)>& writer) {
  if (out) {
    write_file_atomic(*out, writer);
  } else {
    writer(std::cout);
    std::cout.flush();
  }
}

std::vector<pvc::RankMethod> parse_method_list(const std::string& csv) {
  std::vector<pvc::RankMethod> methods;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto m = pvc::parse_rank_method(tok);
    if (!m) throw std::invalid_argument("unknown method: " + tok);
    methods.push_back(*m);
  }
  if (methods.empty()) throw std::invalid_argument("no methods given");
  return methods;
}

struct CommonOpts {
  std::uint64_t seed = 0;
  int threads = pvc::default_thread_count();
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planted vertex cover recovery from core-fringe graphs"};
  app.require_subcommand(1);

  CommonOpts common;

  // recover
  auto* recover = app.add_subcommand(
      "recover", "Rank nodes by likelihood of core membership");
  std::string rec_graph;
  std::string rec_method = "umvc";
  int rec_covers = pvc::kDefaultCoverCount;
  std::optional<long long> rec_cutoff;
  double rec_be_tol = 1e-10;
  int rec_be_max_iter = 1000;
  std::optional<std::string> rec_out;
  recover->add_option("--graph", rec_graph, "Edge list file")->required();
  recover->add_option("--method", rec_method, "Ranking method")
      ->check(CLI::IsMember({"umvc", "degree", "be", "betweenness"}));
  recover->add_option("--covers", rec_covers, "Minimal covers to sample");
  recover->add_option("--cutoff", rec_cutoff,
                      "Keep edges with timestamp <= cutoff");
  recover->add_option("--be-tol", rec_be_tol, "Iteration stop tolerance");
  recover->add_option("--be-max-iter", rec_be_max_iter, "Iteration cap");
  recover->add_option("--out", rec_out, "Output CSV (default stdout)");

  // bounds
  auto* bounds = app.add_subcommand(
      "bounds", "Bracket the minimum cover size and bound the union size");
  std::string bnd_graph;
  int bnd_runs = 20;
  std::optional<int> bnd_k;
  std::optional<long long> bnd_cutoff;
  std::optional<std::string> bnd_out;
  bounds->add_option("--graph", bnd_graph, "Edge list file")->required();
  bounds->add_option("--runs", bnd_runs, "Matching cover runs");
  bounds->add_option("--k", bnd_k, "Cover size budget (default: u)");
  bounds->add_option("--cutoff", bnd_cutoff,
                     "Keep edges with timestamp <= cutoff");
  bounds->add_option("--out", bnd_out, "Output file (default stdout)");

  // eval
  auto* eval = app.add_subcommand(
      "eval", "Score recovery methods over cumulative snapshots");
  std::string ev_graph;
  std::string ev_core;
  std::string ev_methods = "umvc,degree,be,betweenness";
  long long ev_window_days = 10;
  int ev_covers = pvc::kDefaultCoverCount;
  std::optional<std::string> ev_out;
  eval->add_option("--graph", ev_graph, "Timestamped edge list file")
      ->required();
  eval->add_option("--core", ev_core, "Core label file")->required();
  eval->add_option("--methods", ev_methods, "Comma-separated methods");
  eval->add_option("--window-days", ev_window_days, "Snapshot spacing, days");
  eval->add_option("--covers", ev_covers, "Minimal covers per snapshot");
  eval->add_option("--out", ev_out, "Output CSV (default stdout)");

  // gen-sbm
  auto* gen = app.add_subcommand(
      "gen-sbm", "Sample a core-fringe block model graph");
  pvc::SbmParams sbm;
  std::string gen_out_graph;
  std::string gen_out_core;
  gen->add_option("--k", sbm.core_size, "Core size")->required();
  gen->add_option("--n", sbm.n, "Total nodes")->required();
  gen->add_option("--p", sbm.p, "Core-core edge probability")->required();
  gen->add_option("--q", sbm.q, "Core-fringe edge probability")->required();
  gen->add_option("--out-graph", gen_out_graph, "Edge list output")
      ->required();
  gen->add_option("--out-core", gen_out_core, "Core label output")->required();

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "Exact minimum cover and minimal-cover union (small graphs)");
  std::string orc_graph;
  int orc_budget = 64;
  std::optional<int> orc_union_k;
  int orc_union_budget = 24;
  std::optional<long long> orc_cutoff;
  std::optional<std::string> orc_out;
  oracle->add_option("--graph", orc_graph, "Edge list file")->required();
  oracle->add_option("--budget", orc_budget, "Max nodes for the exact solve");
  oracle->add_option("--union-k", orc_union_k,
                     "Also report the union of minimal covers of size <= k");
  oracle->add_option("--union-budget", orc_union_budget,
                     "Max nodes for the union enumeration");
  oracle->add_option("--cutoff", orc_cutoff,
                     "Keep edges with timestamp <= cutoff");
  oracle->add_option("--out", orc_out, "Output file (default stdout)");

  for (auto* sub : {recover, bounds, eval, gen, oracle}) {
    sub->add_option("--seed", common.seed, "Master PRNG seed");
    sub->add_option("--threads", common.threads, "Worker cap")
        ->check(CLI::PositiveNumber);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(recover)) {
      auto tel = pvc::load_edge_list(rec_graph);
      auto g = pvc::build_graph(tel, rec_cutoff);
      auto method = *pvc::parse_rank_method(rec_method);
      pvc::Ranking r;
      switch (method) {
        case pvc::RankMethod::Umvc:
          r = pvc::umvc_rank(g, rec_covers, common.seed, common.threads);
          break;
        case pvc::RankMethod::Degree:
          r = pvc::degree_rank(g);
          break;
        case pvc::RankMethod::BorgattiEverett:
          r = pvc::be_scores(g, rec_be_tol, rec_be_max_iter);
          break;
        case pvc::RankMethod::Betweenness:
          r = pvc::betweenness_rank(g, common.threads);
          break;
      }
      emit(rec_out, [&](std::ostream& os) { pvc::write_ranking_csv(g, r, os); });
      std::cerr << "n=" << g.node_count() << " m=" << g.edge_count();
      if (method == pvc::RankMethod::Umvc) {
        long long in_union = 0;
        for (bool b : r.in_union) in_union += b ? 1 : 0;
        std::cerr << " union_size=" << in_union;
      }
      if (method == pvc::RankMethod::BorgattiEverett && !r.converged) {
        std::cerr << " converged=0";
      }
      std::cerr << "\n";
    } else if (app.got_subcommand(bounds)) {
      auto tel = pvc::load_edge_list(bnd_graph);
      auto g = pvc::build_graph(tel, bnd_cutoff);
      auto report = pvc::approx_kstar_bounds(g, bnd_runs, common.seed, bnd_k,
                                             common.threads);
      emit(bnd_out,
           [&](std::ostream& os) { pvc::write_bounds_report(report, os); });
    } else if (app.got_subcommand(eval)) {
      auto tel = pvc::load_edge_list(ev_graph);
      auto core = pvc::load_core_file(ev_core);
      pvc::SweepConfig cfg;
      cfg.methods = parse_method_list(ev_methods);
      cfg.window = ev_window_days * kSecondsPerDay;
      cfg.n_covers = ev_covers;
      cfg.seed = common.seed;
      cfg.threads = common.threads;
      auto rows = pvc::temporal_sweep(tel, core, cfg);
      emit(ev_out, [&](std::ostream& os) { pvc::write_eval_csv(rows, os); });
      std::cerr << "snapshots=" << rows.size() / cfg.methods.size()
                << " rows=" << rows.size() << "\n";
    } else if (app.got_subcommand(gen)) {
      sbm.seed = common.seed;
      auto sample = pvc::gen_core_fringe_sbm(sbm);
      write_file_atomic(gen_out_graph, [&](std::ostream& os) {
        pvc::write_edge_list(sample.graph, os);
      });
      write_file_atomic(gen_out_core, [&](std::ostream& os) {
        pvc::write_core_file(sample.core, os);
      });
      long long core_core = 0;
      long long core_fringe = 0;
      const auto& g = sample.graph;
      for (int u = 0; u < g.node_count(); ++u) {
        for (int v : g.neighbors(u)) {
          if (v <= u) continue;
          bool uc = sample.core.contains(g.external_id(u));
          bool vc = sample.core.contains(g.external_id(v));
          (uc && vc ? core_core : core_fringe) += 1;
        }
      }
      std::cout << "n=" << g.node_count() << " m=" << g.edge_count()
                << " core_core_edges=" << core_core
                << " core_fringe_edges=" << core_fringe << "\n";
    } else if (app.got_subcommand(oracle)) {
      auto tel = pvc::load_edge_list(orc_graph);
      auto g = pvc::build_graph(tel, orc_cutoff);
      auto exact = pvc::exact_min_vertex_cover(g, orc_budget);
      std::optional<std::vector<int>> uni;
      if (orc_union_k) {
        uni = pvc::union_minimal_covers_upto(g, *orc_union_k,
                                             orc_union_budget);
      }
      emit(orc_out, [&](std::ostream& os) {
        os << "kstar=" << exact.kstar << "\n";
        os << "alpha=" << exact.alpha << "\n";
        os << "witness=";
        std::vector<pvc::NodeId> ids;
        for (int v : exact.witness) ids.push_back(g.external_id(v));
        std::sort(ids.begin(), ids.end());
        for (std::size_t i = 0; i < ids.size(); ++i) {
          os << (i ? " " : "") << ids[i];
        }
        os << "\n";
        if (uni) {
          std::vector<pvc::NodeId> uids;
          for (int v : *uni) uids.push_back(g.external_id(v));
          std::sort(uids.begin(), uids.end());
          os << "union_k=" << *orc_union_k << "\n";
          os << "union_size=" << uids.size() << "\n";
          os << "union=";
          for (std::size_t i = 0; i < uids.size(); ++i) {
            os << (i ? " " : "") << uids[i];
          }
          os << "\n";
        }
      });
    }
  } catch (const std::exception& e) {
    std::cerr << "pvc: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
