#include "pocut/bench.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pocut/fm.hpp"
#include "pocut/init.hpp"
#include "pocut/numio.hpp"
#include "pocut/rng.hpp"
#include "pocut/timer.hpp"

namespace pocut {

namespace {

struct AlgoToken {
  std::string raw;   // as given, used in output
  std::string name;  // po | kl | sa | pg | w
  std::string init;  // empty = per-graph default
};

AlgoToken parse_algo(const std::string& tok) {
  AlgoToken t;
  t.raw = tok;
  const auto c = tok.find(':');
  t.name = tok.substr(0, c);
  if (c != std::string::npos) t.init = tok.substr(c + 1);
  if (t.name == "fm") t.name = "kl";
  if (t.name != "po" && t.name != "kl" && t.name != "sa" && t.name != "pg" &&
      t.name != "w")
    throw std::invalid_argument("unknown algorithm: " + tok);
  if (!t.init.empty() && t.init != "random" && t.init != "line" &&
      t.init != "w")
    throw std::invalid_argument("unknown init in algorithm token: " + tok);
  return t;
}

// The comparison protocol's default initializers: PO starts from W; KL and
// SA start from the line heuristic on geometric quotient runs and random
// partitionings otherwise.
std::string default_init(const std::string& name, Objective objective,
                         const Graph& g) {
  if (name == "po" || name == "w") return "w";
  if (objective == Objective::MinQuotientCut && g.has_coords()) return "line";
  return "random";
}

struct Incumbent {
  Partitioning p;
  Score score;

  bool offer(Objective obj, const Partitioning& cand) {
    if (!better(obj, cand.score(), score)) return false;
    p = cand;
    score = cand.score();
    return true;
  }
};

TrialResult run_trial(const Graph& g, const std::string& graph_id,
                      std::uint64_t graph_seed, const AlgoToken& algo,
                      const BenchConfig& cfg, const NgProfile* profile,
                      std::uint64_t trial_seed, Partitioning* best_out) {
  TrialResult tr;
  tr.algo = algo.raw;
  tr.graph_id = graph_id;
  tr.graph_seed = graph_seed;
  tr.graph_m = g.m();
  tr.objective = cfg.objective;
  const bool det = cfg.restarts > 0;
  const double budget = det ? -1.0 : cfg.per_graph_time;
  tr.budget_s = det ? 0.0 : cfg.per_graph_time;

  Rng rng = make_rng(trial_seed);
  std::ostringstream extra;
  auto done = [&](const Partitioning& winner) {
    tr.best = winner.score();
    tr.best_value = objective_value(cfg.objective, tr.best);
    tr.extra = extra.str();
    if (best_out) *best_out = winner;
    return tr;
  };

  try {
    const std::string init_name =
        algo.init.empty() ? default_init(algo.name, cfg.objective, g)
                          : algo.init;
    const InitGen init_gen = make_init_gen(init_name, cfg.objective);

    if (algo.name == "po") {
      PoConfig pc = cfg.po;
      PoStats stats;
      Partitioning start = init_gen(g, rng);
      Incumbent best{start, start.score()};
      if (det) {
        pc.time_budget = -1.0;
        pc.max_restarts = cfg.restarts;
        best.offer(cfg.objective,
                   po_optimize(g, start, cfg.objective, pc, rng(), &stats));
      } else {
        // po halts a slice when restarts go stale, so keep feeding slices
        // until the shared budget is gone
        pc.max_restarts = 0;
        for (;;) {
          const double remaining = budget - stats.loop_seconds;
          if (remaining <= 0) break;
          pc.time_budget = remaining;
          best.offer(cfg.objective,
                     po_optimize(g, start, cfg.objective, pc, rng(), &stats));
          if (stats.loop_seconds >= budget) break;
          start = construct_w(g, cfg.objective, rng());
        }
      }
      tr.loop_seconds = stats.loop_seconds;
      tr.mean_path_len = stats.mean_path_length();
      extra << "iters=" << stats.iterations << " flips=" << stats.flips
            << " restarts=" << stats.restarts
            << " mean_path_len=" << fmt_double(tr.mean_path_len);
      return done(best.p);
    }

    if (algo.name == "kl") {
      FmStats stats;
      Partitioning p0 = init_gen(g, rng);
      Partitioning best =
          fm_optimize(g, p0, cfg.objective, budget, rng(), init_gen,
                      det ? cfg.restarts : 0, &stats);
      tr.loop_seconds = stats.loop_seconds;
      extra << "passes=" << stats.passes << " restarts=" << stats.restarts;
      return done(best);
    }

    if (algo.name == "sa") {
      SaConfig sc = cfg.sa;
      if (cfg.sa_long_auto) sc.long_run = cfg.objective == Objective::MaxCut;
      if (det) {
        sc.long_run = false;  // the stretched schedule needs wall time
        sc.max_anneals = cfg.restarts;
      }
      SaStats stats;
      Partitioning best =
          sa_run(g, cfg.objective, sc, budget, rng(), init_gen, &stats);
      tr.loop_seconds = stats.loop_seconds;
      extra << "anneals=" << stats.anneals << " stages=" << stats.stages
            << " t0=" << fmt_double(stats.t0) << " accept_rate="
            << fmt_double(stats.proposals
                              ? static_cast<double>(stats.acceptances) /
                                    static_cast<double>(stats.proposals)
                              : 0.0);
      return done(best);
    }

    if (algo.name == "pg") {
      if (!profile)
        throw std::invalid_argument("pg requires a profile file");
      PgStats stats;
      Partitioning best = pg_run(g, cfg.objective, *profile, budget, rng(),
                                 det ? cfg.restarts : 0, &stats);
      tr.loop_seconds = stats.loop_seconds;
      extra << "constructs=" << stats.constructs;
      return done(best);
    }

    // w: best-of repeated greedy constructions
    Stopwatch sw;
    sw.start();
    Partitioning first = construct_w(g, cfg.objective, rng());
    Incumbent best{first, first.score()};
    std::int64_t constructs = 1;
    for (;;) {
      if (budget > 0 && sw.seconds() >= budget) break;
      if (det && constructs >= cfg.restarts) break;
      if (budget <= 0 && !det) break;
      best.offer(cfg.objective, construct_w(g, cfg.objective, rng()));
      ++constructs;
    }
    tr.loop_seconds = sw.seconds();
    extra << "constructs=" << constructs;
    return done(best.p);
  } catch (const std::exception& e) {
    tr.failed = true;
    tr.error = e.what();
    return tr;
  } catch (...) {
    tr.failed = true;
    tr.error = "unknown error";
    return tr;
  }
}

}  // namespace

TrialResult run_single(const Graph& g, const std::string& graph_id,
                       std::uint64_t graph_seed, const std::string& algo_token,
                       const BenchConfig& cfg, const NgProfile* profile,
                       std::uint64_t trial_seed, Partitioning* best_out) {
  return run_trial(g, graph_id, graph_seed, parse_algo(algo_token), cfg,
                   profile, trial_seed, best_out);
}

BenchOutput run_benchmark(const std::vector<GenSpec>& suite,
                          const BenchConfig& cfg) {
  if (cfg.algos.empty())
    throw std::invalid_argument("run_benchmark: no algorithms given");
  if (suite.empty()) throw std::invalid_argument("run_benchmark: empty suite");
  std::vector<AlgoToken> tokens;
  tokens.reserve(cfg.algos.size());
  for (const auto& a : cfg.algos) tokens.push_back(parse_algo(a));

  NgProfile profile;
  bool have_profile = false;
  for (const auto& t : tokens)
    if (t.name == "pg" && !have_profile) {
      if (cfg.profile_path.empty())
        throw std::invalid_argument("pg in algo list but no profile path set");
      profile = load_profile_file(cfg.profile_path);
      have_profile = true;
    }

  std::vector<Graph> graphs;
  graphs.reserve(suite.size());
  for (const auto& spec : suite) graphs.push_back(generate(spec));

  const std::size_t n_graphs = suite.size(), n_algos = tokens.size();
  BenchOutput out;
  out.results.resize(n_graphs * n_algos);

  auto one = [&](std::size_t idx) {
    const std::size_t gi = idx / n_algos, ai = idx % n_algos;
    out.results[idx] =
        run_trial(graphs[gi], format_genspec(suite[gi]), suite[gi].seed,
                  tokens[ai], cfg, have_profile ? &profile : nullptr,
                  derive_seed(cfg.seed, static_cast<std::uint64_t>(idx)),
                  nullptr);
  };

  const std::size_t total = out.results.size();
  if (cfg.jobs <= 1) {
    for (std::size_t i = 0; i < total; ++i) one(i);
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= total) return;
        one(i);
      }
    };
    std::vector<std::thread> pool;
    const int j = std::min<int>(cfg.jobs, static_cast<int>(total));
    pool.reserve(static_cast<std::size_t>(j));
    for (int t = 0; t < j; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (std::size_t ai = 0; ai < n_algos; ++ai) {
    AlgoSummary s;
    s.algo = tokens[ai].raw;
    std::vector<double> cuts;
    double val = 0, pct = 0, loop = 0;
    for (std::size_t gi = 0; gi < n_graphs; ++gi) {
      const TrialResult& tr = out.results[gi * n_algos + ai];
      if (tr.failed) {
        ++s.failures;
        continue;
      }
      cuts.push_back(static_cast<double>(tr.best.cut));
      val += tr.best_value;
      pct += tr.graph_m > 0 ? 100.0 * static_cast<double>(tr.best.cut) /
                                  static_cast<double>(tr.graph_m)
                            : 0.0;
      loop += tr.loop_seconds;
    }
    if (cuts.size() >= 2) {
      s.cuts = confidence_interval(cuts);
    } else {
      s.cuts.n_samples = static_cast<int>(cuts.size());
      s.cuts.method = "insufficient";
      if (!cuts.empty()) s.cuts.mean = s.cuts.lo = s.cuts.hi = cuts[0];
    }
    if (!cuts.empty()) {
      const double k = static_cast<double>(cuts.size());
      s.mean_value = val / k;
      s.mean_cut_percent = pct / k;
      s.mean_loop_seconds = loop / k;
    }
    out.summaries.push_back(std::move(s));
  }
  return out;
}

std::vector<GenSpec> load_suite(std::istream& in) {
  std::vector<GenSpec> suite;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    try {
      suite.push_back(parse_genspec(line));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("suite line " + std::to_string(lineno) + ": " +
                               e.what());
    }
  }
  return suite;
}

std::vector<GenSpec> load_suite_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open suite file: " + path);
  return load_suite(in);
}

void emit_human_table(const BenchOutput& out, std::ostream& os) {
  os << std::left << std::setw(12) << "algo" << std::right << std::setw(8)
     << "graphs" << std::setw(6) << "fail" << std::setw(14) << "mean_cuts"
     << std::setw(12) << "sd" << std::setw(26) << "99% CI" << std::setw(14)
     << "mean_score" << std::setw(10) << "cut%" << std::setw(12) << "loop_s"
     << "\n";
  for (const auto& s : out.summaries) {
    std::ostringstream ci;
    if (s.cuts.n_samples >= 2)
      ci << "[" << std::fixed << std::setprecision(4) << s.cuts.lo << ", "
         << s.cuts.hi << "]";
    else
      ci << "(n<2)";
    os << std::left << std::setw(12) << s.algo << std::right << std::setw(8)
       << s.cuts.n_samples << std::setw(6) << s.failures << std::setw(14)
       << std::fixed << std::setprecision(4) << s.cuts.mean << std::setw(12)
       << s.cuts.sd << std::setw(26) << ci.str() << std::setw(14)
       << s.mean_value << std::setw(10) << std::setprecision(2)
       << s.mean_cut_percent << std::setw(12) << std::setprecision(3)
       << s.mean_loop_seconds << "\n";
  }
  bool any_fail = false;
  for (const auto& r : out.results)
    if (r.failed) {
      if (!any_fail) os << "\nfailures:\n";
      any_fail = true;
      os << "  " << r.algo << " on " << r.graph_id << ": " << r.error << "\n";
    }
}

void emit_csv(const BenchOutput& out, std::ostream& os) {
  os << "algo,graph,seed,objective,score,cuts,time_s\n";
  for (const auto& r : out.results) {
    if (r.failed) continue;
    os << r.algo << "," << r.graph_id << "," << r.graph_seed << ","
       << objective_name(r.objective) << "," << fmt_double(r.best_value) << ","
       << r.best.cut << "," << fmt_double(r.budget_s) << "\n";
  }
}

void emit_intervals(const BenchOutput& out, std::ostream& os) {
  os << "algo,lo,mean,hi\n";
  for (const auto& s : out.summaries) {
    if (s.cuts.n_samples < 2) continue;
    os << s.algo << "," << fmt_double(s.cuts.lo) << ","
       << fmt_double(s.cuts.mean) << "," << fmt_double(s.cuts.hi) << "\n";
  }
}

}  // namespace pocut
