#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "pocut/bench.hpp"
#include "pocut/gen.hpp"
#include "pocut/graph.hpp"
#include "pocut/init.hpp"
#include "pocut/neargreedy.hpp"
#include "pocut/numio.hpp"
#include "pocut/objective.hpp"
#include "pocut/partition.hpp"

namespace {

using namespace pocut;

// flag and input-file problems exit 2, anything else that throws exits 1
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t entropy_seed() {
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

template <class F>
auto load_input(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

Objective objective_arg(const std::string& s) {
  try {
    return parse_objective(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

NgOrdering ordering_arg(const std::string& s) {
  if (s == "random") return NgOrdering::Random;
  if (s == "maxdiff") return NgOrdering::MaxDiffMaxDegree;
  throw UsageError("unknown ordering: " + s + " (random | maxdiff)");
}

// Reconstructs the effective invocation; printed as the first output line so
// any run can be repeated exactly.
struct Repro {
  std::ostringstream line;

  explicit Repro(const std::string& sub) { line << "# pocut " << sub; }

  template <class T>
  Repro& arg(const std::string& flag, const T& v) {
    if constexpr (std::is_floating_point_v<T>)
      line << ' ' << flag << ' ' << fmt_double(v);
    else
      line << ' ' << flag << ' ' << v;
    return *this;
  }

  Repro& flag_if(const std::string& flag, bool set) {
    if (set) line << ' ' << flag;
    return *this;
  }

  void print() const { std::cout << line.str() << "\n"; }
};

struct SpecFlags {
  std::string kind;
  int n = 0;
  double p = 0, d = 0, p1 = 0, p2 = 0;
  int r = 0, k1 = 0, k2 = 0;
};

void add_spec_flags(CLI::App* sub, SpecFlags& f) {
  sub->add_option("--kind", f.kind,
                  "random | geometric | regular | unbalanced_random | "
                  "unbalanced_regular")
      ->required();
  sub->add_option("--n", f.n, "vertex count")->required();
  sub->add_option("--p", f.p, "edge probability (random)");
  sub->add_option("--d", f.d, "distance threshold (geometric)");
  sub->add_option("--r", f.r, "degree (regular)");
  sub->add_option("--p1", f.p1, "within-block probability (unbalanced_random)");
  sub->add_option("--p2", f.p2, "cross-block probability (unbalanced_random)");
  sub->add_option("--k1", f.k1, "within-half degree (unbalanced_regular)");
  sub->add_option("--k2", f.k2, "cross-half matchings (unbalanced_regular)");
}

GenSpec to_spec(const SpecFlags& f, std::uint64_t seed) {
  GenSpec s;
  try {
    s.kind = parse_kind(f.kind);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  s.n = f.n;
  s.p = f.p;
  s.d = f.d;
  s.r = f.r;
  s.p1 = f.p1;
  s.p2 = f.p2;
  s.k1 = f.k1;
  s.k2 = f.k2;
  s.seed = seed;
  return s;
}

void spec_args(Repro& r, const GenSpec& s) {
  r.arg("--kind", kind_name(s.kind)).arg("--n", s.n);
  switch (s.kind) {
    case GraphKind::Random:
      r.arg("--p", s.p);
      break;
    case GraphKind::Geometric:
      r.arg("--d", s.d);
      break;
    case GraphKind::Regular:
      r.arg("--r", s.r);
      break;
    case GraphKind::UnbalancedRandom:
      r.arg("--p1", s.p1).arg("--p2", s.p2);
      break;
    case GraphKind::UnbalancedRegular:
      r.arg("--k1", s.k1).arg("--k2", s.k2);
      break;
  }
}

struct Knobs {
  int k_starts = 10, stale_iters = 5, stale_restarts = 5;
  double cooling = 0.95, sa_length = 16.0, alpha = 0.05;
  bool long_on = false, long_off = false, sa_count_trial = false;
};

void add_knobs(CLI::App* sub, Knobs& k) {
  sub->add_option("--k-starts", k.k_starts,
                  "po: path start candidates per iteration");
  sub->add_option("--stale-iters", k.stale_iters,
                  "po: stale iterations before a restart");
  sub->add_option("--stale-restarts", k.stale_restarts,
                  "po: stale restarts before the run halts");
  sub->add_option("--cooling", k.cooling, "sa: stage cooling ratio");
  sub->add_option("--sa-length", k.sa_length, "sa: proposals per stage over n");
  sub->add_option("--alpha", k.alpha, "sa: quotient imbalance penalty weight");
  auto* lr = sub->add_flag("--long-run", k.long_on,
                           "sa: one anneal stretched over the budget");
  auto* nlr = sub->add_flag("--no-long-run", k.long_off,
                            "sa: repeated anneals (default follows objective)");
  lr->excludes(nlr);
  sub->add_flag("--sa-count-trial", k.sa_count_trial,
                "sa: charge the tuning trial to the budget");
}

void apply_knobs(BenchConfig& cfg, const Knobs& k) {
  cfg.po.k_starts = k.k_starts;
  cfg.po.stale_iters = k.stale_iters;
  cfg.po.stale_restarts = k.stale_restarts;
  cfg.sa.cooling_ratio = k.cooling;
  cfg.sa.temp_length_factor = k.sa_length;
  cfg.sa.balance_alpha = k.alpha;
  cfg.sa.include_trial_in_budget = k.sa_count_trial;
  if (k.long_on) {
    cfg.sa_long_auto = false;
    cfg.sa.long_run = true;
  } else if (k.long_off) {
    cfg.sa_long_auto = false;
    cfg.sa.long_run = false;
  }
}

void knob_args(Repro& r, const Knobs& k) {
  r.arg("--k-starts", k.k_starts)
      .arg("--stale-iters", k.stale_iters)
      .arg("--stale-restarts", k.stale_restarts)
      .arg("--cooling", k.cooling)
      .arg("--sa-length", k.sa_length)
      .arg("--alpha", k.alpha)
      .flag_if("--long-run", k.long_on)
      .flag_if("--no-long-run", k.long_off)
      .flag_if("--sa-count-trial", k.sa_count_trial);
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

// ---- gen ----

struct GenOpts {
  SpecFlags flags;
  std::uint64_t seed = 0;
  std::string out;
};

void run_gen(const GenOpts& o, bool seeded) {
  const std::uint64_t seed = seeded ? o.seed : entropy_seed();
  const GenSpec spec = to_spec(o.flags, seed);
  Graph g = [&] {
    try {
      return generate(spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  Repro r("gen");
  spec_args(r, spec);
  r.arg("--seed", seed);
  if (!o.out.empty()) r.arg("--out", o.out);
  r.print();
  std::cout << "# n=" << g.n() << " m=" << g.m() << "\n";
  if (o.out.empty())
    save_graph(g, std::cout);
  else
    save_graph_file(g, o.out);
}

void setup_gen(CLI::App& app) {
  auto* sub = app.add_subcommand("gen", "generate a graph file");
  auto o = std::make_shared<GenOpts>();
  add_spec_flags(sub, o->flags);
  auto* sd = sub->add_option("--seed", o->seed, "RNG seed (default: entropy)");
  sub->add_option("--out,-o", o->out, "graph file (default: stdout)");
  sub->callback([o, sd] { run_gen(*o, sd->count() > 0); });
}

// ---- init ----

struct InitOpts {
  std::string graph, method = "random", objective = "maxcut", out;
  std::uint64_t seed = 0;
};

void run_init(const InitOpts& o, bool seeded) {
  const std::uint64_t seed = seeded ? o.seed : entropy_seed();
  const Graph g = load_input([&] { return load_graph_file(o.graph); });
  const Objective obj = objective_arg(o.objective);
  Partitioning p = [&] {
    try {
      if (o.method == "random") return init_random(g, seed);
      if (o.method == "line") return init_line(g, seed);
      if (o.method == "w") return construct_w(g, obj, seed);
      throw UsageError("unknown method: " + o.method + " (random | line | w)");
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  Repro r("init");
  r.arg("--graph", o.graph)
      .arg("--method", o.method)
      .arg("--objective", o.objective)
      .arg("--seed", seed);
  if (!o.out.empty()) r.arg("--out", o.out);
  r.print();
  const Score s = p.score();
  std::cout << "# cut=" << s.cut << " min_side=" << s.min_side
            << " value=" << fmt_double(objective_value(obj, s)) << "\n";
  if (o.out.empty())
    save_partition(p, std::cout);
  else
    save_partition_file(p, o.out);
}

void setup_init(CLI::App& app) {
  auto* sub = app.add_subcommand("init", "build an initial partitioning");
  auto o = std::make_shared<InitOpts>();
  sub->add_option("--graph", o->graph, "graph file")->required();
  sub->add_option("--method", o->method, "random | line | w");
  sub->add_option("--objective", o->objective, "maxcut | quotient");
  auto* sd = sub->add_option("--seed", o->seed, "RNG seed (default: entropy)");
  sub->add_option("--out,-o", o->out, "partition file (default: stdout)");
  sub->callback([o, sd] { run_init(*o, sd->count() > 0); });
}

// ---- run ----

struct RunOpts {
  std::string graph, algo, objective = "maxcut", init, profile, out;
  double time = 10.0;
  std::int64_t restarts = 0;
  std::uint64_t seed = 0;
  Knobs knobs;
};

void run_run(const RunOpts& o, bool seeded) {
  const std::uint64_t seed = seeded ? o.seed : entropy_seed();
  if (o.restarts < 0) throw UsageError("--restarts must be >= 0");
  if (o.restarts == 0 && o.time <= 0)
    throw UsageError("need --time > 0 or --restarts > 0");
  const Graph g = load_input([&] { return load_graph_file(o.graph); });
  const Objective obj = objective_arg(o.objective);

  std::string token = o.algo;
  if (!o.init.empty()) {
    if (token.find(':') != std::string::npos)
      throw UsageError("--init conflicts with the init in --algo");
    token += ":" + o.init;
  }
  const std::string name = token.substr(0, token.find(':'));

  NgProfile prof;
  const NgProfile* pp = nullptr;
  if (!o.profile.empty()) {
    prof = load_input([&] { return load_profile_file(o.profile); });
    pp = &prof;
  }
  if ((name == "pg") && !pp) throw UsageError("--algo pg needs --profile");

  BenchConfig cfg;
  cfg.algos = {token};
  cfg.objective = obj;
  cfg.per_graph_time = o.time;
  cfg.restarts = o.restarts;
  cfg.seed = seed;
  apply_knobs(cfg, o.knobs);

  const std::string gid = g.genspec().empty() ? o.graph : g.genspec();
  std::uint64_t gseed = 0;
  if (!g.genspec().empty()) {
    try {
      gseed = parse_genspec(g.genspec()).seed;
    } catch (const std::exception&) {
    }
  }

  Partitioning best = Partitioning::all_on(g, Side::Left);
  const TrialResult tr = [&] {
    try {
      return run_single(g, gid, gseed, token, cfg, pp, seed, &best);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  Repro r("run");
  r.arg("--graph", o.graph)
      .arg("--algo", token)
      .arg("--objective", o.objective)
      .arg("--time", o.time)
      .arg("--restarts", o.restarts)
      .arg("--seed", seed);
  if (!o.profile.empty()) r.arg("--profile", o.profile);
  if (!o.out.empty()) r.arg("--out", o.out);
  knob_args(r, o.knobs);
  r.print();

  if (tr.failed) throw std::runtime_error(tr.error);
  std::cout << "# graph=" << tr.graph_id << " m=" << tr.graph_m
            << " loop_seconds=" << fmt_double(tr.loop_seconds);
  if (!tr.extra.empty()) std::cout << " " << tr.extra;
  std::cout << "\n";
  std::cout << "score cut=" << tr.best.cut << " min_side=" << tr.best.min_side
            << " value=" << fmt_double(tr.best_value) << "\n";
  if (!o.out.empty()) save_partition_file(best, o.out);
}

void setup_run(CLI::App& app) {
  auto* sub = app.add_subcommand("run", "one optimizer on one graph");
  auto o = std::make_shared<RunOpts>();
  sub->add_option("--graph", o->graph, "graph file")->required();
  sub->add_option("--algo", o->algo, "po | kl | sa | pg | w, optional :init")
      ->required();
  sub->add_option("--objective", o->objective, "maxcut | quotient");
  sub->add_option("--time", o->time, "budget in seconds");
  sub->add_option("--restarts", o->restarts,
                  "deterministic restart budget (ignores --time)");
  auto* sd = sub->add_option("--seed", o->seed, "RNG seed (default: entropy)");
  sub->add_option("--init", o->init, "override the default initializer");
  sub->add_option("--profile", o->profile, "near-greedy profile (pg)");
  sub->add_option("--out,-o", o->out, "write the best partition here");
  add_knobs(sub, o->knobs);
  sub->callback([o, sd] { run_run(*o, sd->count() > 0); });
}

// ---- bench ----

struct BenchOpts {
  std::string suite, objective = "maxcut", profile, out_dir;
  std::vector<std::string> algos;
  double time = 10.0;
  std::int64_t restarts = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
  Knobs knobs;
};

void run_bench(const BenchOpts& o, bool seeded) {
  const std::uint64_t seed = seeded ? o.seed : entropy_seed();
  if (o.restarts < 0) throw UsageError("--restarts must be >= 0");
  if (o.restarts == 0 && o.time <= 0)
    throw UsageError("need --time > 0 or --restarts > 0");
  if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
  const std::vector<GenSpec> suite =
      load_input([&] { return load_suite_file(o.suite); });

  BenchConfig cfg;
  cfg.algos = o.algos;
  cfg.objective = objective_arg(o.objective);
  cfg.per_graph_time = o.time;
  cfg.restarts = o.restarts;
  cfg.seed = seed;
  cfg.jobs = o.jobs;
  cfg.profile_path = o.profile;
  apply_knobs(cfg, o.knobs);

  Repro r("bench");
  std::string joined;
  for (const auto& a : o.algos) {
    if (!joined.empty()) joined += ",";
    joined += a;
  }
  r.arg("--suite", o.suite)
      .arg("--algos", joined)
      .arg("--objective", o.objective)
      .arg("--time", o.time)
      .arg("--restarts", o.restarts)
      .arg("--seed", seed)
      .arg("--jobs", o.jobs);
  if (!o.profile.empty()) r.arg("--profile", o.profile);
  if (!o.out_dir.empty()) r.arg("--out", o.out_dir);
  knob_args(r, o.knobs);
  r.print();

  const BenchOutput out = [&] {
    try {
      return run_benchmark(suite, cfg);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  emit_human_table(out, std::cout);
  if (!o.out_dir.empty()) {
    std::filesystem::create_directories(o.out_dir);
    const std::filesystem::path dir(o.out_dir);
    std::ostringstream txt, csv, ivl;
    txt << r.line.str() << "\n";
    emit_human_table(out, txt);
    emit_csv(out, csv);
    emit_intervals(out, ivl);
    write_file((dir / "bench.txt").string(), txt.str());
    write_file((dir / "bench.csv").string(), csv.str());
    write_file((dir / "intervals.csv").string(), ivl.str());
  }
}

void setup_bench(CLI::App& app) {
  auto* sub = app.add_subcommand("bench", "run a suite of graphs and algos");
  auto o = std::make_shared<BenchOpts>();
  sub->add_option("--suite", o->suite, "suite file, one genspec per line")
      ->required();
  sub->add_option("--algos", o->algos, "comma-separated algorithm tokens")
      ->required()
      ->delimiter(',');
  sub->add_option("--objective", o->objective, "maxcut | quotient");
  sub->add_option("--time", o->time, "budget in seconds per trial");
  sub->add_option("--restarts", o->restarts,
                  "deterministic restart budget (ignores --time)");
  auto* sd = sub->add_option("--seed", o->seed, "RNG seed (default: entropy)");
  sub->add_option("--jobs", o->jobs, "worker threads (timed runs: keep 1)");
  sub->add_option("--profile", o->profile, "near-greedy profile (pg)");
  sub->add_option("--out,-o", o->out_dir,
                  "directory for bench.txt, bench.csv, intervals.csv");
  add_knobs(sub, o->knobs);
  sub->callback([o, sd] { run_bench(*o, sd->count() > 0); });
}

// ---- nganalyze ----

struct NgOpts {
  SpecFlags flags;
  std::string objective = "maxcut", ordering = "maxdiff", oracle = "kl";
  std::string out, csv;
  std::int64_t ensemble = 1000, oracle_restarts = 1;
  int jobs = 1;
  std::uint64_t seed = 0;
};

void run_nganalyze(const NgOpts& o, bool seeded) {
  const std::uint64_t seed = seeded ? o.seed : entropy_seed();
  if (o.ensemble < 1) throw UsageError("--ensemble must be >= 1");
  if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
  GenSpec spec = to_spec(o.flags, seed);
  const Objective obj = objective_arg(o.objective);

  NgConfig cfg;
  cfg.ordering = ordering_arg(o.ordering);
  cfg.oracle = o.oracle;
  cfg.oracle_restarts = o.oracle_restarts;
  cfg.jobs = o.jobs;

  const NgProfile prof = [&] {
    try {
      return estimate_ng(spec, obj, cfg, o.ensemble, seed);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  Repro r("nganalyze");
  spec_args(r, spec);
  r.arg("--objective", o.objective)
      .arg("--ensemble", o.ensemble)
      .arg("--ordering", o.ordering)
      .arg("--oracle", o.oracle)
      .arg("--oracle-restarts", o.oracle_restarts)
      .arg("--jobs", o.jobs)
      .arg("--seed", seed);
  if (!o.out.empty()) r.arg("--out", o.out);
  if (!o.csv.empty()) r.arg("--csv", o.csv);
  r.print();
  std::cout << "# fit a=" << fmt_double(prof.a) << " b=" << fmt_double(prof.b)
            << " r2=" << fmt_double(prof.r_squared)
            << " stderr=" << fmt_double(prof.residual_se)
            << " ensemble=" << prof.ensemble_size << " n=" << prof.raw.size()
            << "\n";

  if (!o.out.empty()) save_profile_file(prof, o.out);
  if (!o.csv.empty()) {
    std::ostringstream body;
    body << "index,raw,percentile,fitted\n";
    const std::size_t n = prof.raw.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t bin = std::min<std::size_t>(99, i * 100 / n);
      const double fitted =
          prof.a + prof.b / std::sqrt(static_cast<double>(i + 1));
      body << (i + 1) << "," << fmt_double(prof.raw[i]) << ","
           << fmt_double(prof.probs[bin]) << "," << fmt_double(fitted) << "\n";
    }
    write_file(o.csv, body.str());
  }
}

void setup_nganalyze(CLI::App& app) {
  auto* sub =
      app.add_subcommand("nganalyze", "estimate the near-greedy profile");
  auto o = std::make_shared<NgOpts>();
  add_spec_flags(sub, o->flags);
  sub->add_option("--objective", o->objective, "maxcut | quotient");
  sub->add_option("--ensemble", o->ensemble, "number of sample graphs");
  sub->add_option("--ordering", o->ordering, "random | maxdiff");
  sub->add_option("--oracle", o->oracle, "kl | po | sa | w");
  sub->add_option("--oracle-restarts", o->oracle_restarts,
                  "restarts the oracle spends per graph");
  sub->add_option("--jobs", o->jobs, "worker threads");
  auto* sd = sub->add_option("--seed", o->seed, "RNG seed (default: entropy)");
  sub->add_option("--out,-o", o->out, "write the profile here");
  sub->add_option("--csv", o->csv, "per-index analysis table");
  sub->callback([o, sd] { run_nganalyze(*o, sd->count() > 0); });
}

// ---- postprocess ----

struct PostOpts {
  std::string graph, partition, ordering = "maxdiff", objective = "maxcut";
  std::string csv;
  std::uint64_t seed = 0;
};

void run_postprocess(const PostOpts& o, bool seeded) {
  const std::uint64_t seed = seeded ? o.seed : entropy_seed();
  const Graph g = load_input([&] { return load_graph_file(o.graph); });
  const Partitioning p =
      load_input([&] { return load_partition_file(o.partition, g); });
  const Objective obj = objective_arg(o.objective);
  const PlacementTrace trace =
      replay_label(g, p, ordering_arg(o.ordering), obj, seed);

  const int n = g.n();
  std::int64_t ng = 0, ng_first_half = 0;
  const int half = (n + 1) / 2;
  for (int i = 0; i < n; ++i)
    if (trace.labels[static_cast<std::size_t>(i)] == StepLabel::NonGreedy) {
      ++ng;
      if (i < half) ++ng_first_half;
    }

  Repro r("postprocess");
  r.arg("--graph", o.graph)
      .arg("--partition", o.partition)
      .arg("--ordering", o.ordering)
      .arg("--objective", o.objective)
      .arg("--seed", seed);
  if (!o.csv.empty()) r.arg("--csv", o.csv);
  r.print();
  std::cout << "# steps=" << n << " nongreedy=" << ng << " nongreedy_fraction="
            << fmt_double(n ? static_cast<double>(ng) / n : 0.0) << "\n";
  std::cout << "# first_half_share="
            << fmt_double(ng ? static_cast<double>(ng_first_half) /
                                   static_cast<double>(ng)
                             : 0.0)
            << "\n";

  std::ostringstream body;
  body << "step,vertex,nongreedy,rem_avg_degree\n";
  for (int i = 0; i < n; ++i) {
    const std::size_t idx = static_cast<std::size_t>(i);
    const double avg =
        2.0 * static_cast<double>(trace.rem_edges[idx]) / (n - i);
    body << (i + 1) << "," << trace.order[idx] << ","
         << (trace.labels[idx] == StepLabel::NonGreedy ? 1 : 0) << ","
         << fmt_double(avg) << "\n";
  }
  if (o.csv.empty())
    std::cout << body.str();
  else
    write_file(o.csv, body.str());
}

void setup_postprocess(CLI::App& app) {
  auto* sub = app.add_subcommand(
      "postprocess", "replay-label a partition against a placement order");
  auto o = std::make_shared<PostOpts>();
  sub->add_option("--graph", o->graph, "graph file")->required();
  sub->add_option("--partition", o->partition, "partition file")->required();
  sub->add_option("--ordering", o->ordering, "random | maxdiff");
  sub->add_option("--objective", o->objective, "maxcut | quotient");
  auto* sd = sub->add_option("--seed", o->seed, "RNG seed (default: entropy)");
  sub->add_option("--csv", o->csv, "step table (default: stdout)");
  sub->callback([o, sd] { run_postprocess(*o, sd->count() > 0); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph partitioning heuristics and benchmarks"};
  app.require_subcommand(1);
  setup_gen(app);
  setup_init(app);
  setup_run(app);
  setup_bench(app);
  setup_nganalyze(app);
  setup_postprocess(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
