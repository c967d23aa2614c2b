#include "pocut/neargreedy.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "pocut/anneal.hpp"
#include "pocut/fm.hpp"
#include "pocut/init.hpp"
#include "pocut/numio.hpp"
#include "pocut/path_opt.hpp"
#include "pocut/rng.hpp"
#include "pocut/timer.hpp"

namespace pocut {

PlacementTrace replay_label(const Graph& g, const Partitioning& target,
                            NgOrdering ordering, Objective objective,
                            std::uint64_t seed) {
  if (target.n() != g.n())
    throw std::invalid_argument("replay_label: target size mismatch");
  Rng rng = make_rng(seed);
  const int n = g.n();
  PlacementTrace tr;
  tr.order.reserve(n);
  tr.labels.reserve(n);
  tr.rem_edges.reserve(n);

  std::vector<int> perm;
  if (ordering == NgOrdering::Random) {
    perm.resize(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i],
                perm[uniform_below(rng, static_cast<std::uint64_t>(i) + 1)]);
  }

  DiffState st(g);
  std::int64_t rem_edges = g.m();
  for (int step = 0; step < n; ++step) {
    tr.rem_edges.push_back(rem_edges);
    const int v = ordering == NgOrdering::Random
                      ? perm[step]
                      : select_diff(g, st, DiffMode::MaxDiff,
                                    DiffTiebreak::MaxDegreeThenRandom, rng);
    const Side s = target.side(v);
    const int add_target = st.cnt(v, other(s));  // cut edges this side adds
    const int add_other = st.cnt(v, s);
    const bool greedy = objective == Objective::MaxCut
                            ? add_target >= add_other
                            : add_target <= add_other;
    tr.order.push_back(v);
    tr.labels.push_back(greedy ? StepLabel::Greedy : StepLabel::NonGreedy);
    for (int w : g.neighbors(v))
      if (!st.placed(w)) --rem_edges;
    st.place(g, v, s);
  }
  return tr;
}

FitResult fit_ng(std::span<const double> raw) {
  const std::size_t n = raw.size();
  if (n < 2) throw std::invalid_argument("fit_ng: need at least 2 points");
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += 1.0 / std::sqrt(static_cast<double>(i + 1));
    sy += raw[i];
  }
  const double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = 1.0 / std::sqrt(static_cast<double>(i + 1)) - mx;
    sxx += dx * dx;
    sxy += dx * (raw[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_ng: degenerate regressor");
  FitResult fit;
  fit.b = sxy / sxx;
  fit.a = my - fit.b * mx;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = 1.0 / std::sqrt(static_cast<double>(i + 1));
    const double e = raw[i] - (fit.a + fit.b * x);
    ss_res += e * e;
    ss_tot += (raw[i] - my) * (raw[i] - my);
  }
  fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  fit.residual_se =
      n > 2 ? std::sqrt(ss_res / static_cast<double>(n - 2)) : 0.0;
  return fit;
}

std::vector<double> percentile_bins(std::span<const double> raw, int bins) {
  std::vector<double> sums(static_cast<std::size_t>(bins), 0.0);
  std::vector<int> counts(static_cast<std::size_t>(bins), 0);
  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int b =
        std::min<int>(bins - 1, static_cast<int>(i * static_cast<std::size_t>(bins) / n));
    sums[b] += raw[i];
    ++counts[b];
  }
  std::vector<double> out(static_cast<std::size_t>(bins), 0.0);
  double last = 0.0;
  for (int b = 0; b < bins; ++b) {
    if (counts[b] > 0) last = sums[b] / counts[b];
    out[b] = last;  // empty bins (n < bins) carry the previous value
  }
  return out;
}

namespace {

Partitioning run_oracle(const Graph& g, Objective objective,
                        const NgConfig& cfg, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  if (cfg.oracle == "kl" || cfg.oracle == "fm") {
    Partitioning p0 = init_random(g, rng());
    return fm_optimize(g, p0, objective, -1.0, rng(),
                       make_init_gen("random", objective),
                       cfg.oracle_restarts - 1);
  }
  if (cfg.oracle == "po") {
    PoConfig pc;
    pc.time_budget = -1.0;
    pc.max_restarts = cfg.oracle_restarts;
    Partitioning p0 = construct_w(g, objective, rng());
    return po_optimize(g, p0, objective, pc, rng());
  }
  if (cfg.oracle == "sa") {
    SaConfig sc;
    sc.max_anneals = cfg.oracle_restarts;
    return sa_run(g, objective, sc, -1.0, rng(),
                  make_init_gen("random", objective));
  }
  if (cfg.oracle == "w") return construct_w(g, objective, rng());
  throw std::invalid_argument("unknown oracle: " + cfg.oracle);
}

}  // namespace

NgProfile estimate_ng(const GenSpec& spec, Objective objective,
                      const NgConfig& cfg, std::int64_t ensemble_size,
                      std::uint64_t seed) {
  if (ensemble_size < 1)
    throw std::invalid_argument("estimate_ng: ensemble_size must be >= 1");
  const int n = spec.n;
  const int jobs = std::max(1, cfg.jobs);

  std::vector<std::vector<std::int64_t>> ng_cnt(
      static_cast<std::size_t>(jobs),
      std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
  std::vector<std::vector<std::int64_t>> rem_sum = ng_cnt;

  auto worker = [&](int t) {
    for (std::int64_t e = t; e < ensemble_size; e += jobs) {
      GenSpec gs = spec;
      gs.seed = derive_seed(seed, static_cast<std::uint64_t>(3 * e));
      const Graph g = generate(gs);
      const Partitioning target = run_oracle(
          g, objective, cfg,
          derive_seed(seed, static_cast<std::uint64_t>(3 * e + 1)));
      const PlacementTrace tr = replay_label(
          g, target, cfg.ordering, objective,
          derive_seed(seed, static_cast<std::uint64_t>(3 * e + 2)));
      for (int i = 0; i < n; ++i) {
        if (tr.labels[i] == StepLabel::NonGreedy) ++ng_cnt[t][i];
        rem_sum[t][i] += tr.rem_edges[i];
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  NgProfile prof;
  prof.ensemble_size = ensemble_size;
  prof.raw.resize(static_cast<std::size_t>(n));
  prof.rem_avg_degree.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::int64_t cnt = 0, rem = 0;
    for (int t = 0; t < jobs; ++t) {
      cnt += ng_cnt[t][i];
      rem += rem_sum[t][i];
    }
    prof.raw[i] = static_cast<double>(cnt) / static_cast<double>(ensemble_size);
    prof.rem_avg_degree[i] =
        2.0 * static_cast<double>(rem) /
        (static_cast<double>(ensemble_size) * static_cast<double>(n - i));
  }
  prof.probs = percentile_bins(prof.raw, 100);
  const FitResult fit = fit_ng(prof.raw);
  prof.a = fit.a;
  prof.b = fit.b;
  prof.r_squared = fit.r_squared;
  prof.residual_se = fit.residual_se;
  return prof;
}

double profile_f(const NgProfile& profile, int i) {
  const double f = profile.a + profile.b / std::sqrt(static_cast<double>(i));
  return std::clamp(f, 0.0, 1.0);
}

Partitioning pg_construct(const Graph& g, Objective objective,
                          const NgProfile& profile, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  DiffState st(g);
  std::vector<Side> side(static_cast<std::size_t>(g.n()), Side::Left);
  for (int step = 0; step < g.n(); ++step) {
    const int v = select_diff(g, st, DiffMode::MaxDiff,
                              DiffTiebreak::MaxDegreeThenRandom, rng);
    const bool anti = uniform_double(rng) < profile_f(profile, step + 1);
    const int cl = st.cnt(v, Side::Left), cr = st.cnt(v, Side::Right);
    Side s;
    if (cl == cr) {
      s = uniform_below(rng, 2) == 0 ? Side::Left : Side::Right;
    } else {
      // placing LEFT cuts cr edges, RIGHT cuts cl
      Side good;
      if (objective == Objective::MaxCut)
        good = cr > cl ? Side::Left : Side::Right;
      else
        good = cr < cl ? Side::Left : Side::Right;
      s = anti ? other(good) : good;
    }
    side[v] = s;
    st.place(g, v, s);
  }
  return Partitioning(g, std::move(side));
}

Partitioning pg_run(const Graph& g, Objective objective,
                    const NgProfile& profile, double time_budget,
                    std::uint64_t seed, std::int64_t max_restarts,
                    PgStats* stats) {
  Rng rng = make_rng(seed);
  Stopwatch sw;
  sw.start();
  PgStats st;
  Partitioning best = pg_construct(g, objective, profile, rng());
  ++st.constructs;
  for (;;) {
    if (time_budget > 0 && sw.seconds() >= time_budget) break;
    if (max_restarts > 0 && st.constructs >= max_restarts) break;
    if (time_budget <= 0 && max_restarts == 0) break;
    Partitioning cand = pg_construct(g, objective, profile, rng());
    ++st.constructs;
    if (better(objective, cand.score(), best.score())) best = std::move(cand);
  }
  st.loop_seconds = sw.seconds();
  if (stats) {
    stats->constructs += st.constructs;
    stats->loop_seconds += st.loop_seconds;
  }
  return best;
}

void save_profile(const NgProfile& profile, std::ostream& out) {
  out << "# format v1\n";
  out << fmt_double(profile.a) << " " << fmt_double(profile.b) << " "
      << fmt_double(profile.r_squared) << " "
      << fmt_double(profile.residual_se) << " " << profile.raw.size() << "\n";
  for (double r : profile.raw) out << fmt_double(r) << "\n";
}

void save_profile_file(const NgProfile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write profile file: " + path);
  save_profile(profile, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

NgProfile load_profile(std::istream& in) {
  std::string line;
  auto next = [&]() -> std::string& {
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      return line;
    }
    throw std::runtime_error("profile format: unexpected end of file");
  };
  std::istringstream head(next());
  NgProfile prof;
  long long n = 0;
  if (!(head >> prof.a >> prof.b >> prof.r_squared >> prof.residual_se >> n) ||
      n < 0)
    throw std::runtime_error("profile format: bad header line");
  prof.raw.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) prof.raw.push_back(parse_double(next()));
  if (!prof.raw.empty()) prof.probs = percentile_bins(prof.raw, 100);
  return prof;
}

NgProfile load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file: " + path);
  return load_profile(in);
}

}  // namespace pocut
