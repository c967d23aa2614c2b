#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "pocut/bench.hpp"
#include "pocut/gen.hpp"
#include "pocut/numio.hpp"

using namespace pocut;

namespace {

std::vector<GenSpec> small_suite() {
  return {parse_genspec("kind=random n=40 p=0.15 seed=1"),
          parse_genspec("kind=random n=40 p=0.15 seed=2"),
          parse_genspec("kind=random n=40 p=0.15 seed=3")};
}

BenchConfig det_config(std::vector<std::string> algos) {
  BenchConfig cfg;
  cfg.algos = std::move(algos);
  cfg.restarts = 5;
  cfg.seed = 99;
  return cfg;
}

std::string csv_of(const BenchOutput& out) {
  std::ostringstream os;
  emit_csv(out, os);
  return os.str();
}

}  // namespace

TEST_CASE("suite parsing skips comments and reports bad lines") {
  std::istringstream in(
      "# suite\nkind=random n=10 p=0.5 seed=1\n\nkind=regular n=8 r=3 "
      "seed=2\n");
  const auto suite = load_suite(in);
  REQUIRE(suite.size() == 2);
  CHECK(suite[0].n == 10);
  CHECK(suite[1].kind == GraphKind::Regular);

  std::istringstream bad("kind=random n=10 p=0.5 seed=1\nkind=what n=3 "
                         "seed=2\n");
  CHECK_THROWS_WITH_AS(load_suite(bad), doctest::Contains("line 2"),
                       std::runtime_error);
  CHECK_THROWS_AS(load_suite_file("/does/not/exist"), std::runtime_error);
}

TEST_CASE("deterministic bench reruns are bit identical") {
  const auto suite = small_suite();
  const BenchConfig cfg = det_config({"po", "kl", "sa", "w"});
  const BenchOutput a = run_benchmark(suite, cfg);
  const BenchOutput b = run_benchmark(suite, cfg);
  CHECK(csv_of(a) == csv_of(b));
  REQUIRE(a.results.size() == 12);
  for (const auto& r : a.results) {
    CHECK(!r.failed);
    CHECK(r.budget_s == 0.0);
    CHECK(r.best.cut > 0);
  }
  REQUIRE(a.summaries.size() == 4);
  for (const auto& s : a.summaries) {
    CHECK(s.cuts.n_samples == 3);
    CHECK(s.failures == 0);
    CHECK(s.cuts.lo <= s.cuts.mean);
    CHECK(s.cuts.mean <= s.cuts.hi);
  }
}

TEST_CASE("csv rows carry the configured budget, zero in restart mode") {
  const auto suite = small_suite();
  BenchConfig cfg = det_config({"w"});
  const std::string csv = csv_of(run_benchmark(suite, cfg));
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  CHECK(line == "algo,graph,seed,objective,score,cuts,time_s");
  int rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    CHECK(line.substr(line.size() - 2) == ",0");
    CHECK(line.find("kind=random n=40 p=0.15") != std::string::npos);
  }
  CHECK(rows == 3);
}

TEST_CASE("fm token is an alias for kl") {
  const auto suite = small_suite();
  const BenchOutput fm = run_benchmark(suite, det_config({"fm"}));
  const BenchOutput kl = run_benchmark(suite, det_config({"kl"}));
  REQUIRE(fm.results.size() == kl.results.size());
  for (std::size_t i = 0; i < fm.results.size(); ++i) {
    CHECK(fm.results[i].best.cut == kl.results[i].best.cut);
    CHECK(fm.results[i].algo == "fm");
    CHECK(kl.results[i].algo == "kl");
  }
}

TEST_CASE("default init resolves per protocol") {
  // quotient on geometric graphs defaults kl to the line start
  const std::vector<GenSpec> geo = {
      parse_genspec("kind=geometric n=60 d=0.2 seed=4"),
      parse_genspec("kind=geometric n=60 d=0.2 seed=5")};
  BenchConfig cfg = det_config({"kl"});
  cfg.objective = Objective::MinQuotientCut;
  BenchConfig cfg_line = det_config({"kl:line"});
  cfg_line.objective = Objective::MinQuotientCut;
  const BenchOutput a = run_benchmark(geo, cfg);
  const BenchOutput b = run_benchmark(geo, cfg_line);
  for (std::size_t i = 0; i < a.results.size(); ++i)
    CHECK(a.results[i].best.cut == b.results[i].best.cut);

  // maxcut defaults kl to a random start
  const auto suite = small_suite();
  const BenchOutput c = run_benchmark(suite, det_config({"kl"}));
  const BenchOutput d = run_benchmark(suite, det_config({"kl:random"}));
  for (std::size_t i = 0; i < c.results.size(); ++i)
    CHECK(c.results[i].best.cut == d.results[i].best.cut);

  // po defaults to the greedy construction start
  const BenchOutput e = run_benchmark(suite, det_config({"po"}));
  const BenchOutput f = run_benchmark(suite, det_config({"po:w"}));
  for (std::size_t i = 0; i < e.results.size(); ++i)
    CHECK(e.results[i].best.cut == f.results[i].best.cut);
}

TEST_CASE("bad tokens and missing profiles are rejected up front") {
  const auto suite = small_suite();
  CHECK_THROWS_AS(run_benchmark(suite, det_config({"gw"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_benchmark(suite, det_config({"kl:zig"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_benchmark(suite, det_config({"pg"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_benchmark(suite, det_config({})),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_benchmark({}, det_config({"w"})),
                  std::invalid_argument);
}

TEST_CASE("per-trial failures are recorded, not thrown") {
  // line init on a coordless graph fails inside the trial
  const auto suite = small_suite();
  const BenchOutput out = run_benchmark(suite, det_config({"kl:line", "w"}));
  REQUIRE(out.results.size() == 6);
  int failed = 0;
  for (const auto& r : out.results)
    if (r.failed) {
      ++failed;
      CHECK(r.algo == "kl:line");
      CHECK(!r.error.empty());
    }
  CHECK(failed == 3);
  CHECK(out.summaries[0].failures == 3);
  CHECK(out.summaries[0].cuts.n_samples == 0);
  CHECK(out.summaries[1].failures == 0);
  // failed rows are dropped from the csv
  std::istringstream is(csv_of(out));
  std::string line;
  int rows = 0;
  while (std::getline(is, line))
    if (line.rfind("kl:line", 0) == 0) ++rows;
  CHECK(rows == 0);
}

TEST_CASE("parallel jobs give the same results as sequential") {
  const auto suite = small_suite();
  BenchConfig cfg = det_config({"po", "w"});
  const std::string seq = csv_of(run_benchmark(suite, cfg));
  cfg.jobs = 4;
  const std::string par = csv_of(run_benchmark(suite, cfg));
  CHECK(seq == par);
}

TEST_CASE("run_single fills the result and hands out the partition") {
  const GenSpec spec = parse_genspec("kind=random n=40 p=0.15 seed=8");
  const Graph g = generate(spec);
  BenchConfig cfg = det_config({"ignored"});
  Partitioning best;
  const TrialResult tr = run_single(g, format_genspec(spec), spec.seed, "po",
                                    cfg, nullptr, 42, &best);
  CHECK(!tr.failed);
  CHECK(tr.algo == "po");
  CHECK(tr.graph_id == format_genspec(spec));
  CHECK(tr.graph_seed == 8);
  CHECK(tr.graph_m == g.m());
  CHECK(best.score() == tr.best);
  CHECK(tr.mean_path_len >= 0.0);
  CHECK(tr.extra.find("iters=") != std::string::npos);

  const TrialResult bad = run_single(g, "x", 0, "kl:line", cfg, nullptr, 1);
  CHECK(bad.failed);
  CHECK(!bad.error.empty());
}

TEST_CASE("timed trials keep the loop near the budget") {
  const std::vector<GenSpec> suite = {
      parse_genspec("kind=random n=300 p=0.05 seed=6")};
  for (const char* algo : {"po", "kl", "sa"}) {
    BenchConfig cfg;
    cfg.algos = {algo};
    cfg.per_graph_time = 1.2;
    cfg.seed = 3;
    const BenchOutput out = run_benchmark(suite, cfg);
    REQUIRE(!out.results[0].failed);
    const double loop = out.results[0].loop_seconds;
    CHECK(std::abs(loop - 1.2) <= 0.05 * 1.2);
    CHECK(out.results[0].budget_s == 1.2);
    // csv publishes the configured budget, not the measured loop
    const std::string csv = csv_of(out);
    CHECK(csv.find(",1.2\n") != std::string::npos);
  }
}

TEST_CASE("interval csv lists one row per algorithm") {
  const auto suite = small_suite();
  const BenchOutput out = run_benchmark(suite, det_config({"po", "w"}));
  std::ostringstream os;
  emit_intervals(out, os);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "algo,lo,mean,hi");
  std::getline(is, line);
  CHECK(line.rfind("po,", 0) == 0);
  std::getline(is, line);
  CHECK(line.rfind("w,", 0) == 0);
  // round trip one row at full precision
  const auto& s = out.summaries[0].cuts;
  std::ostringstream row;
  row << "po," << fmt_double(s.lo) << "," << fmt_double(s.mean) << ","
      << fmt_double(s.hi);
  CHECK(os.str().find(row.str()) != std::string::npos);
}

TEST_CASE("human table mentions every algorithm and failure") {
  const auto suite = small_suite();
  const BenchOutput out = run_benchmark(suite, det_config({"kl:line", "po"}));
  std::ostringstream os;
  emit_human_table(out, os);
  const std::string t = os.str();
  CHECK(t.find("kl:line") != std::string::npos);
  CHECK(t.find("po") != std::string::npos);
  CHECK(t.find("failures:") != std::string::npos);
}
