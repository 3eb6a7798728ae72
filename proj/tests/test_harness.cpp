#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "betafrac/harness.hpp"
#include "betafrac/oracle.hpp"

using namespace betafrac;

namespace {

RunConfig small_config() {
  RunConfig cfg;
  cfg.betas = {0.5, 1.0};
  cfg.intervals = {Interval(0.0, 1.0)};
  cfg.degrees = {0, 1};
  cfg.tol = 1e-8;
  cfg.checks = registered_checks();
  cfg.parallel = 2;
  return cfg;
}

RunReport strip_ms(RunReport r) {
  for (auto& rec : r.records) rec.ms = 0.0;
  return r;
}

}  // namespace

TEST_CASE("oracle_integral examples") {
  // Unweighted: int_0^1 t^2 dt.
  const double v1 = oracle_integral([](double t) { return t * t; }, 0.0, 0.0,
                                    Interval(0.0, 1.0));
  CHECK(v1 == doctest::Approx(1.0 / 3.0).epsilon(1e-10));

  // Weighted, beta = 0.5: int_0^1 (t+c)^{-1/2} dt with closed form.
  const double c = 0.56418958354775628695;
  const double v2 =
      oracle_integral([](double) { return 1.0; }, -0.5, c, Interval(0.0, 1.0));
  CHECK(v2 == doctest::Approx(2.0 * (std::sqrt(1.0 + c) - std::sqrt(c)))
                  .epsilon(1e-9));
}

TEST_CASE("oracle_derivative examples") {
  auto f = [](double x) { return std::exp(-x); };
  for (int k = 1; k <= 4; ++k) {
    const double ref = (k % 2 == 0) ? std::exp(-1.0) : -std::exp(-1.0);
    CHECK(oracle_derivative(f, 1.0, k) ==
          doctest::Approx(ref).epsilon(k <= 2 ? 1e-9 : 1e-6));
  }
  // Near the left boundary the one-sided stencil takes over.
  CHECK(oracle_derivative(f, 0.0, 1) == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK_THROWS(oracle_derivative(f, 1.0, 5));
}

TEST_CASE("registered checks are exactly the documented set") {
  const auto& names = registered_checks();
  CHECK(names.size() == 14);
  for (const char* want :
       {"corollary_identity_a", "corollary_identity_b", "fundamental_theorem",
        "hermite_hadamard", "hermite_hadamard_reversed", "lagrange_remainder",
        "lemma_bounds", "oracle_agreement", "remainder_identity", "steffensen",
        "steffensen_reversed", "taylor_reconstruction", "taylor_steffensen",
        "taylor_steffensen_reversed"}) {
    bool found = false;
    for (const auto& n : names) found = found || n == want;
    CHECK_MESSAGE(found, want);
  }
}

TEST_CASE("run_suite rejects an empty check list and unknown names") {
  RunConfig cfg = small_config();
  cfg.checks.clear();
  CHECK_THROWS_AS(run_suite(cfg, default_corpus()), std::invalid_argument);
  cfg.checks = {"no_such_check"};
  CHECK_THROWS_AS(run_suite(cfg, default_corpus()), std::invalid_argument);
}

TEST_CASE("corpus tags survive re-verification") {
  const auto cfg = default_config();
  CHECK_NOTHROW(
      verify_corpus_tags(default_corpus(), cfg.intervals, cfg.betas));
}

TEST_CASE("small suite: clean verdicts and coherent summary") {
  const RunConfig cfg = small_config();
  const RunReport r = run_suite(cfg, default_corpus());
  CHECK(!r.records.empty());
  long holds = 0, violated = 0, hnm = 0, err = 0;
  for (const auto& rec : r.records) {
    if (rec.verdict == "holds") ++holds;
    else if (rec.verdict == "violated") ++violated;
    else if (rec.verdict == "hypothesis_not_met") ++hnm;
    else ++err;
    CHECK(std::isfinite(rec.lhs));
    CHECK(std::isfinite(rec.rhs));
    CHECK(rec.evals >= 0);
  }
  CHECK(holds == r.summary.holds);
  CHECK(violated == r.summary.violated);
  CHECK(hnm == r.summary.hypothesis_not_met);
  CHECK(err == r.summary.error);
  CHECK(r.summary.violated == 0);
  CHECK(r.summary.error == 0);

  // Records arrive sorted by (check, function, beta, a, b, n).
  for (size_t i = 1; i < r.records.size(); ++i) {
    const auto& x = r.records[i - 1];
    const auto& y = r.records[i];
    const auto key = [](const RunRecord& rr) {
      return std::make_tuple(rr.check, rr.function, rr.beta, rr.a, rr.b,
                             rr.n.value_or(-1));
    };
    CHECK(key(x) <= key(y));
  }
}

TEST_CASE("hypothesis verdicts match an independent tag count") {
  RunConfig cfg = small_config();
  cfg.checks = {"hermite_hadamard"};
  const auto corpus = default_corpus();
  const RunReport r = run_suite(cfg, corpus);

  long expected = 0;
  for (double beta : cfg.betas) {
    const BetaParam p(beta);
    for (const auto& iv : cfg.intervals) {
      for (const auto& entry : corpus) {
        if (!entry.covers(iv)) continue;
        const FunctionModel f = entry.make(p);
        const auto mf = check_monotone_sign(f, iv);
        const auto md = check_monotone_sign(
            [&](double x) { return beta_derivative(p, f, 1, x); }, iv);
        if (!(mf.is_nonincreasing && md.is_nondecreasing)) ++expected;
      }
    }
  }
  CHECK(r.summary.hypothesis_not_met == expected);
  CHECK(r.summary.violated == 0);
}

TEST_CASE("JSON report round-trips") {
  RunConfig cfg = small_config();
  cfg.checks = {"fundamental_theorem", "hermite_hadamard"};
  const RunReport r = run_suite(cfg, default_corpus());
  const std::string text = report_to_json(r);
  const RunReport back = parse_report_json(text);
  CHECK(report_to_json(back) == text);
  REQUIRE(back.records.size() == r.records.size());
  for (size_t i = 0; i < r.records.size(); ++i) {
    CHECK(back.records[i].check == r.records[i].check);
    CHECK(back.records[i].lhs == r.records[i].lhs);
    CHECK(back.records[i].mid.has_value() == r.records[i].mid.has_value());
    CHECK(back.records[i].verdict == r.records[i].verdict);
  }
}

TEST_CASE("CSV report shape") {
  RunConfig cfg = small_config();
  cfg.checks = {"fundamental_theorem"};
  const RunReport r = run_suite(cfg, default_corpus());
  const std::string text = report_to_csv(r);

  std::istringstream in(text);
  std::string line;
  size_t lines = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (lines == 0)
      CHECK(line ==
            "check,function,beta,a,b,n,lhs,mid,rhs,margin_left,margin_right,"
            "verdict,evals,ms");
    ++lines;
  }
  CHECK(lines == r.records.size() + 1);
}

TEST_CASE("worker count does not change the report") {
  RunConfig cfg = small_config();
  cfg.checks = {"fundamental_theorem", "taylor_reconstruction", "steffensen"};
  cfg.parallel = 1;
  const RunReport r1 = run_suite(cfg, default_corpus());
  cfg.parallel = 8;
  const RunReport r8 = run_suite(cfg, default_corpus());
  CHECK(report_to_json(strip_ms(r1)) == report_to_json(strip_ms(r8)));
}

TEST_CASE("config file loading keeps defaults for missing keys") {
  const std::string path = "test_config_tmp.json";
  {
    std::ofstream out(path);
    out << "{\"betas\": [0.5], \"tol\": 1e-6}\n";
  }
  const RunConfig cfg = load_config_file(path, default_config());
  CHECK(cfg.betas.size() == 1);
  CHECK(cfg.betas[0] == 0.5);
  CHECK(cfg.tol == 1e-6);
  CHECK(cfg.intervals.size() == 3);  // untouched default
  std::remove(path.c_str());
}
