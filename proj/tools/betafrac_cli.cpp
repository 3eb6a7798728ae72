// Command line front end: runs the verification suite, evaluates single
// operations, and lists the corpus.

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "betafrac/harness.hpp"
#include "betafrac/taylor.hpp"

namespace {

using namespace betafrac;

std::optional<Interval> parse_interval(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    return Interval(std::stod(text.substr(0, comma)),
                    std::stod(text.substr(comma + 1)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus,
                              const std::string& name) {
  for (const CorpusEntry& e : corpus)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beta-fractional calculus verification tool"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the check suite and write a report");
  std::string config_path, checks_arg, interval_arg, format = "json";
  std::string out_path;
  double beta_arg = -1.0, tol_arg = -1.0;
  int n_arg = -1, parallel_arg = -1;
  verify->add_option("--config", config_path, "JSON config file");
  verify->add_option("--beta", beta_arg, "single beta (overrides config)");
  verify->add_option("--interval", interval_arg, "single interval a,b");
  verify->add_option("--n", n_arg, "single degree");
  verify->add_option("--tol", tol_arg, "tolerance");
  verify->add_option("--checks", checks_arg, "comma separated check names");
  verify->add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  verify->add_option("--out", out_path, "output path");
  verify->add_option("--parallel", parallel_arg, "worker count");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a single operation");
  std::string eval_what, eval_function;
  double eval_beta = 1.0, eval_x = 0.0, eval_s = 0.0, eval_t = 1.0;
  double eval_tol = 1e-10;
  int eval_k = 1, eval_n = 0;
  std::string eval_interval;
  eval->add_option("what", eval_what, "derivative|integral|taylor")
      ->required()
      ->check(CLI::IsMember({"derivative", "integral", "taylor"}));
  eval->add_option("--function", eval_function, "corpus function name")->required();
  eval->add_option("--beta", eval_beta, "order beta in (0,1]")->required();
  eval->add_option("--x", eval_x, "evaluation point (derivative)");
  eval->add_option("--k", eval_k, "iteration count (derivative)");
  eval->add_option("--interval", eval_interval, "a,b (integral)");
  eval->add_option("--s", eval_s, "expansion point (taylor)");
  eval->add_option("--t", eval_t, "evaluation point (taylor)");
  eval->add_option("--n", eval_n, "degree (taylor)");
  eval->add_option("--tol", eval_tol, "quadrature tolerance");

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "list corpus entries and tags");

  CLI11_PARSE(app, argc, argv);

  try {
    const std::vector<CorpusEntry> corpus = default_corpus();

    if (*corpus_cmd) {
      for (const CorpusEntry& e : corpus) {
        std::cout << e.name << "  direction=" << to_string(e.declared_direction)
                  << " sign=" << to_string(e.declared_sign);
        if (e.domain)
          std::cout << " domain=[" << e.domain->first << "," << e.domain->second
                    << "]";
        std::cout << "\n";
      }
      return 0;
    }

    if (*eval) {
      const CorpusEntry* entry = find_entry(corpus, eval_function);
      if (!entry) {
        std::cerr << "unknown corpus function: " << eval_function << "\n";
        return 1;
      }
      const BetaParam p(eval_beta);
      FunctionModel f = entry->make(p);
      if (eval_what == "derivative") {
        std::printf("%.17g\n", beta_derivative(p, f, eval_k, eval_x));
      } else if (eval_what == "integral") {
        auto iv = parse_interval(eval_interval);
        if (!iv) {
          std::cerr << "eval integral needs --interval a,b\n";
          return 1;
        }
        QuadratureResult q = beta_integral(p, f, *iv, eval_tol);
        std::printf("%.17g  (error_estimate %.3g, evaluations %ld)\n", q.value,
                    q.error_estimate, q.evaluations);
        if (!q.converged) {
          std::cerr << "quadrature did not converge\n";
          return 1;
        }
      } else {  // taylor
        const double poly = taylor_polynomial(p, f, eval_s, eval_n, eval_t);
        const double rem =
            integral_remainder(p, f, eval_s, eval_n, eval_t, eval_tol);
        std::printf("polynomial %.17g  remainder %.17g  f(t) %.17g\n", poly,
                    rem, f(eval_t));
      }
      return 0;
    }

    // verify
    RunConfig cfg = default_config();
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    if (beta_arg > 0.0) cfg.betas = {beta_arg};
    if (!interval_arg.empty()) {
      auto iv = parse_interval(interval_arg);
      if (!iv) {
        std::cerr << "bad --interval, expected a,b\n";
        return 1;
      }
      cfg.intervals = {*iv};
    }
    if (n_arg >= 0) cfg.degrees = {n_arg};
    if (tol_arg > 0.0) cfg.tol = tol_arg;
    if (parallel_arg > 0) cfg.parallel = parallel_arg;
    if (!checks_arg.empty()) {
      cfg.checks.clear();
      size_t pos = 0;
      while (pos != std::string::npos) {
        const size_t comma = checks_arg.find(',', pos);
        cfg.checks.push_back(checks_arg.substr(
            pos, comma == std::string::npos ? comma : comma - pos));
        pos = comma == std::string::npos ? comma : comma + 1;
      }
    }
    if (!out_path.empty()) cfg.output_path = out_path;

    RunReport report = run_suite(cfg, corpus);
    emit_report(report, format, cfg.output_path);
    std::cout << "records " << report.records.size() << "  holds "
              << report.summary.holds << "  violated "
              << report.summary.violated << "  hypothesis_not_met "
              << report.summary.hypothesis_not_met << "  error "
              << report.summary.error << "\n"
              << "report written to " << cfg.output_path << "\n";
    if (report.summary.violated > 0) return 2;
    if (report.summary.error > 0) return 2;
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
