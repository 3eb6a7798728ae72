#include "betafrac/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include <nlohmann/json.hpp>

#include "betafrac/oracle.hpp"
#include "betafrac/taylor.hpp"

namespace betafrac {

namespace {

using nlohmann::json;

// Identity-style checks pass at ten times the configured tolerance; the
// factor keeps an order of magnitude between quadrature error control
// (cfg.tol) and the asserted identity residual.
constexpr double kIdentityFactor = 10.0;

struct Cell {
  std::string check;
  const CorpusEntry* f = nullptr;
  const CorpusEntry* g = nullptr;  // paired checks only
  double beta = 0.0;
  Interval iv{0.0, 1.0};
  std::optional<int> n;
};

FunctionModel counted(const FunctionModel& f, std::shared_ptr<long> counter) {
  return FunctionModel(
      f.name(),
      [f, counter](double x, int order) {
        ++*counter;
        return f.jet(x, order);
      },
      f.domain());
}

double sampled_max(const FunctionModel& g, const Interval& iv, int grid = 257) {
  double m = g(iv.a());
  for (int i = 1; i <= grid; ++i)
    m = std::max(m, g(iv.a() + iv.length() * i / grid));
  return m;
}

void fill_identity(RunRecord& rec, double lhs, double rhs, double tol) {
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.mid = std::nullopt;
  const double residual = std::abs(lhs - rhs);
  rec.margin_left = tol - residual;
  rec.margin_right = rec.margin_left;
  rec.verdict = residual <= tol ? "holds" : "violated";
}

void fill_from_report(RunRecord& rec, const InequalityReport& rep) {
  rec.lhs = rep.lhs;
  rec.mid = rep.mid;
  rec.rhs = rep.rhs;
  rec.margin_left = rep.margin_left;
  rec.margin_right = rep.margin_right;
  rec.verdict = to_string(rep.verdict);
}

RunRecord execute_cell(const Cell& cell, const RunConfig& cfg) {
  RunRecord rec;
  rec.check = cell.check;
  rec.function = cell.g ? cell.f->name + "|" + cell.g->name : cell.f->name;
  rec.beta = cell.beta;
  rec.a = cell.iv.a();
  rec.b = cell.iv.b();
  rec.n = cell.n;

  const auto start = std::chrono::steady_clock::now();
  auto counter = std::make_shared<long>(0);
  try {
    const BetaParam p(cell.beta);
    FunctionModel f = counted(cell.f->make(p), counter);
    const double identity_tol = kIdentityFactor * cfg.tol;

    if (cell.check == "fundamental_theorem") {
      auto df = [&](double t) { return beta_derivative(p, f, 1, t); };
      QuadratureResult q = beta_integral(p, df, cell.iv);
      fill_identity(rec, q.value, f(cell.iv.b()) - f(cell.iv.a()), cfg.tol);
    } else if (cell.check == "oracle_agreement") {
      QuadratureResult q = beta_integral(p, f, cell.iv);
      const double ref = oracle_integral([&f](double t) { return f(t); },
                                         p.beta() - 1.0, p.shift(), cell.iv);
      fill_identity(rec, q.value, ref,
                    std::max(cfg.tol, 3.0 * q.error_estimate));
    } else if (cell.check == "taylor_reconstruction") {
      const int n = *cell.n;
      double residual = 0.0;
      for (double s : {cell.iv.a(), cell.iv.b()}) {
        TaylorExpansion poly(p, f, s, n);
        for (int i = 1; i <= 5; ++i) {
          const double t = cell.iv.a() + cell.iv.length() * i / 6.0;
          const double r = integral_remainder(p, f, s, n, t);
          residual = std::max(residual, std::abs(f(t) - poly(t) - r));
        }
      }
      fill_identity(rec, residual, 0.0, identity_tol);
    } else if (cell.check == "lagrange_remainder") {
      RemainderValue rv =
          lagrange_remainder(p, f, cell.iv.a(), *cell.n, cell.iv.b());
      fill_identity(rec, rv.integral_form, *rv.lagrange_form, identity_tol);
      if (*rv.lagrange_point < cell.iv.a() || *rv.lagrange_point > cell.iv.b())
        rec.verdict = "violated";
    } else if (cell.check == "remainder_identity") {
      auto [lhs, rhs] = remainder_integral_identity(
          p, f, cell.iv, cell.iv.midpoint(), *cell.n, cfg.tol / 10.0);
      fill_identity(rec, lhs, rhs, identity_tol);
    } else if (cell.check == "corollary_identity_a") {
      auto [lhs, rhs] = remainder_integral_identity(p, f, cell.iv, cell.iv.a(),
                                                    *cell.n, cfg.tol / 10.0);
      fill_identity(rec, lhs, rhs, identity_tol);
    } else if (cell.check == "corollary_identity_b") {
      auto [lhs, rhs] = remainder_integral_identity(p, f, cell.iv, cell.iv.b(),
                                                    *cell.n, cfg.tol / 10.0);
      fill_identity(rec, lhs, rhs, identity_tol);
    } else if (cell.check == "lemma_bounds") {
      const double m = sampled_max(f, cell.iv);
      if (m <= 0.0) {
        rec.verdict = "hypothesis_not_met";
      } else {
        fill_from_report(rec, check_lemma_bounds(p, f, cell.iv, m));
      }
    } else if (cell.check == "steffensen" ||
               cell.check == "steffensen_reversed") {
      FunctionModel g = counted(cell.g->make(p), counter);
      const double m = sampled_max(g, cell.iv);
      if (m <= 0.0) {
        rec.verdict = "hypothesis_not_met";
      } else if (cell.check == "steffensen") {
        fill_from_report(rec, check_steffensen(p, f, g, cell.iv, m));
      } else {
        fill_from_report(rec, check_steffensen_reversed(p, f, g, cell.iv, m));
      }
    } else if (cell.check == "taylor_steffensen") {
      fill_from_report(
          rec, check_taylor_steffensen(p, f, cell.iv, *cell.n, cfg.tol / 10.0));
    } else if (cell.check == "taylor_steffensen_reversed") {
      fill_from_report(rec, check_taylor_steffensen_reversed(
                                p, f, cell.iv, *cell.n, cfg.tol / 10.0));
    } else if (cell.check == "hermite_hadamard") {
      fill_from_report(rec, check_hermite_hadamard(p, f, cell.iv));
    } else if (cell.check == "hermite_hadamard_reversed") {
      fill_from_report(rec, check_hermite_hadamard_reversed(p, f, cell.iv));
    } else {
      throw std::logic_error("unknown check: " + cell.check);
    }
  } catch (const std::exception&) {
    rec.verdict = "error";
  }
  rec.evals = *counter;
  rec.ms = std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
               .count();
  return rec;
}

bool uses_degree(const std::string& check) {
  return check == "taylor_reconstruction" || check == "lagrange_remainder" ||
         check == "remainder_identity" || check == "corollary_identity_a" ||
         check == "corollary_identity_b" || check == "taylor_steffensen" ||
         check == "taylor_steffensen_reversed";
}

bool uses_pair(const std::string& check) {
  return check == "steffensen" || check == "steffensen_reversed";
}

std::vector<Cell> build_cells(const RunConfig& cfg,
                              const std::vector<CorpusEntry>& corpus) {
  std::vector<Cell> cells;
  for (const std::string& check : cfg.checks) {
    for (const CorpusEntry& f : corpus) {
      for (double beta : cfg.betas) {
        for (const Interval& iv : cfg.intervals) {
          if (!f.covers(iv)) continue;
          if (uses_pair(check)) {
            for (const CorpusEntry& g : corpus) {
              if (!g.covers(iv)) continue;
              cells.push_back(Cell{check, &f, &g, beta, iv, std::nullopt});
            }
          } else if (uses_degree(check)) {
            for (int n : cfg.degrees)
              cells.push_back(Cell{check, &f, nullptr, beta, iv, n});
          } else {
            cells.push_back(Cell{check, &f, nullptr, beta, iv, std::nullopt});
          }
        }
      }
    }
  }
  return cells;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json config_to_json(const RunConfig& cfg) {
  json intervals = json::array();
  for (const Interval& iv : cfg.intervals)
    intervals.push_back(json::array({iv.a(), iv.b()}));
  // The worker count is a runtime knob, not part of the result, so it is
  // left out to keep reports byte-identical across parallel settings.
  return json{{"betas", cfg.betas},
              {"intervals", intervals},
              {"degrees", cfg.degrees},
              {"tol", cfg.tol},
              {"checks", cfg.checks},
              {"output_path", cfg.output_path}};
}

RunConfig config_from_json(const json& j, RunConfig cfg) {
  if (j.contains("betas")) cfg.betas = j.at("betas").get<std::vector<double>>();
  if (j.contains("intervals")) {
    cfg.intervals.clear();
    for (const json& pair : j.at("intervals"))
      cfg.intervals.emplace_back(pair.at(0).get<double>(),
                                 pair.at(1).get<double>());
  }
  if (j.contains("degrees")) cfg.degrees = j.at("degrees").get<std::vector<int>>();
  if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
  if (j.contains("checks"))
    cfg.checks = j.at("checks").get<std::vector<std::string>>();
  if (j.contains("output_path")) cfg.output_path = j.at("output_path").get<std::string>();
  if (j.contains("parallel")) cfg.parallel = j.at("parallel").get<int>();
  return cfg;
}

}  // namespace

const std::vector<std::string>& registered_checks() {
  static const std::vector<std::string> kChecks = {
      "corollary_identity_a",  "corollary_identity_b",
      "fundamental_theorem",   "hermite_hadamard",
      "hermite_hadamard_reversed", "lagrange_remainder",
      "lemma_bounds",          "oracle_agreement",
      "remainder_identity",    "steffensen",
      "steffensen_reversed",   "taylor_reconstruction",
      "taylor_steffensen",     "taylor_steffensen_reversed"};
  return kChecks;
}

RunConfig default_config() {
  RunConfig cfg;
  cfg.betas = {0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
  cfg.intervals = {Interval(0.0, 1.0), Interval(0.5, 2.0), Interval(1.0, 3.0)};
  cfg.degrees = {0, 1, 2, 4, 6};
  cfg.tol = 1e-8;
  cfg.checks = registered_checks();
  cfg.parallel = static_cast<int>(
      std::clamp(std::thread::hardware_concurrency(), 1u, 8u));
  return cfg;
}

RunReport run_suite(const RunConfig& cfg,
                    const std::vector<CorpusEntry>& corpus) {
  if (cfg.betas.empty()) throw std::invalid_argument("run_suite: empty betas");
  for (double b : cfg.betas)
    if (!(b > 0.0) || b > 1.0)
      throw std::invalid_argument("run_suite: beta outside (0, 1]");
  if (cfg.intervals.empty())
    throw std::invalid_argument("run_suite: empty intervals");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("run_suite: tol must be > 0");
  if (cfg.checks.empty()) throw std::invalid_argument("run_suite: empty checks");
  const auto& known = registered_checks();
  for (const std::string& c : cfg.checks)
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw std::invalid_argument("run_suite: unknown check '" + c + "'");
  for (int n : cfg.degrees)
    if (n < 0) throw std::invalid_argument("run_suite: negative degree");
  if (cfg.parallel < 1)
    throw std::invalid_argument("run_suite: parallel must be >= 1");

  verify_corpus_tags(corpus, cfg.intervals, cfg.betas);

  std::vector<Cell> cells = build_cells(cfg, corpus);
  std::vector<RunRecord> records(cells.size());

  std::atomic<size_t> next{0};
  auto worker = [&]() {
    while (true) {
      const size_t i = next.fetch_add(1);
      if (i >= cells.size()) break;
      records[i] = execute_cell(cells[i], cfg);
    }
  };
  const int workers = static_cast<int>(std::min<size_t>(
      static_cast<size_t>(cfg.parallel), std::max<size_t>(cells.size(), 1)));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::sort(records.begin(), records.end(),
            [](const RunRecord& x, const RunRecord& y) {
              return std::tie(x.check, x.function, x.beta, x.a, x.b, x.n) <
                     std::tie(y.check, y.function, y.beta, y.a, y.b, y.n);
            });

  RunReport report;
  report.config = cfg;
  report.records = std::move(records);
  for (const RunRecord& r : report.records) {
    if (r.verdict == "holds")
      ++report.summary.holds;
    else if (r.verdict == "violated")
      ++report.summary.violated;
    else if (r.verdict == "hypothesis_not_met")
      ++report.summary.hypothesis_not_met;
    else
      ++report.summary.error;
  }
  return report;
}

std::string report_to_json(const RunReport& r) {
  json records = json::array();
  for (const RunRecord& rec : r.records) {
    json jr{{"check", rec.check},
            {"function", rec.function},
            {"beta", rec.beta},
            {"a", rec.a},
            {"b", rec.b},
            {"lhs", rec.lhs},
            {"rhs", rec.rhs},
            {"margin_left", rec.margin_left},
            {"margin_right", rec.margin_right},
            {"verdict", rec.verdict},
            {"evals", rec.evals},
            {"ms", rec.ms}};
    jr["n"] = rec.n ? json(*rec.n) : json(nullptr);
    jr["mid"] = rec.mid ? json(*rec.mid) : json(nullptr);
    records.push_back(std::move(jr));
  }
  json out{{"config", config_to_json(r.config)},
           {"records", records},
           {"summary",
            {{"holds", r.summary.holds},
             {"violated", r.summary.violated},
             {"hypothesis_not_met", r.summary.hypothesis_not_met},
             {"error", r.summary.error}}}};
  return out.dump(2) + "\n";
}

std::string report_to_csv(const RunReport& r) {
  std::ostringstream out;
  out << "check,function,beta,a,b,n,lhs,mid,rhs,margin_left,margin_right,"
         "verdict,evals,ms\r\n";
  for (const RunRecord& rec : r.records) {
    out << csv_quote(rec.check) << ',' << csv_quote(rec.function) << ','
        << format_double(rec.beta) << ',' << format_double(rec.a) << ','
        << format_double(rec.b) << ','
        << (rec.n ? std::to_string(*rec.n) : std::string()) << ','
        << format_double(rec.lhs) << ','
        << (rec.mid ? format_double(*rec.mid) : std::string()) << ','
        << format_double(rec.rhs) << ',' << format_double(rec.margin_left)
        << ',' << format_double(rec.margin_right) << ','
        << csv_quote(rec.verdict) << ',' << rec.evals << ','
        << format_double(rec.ms) << "\r\n";
  }
  return out.str();
}

RunReport parse_report_json(const std::string& text) {
  json j = json::parse(text);
  RunReport r;
  r.config = config_from_json(j.at("config"), RunConfig{});
  for (const json& jr : j.at("records")) {
    RunRecord rec;
    rec.check = jr.at("check").get<std::string>();
    rec.function = jr.at("function").get<std::string>();
    rec.beta = jr.at("beta").get<double>();
    rec.a = jr.at("a").get<double>();
    rec.b = jr.at("b").get<double>();
    if (!jr.at("n").is_null()) rec.n = jr.at("n").get<int>();
    rec.lhs = jr.at("lhs").get<double>();
    if (!jr.at("mid").is_null()) rec.mid = jr.at("mid").get<double>();
    rec.rhs = jr.at("rhs").get<double>();
    rec.margin_left = jr.at("margin_left").get<double>();
    rec.margin_right = jr.at("margin_right").get<double>();
    rec.verdict = jr.at("verdict").get<std::string>();
    rec.evals = jr.at("evals").get<long>();
    rec.ms = jr.at("ms").get<double>();
    r.records.push_back(std::move(rec));
  }
  const json& s = j.at("summary");
  r.summary.holds = s.at("holds").get<long>();
  r.summary.violated = s.at("violated").get<long>();
  r.summary.hypothesis_not_met = s.at("hypothesis_not_met").get<long>();
  r.summary.error = s.at("error").get<long>();
  return r;
}

void emit_report(const RunReport& r, const std::string& format,
                 const std::string& path) {
  std::string payload;
  if (format == "json")
    payload = report_to_json(r);
  else if (format == "csv")
    payload = report_to_csv(r);
  else
    throw std::invalid_argument("emit_report: format must be json or csv");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit_report: cannot open " + path);
  out << payload;
  out.flush();
  if (!out) throw std::runtime_error("emit_report: write failed for " + path);
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  json j = json::parse(in);
  return config_from_json(j, std::move(base));
}

}  // namespace betafrac
