// hyppow command-line tool: series evaluation, coefficient dumps, identity
// verification and the operation-count benchmark.
//
// Exit codes: 0 = all pass / converged, 1 = verification failure,
// 2 = usage or domain error, 3 = numerical non-convergence.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "hyppow/bench.hpp"
#include "hyppow/coefficient_table.hpp"
#include "hyppow/identities.hpp"
#include "hyppow/power_series.hpp"
#include "hyppow/special_functions.hpp"

using nlohmann::json;
using namespace hyppow;

namespace {

enum class OutputFormat { text, json, csv };

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return OutputFormat::text;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += '"';
  return out;
}

std::string params_string(const IdentityReport& r) {
  std::string out;
  for (std::size_t i = 0; i < r.parameters.size(); ++i) {
    if (i) out += ';';
    out += r.parameters[i].first + "=" + fmt17(r.parameters[i].second);
  }
  return out;
}

void print_series_result(const SeriesResult& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: {
      json j;
      j["value"] = r.value;
      j["terms_used"] = r.terms_used;
      j["tail_estimate"] = r.tail_estimate;
      j["converged"] = r.converged;
      std::printf("%s\n", j.dump().c_str());
      break;
    }
    case OutputFormat::csv:
      std::printf("value,terms_used,tail_estimate,converged\n");
      std::printf("%s,%lld,%s,%s\n", fmt17(r.value).c_str(), r.terms_used,
                  fmt17(r.tail_estimate).c_str(),
                  r.converged ? "true" : "false");
      break;
    case OutputFormat::text:
      std::printf("value         = %s\n", fmt17(r.value).c_str());
      std::printf("terms_used    = %lld\n", r.terms_used);
      std::printf("tail_estimate = %s\n", fmt17(r.tail_estimate).c_str());
      std::printf("converged     = %s\n", r.converged ? "true" : "false");
      break;
  }
}

void print_report(const IdentityReport& r, OutputFormat format,
                  bool* header_done) {
  switch (format) {
    case OutputFormat::json: {
      json j;
      j["identity"] = to_string(r.identity);
      json params = json::object();
      for (const auto& [name, value] : r.parameters) params[name] = value;
      j["params"] = params;
      j["lhs"] = r.lhs;
      j["rhs"] = r.rhs;
      j["abs_residual"] = r.abs_residual;
      j["rel_residual"] = r.rel_residual;
      j["terms_used"] = r.terms_used;
      j["pass"] = r.pass;
      j["notes"] = r.notes;
      std::printf("%s\n", j.dump().c_str());
      break;
    }
    case OutputFormat::csv:
      if (!*header_done) {
        std::printf(
            "identity,params,lhs,rhs,abs_residual,rel_residual,terms_used,"
            "pass,notes\n");
        *header_done = true;
      }
      std::printf("%s,%s,%s,%s,%s,%s,%lld,%s,%s\n", to_string(r.identity),
                  csv_quote(params_string(r)).c_str(), fmt17(r.lhs).c_str(),
                  fmt17(r.rhs).c_str(), fmt17(r.abs_residual).c_str(),
                  fmt17(r.rel_residual).c_str(), r.terms_used,
                  r.pass ? "true" : "false", csv_quote(r.notes).c_str());
      break;
    case OutputFormat::text:
      std::printf("%-5s %-28s %s  lhs=%s rhs=%s rel=%.3g terms=%lld  [%s]\n",
                  to_string(r.identity), params_string(r).c_str(),
                  r.pass ? "PASS" : "FAIL", fmt17(r.lhs).c_str(),
                  fmt17(r.rhs).c_str(), r.rel_residual, r.terms_used,
                  r.notes.c_str());
      break;
  }
}

// --- eval ------------------------------------------------------------------

int run_eval(double alpha, int power, double x, double tol,
             long long max_terms, OutputFormat format) {
  if (power < 1) throw DomainError("eval: --power must be >= 1");
  ConvergenceControl ctrl;
  ctrl.tolerance = tol;
  ctrl.max_terms = max_terms;
  const ParameterPoint parameter(alpha);
  const EvaluationPoint point{x};
  const int m_max =
      static_cast<int>(required_terms(x, tol)) + 64 * std::max(1, power);
  const CoefficientTable table = build_table(parameter, power - 1, m_max);
  const SeriesResult r = eval_power(parameter, power, point, table, ctrl);
  print_series_result(r, format);
  return r.converged ? 0 : 3;
}

// --- coeffs ----------------------------------------------------------------

int run_coeffs(double alpha, int levels, int terms, OutputFormat format) {
  const CoefficientTable table =
      build_table(ParameterPoint(alpha), levels, terms);
  if (format == OutputFormat::csv) std::printf("n,m,value\n");
  for (int n = 0; n <= levels; ++n) {
    for (int m = 0; m <= terms; ++m) {
      switch (format) {
        case OutputFormat::json: {
          json j;
          j["n"] = n;
          j["m"] = m;
          j["value"] = table.get(n, m);
          std::printf("%s\n", j.dump().c_str());
          break;
        }
        case OutputFormat::csv:
          std::printf("%d,%d,%s\n", n, m, fmt17(table.get(n, m)).c_str());
          break;
        case OutputFormat::text:
          std::printf("%4d %6d  %s\n", n, m, fmt17(table.get(n, m)).c_str());
          break;
      }
    }
  }
  return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::optional<double> alpha;
  std::optional<double> q;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<double> x;
  int l_cap = kDefaultOuterCap;
  std::optional<double> tol;
  std::optional<long long> max_terms;
};

ConvergenceControl control_for(IdentityId id, const VerifyArgs& args) {
  ConvergenceControl ctrl = recommended_control(id);
  if (args.tol) ctrl.tolerance = *args.tol;
  if (args.max_terms) ctrl.max_terms = *args.max_terms;
  return ctrl;
}

double need(const std::optional<double>& v, const char* flag,
            const char* identity) {
  if (!v) {
    throw CLI::ValidationError(std::string("verify ") + identity +
                               " requires " + flag);
  }
  return *v;
}

int need_int(const std::optional<int>& v, const char* flag,
             const char* identity) {
  if (!v) {
    throw CLI::ValidationError(std::string("verify ") + identity +
                               " requires " + flag);
  }
  return *v;
}

IdentityReport dispatch_one(IdentityId id, const VerifyArgs& a) {
  const ConvergenceControl ctrl = control_for(id, a);
  switch (id) {
    case IdentityId::eq1:
      return verify_eq1(ParameterPoint(need(a.alpha, "--alpha", "eq1")),
                        need_int(a.k, "--k", "eq1"));
    case IdentityId::eq2:
      return verify_eq2(ParameterPoint(need(a.alpha, "--alpha", "eq2")),
                        need_int(a.k, "--k", "eq2"),
                        need_int(a.n, "--n", "eq2"));
    case IdentityId::eq5:
      return verify_eq5(ParameterPoint(need(a.alpha, "--alpha", "eq5")),
                        need_int(a.k, "--k", "eq5"),
                        need_int(a.n, "--n", "eq5"));
    case IdentityId::eq8:
      return verify_eq8(ParameterPoint(need(a.alpha, "--alpha", "eq8")),
                        EvaluationPoint{need(a.x, "--x", "eq8")}, a.l_cap,
                        ctrl);
    case IdentityId::eq9:
      return verify_eq9(ParameterPoint(need(a.alpha, "--alpha", "eq9")), ctrl);
    case IdentityId::eq10:
      return verify_eq10(ParameterPoint(need(a.q, "--q", "eq10")), ctrl);
    case IdentityId::eq11:
      return verify_eq11(ParameterPoint(need(a.alpha, "--alpha", "eq11")),
                         EvaluationPoint{need(a.x, "--x", "eq11")}, a.l_cap,
                         ctrl);
    case IdentityId::eq12:
      return verify_eq12(ParameterPoint(need(a.q, "--q", "eq12")), ctrl);
  }
  throw CLI::ValidationError("unknown identity");
}

// Fixed sample set behind `verify --identity all`, chosen so a plain run
// reproduces the documented checks end to end.
std::vector<IdentityReport> run_all_samples() {
  std::vector<IdentityReport> reports;
  const auto ctrl = [](IdentityId id) { return recommended_control(id); };

  for (auto [alpha, k] : {std::pair{0.5, 0}, {1.0, 1}, {0.3, 50}}) {
    reports.push_back(verify_eq1(ParameterPoint(alpha), k));
  }
  for (auto [alpha, k, n] :
       {std::tuple{1.0, 1, 2}, {0.5, 10, 3}, {1.25, 40, 4}}) {
    reports.push_back(verify_eq2(ParameterPoint(alpha), k, n));
  }
  for (auto [alpha, k, n] :
       {std::tuple{0.6, 0, 3}, {1.0, 5, 2}, {0.25, 40, 4}}) {
    reports.push_back(verify_eq5(ParameterPoint(alpha), k, n));
  }
  for (auto [alpha, x] :
       {std::pair{0.75, 0.0}, {0.75, 0.5}, {0.75, -0.5}, {0.5, -1.0}}) {
    reports.push_back(verify_eq8(ParameterPoint(alpha), EvaluationPoint{x},
                                 kDefaultOuterCap, ctrl(IdentityId::eq8)));
  }
  for (double alpha : {0.3, 0.7, 1.25}) {
    reports.push_back(verify_eq9(ParameterPoint(alpha), ctrl(IdentityId::eq9)));
  }
  for (double q : {0.15, 0.3, 0.65}) {
    reports.push_back(verify_eq10(ParameterPoint(q), ctrl(IdentityId::eq10)));
  }
  for (auto [alpha, x] : {std::pair{0.75, 0.0}, {0.75, 0.5}, {0.6, -0.5}}) {
    reports.push_back(verify_eq11(ParameterPoint(alpha), EvaluationPoint{x},
                                  kDefaultOuterCap, ctrl(IdentityId::eq11)));
  }
  for (double q : {0.75, 1.0, 1.25}) {
    reports.push_back(verify_eq12(ParameterPoint(q), ctrl(IdentityId::eq12)));
  }
  return reports;
}

int run_verify(const std::string& identity, const VerifyArgs& args,
               OutputFormat format) {
  bool header_done = false;
  bool all_pass = true;
  if (identity == "all") {
    for (const IdentityReport& r : run_all_samples()) {
      print_report(r, format, &header_done);
      all_pass &= r.pass;
    }
  } else {
    IdentityId id = IdentityId::eq1;
    for (IdentityId candidate :
         {IdentityId::eq1, IdentityId::eq2, IdentityId::eq5, IdentityId::eq8,
          IdentityId::eq9, IdentityId::eq10, IdentityId::eq11,
          IdentityId::eq12}) {
      if (identity == to_string(candidate)) id = candidate;
    }
    const IdentityReport r = dispatch_one(id, args);
    print_report(r, format, &header_done);
    all_pass = r.pass;
  }
  return all_pass ? 0 : 1;
}

// --- bench -------------------------------------------------------------------

std::pair<int, int> parse_power_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(s);
    return {n, n};
  }
  return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

int run_bench_cmd(double alpha, const std::string& powers, double x,
                  long long terms, OutputFormat format) {
  const auto [n_lo, n_hi] = parse_power_range(powers);
  const std::vector<BenchRecord> records =
      run_bench(alpha, n_lo, n_hi, x, terms);
  if (format == OutputFormat::csv) {
    std::printf("strategy,n,terms,multiply_add_count,wall_nanoseconds,value\n");
  }
  for (const BenchRecord& r : records) {
    switch (format) {
      case OutputFormat::json: {
        json j;
        j["strategy"] = to_string(r.strategy);
        j["n"] = r.n;
        j["terms"] = r.terms;
        j["multiply_add_count"] = r.multiply_add_count;
        j["wall_nanoseconds"] = r.wall_nanoseconds;
        j["value"] = r.value;
        std::printf("%s\n", j.dump().c_str());
        break;
      }
      case OutputFormat::csv:
        std::printf("%s,%d,%lld,%llu,%lld,%s\n", to_string(r.strategy), r.n,
                    r.terms,
                    static_cast<unsigned long long>(r.multiply_add_count),
                    static_cast<long long>(r.wall_nanoseconds),
                    fmt17(r.value).c_str());
        break;
      case OutputFormat::text:
        std::printf("%-13s n=%d terms=%lld ops=%llu wall_ns=%lld value=%s\n",
                    to_string(r.strategy), r.n, r.terms,
                    static_cast<unsigned long long>(r.multiply_add_count),
                    static_cast<long long>(r.wall_nanoseconds),
                    fmt17(r.value).c_str());
        break;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "powers of 2F1(1, a; a+1; x) via a coefficient-table series, with "
      "identity verification and an operation-count benchmark"};
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"text", "json", "csv"};

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate (2F1(1,a;a+1;x))^n");
  double e_alpha = 0.0;
  int e_power = 1;
  double e_x = 0.0;
  double e_tol = 1e-12;
  long long e_max_terms = 100000;
  std::string e_format = "text";
  eval->add_option("--alpha", e_alpha, "series parameter a")->required();
  eval->add_option("--power", e_power, "integer power n >= 1")->required();
  eval->add_option("--x", e_x, "abscissa, |x| < 1 or x = -1")->required();
  eval->add_option("--tol", e_tol, "relative tolerance")->capture_default_str();
  eval->add_option("--max-terms", e_max_terms, "term cap")->capture_default_str();
  eval->add_option("--format", e_format)->check(CLI::IsMember(formats));

  // coeffs
  auto* coeffs = app.add_subcommand("coeffs", "dump the coefficient table");
  double c_alpha = 0.0;
  int c_levels = 0;
  int c_terms = 0;
  std::string c_format = "csv";
  coeffs->add_option("--alpha", c_alpha, "series parameter a")->required();
  coeffs->add_option("--levels", c_levels, "highest level n")->required();
  coeffs->add_option("--terms", c_terms, "highest term index m")->required();
  coeffs->add_option("--format", c_format)->check(CLI::IsMember(formats));

  // verify
  auto* verify = app.add_subcommand("verify", "check identities numerically");
  std::string v_identity;
  VerifyArgs v_args;
  double v_alpha = 0.0;
  double v_q = 0.0;
  int v_k = 0;
  int v_n = 0;
  double v_x = 0.0;
  double v_tol = 0.0;
  long long v_max_terms = 0;
  std::string v_format = "text";
  verify
      ->add_option("--identity", v_identity,
                   "eq1|eq2|eq5|eq8|eq9|eq10|eq11|eq12|all")
      ->required()
      ->check(CLI::IsMember({"eq1", "eq2", "eq5", "eq8", "eq9", "eq10", "eq11",
                             "eq12", "all"}));
  auto* o_alpha = verify->add_option("--alpha", v_alpha, "parameter alpha");
  auto* o_q = verify->add_option("--q", v_q, "parameter q");
  auto* o_k = verify->add_option("--k", v_k, "finite-sum upper index k");
  auto* o_n = verify->add_option("--n", v_n, "chain depth n");
  auto* o_x = verify->add_option("--x", v_x, "abscissa x");
  verify->add_option("--l-cap", v_args.l_cap, "outer summation cap")->capture_default_str();
  auto* o_tol = verify->add_option("--tol", v_tol, "sub-series tolerance");
  auto* o_max = verify->add_option("--max-terms", v_max_terms,
                                   "sub-series term cap");
  verify->add_option("--format", v_format)->check(CLI::IsMember(formats));

  // bench
  auto* bench = app.add_subcommand(
      "bench", "instrumented cost comparison of the evaluation strategies");
  double b_alpha = 0.0;
  std::string b_powers;
  double b_x = 0.0;
  long long b_terms = 0;
  std::string b_format = "text";
  bench->add_option("--alpha", b_alpha, "series parameter a")->required();
  bench->add_option("--powers", b_powers, "power range, e.g. 1..4")
      ->required();
  bench->add_option("--x", b_x, "abscissa, |x| < 1")->required();
  bench->add_option("--terms", b_terms, "fixed term budget")->required();
  bench->add_option("--format", b_format)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  try {
    if (eval->parsed()) {
      return run_eval(e_alpha, e_power, e_x, e_tol, e_max_terms,
                      parse_format(e_format));
    }
    if (coeffs->parsed()) {
      return run_coeffs(c_alpha, c_levels, c_terms, parse_format(c_format));
    }
    if (verify->parsed()) {
      if (v_identity == "all") {
        if (o_alpha->count() || o_q->count() || o_k->count() || o_n->count() ||
            o_x->count()) {
          std::fprintf(stderr,
                       "verify --identity all uses the built-in sample set; "
                       "parameter flags are not accepted\n");
          return 2;
        }
      }
      if (o_alpha->count()) v_args.alpha = v_alpha;
      if (o_q->count()) v_args.q = v_q;
      if (o_k->count()) v_args.k = v_k;
      if (o_n->count()) v_args.n = v_n;
      if (o_x->count()) v_args.x = v_x;
      if (o_tol->count()) v_args.tol = v_tol;
      if (o_max->count()) v_args.max_terms = v_max_terms;
      return run_verify(v_identity, v_args, parse_format(v_format));
    }
    if (bench->parsed()) {
      return run_bench_cmd(b_alpha, b_powers, b_x, b_terms,
                           parse_format(b_format));
    }
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "non-convergence: %s\n", e.what());
    return 3;
  } catch (const PoleError& e) {
    std::fprintf(stderr, "pole error: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return 2;
  } catch (const TableSizeError& e) {
    std::fprintf(stderr, "table too small: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "bad argument: %s\n", e.what());
    return 2;
  }
  return 2;
}
