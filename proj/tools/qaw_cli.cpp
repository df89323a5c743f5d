// qaw: command-line front end for evaluation, connection coefficients,
// densities, kernel sums, verification suites and chain sampling.
//
// Exit codes: 0 success, 1 a verify suite failed, 2 invalid request,
// 3 numerical failure (non-convergence).

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qaw/connect.hpp"
#include "qaw/density.hpp"
#include "qaw/errors.hpp"
#include "qaw/families.hpp"
#include "qaw/markov.hpp"
#include "qaw/suites.hpp"

using nlohmann::json;

namespace {

json num(double v) {
  if (std::isfinite(v)) return v;
  return json{{"error", "non-finite"}};
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json report_json(const qaw::VerificationReport& r) {
  return json{{"name", r.name},         {"target", num(r.target)},   {"computed", num(r.computed)},
              {"abs_err", num(r.abs_err)}, {"rel_err", num(r.rel_err)}, {"passed", r.passed},
              {"runtime_ms", num(r.runtime_ms)}, {"tolerance", num(r.tolerance)}};
}

// Echo of the flags that were given, numbers as numbers.
json request_json(const CLI::App& sub) {
  json req{{"subcommand", sub.get_name()}};
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string key = opt->get_name();
    key.erase(0, key.find_first_not_of('-'));
    json vals = json::array();
    for (const auto& s : opt->results()) {
      char* end = nullptr;
      const double d = std::strtod(s.c_str(), &end);
      if (end != s.c_str() && *end == '\0' && s.find_first_of(".eEnN") == std::string::npos)
        vals.push_back(static_cast<long long>(d));
      else if (end != s.c_str() && *end == '\0')
        vals.push_back(d);
      else
        vals.push_back(s);
    }
    if (opt->get_expected_max() == 0)
      req[key] = true;
    else
      req[key] = vals.size() == 1 ? vals[0] : vals;
  }
  return req;
}

struct ParamFlags {
  double a = 0, b = 0, c = 0, d = 0;
  double y = 0, z = 0, rho1 = 0, rho2 = 0;
  double q = 0;
  std::vector<CLI::Option*> quad_opts, conj_opts;
  CLI::Option* q_opt = nullptr;

  void attach(CLI::App* app, bool q_required = true) {
    quad_opts = {
        app->add_option("--a", a, "AW parameter a, real, |a| < 1"),
        app->add_option("--b", b, "AW parameter b, real, |b| < 1"),
        app->add_option("--c", c, "AW parameter c, real, |c| < 1"),
        app->add_option("--d", d, "AW parameter d, real, |d| < 1"),
    };
    conj_opts = {
        app->add_option("--y", y, "conditioning point y; [-1, 1] for scheme families, S(q) for rescaled ones"),
        app->add_option("--z", z, "conditioning point z; [-1, 1] for scheme families, S(q) for rescaled ones"),
        app->add_option("--rho1", rho1, "correlation-type parameter rho1, |rho1| < 1"),
        app->add_option("--rho2", rho2, "correlation-type parameter rho2, |rho2| < 1"),
    };
    q_opt = app->add_option("--q", q, "base q in (-1, 1]; q = 1 only for rescaled families and densities");
    if (q_required) q_opt->required();
  }

  bool quad_given() const {
    return std::any_of(quad_opts.begin(), quad_opts.end(), [](auto* o) { return o->count() > 0; });
  }
  bool conj_given() const {
    return std::any_of(conj_opts.begin(), conj_opts.end(), [](auto* o) { return o->count() > 0; });
  }

  void check_exclusive() const {
    if (quad_given() && conj_given())
      throw qaw::InvalidArgument("give either --a/--b/--c/--d or --y/--z/--rho1/--rho2, not both");
  }

  qaw::SchemeParams scheme() const {
    if (conj_given()) return qaw::SchemeParams::conjugate(y, rho1, z, rho2, q);
    return qaw::SchemeParams::real(a, b, c, d, q);
  }

  // Plain fields for rescaled densities, where y and z range over S(q).
  qaw::SchemeParams raw() const {
    qaw::QBase check(q);
    qaw::SchemeParams p;
    p.y = y;
    p.z = z;
    p.rho1 = rho1;
    p.rho2 = rho2;
    p.q = q;
    return p;
  }
};

struct Output {
  json result;
  std::vector<qaw::VerificationReport> reports;
  std::string csv;
  int exit_code = 0;
};

// eval ----------------------------------------------------------------------

const std::vector<std::string> kEvalFamilies = {
    "aw", "c2h", "asc", "bqh", "qh", "h", "b", "p", "g", "w",
    "rescaled_H", "rescaled_P", "rescaled_A", "rescaled_B", "rescaled_G"};

Output run_eval(const std::string& family, int n, double x, bool seq, const ParamFlags& pf) {
  if (n < 0) throw qaw::InvalidArgument("--n must be non-negative");
  std::vector<double> values;
  const double q = pf.q;
  if (family.rfind("rescaled_", 0) == 0) {
    const std::map<std::string, qaw::Rescaled> kinds = {
        {"rescaled_H", qaw::Rescaled::H}, {"rescaled_P", qaw::Rescaled::P},
        {"rescaled_A", qaw::Rescaled::A}, {"rescaled_B", qaw::Rescaled::B},
        {"rescaled_G", qaw::Rescaled::G}};
    qaw::QBase check(q);
    values = qaw::eval_rescaled_seq(kinds.at(family), n, {x, pf.y, pf.rho1, pf.z, pf.rho2, q}).values;
  } else if (family == "h") {
    values = qaw::eval_h_seq(n, x, q).values;
  } else if (family == "b") {
    values = qaw::eval_b_seq(n, x, q).values;
  } else if (family == "p") {
    values = qaw::eval_p_seq(n, x, pf.y, pf.rho1, q).values;
  } else if (family == "g") {
    values = qaw::eval_g_seq(n, x, pf.y, pf.rho1, q).values;
  } else if (family == "w") {
    values = qaw::eval_w_seq(n, x, qaw::SchemeParams::conjugate(pf.y, pf.rho1, pf.z, pf.rho2, q)).values;
  } else {
    values = qaw::eval_scheme_seq(qaw::parse_family(family), n, x, pf.scheme()).values;
  }
  Output out;
  out.result["value"] = num(values.back());
  if (seq) {
    json arr = json::array();
    for (double v : values) arr.push_back(num(v));
    out.result["values"] = arr;
  }
  out.csv = "n,value\n";
  for (int k = seq ? 0 : n; k <= n; ++k) out.csv += std::to_string(k) + "," + fmt(values[k]) + "\n";
  return out;
}

// coeffs --------------------------------------------------------------------

const std::vector<std::string> kMaps = {"aw_to_c2h", "c2h_to_aw", "aw_to_asc", "asc_to_aw",
                                        "w_to_p",    "p_to_w",    "h_to_p",    "p_to_h"};

Output run_coeffs(const std::string& map, int n_max, const std::string& variant,
                  const ParamFlags& pf) {
  if (n_max < 0) throw qaw::InvalidArgument("--nmax must be non-negative");
  using qaw::Direction;
  const Direction fwd = Direction::forward, bwd = Direction::backward;
  const auto var = variant == "factored" ? qaw::AscVariant::factored : qaw::AscVariant::printed;
  qaw::ConnectionMatrix m;
  if (map == "aw_to_c2h" || map == "c2h_to_aw") {
    m = qaw::connection_aw_c2h(n_max, pf.scheme(), map == "aw_to_c2h" ? fwd : bwd);
  } else if (map == "aw_to_asc" || map == "asc_to_aw") {
    m = qaw::connection_aw_asc(n_max, pf.scheme(), map == "aw_to_asc" ? fwd : bwd, var);
  } else if (map == "w_to_p" || map == "p_to_w") {
    m = qaw::connection_w_p(n_max, qaw::SchemeParams::conjugate(pf.y, pf.rho1, pf.z, pf.rho2, pf.q),
                            map == "w_to_p" ? fwd : bwd);
  } else {
    qaw::QBase check(pf.q);
    m = qaw::connection_h_p(n_max, pf.y, pf.rho1, pf.q, map == "h_to_p" ? fwd : bwd);
  }
  Output out;
  json rows = json::array();
  out.csv = "n,k,coeff\n";
  for (int n = 0; n <= n_max; ++n) {
    json row = json::array();
    for (int k = 0; k <= n_max; ++k) {
      row.push_back(num(k <= n ? m.at(k, n) : 0.0));
      if (k <= n) out.csv += std::to_string(n) + "," + std::to_string(k) + "," + fmt(m.at(k, n)) + "\n";
    }
    rows.push_back(row);
  }
  out.result = json{{"map", map}, {"source", m.source}, {"target", m.target}, {"n_max", n_max},
                    {"matrix", rows}};
  return out;
}

// density / kernel ----------------------------------------------------------

bool is_rescaled(qaw::DensityKind k) {
  return k == qaw::DensityKind::f_N || k == qaw::DensityKind::f_CN || k == qaw::DensityKind::f_C2N;
}

Output run_density(const std::string& kind_name, const std::vector<double>& xs, const ParamFlags& pf) {
  const auto kind = qaw::parse_density(kind_name);
  const qaw::DensitySpec spec{kind, is_rescaled(kind) ? pf.raw() : pf.scheme(),
                              qaw::default_truncation()};
  Output out;
  json vals = json::array();
  out.csv = "x,value\n";
  for (double x : xs) {
    const double v = qaw::evaluate(spec, x);
    vals.push_back(num(v));
    out.csv += fmt(x) + "," + fmt(v) + "\n";
  }
  out.result = json{{"kind", qaw::density_name(kind)}, {"x", xs}, {"values", vals}};
  if (xs.size() == 1) out.result["value"] = vals[0];
  return out;
}

Output run_kernel(const std::string& kind_name, const std::vector<double>& xs, const ParamFlags& pf) {
  const auto kind = qaw::parse_kernel(kind_name);
  const auto p = pf.scheme();
  const auto trunc = qaw::default_truncation();
  Output out;
  json points = json::array();
  out.csv = "x,value,target,terms,converged\n";
  for (double x : xs) {
    const auto r = qaw::kernel_sum(kind, x, p, trunc);
    const double target = qaw::kernel_target(kind, x, p, trunc);
    json e{{"x", x},           {"value", num(r.value)}, {"target", num(target)},
           {"terms", r.terms}, {"converged", r.converged}, {"max_term", num(r.max_term)}};
    if (r.closed_form) e["closed_form"] = num(*r.closed_form);
    points.push_back(e);
    out.csv += fmt(x) + "," + fmt(r.value) + "," + fmt(target) + "," + std::to_string(r.terms) + "," +
               (r.converged ? "true" : "false") + "\n";
  }
  out.result = json{{"kind", qaw::kernel_name(kind)}, {"points", points}};
  return out;
}

// verify --------------------------------------------------------------------

Output run_verify(const std::string& suite, const qaw::SuiteOptions& opts) {
  std::vector<std::string> names;
  if (suite == "all")
    names = qaw::suite_names();
  else
    names = {suite};
  std::sort(names.begin(), names.end());
  Output out;
  json suites = json::array();
  bool all = true;
  out.csv = "suite,name,passed,target,computed,abs_err,rel_err,tolerance,runtime_ms\n";
  for (const auto& name : names) {
    const auto r = qaw::run_suite(name, opts);
    all = all && r.passed;
    suites.push_back(json{{"name", r.name},
                          {"passed", r.passed},
                          {"seed", r.seed},
                          {"runtime_ms", num(r.runtime_ms)},
                          {"report_count", r.reports.size()}});
    for (const auto& rep : r.reports) {
      out.reports.push_back(rep);
      out.csv += name + "," + rep.name + "," + (rep.passed ? "true" : "false") + "," +
                 fmt(rep.target) + "," + fmt(rep.computed) + "," + fmt(rep.abs_err) + "," +
                 fmt(rep.rel_err) + "," + fmt(rep.tolerance) + "," + fmt(rep.runtime_ms) + "\n";
    }
  }
  out.result = json{{"passed", all}, {"seed", opts.seed}, {"suites", suites}};
  out.exit_code = all ? 0 : 1;
  return out;
}

// sample --------------------------------------------------------------------

Output run_sample(const qaw::ChainConfig& cfg) {
  const auto samples = qaw::sample_chain(cfg);
  Output out;
  json arr = json::array();
  for (const auto& s : samples) arr.push_back(json::array({s.y, s.x, s.z}));
  out.result = json{{"columns", {"y", "x", "z"}}, {"samples", arr}};
  std::ostringstream os;
  qaw::write_csv(os, samples);
  out.csv = os.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Askey-Wilson scheme numerics: recurrences, densities, connection coefficients, "
               "kernel expansions, verification suites and Markov-chain sampling"};
  app.require_subcommand(1, 1);
  std::string format = "json";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  ParamFlags eval_p, coeffs_p, density_p, kernel_p;

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial family at x");
  std::string family;
  int n = 0;
  double x = 0;
  bool seq = false;
  eval->add_option("--family", family, "family name")->required()->check(CLI::IsMember(kEvalFamilies));
  eval->add_option("--n", n, "degree, integer >= 0")->required();
  eval->add_option("--x", x, "evaluation point x (real; [-1, 1] is the orthogonality interval)")
      ->required();
  eval->add_flag("--seq", seq, "also return all degrees 0..n");
  eval_p.attach(eval);

  auto* coeffs = app.add_subcommand("coeffs", "connection-coefficient matrix; row n expands source_n "
                                              "in target_k, k = 0..n");
  std::string map, variant = "printed";
  int n_max = 0;
  coeffs->add_option("--map", map, "connection")->required()->check(CLI::IsMember(kMaps));
  coeffs->add_option("--nmax", n_max, "largest degree, integer >= 0")->required();
  coeffs->add_option("--variant", variant, "AW <-> ASC evaluation route")
      ->check(CLI::IsMember({"printed", "factored"}))
      ->capture_default_str();
  coeffs_p.attach(coeffs);

  auto* density = app.add_subcommand("density", "evaluate a density");
  std::string dkind;
  std::vector<double> dxs;
  density->add_option("--kind", dkind, "f_h, f_AW, f_psi, f_Q, f_bH, f_p, f_W, f_N, f_CN or f_C2N")
      ->required();
  density->add_option("--x", dxs, "evaluation points; [-1, 1] or S(q) for f_N, f_CN, f_C2N")
      ->required();
  density_p.attach(density);

  auto* kernel = app.add_subcommand("kernel", "partial sums of a density-ratio expansion");
  std::string kkind;
  std::vector<double> kxs;
  kernel->add_option("--kind", kkind, "poisson_mehler, aw_forward, aw_inverse or c2h_sum")->required();
  kernel->add_option("--x", kxs, "evaluation points in [-1, 1]")->required();
  kernel_p.attach(kernel);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::string suite;
  qaw::SuiteOptions sopts;
  double vq = 0;
  std::vector<std::string> suite_choices = qaw::suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite, "suite name or 'all'")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify->add_option("--seed", sopts.seed, "64-bit unsigned seed for parameter draws and sampling")
      ->capture_default_str();
  auto* vq_opt = verify->add_option("--q", vq, "pin the base for every draw, q in (-1, 1]");
  verify->add_option("--samples", sopts.markov_samples, "Markov suite sample count, integer >= 1")
      ->capture_default_str();
  verify->add_option("--threads", sopts.threads, "worker threads, 0 = hardware concurrency")
      ->capture_default_str();

  auto* sample = app.add_subcommand("sample", "sample the three-step q-Normal Markov chain (y, x, z)");
  qaw::ChainConfig cfg;
  double sq = 0;
  sample->add_option("--q", sq, "base q in (-1, 1]")->required();
  sample->add_option("--rho1", cfg.rho1, "Y -> X parameter, |rho1| < 1")->required();
  sample->add_option("--rho2", cfg.rho2, "X -> Z parameter, |rho2| < 1")->required();
  sample->add_option("--n-samples", cfg.n_samples, "number of triples, integer >= 0")->required();
  sample->add_option("--seed", cfg.seed, "64-bit unsigned seed")->capture_default_str();
  sample->add_option("--threads", cfg.threads, "worker threads, 0 = hardware concurrency")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  Output out;
  try {
    if (sub == eval) {
      eval_p.check_exclusive();
      out = run_eval(family, n, x, seq, eval_p);
    } else if (sub == coeffs) {
      coeffs_p.check_exclusive();
      out = run_coeffs(map, n_max, variant, coeffs_p);
    } else if (sub == density) {
      density_p.check_exclusive();
      out = run_density(dkind, dxs, density_p);
    } else if (sub == kernel) {
      kernel_p.check_exclusive();
      out = run_kernel(kkind, kxs, kernel_p);
    } else if (sub == verify) {
      if (vq_opt->count() > 0) sopts.q = static_cast<double>(qaw::QBase(vq));
      if (sopts.markov_samples == 0) throw qaw::InvalidArgument("--samples must be at least 1");
      out = run_verify(suite, sopts);
    } else {
      cfg.q = qaw::QBase(sq);
      out = run_sample(cfg);
    }
  } catch (const qaw::ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const qaw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (format == "csv") {
    std::cout << out.csv;
  } else {
    json reports = json::array();
    for (const auto& r : out.reports) reports.push_back(report_json(r));
    json doc{{"request", request_json(*sub)}, {"result", out.result}, {"reports", reports}};
    std::cout << doc.dump(2) << "\n";
  }
  return out.exit_code;
}
