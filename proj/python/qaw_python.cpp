#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qaw/connect.hpp"
#include "qaw/density.hpp"
#include "qaw/errors.hpp"
#include "qaw/families.hpp"
#include "qaw/markov.hpp"
#include "qaw/suites.hpp"

namespace py = pybind11;

namespace {

qaw::SchemeParams params(const py::kwargs& kw, double q) {
  auto get = [&](const char* k) { return kw.contains(k) ? kw[k].cast<double>() : 0.0; };
  const bool conj = kw.contains("y") || kw.contains("z") || kw.contains("rho1") || kw.contains("rho2");
  const bool quad = kw.contains("a") || kw.contains("b") || kw.contains("c") || kw.contains("d");
  if (conj && quad) throw qaw::InvalidArgument("give either a, b, c, d or y, z, rho1, rho2");
  if (conj) return qaw::SchemeParams::conjugate(get("y"), get("rho1"), get("z"), get("rho2"), q);
  return qaw::SchemeParams::real(get("a"), get("b"), get("c"), get("d"), q);
}

py::array_t<double> matrix(const qaw::ConnectionMatrix& m) {
  const py::ssize_t n = m.n_max + 1;
  py::array_t<double> out({n, n});
  auto r = out.mutable_unchecked<2>();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) r(i, k) = k <= i ? m.at(k, i) : 0.0;
  return out;
}

py::dict report(const qaw::VerificationReport& r) {
  py::dict d;
  d["name"] = r.name;
  d["target"] = r.target;
  d["computed"] = r.computed;
  d["abs_err"] = r.abs_err;
  d["rel_err"] = r.rel_err;
  d["tolerance"] = r.tolerance;
  d["passed"] = r.passed;
  d["runtime_ms"] = r.runtime_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_qaw, m) {
  m.doc() = "Askey-Wilson scheme numerics";

  py::register_exception<qaw::Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<qaw::InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<qaw::ConvergenceFailure>(m, "ConvergenceFailure", PyExc_ArithmeticError);

  m.def("qpochhammer", py::overload_cast<double, double, int>(&qaw::q_pochhammer), py::arg("a"),
        py::arg("q"), py::arg("n"));
  m.def("qpochhammer_inf",
        [](double a, double q) { return qaw::q_pochhammer_inf(a, qaw::QBase(q)); }, py::arg("a"),
        py::arg("q"));
  m.def("q_binomial", &qaw::q_binomial, py::arg("n"), py::arg("k"), py::arg("q"));

  m.def("eval_h", &qaw::eval_h, py::arg("n"), py::arg("x"), py::arg("q"));
  m.def("eval_p", &qaw::eval_p, py::arg("n"), py::arg("x"), py::arg("y"), py::arg("rho"), py::arg("q"));
  m.def(
      "eval_scheme",
      [](const std::string& family, int n, double x, double q, const py::kwargs& kw) {
        return qaw::eval_scheme_seq(qaw::parse_family(family), n, x, params(kw, q)).values;
      },
      py::arg("family"), py::arg("n"), py::arg("x"), py::arg("q"),
      "Values of degrees 0..n; parameters as a=, b=, c=, d= or y=, z=, rho1=, rho2=.");

  m.def(
      "density",
      [](const std::string& kind, const std::vector<double>& xs, double q, const py::kwargs& kw) {
        const auto k = qaw::parse_density(kind);
        qaw::SchemeParams p;
        if (k == qaw::DensityKind::f_N || k == qaw::DensityKind::f_CN || k == qaw::DensityKind::f_C2N) {
          qaw::QBase check(q);
          p.q = q;
          for (auto [name, field] : {std::pair{"y", &p.y}, {"z", &p.z}, {"rho1", &p.rho1}, {"rho2", &p.rho2}})
            if (kw.contains(name)) *field = kw[name].cast<double>();
        } else {
          p = params(kw, q);
        }
        const qaw::DensitySpec spec{k, p, qaw::default_truncation()};
        std::vector<double> out;
        out.reserve(xs.size());
        for (double x : xs) out.push_back(qaw::evaluate(spec, x));
        return out;
      },
      py::arg("kind"), py::arg("x"), py::arg("q"));

  m.def(
      "connection",
      [](const std::string& map, int n_max, double q, const py::kwargs& kw) {
        using qaw::Direction;
        const auto p = params(kw, q);
        if (map == "aw_to_c2h") return matrix(qaw::connection_aw_c2h(n_max, p, Direction::forward));
        if (map == "c2h_to_aw") return matrix(qaw::connection_aw_c2h(n_max, p, Direction::backward));
        if (map == "aw_to_asc")
          return matrix(qaw::connection_aw_asc(n_max, p, Direction::forward, qaw::AscVariant::factored));
        if (map == "asc_to_aw")
          return matrix(qaw::connection_aw_asc(n_max, p, Direction::backward, qaw::AscVariant::factored));
        if (map == "w_to_p") return matrix(qaw::connection_w_p(n_max, p, Direction::forward));
        if (map == "p_to_w") return matrix(qaw::connection_w_p(n_max, p, Direction::backward));
        throw qaw::InvalidArgument("unknown map '" + map + "'");
      },
      py::arg("map"), py::arg("n_max"), py::arg("q"),
      "Row n holds the coefficients of source_n in target_0..target_n.");

  m.def("suite_names", &qaw::suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed, std::optional<double> q, std::uint64_t samples) {
        qaw::SuiteOptions o;
        o.seed = seed;
        o.q = q;
        o.markov_samples = samples;
        qaw::SuiteResult r;
        {
          py::gil_scoped_release release;
          r = qaw::run_suite(name, o);
        }
        py::dict d;
        d["name"] = r.name;
        d["seed"] = r.seed;
        d["passed"] = r.passed;
        d["runtime_ms"] = r.runtime_ms;
        py::list reports;
        for (const auto& rep : r.reports) reports.append(report(rep));
        d["reports"] = reports;
        return d;
      },
      py::arg("name"), py::arg("seed") = qaw::kDefaultSuiteSeed, py::arg("q") = py::none(),
      py::arg("samples") = 1000000);

  m.def(
      "sample_chain",
      [](double q, double rho1, double rho2, std::uint64_t n, std::uint64_t seed, int threads) {
        qaw::ChainConfig cfg;
        cfg.q = qaw::QBase(q);
        cfg.rho1 = rho1;
        cfg.rho2 = rho2;
        cfg.n_samples = n;
        cfg.seed = seed;
        cfg.threads = threads;
        std::vector<qaw::ChainSample> s;
        {
          py::gil_scoped_release release;
          s = qaw::sample_chain(cfg);
        }
        py::array_t<double> out({static_cast<py::ssize_t>(s.size()), py::ssize_t{3}});
        auto r = out.mutable_unchecked<2>();
        for (size_t i = 0; i < s.size(); ++i) {
          r(i, 0) = s[i].y;
          r(i, 1) = s[i].x;
          r(i, 2) = s[i].z;
        }
        return out;
      },
      py::arg("q"), py::arg("rho1"), py::arg("rho2"), py::arg("n_samples"), py::arg("seed") = 0,
      py::arg("threads") = 0, "Array of shape (n_samples, 3) with columns y, x, z.");
}
