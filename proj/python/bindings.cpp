#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "amoroso/amoroso.hpp"
#include "amoroso/catalog.hpp"
#include "amoroso/cli.hpp"
#include "amoroso/loggamma.hpp"
#include "amoroso/random.hpp"
#include "amoroso/verify.hpp"

namespace py = pybind11;
using namespace amoroso;

namespace {

py::dict summary_dict(const DistributionSummary& s) {
  py::dict d;
  d["support"] = py::make_tuple(s.support.lower, s.support.upper);
  d["mode"] = s.mode;
  d["mean"] = s.mean;
  d["variance"] = s.variance;
  d["skew"] = s.skew;
  d["excess_kurtosis"] = s.kurtosis;
  d["entropy"] = s.entropy;
  py::list conds;
  for (const auto& c : s.side_conditions) conds.append(py::make_tuple(c.quantity, c.satisfied));
  d["side_conditions"] = conds;
  return d;
}

template <class P>
void bind_family(py::class_<P>& cls) {
  cls.def("support", [](const P& p) {
       const auto s = support(p);
       return py::make_tuple(s.lower, s.upper);
     })
      .def("pdf", [](const P& p, double x) { return pdf(p, x); })
      .def("log_pdf", [](const P& p, double x) { return log_pdf(p, x); })
      .def("cdf", [](const P& p, double x) { return cdf(p, x); })
      .def("sf", [](const P& p, double x) { return survival(p, x); })
      .def("quantile", [](const P& p, double q) { return quantile(p, q); })
      .def("mode", [](const P& p) { return mode(p); })
      .def("entropy", [](const P& p) { return entropy(p); })
      .def("describe", [](const P& p) { return summary_dict(summarize(p)); })
      .def(
          "sample",
          [](const P& p, std::size_t n, std::uint64_t seed) {
            RandomStream rng(seed);
            return sample(p, rng, n);
          },
          py::arg("n"), py::arg("seed") = kDefaultSeed)
      .def(py::self == py::self);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Amoroso and log-gamma distributions";

  py::register_exception<catalog::UnknownDistribution>(m, "UnknownDistribution", PyExc_KeyError);
  py::register_exception<catalog::ConstraintViolation>(m, "ConstraintViolation", PyExc_ValueError);

  py::class_<AmorosoParams> am(m, "Amoroso");
  am.def(py::init<double, double, double, double>(), py::arg("a"), py::arg("theta"), py::arg("alpha"),
         py::arg("beta"))
      .def_property_readonly("a", &AmorosoParams::a)
      .def_property_readonly("theta", &AmorosoParams::theta)
      .def_property_readonly("alpha", &AmorosoParams::alpha)
      .def_property_readonly("beta", &AmorosoParams::beta)
      .def("mean", [](const AmorosoParams& p) { return mean(p); })
      .def("variance", [](const AmorosoParams& p) { return variance(p); })
      .def("__repr__", [](const AmorosoParams& p) {
        std::ostringstream os;
        os << "Amoroso(" << p.a() << ", " << p.theta() << ", " << p.alpha() << ", " << p.beta() << ")";
        return os.str();
      });
  bind_family(am);

  py::class_<LogGammaParams> lg(m, "LogGamma");
  lg.def(py::init<double, double, double>(), py::arg("nu"), py::arg("lam"), py::arg("alpha"))
      .def_property_readonly("nu", &LogGammaParams::nu)
      .def_property_readonly("lam", &LogGammaParams::lambda)
      .def_property_readonly("alpha", &LogGammaParams::alpha)
      .def("mean", [](const LogGammaParams& p) { return mean(p); })
      .def("variance", [](const LogGammaParams& p) { return variance(p); })
      .def("__repr__", [](const LogGammaParams& p) {
        std::ostringstream os;
        os << "LogGamma(" << p.nu() << ", " << p.lambda() << ", " << p.alpha() << ")";
        return os.str();
      });
  bind_family(lg);

  m.def(
      "construct",
      [](const std::string& name, const catalog::NamedParams& params, bool relax_integer) -> py::object {
        const auto dist = catalog::construct(name, params, {relax_integer});
        return std::visit([](const auto& p) { return py::cast(p); }, dist);
      },
      py::arg("name"), py::arg("params") = catalog::NamedParams{}, py::arg("relax_integer") = false);
  m.def("classify", py::overload_cast<const AmorosoParams&, double>(&catalog::classify), py::arg("params"),
        py::arg("tol") = 1e-12);
  m.def("classify", py::overload_cast<const LogGammaParams&, double>(&catalog::classify), py::arg("params"),
        py::arg("tol") = 1e-12);
  m.def("canonical_name", [](const std::string& name) { return catalog::lookup(name).canonical_name; });
  m.def("catalog_json", [] { return catalog::to_json(); });

  m.def(
      "run_suite",
      [](const std::string& suite, std::uint64_t seed, std::size_t n) {
        py::list out;
        for (const auto& r : verify::run_suite(verify::parse_suite(suite), seed, n)) {
          out.append(py::make_tuple(r.check_name, r.statistic, r.threshold, r.passed));
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("seed") = kDefaultSeed, py::arg("n") = 100000);

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
