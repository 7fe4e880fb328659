// Copyright 2026 The ffdioph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "ffdioph/contfrac.hpp"
#include "ffdioph/errors.hpp"
#include "ffdioph/experiment.hpp"
#include "ffdioph/field.hpp"
#include "ffdioph/laurent.hpp"
#include "ffdioph/measure.hpp"
#include "ffdioph/orbit.hpp"
#include "ffdioph/poly.hpp"
#include "ffdioph/qexact.hpp"
#include "ffdioph/report.hpp"
#include "ffdioph/rng.hpp"
#include "ffdioph/testfn.hpp"
#include "ffdioph/tree_geom.hpp"
#include "ffdioph/version.hpp"

namespace py = pybind11;

namespace ffdioph {
namespace {

// The python layer speaks strings for polynomials and (numerator,
// denominator) string pairs for rationals; exactness is preserved because
// Poly::Parse/Format round-trip coefficient lists verbatim.

Poly ParsePoly(const FieldPtr& k, const std::string& text) {
  return Poly::Parse(k, text);
}

py::dict ExpansionToDict(const Poly& a0, const std::vector<Poly>& digits,
                         const std::vector<Poly>& conv_p,
                         const std::vector<Poly>& conv_q,
                         const std::string& status) {
  py::dict out;
  out["a0"] = a0.Format();
  py::list dl;
  for (const Poly& d : digits) dl.append(d.Format());
  out["digits"] = dl;
  py::list ps, qs;
  for (const Poly& p : conv_p) ps.append(p.Format());
  for (const Poly& q : conv_q) qs.append(q.Format());
  out["conv_p"] = ps;
  out["conv_q"] = qs;
  out["status"] = status;
  return out;
}

py::object JsonToPy(const Json& j) {
  switch (j.type()) {
    case nlohmann::detail::value_t::null:
      return py::none();
    case nlohmann::detail::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::detail::value_t::number_integer:
      return py::int_(j.get<int64_t>());
    case nlohmann::detail::value_t::number_unsigned:
      return py::int_(j.get<uint64_t>());
    case nlohmann::detail::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::detail::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::detail::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(JsonToPy(item));
      return out;
    }
    case nlohmann::detail::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = JsonToPy(it.value());
      }
      return out;
    }
    default:
      return py::none();
  }
}

ExperimentConfig ConfigFromKwargs(const py::kwargs& kwargs) {
  ExperimentConfig cfg;
  for (auto item : kwargs) {
    const std::string key = py::cast<std::string>(item.first);
    if (key == "q") cfg.q = py::cast<uint32_t>(item.second);
    else if (key == "q0") cfg.q0 = py::cast<std::string>(item.second);
    else if (key == "phi") cfg.phi = py::cast<std::string>(item.second);
    else if (key == "seed") cfg.seed = py::cast<uint64_t>(item.second);
    else if (key == "trials") cfg.trials = py::cast<int>(item.second);
    else if (key == "d_max") cfg.d_max = py::cast<int>(item.second);
    else if (key == "d_far") cfg.d_far = py::cast<int>(item.second);
    else if (key == "tail_min_count") cfg.tail_min_count = py::cast<int>(item.second);
    else if (key == "digits_per_trial") cfg.digits_per_trial = py::cast<int>(item.second);
    else if (key == "max_digit_checked") cfg.max_digit_checked = py::cast<int>(item.second);
    else if (key == "rungs") cfg.rungs = py::cast<std::vector<int>>(item.second);
    else if (key == "depth_top") cfg.depth_top = py::cast<int>(item.second);
    else if (key == "group_n_max") cfg.group_n_max = py::cast<int>(item.second);
    else if (key == "parabolic_n_max") cfg.parabolic_n_max = py::cast<int>(item.second);
    else if (key == "shadow_deg_max") cfg.shadow_deg_max = py::cast<int>(item.second);
    else if (key == "shadow_t_max") cfg.shadow_t_max = py::cast<int>(item.second);
    else if (key == "window_lo") cfg.window_lo = py::cast<int>(item.second);
    else if (key == "window_hi") cfg.window_hi = py::cast<int>(item.second);
    else if (key == "budget") cfg.budget = py::cast<uint64_t>(item.second);
    else if (key == "workers") cfg.workers = py::cast<int>(item.second);
    else throw py::key_error("unknown experiment option: " + key);
  }
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact Diophantine approximation over F_q((1/X))";
  m.attr("__version__") = kVersion;

  py::register_exception<Error>(m, "FfdiophError");

  // The C++ side hands fields around as shared_ptr<const Field>; pybind11
  // holders must be non-const, so the wrapper peels the const off once here.
  py::class_<Field, std::shared_ptr<Field>>(m, "Field")
      .def(py::init([](uint32_t q) {
             return std::const_pointer_cast<Field>(Field::MakeQ(q));
           }),
           py::arg("q"))
      .def_property_readonly("q", &Field::q)
      .def_property_readonly("p", &Field::p)
      .def_property_readonly("e", &Field::e)
      .def("__repr__", [](const Field& f) {
        return "Field(q=" + std::to_string(f.q()) + ")";
      });

  m.def("poly_format",
        [](const FieldPtr& k, const std::string& text) {
          return ParsePoly(k, text).Format();
        },
        py::arg("field"), py::arg("text"),
        "Canonical form of a polynomial in either grammar.");
  m.def("poly_deg",
        [](const FieldPtr& k, const std::string& text) {
          const Poly p = ParsePoly(k, text);
          return p.IsZero() ? -1 : p.deg();
        },
        py::arg("field"), py::arg("text"));

  m.def("cf_rational",
        [](const FieldPtr& k, const std::string& num, const std::string& den) {
          CfRational cf = CfExpandRational(ParsePoly(k, num), ParsePoly(k, den));
          py::dict out;
          out["a0"] = cf.a0.Format();
          py::list dl;
          for (const Poly& d : cf.digits) dl.append(d.Format());
          out["digits"] = dl;
          out["text"] = cf.Format();
          return out;
        },
        py::arg("field"), py::arg("num"), py::arg("den"),
        "Exact continued fraction of a rational series.");

  m.def("cf_expand_rational_source",
        [](const FieldPtr& k, const std::string& num, const std::string& den,
           int max_digits) {
          RationalSource src(ParsePoly(k, num), ParsePoly(k, den));
          CfExpansion ex = CfExpand(&src, max_digits);
          return ExpansionToDict(ex.a0, ex.digits, ex.conv_p, ex.conv_q,
                                 CfStatusName(ex.status));
        },
        py::arg("field"), py::arg("num"), py::arg("den"),
        py::arg("max_digits") = 64,
        "Streaming expansion of a rational, with convergents.");

  m.def("cf_stream",
        [](const FieldPtr& k, uint64_t seed, int max_digits) {
          StreamSource src(k, Rng::Stream(seed, 0));
          CfExpansion ex = CfExpand(&src, max_digits);
          return ExpansionToDict(ex.a0, ex.digits, ex.conv_p, ex.conv_q,
                                 CfStatusName(ex.status));
        },
        py::arg("field"), py::arg("seed"), py::arg("max_digits") = 16,
        "Expansion of a uniform random integral series.");

  py::class_<TestFunction>(m, "TestFunction")
      .def_static("preset", &TestFunction::Preset, py::arg("name"),
                  py::arg("q"))
      .def_static("custom", &TestFunction::Custom, py::arg("q"), py::arg("c"),
                  py::arg("a"), py::arg("b"), py::arg("t0") = -1.0,
                  py::arg("cap") = 1.0)
      .def_static("custom_psi", &TestFunction::CustomPsi, py::arg("q"),
                  py::arg("c"), py::arg("a"), py::arg("b"),
                  py::arg("t0") = -1.0, py::arg("cap") = 1.0)
      .def_static("psi_from_phi", &TestFunction::PsiFromPhi, py::arg("phi"))
      .def("phi_at", &TestFunction::PhiAt, py::arg("u"))
      .def("psi_at_time", &TestFunction::PsiAtTime, py::arg("t"))
      .def("psi_delta_at_time", &TestFunction::PsiDeltaAtTime, py::arg("t"))
      .def("threshold_radius", &TestFunction::ThresholdRadius, py::arg("d"))
      .def("strict_at", &TestFunction::StrictAt, py::arg("d"))
      .def("classify",
           [](const TestFunction& f) { return IntegralClassName(f.Classify()); })
      .def("describe", &TestFunction::Describe)
      .def("__repr__", &TestFunction::Describe);

  m.def("integrate_psi_delta", &IntegratePsiDelta, py::arg("f"),
        py::arg("lo"), py::arg("hi"), py::arg("steps") = 20000);

  m.def("hamenstadt_val",
        [](const FieldPtr& k, const std::string& num1, const std::string& den1,
           const std::string& num2, const std::string& den2) {
          RationalSource f(ParsePoly(k, num1), ParsePoly(k, den1));
          RationalSource g(ParsePoly(k, num2), ParsePoly(k, den2));
          return HamenstadtVal(f, g);
        },
        py::arg("field"), py::arg("num1"), py::arg("den1"), py::arg("num2"),
        py::arg("den2"),
        "Valuation distance between two rational series.");

  m.def("cusp_distance",
        [](const FieldPtr& k, const std::string& num, const std::string& den) {
          return CuspDistance(ParsePoly(k, num), ParsePoly(k, den));
        },
        py::arg("field"), py::arg("num"), py::arg("den"));

  m.def("shadow_measure",
        [](const FieldPtr& k, const std::string& num, const std::string& den,
           int t) {
          const Ball ball = ShadowBall(ParsePoly(k, num), ParsePoly(k, den), t);
          py::dict out;
          out["radius"] = ball.radius();
          out["measure_exact"] = ball.Measure().Render();
          out["measure"] = ball.Measure().ToDouble();
          return out;
        },
        py::arg("field"), py::arg("num"), py::arg("den"), py::arg("t"));

  m.def("tent_profile",
        [](const FieldPtr& k, const std::string& num, const std::string& den) {
          RationalSource src(ParsePoly(k, num), ParsePoly(k, den));
          CfExpansion ex = CfExpand(&src, INT32_MAX / 2);
          py::list out;
          for (const Tent& t : TentProfile(ex)) {
            py::dict row;
            row["t_enter"] = t.t_enter;
            row["t_peak"] = t.t_peak;
            row["t_exit"] = t.t_exit;
            row["peak"] = t.peak;
            row["num"] = t.num.Format();
            row["den"] = t.den.Format();
            out.append(row);
          }
          return out;
        },
        py::arg("field"), py::arg("num"), py::arg("den"));

  m.def("orbit_count",
        [](const FieldPtr& k, const std::string& q0, int d, uint64_t budget) {
          return OrbitCountAtDepth(k, Poly::Parse(k, q0), d, budget).str();
        },
        py::arg("field"), py::arg("q0"), py::arg("d"),
        py::arg("budget") = kDefaultOrbitBudget,
        "Number of orbit points at depth d, as a decimal string.");

  m.def("group_ball_count",
        [](const FieldPtr& k, int n, uint64_t budget) {
          return GroupBallCount(k, n, budget).str();
        },
        py::arg("field"), py::arg("n"), py::arg("budget") = kDefaultOrbitBudget);

  m.def("parabolic_ball_count",
        [](const FieldPtr& k, int n) { return ParabolicBallCount(k, n).str(); },
        py::arg("field"), py::arg("n"));

  m.def("window_measure",
        [](const FieldPtr& k, const TestFunction& phi, const std::string& q0,
           int n, int width, uint64_t budget) {
          const QExact mu =
              ApproxWindowMeasure(k, phi, Poly::Parse(k, q0), n, width, budget);
          py::dict out;
          out["measure_exact"] = mu.Render();
          out["measure"] = mu.ToDouble();
          return out;
        },
        py::arg("field"), py::arg("phi"), py::arg("q0"), py::arg("n"),
        py::arg("width") = 2, py::arg("budget") = kDefaultOrbitBudget,
        "Exact measure of the window-n layer of the approximable set.");

  m.def("solutions",
        [](const FieldPtr& k, const std::string& num, const std::string& den,
           const TestFunction& phi, const std::string& q0, int d_max) {
          RationalSource src(ParsePoly(k, num), ParsePoly(k, den));
          py::list out;
          for (const DioSolution& s :
               Solutions(src, phi, Poly::Parse(k, q0), d_max)) {
            py::dict row;
            row["num"] = s.num.Format();
            row["den"] = s.den.Format();
            row["nu"] = s.nu >= kPosInfVal ? py::object(py::none())
                                           : py::object(py::int_(s.nu));
            out.append(row);
          }
          return out;
        },
        py::arg("field"), py::arg("num"), py::arg("den"), py::arg("phi"),
        py::arg("q0") = "1", py::arg("d_max") = 8,
        "Orbit solutions for a rational target, via the convergent filter.");

  m.def("run_experiment",
        [](const std::string& name, const py::kwargs& kwargs) {
          const ExperimentConfig cfg = ConfigFromKwargs(kwargs);
          Json report;
          if (name == "khintchine") report = RunKhintchine(cfg);
          else if (name == "loglaw") report = RunLoglaw(cfg);
          else if (name == "digitstats") report = RunDigitStats(cfg);
          else if (name == "counting") report = RunCounting(cfg);
          else if (name == "shadow") report = RunShadowCheck(cfg);
          else if (name == "quasi") report = RunQuasiIndependence(cfg);
          else throw py::value_error("unknown experiment: " + name);
          return JsonToPy(report);
        },
        py::arg("name"),
        "Run one of: khintchine, loglaw, digitstats, counting, shadow, "
        "quasi.  Keyword arguments mirror the CLI flags.");
}

}  // namespace ffdioph
