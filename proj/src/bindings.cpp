#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lacsu11/errors.hpp"
#include "lacsu11/experiment.hpp"
#include "lacsu11/lacunary.hpp"
#include "lacsu11/metric.hpp"
#include "lacsu11/representations.hpp"
#include "lacsu11/su11.hpp"
#include "lacsu11/trig_poly.hpp"

namespace py = pybind11;
using namespace lacsu11;

namespace {

TrigPoly poly_from_pairs(const std::vector<std::pair<std::int64_t, Complex>>& items) {
  std::vector<TrigPoly::Term> terms;
  terms.reserve(items.size());
  for (const auto& [n, c] : items) terms.push_back({n, c});
  return TrigPoly::from_terms(std::move(terms));
}

std::vector<std::pair<std::int64_t, Complex>> poly_terms(const TrigPoly& p) {
  std::vector<std::pair<std::int64_t, Complex>> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.emplace_back(t.freq, t.coeff);
  return out;
}

CoefficientSequence coeffs_from_b(const std::vector<Complex>& bs) {
  CoefficientSequence out;
  out.reserve(bs.size());
  for (Complex b : bs) out.push_back(make_coefficient(b));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Lacunary SU(1,1) trigonometric products: exact construction, "
            "metrics, identity checks, and convergence experiments";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<CoefficientPair>(m, "CoefficientPair")
      .def(py::init([](Complex b) { return make_coefficient(b); }), py::arg("b"))
      .def_readonly("a", &CoefficientPair::A)
      .def_readonly("b", &CoefficientPair::B)
      .def_property_readonly("f", &CoefficientPair::F)
      .def("__repr__", [](const CoefficientPair& c) {
        return "CoefficientPair(A=" + fmt17(c.A) + ", B=(" + fmt17(c.B.real()) +
               "," + fmt17(c.B.imag()) + "))";
      });
  m.def("make_coefficient", &make_coefficient, py::arg("b"));
  m.def("coefficient_from_f", &coefficient_from_f, py::arg("f"));

  py::class_<SU11Matrix>(m, "SU11Matrix")
      .def(py::init([](Complex a, Complex b) { return SU11Matrix{a, b}; }),
           py::arg("a") = Complex{1.0, 0.0}, py::arg("b") = Complex{0.0, 0.0})
      .def_readonly("a", &SU11Matrix::a)
      .def_readonly("b", &SU11Matrix::b);
  m.def("factor_at", &factor_at, py::arg("coefficient"), py::arg("m"), py::arg("t"));
  m.def("mul", &mul);
  m.def("inverse", &inverse);
  m.def("rho", &rho, py::arg("g1"), py::arg("g2"));
  m.def("rho_explicit", &rho_explicit, py::arg("g"));
  m.def("op_norm",
        [](Complex m00, Complex m01, Complex m10, Complex m11) {
          return op_norm(Mat2{m00, m01, m10, m11});
        },
        py::arg("m00"), py::arg("m01"), py::arg("m10"), py::arg("m11"));
  m.def("rho_pointwise",
        [](Complex a1, Complex b1, Complex a2, Complex b2) {
          return rho_pointwise(a1, b1, a2, b2);
        },
        py::arg("a1"), py::arg("b1"), py::arg("a2"), py::arg("b2"));

  py::class_<TrigPoly>(m, "TrigPoly")
      .def(py::init(&poly_from_pairs), py::arg("terms"))
      .def("terms", &poly_terms)
      .def("coeff", &TrigPoly::coeff, py::arg("freq"))
      .def("__len__", &TrigPoly::size)
      .def("evaluate", [](const TrigPoly& p, double t) { return evaluate(p, t); },
           py::arg("t"))
      .def("l2_norm_sq", [](const TrigPoly& p) { return l2_norm_sq(p); })
      .def("mean", [](const TrigPoly& p) { return mean(p); })
      .def("to_json", &trig_poly_to_json);
  m.def("trig_poly_from_json", &trig_poly_from_json);
  m.def("multiply", &multiply);
  m.def("autocorrelation", &autocorrelation);
  m.def("conj_reflect", &conj_reflect);
  m.def("support", [](const TrigPoly& p) {
    const SupportInfo info = support(p);
    return py::make_tuple(info.freqs,
                          info.min_gap ? py::cast(*info.min_gap) : py::none());
  });

  py::class_<LacunarySequence>(m, "LacunarySequence")
      .def_static("validated", &LacunarySequence::validated, py::arg("freqs"),
                  py::arg("q"))
      .def_static("geometric", &LacunarySequence::geometric, py::arg("q"),
                  py::arg("count"))
      .def_property_readonly("frequencies", &LacunarySequence::frequencies)
      .def_property_readonly("q", &LacunarySequence::ratio)
      .def("__len__", &LacunarySequence::size);

  py::class_<TrigPolyPair>(m, "TrigPolyPair")
      .def_readonly("a", &TrigPolyPair::a)
      .def_readonly("b", &TrigPolyPair::b)
      .def_readonly("M", &TrigPolyPair::M)
      .def_readonly("N", &TrigPolyPair::N)
      .def("to_json", &pair_to_json);
  m.def("pair_from_json", &pair_from_json);

  m.def("partial_product",
        [](const std::vector<Complex>& bs, const LacunarySequence& freqs, int M,
           int N) { return partial_product(coeffs_from_b(bs), freqs, M, N); },
        py::arg("b_list"), py::arg("freqs"), py::arg("M"), py::arg("N"));
  m.def("s_mn", [](const std::vector<Complex>& bs, int M, int N) {
    return s_mn(coeffs_from_b(bs), M, N);
  });
  m.def("energy_identity_residual",
        [](const TrigPolyPair& pair, const std::vector<Complex>& bs) {
          return energy_identity_residual(pair, coeffs_from_b(bs));
        });
  m.def("centered_identity_residual",
        [](const TrigPolyPair& pair, const std::vector<Complex>& bs) {
          return centered_identity_residual(pair, coeffs_from_b(bs));
        });
  m.def("min_gap_check",
        [](const TrigPolyPair& pair, const LacunarySequence& freqs, int M) {
          const GapCheck gc = min_gap_check(pair, freqs, M);
          py::dict d;
          d["gap_a"] = gc.gap_a ? py::cast(*gc.gap_a) : py::none();
          d["gap_b"] = gc.gap_b ? py::cast(*gc.gap_b) : py::none();
          d["gap_union"] = gc.gap_union ? py::cast(*gc.gap_union) : py::none();
          d["threshold"] = gc.threshold;
          d["ok"] = gc.ok();
          return d;
        });
  m.def("nonlinear_parseval_residual",
        [](const TrigPolyPair& pair, const std::vector<Complex>& bs,
           std::int64_t grid) {
          return nonlinear_parseval_residual(pair, coeffs_from_b(bs), grid);
        },
        py::arg("pair"), py::arg("b_list"), py::arg("grid_points"));

  m.def("d_p_between",
        [](const TrigPolyPair& l, const TrigPolyPair& r, double p,
           std::int64_t grid) {
          const DpValue v = d_p_between(l, r, p, TorusGrid{grid});
          return py::make_tuple(v.value, v.pth_power);
        },
        py::arg("left"), py::arg("right"), py::arg("p"), py::arg("grid"));
  m.def("d_p_window",
        [](const std::vector<Complex>& bs, const LacunarySequence& freqs, int M,
           int N, double p, std::int64_t grid) {
          const DpValue v = d_p_window(coeffs_from_b(bs), freqs, M, N, p, TorusGrid{grid});
          return py::make_tuple(v.value, v.pth_power);
        });
  m.def("required_grid", &required_grid);
  m.def("c_p", &c_p, py::arg("p"), py::arg("rel_tol") = 1e-8);
  m.def("cauchy_bound_check",
        [](const std::vector<Complex>& bs, const LacunarySequence& freqs, int M,
           int N, double p, std::int64_t grid) {
          const BoundCheck bc =
              cauchy_bound_check(coeffs_from_b(bs), freqs, M, N, p, TorusGrid{grid});
          return py::make_tuple(bc.lhs, bc.rhs, bc.ok);
        });
  m.def("shifted_energy_check",
        [](const std::vector<Complex>& bs, const LacunarySequence& freqs, int M,
           int N) {
          const EnergyCheck ec = shifted_energy_check(coeffs_from_b(bs), freqs, M, N);
          return py::make_tuple(ec.lhs, ec.rhs, ec.residual);
        });

  py::class_<SignedRepresentation>(m, "SignedRepresentation")
      .def_readonly("plus_block", &SignedRepresentation::plus_block)
      .def_readonly("minus_block", &SignedRepresentation::minus_block)
      .def_readonly("value", &SignedRepresentation::value)
      .def_readonly("maximally_shortened", &SignedRepresentation::maximally_shortened);
  m.def("enumerate_representations",
        [](std::int64_t n, const LacunarySequence& freqs, int M, int N, int maxJ,
           int maxK) {
          return enumerate_representations(n, freqs, M, N, maxJ, maxK);
        },
        py::arg("n"), py::arg("freqs"), py::arg("M"), py::arg("N"),
        py::arg("max_j") = 21, py::arg("max_k") = 21);
  m.def("uniqueness_check",
        [](const LacunarySequence& freqs, int M, int N) {
          const UniquenessReport r = uniqueness_check(freqs, M, N);
          py::list violations;
          for (const auto& v : r.violations) {
            violations.append(py::make_tuple(v.n, v.shortened_count));
          }
          return py::make_tuple(violations, r.distinct_shortened_targets);
        });
  m.def("classify_partition",
        [](std::int64_t n, const LacunarySequence& freqs, int M, int N) {
          const PartitionTriple p = classify_partition(n, freqs, M, N);
          return py::make_tuple(p.s0, p.s1, p.s2);
        });
  m.def("multiplicity_bound_check",
        [](const LacunarySequence& freqs, int M, int N) {
          const MultiplicityReport r = multiplicity_bound_check(freqs, M, N);
          return py::make_tuple(r.worst_count, r.worst_bound, r.ok);
        });
  m.def("autocorrelation_bound_check",
        [](const TrigPolyPair& pair, const std::vector<Complex>& bs) {
          const AutocorrelationBound ab =
              autocorrelation_bound_check(pair, coeffs_from_b(bs));
          return py::make_tuple(ab.lhs, ab.rhs, ab.ok);
        });

  m.def("generate_lacunary",
        [](double q, int count) { return generate_lacunary(q, count); },
        py::arg("q"), py::arg("count"));
  m.def("generate_coefficients",
        [](const std::string& kind, double magnitude, double ratio,
           double exponent, std::uint64_t seed, int count) {
          CoefficientSpec spec{coefficient_kind_from_string(kind), magnitude,
                               ratio, exponent, seed};
          const GeneratedCoefficients gen = generate_coefficients(spec, count);
          std::vector<Complex> bs;
          bs.reserve(gen.coeffs.size());
          for (const auto& c : gen.coeffs) bs.push_back(c.B);
          return py::make_tuple(bs, gen.ell2);
        },
        py::arg("kind"), py::arg("magnitude") = 0.75, py::arg("ratio") = 0.5,
        py::arg("exponent") = 1.0, py::arg("seed") = 0, py::arg("count") = 16);

  m.def("run_experiment_config",
        [](const std::string& config_text) {
          const ExperimentConfig config = parse_experiment_config(config_text);
          return report_to_json(run_experiment(config));
        },
        py::arg("config_text"),
        "Parse a key=value experiment config and return the JSON report.");

  m.attr("__version__") = "0.1.0";
}
