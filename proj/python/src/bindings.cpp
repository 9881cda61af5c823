#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "unitri/endomorphism.hpp"
#include "unitri/error.hpp"
#include "unitri/io.hpp"
#include "unitri/normalizer.hpp"
#include "unitri/report.hpp"
#include "unitri/sampling.hpp"
#include "unitri/text.hpp"

namespace py = pybind11;
using namespace unitri;

namespace {

// Rationals cross the boundary as fractions.Fraction.
py::object to_fraction(const Scalar& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

Scalar from_python(const py::object& o) {
  if (py::isinstance<py::str>(o)) return parse_scalar(o.cast<std::string>());
  return parse_scalar(py::str(o).cast<std::string>());
}

py::dict report_dict(const VerificationReport& r) {
  return py::module_::import("json").attr("loads")(format_report_json(r));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations in the Lie algebra u_n of unitriangular polynomial derivations";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<Polynomial>(m, "Polynomial")
      .def(py::init([](const std::string& text, std::size_t n) { return parse_polynomial(text, n); }),
           py::arg("text"), py::arg("n"))
      .def_property_readonly("n", &Polynomial::ambient)
      .def("total_degree", &Polynomial::total_degree)
      .def("is_zero", &Polynomial::is_zero)
      .def("diff", [](const Polynomial& p, std::size_t j) { return partial_derivative(p, j); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self == py::self)
      .def("__str__", [](const Polynomial& p) { return to_string(p); })
      .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + to_string(p) + "', " + std::to_string(p.ambient()) + ")"; });

  py::class_<UniDerivation>(m, "Derivation")
      .def(py::init([](const std::string& text, std::size_t n) { return parse_derivation(text, n); }),
           py::arg("text"), py::arg("n"))
      .def_static("partial", &UniDerivation::partial, py::arg("n"), py::arg("j"))
      .def_property_readonly("n", &UniDerivation::ambient)
      .def("coefficient", &UniDerivation::coefficient, py::arg("j"))
      .def("is_zero", &UniDerivation::is_zero)
      .def("__call__", [](const UniDerivation& d, const Polynomial& p) { return apply(d, p); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const UniDerivation& d, const py::object& c) { return d * from_python(c); })
      .def("__rmul__", [](const UniDerivation& d, const py::object& c) { return d * from_python(c); })
      .def("__str__", [](const UniDerivation& d) { return to_string(d); })
      .def("__repr__", [](const UniDerivation& d) { return "Derivation('" + to_string(d) + "', " + std::to_string(d.ambient()) + ")"; });

  py::class_<TriangularAutomorphism>(m, "Automorphism")
      .def(py::init([](const std::string& text, std::optional<std::size_t> n) { return parse_automorphism(text, n); }),
           py::arg("text"), py::arg("n") = py::none())
      .def_static("identity", &TriangularAutomorphism::identity, py::arg("n"))
      .def_property_readonly("n", &TriangularAutomorphism::ambient)
      .def("image", &TriangularAutomorphism::image, py::arg("j"))
      .def_property_readonly("scales", [](const TriangularAutomorphism& s) {
        py::list out;
        for (const auto& c : s.scales()) out.append(to_fraction(c));
        return out;
      })
      .def("__call__", [](const TriangularAutomorphism& s, const Polynomial& p) { return apply_to_poly(s, p); })
      .def("__matmul__", [](const TriangularAutomorphism& s, const TriangularAutomorphism& t) { return compose(s, t); })
      .def("inverse", [](const TriangularAutomorphism& s) { return invert(s); })
      .def("act", [](const TriangularAutomorphism& s, const UniDerivation& d) { return act_on_derivation(s, d); })
      .def(py::self == py::self)
      .def("__str__", [](const TriangularAutomorphism& s) { return to_string(s); });

  py::class_<TruncatedLieMap>(m, "Endomorphism")
      .def_static("parse", [](const std::string& text) { return parse_endomorphism(text); })
      .def_static("from_automorphism", &endo_from_automorphism, py::arg("sigma"), py::arg("level"))
      .def_static("from_exp_ad", &endo_from_exp_ad, py::arg("g"), py::arg("level"),
                  py::arg("cap") = kDefaultNilpotencyCap)
      .def_static("identity", &TruncatedLieMap::identity, py::arg("n"), py::arg("level"))
      .def_static("zero", &TruncatedLieMap::zero, py::arg("n"), py::arg("level"))
      .def_property_readonly("n", &TruncatedLieMap::ambient)
      .def_property_readonly("level", &TruncatedLieMap::level)
      .def_property_readonly("images", &TruncatedLieMap::images)
      .def("basis", [](const TruncatedLieMap& m) {
        std::vector<std::string> out;
        for (const auto& b : m.domain().elements()) out.push_back(to_string(b));
        return out;
      })
      .def("__call__", [](const TruncatedLieMap& m, const UniDerivation& d) { return m(d); })
      .def("rank_on", &rank_of, py::arg("sublevel"))
      .def("is_homomorphism", [](const TruncatedLieMap& m) { return check_homomorphism(m).passed(); })
      .def("is_injective", &check_injectivity, py::arg("level"))
      .def(py::self == py::self)
      .def("__str__", [](const TruncatedLieMap& m) { return format_endomorphism(m); });

  m.def("bracket", &bracket, py::arg("d"), py::arg("e"));
  m.def("apply", &apply, py::arg("d"), py::arg("p"));
  m.def("exp_ad", &exp_ad, py::arg("g"), py::arg("d"), py::arg("cap") = kDefaultNilpotencyCap);
  m.def("ideal_index", [](const UniDerivation& d) { return ideal_index(d).value; });
  m.def("dim_n", &filtration_dimension, py::arg("n"), py::arg("d"));
  m.def("basis", [](std::size_t n, std::size_t d) {
    std::vector<std::string> out;
    for (const auto& b : enumerate_basis(n, d).elements()) out.push_back(to_string(b));
    return out;
  }, py::arg("n"), py::arg("d"));
  m.def("derived_length", [](const std::vector<UniDerivation>& spanners, std::size_t budget) {
    const std::size_t n = spanners.empty() ? 2 : spanners.front().ambient();
    return derived_length(SpannedSubalgebra{n, spanners}, budget);
  }, py::arg("spanners"), py::arg("budget"));
  m.def("construct_sigma", &construct_sigma, py::arg("targets"));
  m.def("normalize", [](const TruncatedLieMap& phi) {
    Normalization r = normalize(phi);
    return py::make_tuple(r.sigma, r.psi);
  });
  m.def("verify", [](const TruncatedLieMap& phi, std::optional<std::size_t> budget) {
    return report_dict(verify_theorem(phi, budget));
  }, py::arg("phi"), py::arg("budget") = py::none());
  m.def("random_automorphism", [](std::size_t n, unsigned tail_degree, std::uint64_t seed) {
    Sampler rng(seed);
    return rng.automorphism(n, tail_degree);
  }, py::arg("n"), py::arg("tail_degree") = 2, py::arg("seed") = 1);
}
