#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <vector>

#include "nclorentz/analysis.hpp"
#include "nclorentz/constitutive.hpp"
#include "nclorentz/duality.hpp"
#include "nclorentz/error.hpp"
#include "nclorentz/smallgroup.hpp"

namespace py = pybind11;
using namespace nclorentz;

namespace {

using C3 = std::array<Complex, 3>;
using C4 = std::array<Complex, 4>;
using R3 = std::array<double, 3>;

CVector3 cv(const C3& a) { return {a[0], a[1], a[2]}; }
C3 out(const CVector3& v) { return {v.x, v.y, v.z}; }
Vec3 rv(const R3& a) { return {a[0], a[1], a[2]}; }
R3 out(const Vec3& v) { return {v.x, v.y, v.z}; }
Biquaternion bq(const C4& a) { return {a[0], {a[1], a[2], a[3]}}; }
C4 out(const Biquaternion& q) { return {q.s, q.v.x, q.v.y, q.v.z}; }

}  // namespace

PYBIND11_MODULE(_nclorentz, m) {
  m.doc() = "Biquaternion Lorentz group tools for noncommutative electrodynamics";
  m.attr("__version__") = kVersion;

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("mul", [](const C4& q, const C4& p) { return out(bq(q) * bq(p)); });
  m.def("conj_quat", [](const C4& q) { return out(conj_quat(bq(q))); });
  m.def("conj_complex", [](const C4& q) { return out(conj_complex(bq(q))); });
  m.def("norm", [](const C4& q) { return norm(bq(q)); });

  py::class_<LorentzElement>(m, "LorentzElement")
      .def(py::init([](Complex k0, const C3& k) { return LorentzElement::make(k0, cv(k)); }), py::arg("k0"), py::arg("k"))
      .def_static("rotation", [](const R3& axis, double half_angle) { return rotation_element(rv(axis), half_angle); })
      .def_static("boost", [](const R3& axis, double half_rapidity) { return boost_element(rv(axis), half_rapidity); })
      .def_property_readonly("quat", [](const LorentzElement& L) { return out(L.quat()); })
      .def("inverse", &LorentzElement::inverse)
      .def("__mul__", [](const LorentzElement& a, const LorentzElement& b) { return compose(a, b); })
      .def("act_vector", [](const LorentzElement& L, const C3& v) { return out(act_vector(L, cv(v))); })
      .def("so3c_matrix", [](const LorentzElement& L) { return so3c_matrix(L).m; })
      .def("lorentz_matrix4", [](const LorentzElement& L) { return lorentz_matrix4(L).m; })
      .def("factorize", [](const LorentzElement& L) {
        const Factorization f = factorize(L);
        return py::make_tuple(f.rotation, f.boost);
      })
      .def("__repr__", [](const LorentzElement& L) {
        return "LorentzElement(" + py::repr(py::cast(out(L.quat()))).cast<std::string>() + ")";
      });

  m.def("k_from_vectors", [](const R3& eps, const R3& theta) { return out(k_from_vectors({rv(eps), rv(theta)}).k); },
        py::arg("epsilon"), py::arg("theta"));
  m.def("classify", [](const C3& k, double tol) { return std::string(to_string(classify(KVector{cv(k)}, tol))); },
        py::arg("k"), py::arg("tol") = kDefaultTolerances.classify);
  m.def("invariant_square", [](const C3& k) { return invariants(KVector{cv(k)}).square; });

  m.def("describe", [](const C3& k) {
    const SmallGroupDescriptor d = describe(KVector{cv(k)});
    py::dict r;
    r["kind"] = std::string(to_string(d.kind));
    r["phi"] = out(d.phi);
    if (d.kind == GroupKind::NonIsotropic) {
      r["phi_hat"] = out(d.phi_hat);
      r["sqrt_square"] = d.sqrt_square;
    }
    return r;
  });
  m.def("small_group_element", [](const C3& k, Complex chi) {
    return element(describe(KVector{cv(k)}), GroupParameter::angle(chi));
  }, py::arg("k"), py::arg("chi"));
  m.def("isotropic_element", [](const C3& k, Complex w, int sign) {
    return element(describe(KVector{cv(k)}), GroupParameter::shift(w, sign));
  }, py::arg("k"), py::arg("w"), py::arg("sign") = 1);
  m.def("stabilizes", [](const LorentzElement& L, const C3& k) { return stabilizes(L, KVector{cv(k)}); });
  m.def("canonical_form", [](const C3& k) {
    const KVector kv{cv(k)};
    const CanonicalForm c = classify(kv) == KClass::Isotropic ? canonical_form_isotropic(kv) : canonical_form(kv);
    return py::make_tuple(c.L, out(c.k_canonical.k));
  });

  m.def("forward", [](const R3& E, const R3& B, const R3& eps, const R3& theta) {
    const ExcitationState s = forward({rv(E), rv(B)}, {rv(eps), rv(theta)});
    return py::make_tuple(out(s.D), out(s.H));
  }, py::arg("E"), py::arg("B"), py::arg("epsilon"), py::arg("theta"));
  m.def("inverse", [](const R3& D, const R3& H, const R3& eps, const R3& theta) {
    const FieldState s = inverse({rv(D), rv(H)}, {rv(eps), rv(theta)});
    return py::make_tuple(out(s.E), out(s.B));
  }, py::arg("D"), py::arg("H"), py::arg("epsilon"), py::arg("theta"));

  m.def("duality_scan", [](const R3& E, const R3& B, const R3& eps, const R3& theta, int n) {
    const KVector k = k_from_vectors({rv(eps), rv(theta)});
    std::vector<py::tuple> rows;
    for (const ScanPoint& p : duality_scan(consistent_state({rv(E), rv(B)}, k), k, n))
      rows.push_back(py::make_tuple(p.chi, p.residual, std::string(to_string(p.phase))));
    return rows;
  }, py::arg("E"), py::arg("B"), py::arg("epsilon"), py::arg("theta"), py::arg("n") = 360);

  m.def("analyze", [](const std::string& text, int scan_n, int trials, std::uint64_t seed) {
    AnalysisConfig cfg;
    cfg.scan_n = scan_n;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.timestamp = false;
    const AnalysisReport r = analyze(parse_input(text, cfg.tolerances), cfg);
    return r.json.dump(2);
  }, py::arg("text"), py::arg("scan_n") = 360, py::arg("trials") = 100, py::arg("seed") = 42);
}
