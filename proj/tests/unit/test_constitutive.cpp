#include <doctest.h>

#include <cmath>
#include <vector>

#include "../test_support.hpp"
#include "nclorentz/constitutive.hpp"

using namespace nclorentz;
using nctest::Rng;

namespace {

double state_err(const ExcitationState& a, const ExcitationState& b) {
  return std::max(max_abs(a.D - b.D), max_abs(a.H - b.H));
}
double state_err(const FieldState& a, const FieldState& b) {
  return std::max(max_abs(a.E - b.E), max_abs(a.B - b.B));
}
ThetaVectors scaled(const ThetaVectors& v, double s) { return {s * v.epsilon, s * v.theta}; }

// Least-squares slope of log10(r) against log10(lambda).
double loglog_slope(const std::vector<double>& lam, const std::vector<double>& r) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) {
    const double x = std::log10(lam[i]), y = std::log10(r[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace

TEST_CASE("forward map examples") {
  const FieldState s{{1, 0, 0}, {1, 0, 0}};
  const ExcitationState zero = forward(s, {});
  CHECK(zero.D == s.E);
  CHECK(zero.H == s.B);

  const ThetaVectors v{{}, {0.1, 0, 0}};
  const ExcitationState x = forward(s, v);
  CHECK(max_abs(x.D - Vec3{1.1, 0, 0}) <= 1e-15);
  CHECK(max_abs(x.H - Vec3{0.8, 0, 0}) <= 1e-15);
  const ExcitationState q = forward_quat(s, v);
  CHECK(max_abs(q.D - Vec3{1.1, 0, 0}) <= 1e-15);
  CHECK(max_abs(q.H - Vec3{0.8, 0, 0}) <= 1e-15);

  const FieldState back = inverse(x, v);
  CHECK(state_err(back, s) <= 0.05);
  CHECK(state_err(back, s) > 1e-4);
  const FieldState z = inverse({{0.3, 0, 1}, {2, 0, 0}}, {});
  CHECK(z.E == Vec3{0.3, 0, 1});
  CHECK(z.B == Vec3{2, 0, 0});
}

TEST_CASE("vector and quaternionic forms agree") {
  Rng rng(61);
  for (int t = 0; t < 1000; ++t) {
    const FieldState s{rng.vec(), rng.vec()};
    const ThetaVectors v{rng.vec(), rng.vec()};
    CHECK(state_err(forward(s, v), forward_quat(s, v)) <= 1e-13);
    const ExcitationState e{rng.vec(), rng.vec()};
    CHECK(state_err(inverse(e, v), inverse_quat(e, v)) <= 1e-13);
  }
  const CVector3 f = Rng(1).cvec();
  CHECK(h_from_f(f, {}) == f);
  CHECK(f_from_h(f, {}) == f);
}

TEST_CASE("field quaternions round trip") {
  Rng rng(62);
  const FieldState s{rng.vec(), rng.vec()};
  const FieldState back = fields_from_f(to_f(s));
  CHECK(back.E == s.E);
  CHECK(back.B == s.B);
  const ExcitationState e{rng.vec(), rng.vec()};
  const ExcitationState eb = excitation_from_h(to_h(e));
  CHECK(eb.D == e.D);
  CHECK(eb.H == e.H);
}

TEST_CASE("corrections are linear in theta and quadratic in the fields") {
  Rng rng(63);
  for (int t = 0; t < 50; ++t) {
    const FieldState s{rng.vec(), rng.vec()};
    const ThetaVectors v{rng.vec(), rng.vec()};
    const ExcitationState base = forward(s, v);
    const double lam = rng.uniform(0.1, 3.0);
    const ExcitationState sv = forward(s, scaled(v, lam));
    CHECK(max_abs((sv.D - s.E) - lam * (base.D - s.E)) <= 1e-13 * lam * 10);
    CHECK(max_abs((sv.H - s.B) - lam * (base.H - s.B)) <= 1e-13 * lam * 10);
    const FieldState s2{lam * s.E, lam * s.B};
    const ExcitationState sf = forward(s2, v);
    CHECK(max_abs((sf.D - s2.E) - lam * lam * (base.D - s.E)) <= 1e-13 * lam * lam * 10);
    CHECK(max_abs((sf.H - s2.B) - lam * lam * (base.H - s.B)) <= 1e-13 * lam * lam * 10);
  }
}

TEST_CASE("first-order inverse has quadratic residual") {
  Rng rng(64);
  for (int t = 0; t < 10; ++t) {
    const FieldState s{rng.vec(), rng.vec()};
    const ThetaVectors v{rng.vec(), rng.vec()};
    const std::vector<double> lams{1e-1, 1e-2, 1e-3, 1e-4};
    std::vector<double> res;
    for (double lam : lams) res.push_back(state_err(inverse(forward(s, scaled(v, lam)), scaled(v, lam)), s));
    CHECK(std::abs(loglog_slope(lams, res) - 2.0) <= 0.05);
    // quaternion directions: f -> h -> f
    const KVector k = k_from_vectors(v);
    const CVector3 h = to_h({rng.vec(), rng.vec()});
    const double r1 = max_abs(h_from_f(f_from_h(h, KVector{1e-2 * k.k}), KVector{1e-2 * k.k}) - h);
    const double r2 = max_abs(h_from_f(f_from_h(h, KVector{1e-3 * k.k}), KVector{1e-3 * k.k}) - h);
    CHECK(std::abs(std::log10(r1 / r2) - 2.0) <= 0.05);
  }
}

TEST_CASE("covariance when K is transported") {
  Rng rng(65);
  const FieldState s{{1, 0, 0}, {0, 1, 0}};
  const ThetaVectors v{{0.2, 0, 0}, {0, 0, 0.3}};
  CHECK(covariant_transport_check(s, v, LorentzElement::identity()) == 0.0);
  for (int t = 0; t < 100; ++t) {
    const LorentzElement L = rng.element();
    const FieldState x{rng.vec(), rng.vec()};
    const ThetaVectors w{rng.vec(), rng.vec()};
    const double scale = std::pow(std::max(1.0, hnorm(L.quat())), 6);
    CHECK(covariant_transport_check(x, w, L) <= 1e-12 * scale);
  }
  CHECK(fixed_k_transport_check(s, v, boost_element({0, 1, 0}, 0.4)) > 1e-4);
}
