#include <doctest.h>

#include <cmath>

#include "../test_support.hpp"
#include "nclorentz/maxwell.hpp"

using namespace nclorentz;
using nctest::Rng;

namespace {

// Symbolically expanded left side of the quaternion equation in terms of the
// vector residuals (see tests/oracles/derive_values.py).
Biquaternion frozen_map(const MaxwellResiduals& r) {
  return {Complex(-2.0 * r.div_b, 2.0 * r.div_d), 2.0 * CVector3(r.ampere) - 2.0 * kI * CVector3(r.faraday)};
}

FieldDerivatives random_field(Rng& rng) {
  FieldDerivatives d;
  d.value = rng.vec();
  d.dt = rng.vec();
  for (auto& row : d.grad)
    for (double& x : row) x = rng.uniform();
  return d;
}

FieldSample plane_wave(double t, const Vec3& x) {
  const double c = std::cos(x.z - t), s = std::sin(x.z - t);
  FieldSample w;
  w.E.value = {c, 0, 0};
  w.E.dt = {s, 0, 0};
  w.E.grad[0][2] = -s;
  w.B.value = {0, c, 0};
  w.B.dt = {0, s, 0};
  w.B.grad[1][2] = -s;
  w.D = w.E;
  w.H = w.B;
  return w;
}

}  // namespace

TEST_CASE("static uniform fields") {
  FieldSample s;
  s.E.value = {1, 2, 3};
  s.B.value = {-1, 0, 4};
  s.D.value = {0.5, 0.5, 0.5};
  s.H.value = {7, 8, 9};
  CHECK(vector_residuals(s).max_abs() == 0.0);
  CHECK(max_abs(quaternionic_residual(s)) == 0.0);
}

TEST_CASE("vacuum plane wave") {
  Rng rng(81);
  for (int k = 0; k < 20; ++k) {
    const FieldSample w = plane_wave(rng.uniform(-5, 5), rng.vec(5.0));
    CHECK(vector_residuals(w).max_abs() <= 1e-14);
    CHECK(max_abs(quaternionic_residual(w)) <= 1e-14);
  }
}

TEST_CASE("E_x = z") {
  FieldSample s;
  s.E.value = {0.25, 0, 0};
  s.E.grad[0][2] = 1.0;
  const MaxwellResiduals r = vector_residuals(s);
  CHECK(r.faraday == Vec3{0, 1, 0});
  CHECK(r.ampere == Vec3{});
  CHECK(r.div_b == 0.0);
  CHECK(r.div_d == 0.0);
  const Biquaternion q = quaternionic_residual(s);
  CHECK(max_abs(q - Biquaternion::vector({0.0, -2.0 * kI, 0.0})) <= 1e-15);
}

TEST_CASE("frozen linear map on unconstrained samples") {
  Rng rng(82);
  for (int k = 0; k < 1000; ++k) {
    const FieldSample s{random_field(rng), random_field(rng), random_field(rng), random_field(rng)};
    CHECK(max_abs(quaternionic_residual(s) - frozen_map(vector_residuals(s))) <= 1e-13);
  }
}

TEST_CASE("linearity") {
  Rng rng(83);
  for (int k = 0; k < 50; ++k) {
    const FieldSample a{random_field(rng), random_field(rng), random_field(rng), random_field(rng)};
    const FieldSample b{random_field(rng), random_field(rng), random_field(rng), random_field(rng)};
    const double lam = rng.uniform(-2, 2);
    auto comb = [&](const FieldDerivatives& x, const FieldDerivatives& y) {
      FieldDerivatives r;
      r.value = x.value + lam * y.value;
      r.dt = x.dt + lam * y.dt;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.grad[i][j] = x.grad[i][j] + lam * y.grad[i][j];
      return r;
    };
    const FieldSample c{comb(a.E, b.E), comb(a.B, b.B), comb(a.D, b.D), comb(a.H, b.H)};
    const Biquaternion qc = quaternionic_residual(c);
    CHECK(max_abs(qc - (quaternionic_residual(a) + lam * quaternionic_residual(b))) <= 1e-13);
    const MaxwellResiduals ra = vector_residuals(a), rb = vector_residuals(b), rc = vector_residuals(c);
    CHECK(max_abs(rc.faraday - (ra.faraday + lam * rb.faraday)) <= 1e-13);
    CHECK(std::abs(rc.div_d - (ra.div_d + lam * rb.div_d)) <= 1e-13);
  }
}

TEST_CASE("finite-difference adapter") {
  const FieldFunction E = [](double t, const Vec3& x) { return Vec3{std::cos(x.z - t), 0, 0}; };
  const FieldFunction B = [](double t, const Vec3& x) { return Vec3{0, std::cos(x.z - t), 0}; };
  const FieldSample s = sample_from_functions(E, B, E, B, 0.3, {0.1, 0.2, 0.7});
  const FieldSample exact = plane_wave(0.3, {0.1, 0.2, 0.7});
  CHECK(std::abs(s.E.grad[0][2] - exact.E.grad[0][2]) <= 1e-9);
  CHECK(vector_residuals(s).max_abs() <= 1e-9);
  CHECK(max_abs(quaternionic_residual(s)) <= 1e-9);
}
