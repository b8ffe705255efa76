#include "nclorentz/maxwell.hpp"

#include <algorithm>

namespace nclorentz {

namespace {

Vec3 curl(const Jacobian& j) { return {j[2][1] - j[1][2], j[0][2] - j[2][0], j[1][0] - j[0][1]}; }

double divergence(const Jacobian& j) { return j[0][0] + j[1][1] + j[2][2]; }

// nabla q for the pure-vector field q = a - i b with the given derivatives:
// scalar part -div q, vector part -i dq/dt + rot q.
Biquaternion apply_nabla(const FieldDerivatives& a, const FieldDerivatives& b) {
  const Complex div{divergence(a.grad), -divergence(b.grad)};
  const CVector3 dt = CVector3(a.dt) - kI * CVector3(b.dt);
  const CVector3 rot = CVector3(curl(a.grad)) - kI * CVector3(curl(b.grad));
  return {-div, -kI * dt + rot};
}

FieldDerivatives combine(const FieldDerivatives& x, const FieldDerivatives& y, double sign) {
  FieldDerivatives r;
  r.value = x.value + sign * y.value;
  r.dt = x.dt + sign * y.dt;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.grad[i][j] = x.grad[i][j] + sign * y.grad[i][j];
  return r;
}

}  // namespace

double MaxwellResiduals::max_abs() const {
  return std::max({nclorentz::max_abs(faraday), std::abs(div_b), nclorentz::max_abs(ampere), std::abs(div_d)});
}

MaxwellResiduals vector_residuals(const FieldSample& s) {
  MaxwellResiduals r;
  r.faraday = curl(s.E.grad) + s.B.dt;
  r.div_b = divergence(s.B.grad);
  r.ampere = curl(s.H.grad) - s.D.dt;
  r.div_d = divergence(s.D.grad);
  return r;
}

Biquaternion quaternionic_residual(const FieldSample& s) {
  // f + h = (B + H) - i (E + D),  f - h = (B - H) - i (E - D)
  const Biquaternion plus = apply_nabla(combine(s.B, s.H, 1.0), combine(s.E, s.D, 1.0));
  const Biquaternion minus = apply_nabla(combine(s.B, s.H, -1.0), combine(s.E, s.D, -1.0));
  return plus + conj_complex(minus);
}

FieldSample sample_from_functions(const FieldFunction& E, const FieldFunction& B, const FieldFunction& D,
                                  const FieldFunction& H, double t, const Vec3& x, double step) {
  auto derive = [&](const FieldFunction& fn) {
    FieldDerivatives d;
    d.value = fn(t, x);
    d.dt = (1.0 / (2.0 * step)) * (fn(t + step, x) - fn(t - step, x));
    for (int j = 0; j < 3; ++j) {
      Vec3 xp = x, xm = x;
      xp[j] += step;
      xm[j] -= step;
      const Vec3 col = (1.0 / (2.0 * step)) * (fn(t, xp) - fn(t, xm));
      for (int i = 0; i < 3; ++i) d.grad[i][j] = col[i];
    }
    return d;
  };
  return {derive(E), derive(B), derive(D), derive(H)};
}

}  // namespace nclorentz
