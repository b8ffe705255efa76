#include "nclorentz/lorentz.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "nclorentz/error.hpp"

namespace nclorentz {

namespace {

Biquaternion renormalized(const Biquaternion& q, const Tolerances& tol) {
  const Complex n = norm(q);
  const double defect = std::abs(n - 1.0);
  if (!is_finite(q) || !(defect <= tol.unit_reject)) {
    std::ostringstream msg;
    msg << "k0^2 + k.k = " << n << " differs from 1 by " << defect;
    throw Error(ErrorCode::NotUnit, msg.str());
  }
  if (defect <= tol.unit_renormalize) return q;
  return q * (1.0 / std::sqrt(n));
}

}  // namespace

LorentzElement LorentzElement::make(Complex k0, const CVector3& k, const Tolerances& tol) {
  return LorentzElement(renormalized({k0, k}, tol));
}

LorentzElement rotation_element(const Vec3& axis, double half_angle) {
  return LorentzElement::make(std::cos(half_angle), CVector3(std::sin(half_angle) * axis));
}

LorentzElement boost_element(const Vec3& axis, double half_rapidity) {
  return LorentzElement::make(std::cosh(half_rapidity), kI * std::sinh(half_rapidity) * CVector3(axis));
}

LorentzElement compose(const LorentzElement& a, const LorentzElement& b) {
  return LorentzElement::make(a.quat() * b.quat());
}

double distance(const LorentzElement& a, const LorentzElement& b) { return max_abs(a.quat() - b.quat()); }

double distance_mod_sign(const LorentzElement& a, const LorentzElement& b) {
  return std::min(max_abs(a.quat() - b.quat()), max_abs(a.quat() + b.quat()));
}

CVector3 act_vector(const LorentzElement& L, const CVector3& v) {
  const Biquaternion r = L.quat() * Biquaternion::vector(v) * conj_quat(L.quat());
  assert(std::abs(r.s) <= 1e-13 * std::max(1.0, hnorm(L.quat()) * hnorm(L.quat()) * hnorm(v)));
  return r.v;
}

CVector3 act_field(const LorentzElement& L, const CVector3& v) { return conj(act_vector(L, conj(v))); }

SO3CMatrix SO3CMatrix::identity() {
  SO3CMatrix r;
  for (int i = 0; i < 3; ++i) r.m[i][i] = 1.0;
  return r;
}

CVector3 SO3CMatrix::apply(const CVector3& v) const {
  CVector3 r;
  for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v.x + m[i][1] * v.y + m[i][2] * v.z;
  return r;
}

SO3CMatrix SO3CMatrix::transpose() const {
  SO3CMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  return r;
}

Complex SO3CMatrix::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

SO3CMatrix operator*(const SO3CMatrix& a, const SO3CMatrix& b) {
  SO3CMatrix r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r.m[i][j] += a.m[i][k] * b.m[k][j];
  return r;
}

double distance(const SO3CMatrix& a, const SO3CMatrix& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a.m[i][j] - b.m[i][j]));
  return d;
}

SO3CMatrix so3c_matrix(const LorentzElement& L) {
  const Complex k0 = L.k0();
  const Complex k1 = L.k().x, k2 = L.k().y, k3 = L.k().z;
  SO3CMatrix o;
  o.m[0] = {1.0 - 2.0 * (k2 * k2 + k3 * k3), -2.0 * k0 * k3 + 2.0 * k1 * k2, 2.0 * k0 * k2 + 2.0 * k1 * k3};
  o.m[1] = {2.0 * k0 * k3 + 2.0 * k1 * k2, 1.0 - 2.0 * (k3 * k3 + k1 * k1), -2.0 * k0 * k1 + 2.0 * k2 * k3};
  o.m[2] = {-2.0 * k0 * k2 + 2.0 * k1 * k3, 2.0 * k0 * k1 + 2.0 * k2 * k3, 1.0 - 2.0 * (k1 * k1 + k2 * k2)};
  return o;
}

CFourVector act_four_vector(const LorentzElement& L, const CFourVector& a) {
  const Biquaternion encoded{-kI * a.t, a.x};
  const Biquaternion r = conj_components(L.quat()) * encoded * conj_quat(L.quat());
  return {kI * r.s, r.v};
}

LorentzMatrix4 LorentzMatrix4::identity() {
  LorentzMatrix4 r;
  for (int i = 0; i < 4; ++i) r.m[i][i] = 1.0;
  return r;
}

std::array<double, 4> LorentzMatrix4::apply(const std::array<double, 4>& a) const {
  std::array<double, 4> r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i] += m[i][j] * a[j];
  return r;
}

LorentzMatrix4 LorentzMatrix4::transpose() const {
  LorentzMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
  return r;
}

double LorentzMatrix4::det() const {
  // Laplace expansion via 2x2 minors of the top and bottom row pairs.
  const auto& a = m;
  const double s0 = a[0][0] * a[1][1] - a[1][0] * a[0][1];
  const double s1 = a[0][0] * a[1][2] - a[1][0] * a[0][2];
  const double s2 = a[0][0] * a[1][3] - a[1][0] * a[0][3];
  const double s3 = a[0][1] * a[1][2] - a[1][1] * a[0][2];
  const double s4 = a[0][1] * a[1][3] - a[1][1] * a[0][3];
  const double s5 = a[0][2] * a[1][3] - a[1][2] * a[0][3];
  const double c5 = a[2][2] * a[3][3] - a[3][2] * a[2][3];
  const double c4 = a[2][1] * a[3][3] - a[3][1] * a[2][3];
  const double c3 = a[2][1] * a[3][2] - a[3][1] * a[2][2];
  const double c2 = a[2][0] * a[3][3] - a[3][0] * a[2][3];
  const double c1 = a[2][0] * a[3][2] - a[3][0] * a[2][2];
  const double c0 = a[2][0] * a[3][1] - a[3][0] * a[2][1];
  return s0 * c5 - s1 * c4 + s2 * c3 + s3 * c2 - s4 * c1 + s5 * c0;
}

LorentzMatrix4 operator*(const LorentzMatrix4& a, const LorentzMatrix4& b) {
  LorentzMatrix4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r.m[i][j] += a.m[i][k] * b.m[k][j];
  return r;
}

double distance(const LorentzMatrix4& a, const LorentzMatrix4& b) {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) d = std::max(d, std::abs(a.m[i][j] - b.m[i][j]));
  return d;
}

double LorentzMatrix4::metric_defect() const {
  static constexpr std::array<double, 4> eta{1.0, -1.0, -1.0, -1.0};
  double d = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double g = 0.0;
      for (int k = 0; k < 4; ++k) g += m[k][i] * eta[k] * m[k][j];
      d = std::max(d, std::abs(g - (i == j ? eta[i] : 0.0)));
    }
  }
  return d;
}

LorentzMatrix4 lorentz_matrix4(const LorentzElement& L) {
  LorentzMatrix4 lam;
  for (int mu = 0; mu < 4; ++mu) {
    CFourVector e{};
    if (mu == 0) e.t = 1.0;
    else e.x[mu - 1] = 1.0;
    const CFourVector col = act_four_vector(L, e);
    lam.m[0][mu] = col.t.real();
    for (int i = 0; i < 3; ++i) lam.m[i + 1][mu] = col.x[i].real();
  }
  return lam;
}

Biquaternion unit_sqrt(const Biquaternion& q) {
  const Complex denom = std::sqrt(2.0 * (1.0 + q.s));
  if (std::abs(denom) < 1e-150) throw Error(ErrorCode::Degenerate, "square root of a unit biquaternion with q0 = -1");
  return (Biquaternion::one() + q) * (1.0 / denom);
}

Factorization factorize(const LorentzElement& L) {
  // L = U P with U unitary (real quaternion) and P Hermitian positive, so
  // P^2 = L^dagger L and L^dagger is conj_complex(L).
  Biquaternion p2 = conj_complex(L.quat()) * L.quat();
  p2.s = p2.s.real();
  for (std::size_t i = 0; i < 3; ++i) p2.v[i] = Complex(0.0, p2.v[i].imag());
  if (!(p2.s.real() >= 1.0 - 1e-9)) throw Error(ErrorCode::Degenerate, "L^dagger L is not positive");

  Biquaternion p = unit_sqrt(p2);
  p.s = p.s.real();
  for (std::size_t i = 0; i < 3; ++i) p.v[i] = Complex(0.0, p.v[i].imag());
  const LorentzElement boost = LorentzElement::make(p);

  Biquaternion u = L.quat() * conj_quat(boost.quat());
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(u[i].imag()) > 1e-9 * std::max(1.0, hnorm(L.quat()))) {
      throw Error(ErrorCode::Degenerate, "rotation factor is not real");
    }
    u[i] = u[i].real();
  }
  return {LorentzElement::make(u), boost};
}

}  // namespace nclorentz
