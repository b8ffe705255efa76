#pragma once

// Unit biquaternions as elements of SL(2,C), the double cover of the proper
// orthochronous Lorentz group.
//
// Conventions (all pinned by tests):
//   * Complex 3-vectors transform by similarity, v -> L v L-bar. Its matrix is
//     the SO(3,C) matrix O(k) with the nine entries 1 - 2(k2^2 + k3^2), ...
//     so O(L) k = k for the vector part k of L.
//   * Real contravariant four-vectors (a0, a) are encoded as A = -i a0 + a and
//     transform as A -> c(L) A L-bar, with c the componentwise conjugate.
//   * With these, the antisymmetric tensor theta^{mu nu} transported by
//     Lambda(L) on both indices moves phi = theta + i eps by act_vector(L, .)
//     and K = theta - i eps (also f = B - iE, h = H - iD) by act_field(L, .).
//   * A real element cos(a) + sin(a) n rotates by the angle 2a about n,
//     counterclockwise. cosh(b) + i sinh(b) n is a boost of rapidity 2b along
//     n: Lambda^0_i = -sinh(2b) n_i.

#include <array>

#include "nclorentz/algebra.hpp"
#include "nclorentz/config.hpp"

namespace nclorentz {

class LorentzElement {
 public:
  /// Identity element.
  LorentzElement() : q_(Biquaternion::one()) {}

  /// Validates k0^2 + k.k = 1. Defects up to tol.unit_reject are renormalized
  /// by the principal root of the norm; larger ones throw NotUnit.
  static LorentzElement make(Complex k0, const CVector3& k, const Tolerances& tol = kDefaultTolerances);
  static LorentzElement make(const Biquaternion& q, const Tolerances& tol = kDefaultTolerances) {
    return make(q.s, q.v, tol);
  }
  static LorentzElement identity() { return {}; }

  const Biquaternion& quat() const { return q_; }
  Complex k0() const { return q_.s; }
  const CVector3& k() const { return q_.v; }

  /// Group inverse, the quaternion conjugate.
  LorentzElement inverse() const { return LorentzElement(conj_quat(q_)); }
  LorentzElement operator-() const { return LorentzElement(-q_); }

 private:
  explicit LorentzElement(const Biquaternion& q) : q_(q) {}
  Biquaternion q_;
};

/// Real element cos(a) + sin(a) n; rotation by 2a about the unit axis n.
LorentzElement rotation_element(const Vec3& axis, double half_angle);
/// cosh(b) + i sinh(b) n; boost of rapidity 2b along the unit axis n.
LorentzElement boost_element(const Vec3& axis, double half_rapidity);

/// Group product with renormalization of rounding drift.
LorentzElement compose(const LorentzElement& a, const LorentzElement& b);

/// Max-component distance between two elements.
double distance(const LorentzElement& a, const LorentzElement& b);
/// Distance modulo the double-cover sign.
double distance_mod_sign(const LorentzElement& a, const LorentzElement& b);

/// v -> L v L-bar. Left action of SL(2,C) on C^3 through SO(3,C).
CVector3 act_vector(const LorentzElement& L, const CVector3& v);

/// Transport law of the field quaternions f = B - iE, h = H - iD and of
/// K = theta - i eps: conj(act_vector(L, conj(v))).
CVector3 act_field(const LorentzElement& L, const CVector3& v);

struct SO3CMatrix {
  std::array<std::array<Complex, 3>, 3> m{};

  static SO3CMatrix identity();
  CVector3 apply(const CVector3& v) const;
  SO3CMatrix transpose() const;
  Complex det() const;
  friend SO3CMatrix operator*(const SO3CMatrix& a, const SO3CMatrix& b);
  /// Max entrywise modulus of a - b.
  friend double distance(const SO3CMatrix& a, const SO3CMatrix& b);
};

/// The matrix of act_vector(L, .), entry by entry the classical O(k) table.
SO3CMatrix so3c_matrix(const LorentzElement& L);

struct CFourVector {
  Complex t;
  CVector3 x;
};

/// Four-vector transport. Real input stays real.
CFourVector act_four_vector(const LorentzElement& L, const CFourVector& a);

/// Lambda^mu_nu with index order (t, x, y, z).
struct LorentzMatrix4 {
  std::array<std::array<double, 4>, 4> m{};

  static LorentzMatrix4 identity();
  std::array<double, 4> apply(const std::array<double, 4>& a) const;
  LorentzMatrix4 transpose() const;
  double det() const;
  friend LorentzMatrix4 operator*(const LorentzMatrix4& a, const LorentzMatrix4& b);
  friend double distance(const LorentzMatrix4& a, const LorentzMatrix4& b);
  /// max |Lambda^T eta Lambda - eta|, eta = diag(1, -1, -1, -1).
  double metric_defect() const;
};

/// Column mu is act_four_vector(L, e_mu).
LorentzMatrix4 lorentz_matrix4(const LorentzElement& L);

struct Factorization {
  LorentzElement rotation;  // real components
  LorentzElement boost;     // real scalar >= 1, imaginary vector part
};

/// Polar split L = rotation * boost. The boost is the positive square root of
/// conj_complex(L) * L (Hermitian, positive in the 2x2 realization).
Factorization factorize(const LorentzElement& L);

/// Principal square root of a unit biquaternion, (1 + q) / sqrt(2 (1 + q0)).
/// Throws Degenerate when q0 = -1.
Biquaternion unit_sqrt(const Biquaternion& q);

}  // namespace nclorentz
