#include "nclorentz/smallgroup.hpp"

#include <cmath>

#include "nclorentz/error.hpp"

namespace nclorentz {

namespace {

Complex principal_sqrt(Complex z) {
  Complex r = std::sqrt(z);
  // Keep the argument in (-pi/2, pi/2].
  if (r.real() == 0.0 && r.imag() < 0.0) r = -r;
  return r;
}

Vec3 unit(const Vec3& v) { return (1.0 / norm(v)) * v; }

// Orthonormal right-handed frame with e1 along a and e2 in the (a, b) plane.
void frame_from(const Vec3& a, const Vec3& b, Vec3& e1, Vec3& e2, Vec3& e3) {
  e1 = unit(a);
  Vec3 t = b - dot(b, e1) * e1;
  if (norm(t) < 1e-300) {
    // Any perpendicular direction.
    const Vec3 trial = std::abs(e1.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    t = cross(e1, trial);
  }
  e2 = unit(t);
  e3 = cross(e1, e2);
}

}  // namespace

std::string_view to_string(GroupKind k) {
  return k == GroupKind::NonIsotropic ? "NonIsotropic" : "Isotropic";
}

GroupParameter operator+(const GroupParameter& a, const GroupParameter& b) {
  if (a.kind != b.kind) throw Error(ErrorCode::KindMismatch, "adding parameters of different kinds");
  if (a.kind == GroupKind::NonIsotropic) return GroupParameter::angle(a.chi + b.chi);
  return GroupParameter::shift(a.w + b.w, a.sign * b.sign);
}

SmallGroupDescriptor describe(const KVector& k, double tol) {
  const KClass cls = classify(k, tol);
  if (cls == KClass::Zero) throw Error(ErrorCode::ZeroK, "K vanishes; the stabilizer is the full Lorentz group");
  SmallGroupDescriptor d;
  d.phi = k.phi();
  if (cls == KClass::Isotropic) {
    d.kind = GroupKind::Isotropic;
    return d;
  }
  d.kind = GroupKind::NonIsotropic;
  d.sqrt_square = principal_sqrt(dot(d.phi, d.phi));
  d.phi_hat = d.phi / d.sqrt_square;
  return d;
}

LorentzElement element(const SmallGroupDescriptor& d, const GroupParameter& p) {
  if (d.kind != p.kind) throw Error(ErrorCode::KindMismatch, "parameter kind does not match the descriptor");
  if (d.kind == GroupKind::NonIsotropic) {
    return LorentzElement::make(std::cos(p.chi), std::sin(p.chi) * d.phi_hat);
  }
  const double s = p.sign >= 0 ? 1.0 : -1.0;
  return LorentzElement::make(Complex(s), Complex(s) * p.w * d.phi);
}

double stabilizes(const LorentzElement& L, const KVector& k) {
  const CVector3 phi = k.phi();
  return max_abs(act_vector(L, phi) - phi);
}

double group_law_check(const SmallGroupDescriptor& d, const GroupParameter& p1, const GroupParameter& p2) {
  return distance(compose(element(d, p1), element(d, p2)), element(d, p1 + p2));
}

LorentzElement rotation_from_frame(const Vec3& e1, const Vec3& e2, const Vec3& e3) {
  // Rows e1, e2, e3 form a rotation matrix; recover its quaternion
  // (Shepperd's method, largest pivot first).
  const double m[3][3] = {{e1.x, e1.y, e1.z}, {e2.x, e2.y, e2.z}, {e3.x, e3.y, e3.z}};
  const double tr = m[0][0] + m[1][1] + m[2][2];
  double w, x, y, z;
  if (tr >= m[0][0] && tr >= m[1][1] && tr >= m[2][2]) {
    const double r = std::sqrt(1.0 + tr);
    w = 0.5 * r;
    x = (m[2][1] - m[1][2]) / (2.0 * r);
    y = (m[0][2] - m[2][0]) / (2.0 * r);
    z = (m[1][0] - m[0][1]) / (2.0 * r);
  } else if (m[0][0] >= m[1][1] && m[0][0] >= m[2][2]) {
    const double r = std::sqrt(1.0 + m[0][0] - m[1][1] - m[2][2]);
    x = 0.5 * r;
    w = (m[2][1] - m[1][2]) / (2.0 * r);
    y = (m[0][1] + m[1][0]) / (2.0 * r);
    z = (m[0][2] + m[2][0]) / (2.0 * r);
  } else if (m[1][1] >= m[2][2]) {
    const double r = std::sqrt(1.0 + m[1][1] - m[0][0] - m[2][2]);
    y = 0.5 * r;
    w = (m[0][2] - m[2][0]) / (2.0 * r);
    x = (m[0][1] + m[1][0]) / (2.0 * r);
    z = (m[1][2] + m[2][1]) / (2.0 * r);
  } else {
    const double r = std::sqrt(1.0 + m[2][2] - m[0][0] - m[1][1]);
    z = 0.5 * r;
    w = (m[1][0] - m[0][1]) / (2.0 * r);
    x = (m[0][2] + m[2][0]) / (2.0 * r);
    y = (m[1][2] + m[2][1]) / (2.0 * r);
  }
  const double n = std::sqrt(w * w + x * x + y * y + z * z);
  return LorentzElement::make(w / n, CVector3(Vec3{x / n, y / n, z / n}));
}

CanonicalForm canonical_form(const KVector& k, double tol) {
  if (classify(k, tol) != KClass::NonIsotropic) {
    throw Error(ErrorCode::NotNonIsotropic, "canonical_form needs a non-isotropic K; use canonical_form_isotropic");
  }
  const SmallGroupDescriptor d = describe(k, tol);
  const Vec3 n = real(d.phi_hat);
  const Vec3 m = imag(d.phi_hat);

  LorentzElement L;
  if (norm(m) > 1e-15 * norm(n)) {
    Vec3 e1, e2, e3;
    frame_from(n, m, e1, e2, e3);
    const LorentzElement rot = rotation_from_frame(e1, e2, e3);
    // In the rotated frame phi_hat = a x + i c y with a^2 - c^2 = 1. A boost
    // element cosh(h) + i sinh(h) z acts on the (x, y) plane as a rotation by
    // the imaginary angle 2ih; tanh(2h) = -c/a removes the y component.
    const double a = dot(n, e1);
    const double c = dot(m, e2);
    const double h = -0.5 * std::atanh(c / a);
    L = compose(boost_element({0, 0, 1}, h), rot);
  } else if (norm(n) > 0.0) {
    L = LorentzElement::identity();
  }
  return {L, transport_k(L, k)};
}

CanonicalForm canonical_form_isotropic(const KVector& k, double tol) {
  if (classify(k, tol) != KClass::Isotropic) {
    throw Error(ErrorCode::NotIsotropic, "canonical_form_isotropic needs an isotropic K");
  }
  const CVector3 phi = k.phi();
  const Vec3 a = real(phi);
  const Vec3 b = imag(phi);
  // phi = a + i b with |a| = |b|, a.b = 0. Send a to x and b to -y.
  Vec3 e1, e2, e3;
  frame_from(a, -b, e1, e2, e3);
  const LorentzElement rot = rotation_from_frame(e1, e2, e3);
  // After the rotation phi = s (1, -i, 0); the z boost with parameter h
  // multiplies it by exp(-2h).
  const double s = 0.5 * (norm(a) + norm(b));
  const LorentzElement L = compose(boost_element({0, 0, 1}, 0.5 * std::log(s)), rot);
  return {L, transport_k(L, k)};
}

double verify_constitutive_invariance(const KVector& k, const LorentzElement& L, const Vec3& E, const Vec3& B) {
  return fixed_k_transport_check(FieldState{E, B}, vectors_from_k(k), L);
}

}  // namespace nclorentz
