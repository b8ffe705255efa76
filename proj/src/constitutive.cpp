#include "nclorentz/constitutive.hpp"

namespace nclorentz {

namespace {

// Shared correction terms; forward uses (E, B), inverse (D, H) with the sign flipped.
struct Corrections {
  Vec3 first;   // correction to the first (electric) field
  Vec3 second;  // correction to the second (magnetic) field
};

Corrections corrections(const Vec3& e, const Vec3& b, const ThetaVectors& v) {
  const double a = dot(v.epsilon, e) - dot(v.theta, b);
  const double c = dot(v.theta, e) + dot(v.epsilon, b);
  const double eb = dot(e, b);
  const double half_diff = 0.5 * (dot(e, e) - dot(b, b));
  return {a * e + c * b + eb * v.theta + half_diff * v.epsilon,
          a * b - c * e - eb * v.epsilon + half_diff * v.theta};
}

}  // namespace

ExcitationState forward(const FieldState& s, const ThetaVectors& v) {
  const Corrections c = corrections(s.E, s.B, v);
  return {s.E + c.first, s.B + c.second};
}

FieldState inverse(const ExcitationState& s, const ThetaVectors& v) {
  const Corrections c = corrections(s.D, s.H, v);
  return {s.D - c.first, s.H - c.second};
}

CVector3 h_from_f(const CVector3& f, const KVector& k) {
  const CVector3 fs = star(f);
  return f - scalar_bracket(fs, star(k.k)) * f - 0.5 * (scalar_bracket(fs, fs) * k.k);
}

CVector3 f_from_h(const CVector3& h, const KVector& k) {
  const CVector3 hs = star(h);
  return h + scalar_bracket(hs, star(k.k)) * h + 0.5 * (scalar_bracket(hs, hs) * k.k);
}

ExcitationState forward_quat(const FieldState& s, const ThetaVectors& v) {
  return excitation_from_h(h_from_f(to_f(s), k_from_vectors(v)));
}

FieldState inverse_quat(const ExcitationState& s, const ThetaVectors& v) {
  return fields_from_f(f_from_h(to_h(s), k_from_vectors(v)));
}

double covariant_transport_check(const FieldState& s, const ThetaVectors& v, const LorentzElement& L) {
  const KVector k = k_from_vectors(v);
  const CVector3 f = to_f(s);
  const CVector3 h = h_from_f(f, k);
  const CVector3 f2 = act_field(L, f);
  const CVector3 h2 = act_field(L, h);
  const KVector k2 = transport_k(L, k);
  return max_abs(h_from_f(f2, k2) - h2);
}

double fixed_k_transport_check(const FieldState& s, const ThetaVectors& v, const LorentzElement& L) {
  const KVector k = k_from_vectors(v);
  const CVector3 f = to_f(s);
  const CVector3 h = h_from_f(f, k);
  return max_abs(h_from_f(act_field(L, f), k) - act_field(L, h));
}

}  // namespace nclorentz
