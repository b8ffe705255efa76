#pragma once

// First-order nonlinear constitutive relations of noncommutative
// electrodynamics, in vector form and in quaternionic form.
//
// Vector form (forward):
//   D = E + [(eps.E) - (theta.B)] E + [(theta.E) + (eps.B)] B + (E.B) theta + 1/2 (E^2 - B^2) eps
//   H = B + [(eps.E) - (theta.B)] B - [(theta.E) + (eps.B)] E - (E.B) eps   + 1/2 (E^2 - B^2) theta
// The inverse is the first-order inversion: the same corrections with
// (E, B) -> (D, H) and the opposite sign.
//
// Quaternionic form, with f = B - iE, h = H - iD, K = theta - i eps:
//   f = h + (h* K*)_s h + 1/2 (h* h*)_s K
//   h = f - (f* K*)_s f - 1/2 (f* f*)_s K
// where (a b)_s of two pure vectors is the symmetric bracket +a.b (see
// scalar_bracket). Each line is the inverse of the other to first order in K.

#include "nclorentz/algebra.hpp"
#include "nclorentz/lorentz.hpp"
#include "nclorentz/noncomm.hpp"

namespace nclorentz {

struct FieldState {
  Vec3 E, B;
};

struct ExcitationState {
  Vec3 D, H;
};

struct QuaternionFields {
  CVector3 f;  // B - iE
  CVector3 h;  // H - iD
};

inline CVector3 to_f(const FieldState& s) { return CVector3(s.B) - kI * CVector3(s.E); }
inline CVector3 to_h(const ExcitationState& s) { return CVector3(s.H) - kI * CVector3(s.D); }
inline FieldState fields_from_f(const CVector3& f) { return {-imag(f), real(f)}; }
inline ExcitationState excitation_from_h(const CVector3& h) { return {-imag(h), real(h)}; }

/// The (a b)_s bracket of two pure-vector quaternions: +a.b, which is
/// scalar_part(a * conj_quat(b)). With this sign the quaternionic relations
/// reproduce the vector relations term by term.
inline Complex scalar_bracket(const CVector3& a, const CVector3& b) { return dot(a, b); }

/// Vector part of conj_complex applied to a pure vector, i.e. -conj(a).
inline CVector3 star(const CVector3& a) { return -conj(a); }

ExcitationState forward(const FieldState& s, const ThetaVectors& v);
FieldState inverse(const ExcitationState& s, const ThetaVectors& v);

/// Second quaternionic line: h from f.
CVector3 h_from_f(const CVector3& f, const KVector& k);
/// First quaternionic line: f from h.
CVector3 f_from_h(const CVector3& h, const KVector& k);

/// forward() evaluated through h_from_f.
ExcitationState forward_quat(const FieldState& s, const ThetaVectors& v);
/// inverse() evaluated through f_from_h.
FieldState inverse_quat(const ExcitationState& s, const ThetaVectors& v);

/// Transport (f, h) and K together by L and re-evaluate h_from_f. Returns
/// max |h_from_f(f', K') - h'|; zero up to rounding for every L.
double covariant_transport_check(const FieldState& s, const ThetaVectors& v, const LorentzElement& L);

/// Same but K is held fixed; vanishes only when L stabilizes K.
double fixed_k_transport_check(const FieldState& s, const ThetaVectors& v, const LorentzElement& L);

}  // namespace nclorentz
