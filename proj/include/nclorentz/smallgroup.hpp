#pragma once

// The stability ("small") subgroup of the Lorentz group for a given
// noncommutativity vector K.
//
// An element L = k0 + k leaves K fixed iff it commutes with phi = theta + i eps,
// i.e. iff k is proportional to phi. Two cases:
//   phi.phi != 0:  L = cos(chi) + sin(chi) phi_hat,  phi_hat.phi_hat = 1,
//                  chi complex, chi'' = chi' + chi.  SO(2) x SO(1,1).
//   phi.phi == 0:  L = +-(1 + w phi),  w complex,  w'' = w' + w.  T2.
// chi and chi + 2 pi give the same element; chi + pi gives -L.

#include <string_view>

#include "nclorentz/algebra.hpp"
#include "nclorentz/constitutive.hpp"
#include "nclorentz/lorentz.hpp"
#include "nclorentz/noncomm.hpp"

namespace nclorentz {

enum class GroupKind { NonIsotropic, Isotropic };

std::string_view to_string(GroupKind k);

struct SmallGroupDescriptor {
  GroupKind kind = GroupKind::NonIsotropic;
  CVector3 phi;          // theta + i eps as given
  CVector3 phi_hat;      // phi / sqrt(phi.phi); non-isotropic only
  Complex sqrt_square;   // principal sqrt(phi.phi), Re > 0 or arg = +pi/2
};

struct GroupParameter {
  GroupKind kind = GroupKind::NonIsotropic;
  Complex chi;  // non-isotropic
  Complex w;    // isotropic
  int sign = 1; // isotropic, +1 or -1

  static GroupParameter angle(Complex chi) { return {GroupKind::NonIsotropic, chi, {}, 1}; }
  static GroupParameter shift(Complex w, int sign = 1) { return {GroupKind::Isotropic, {}, w, sign}; }

  /// Parameter of the product element. Throws KindMismatch.
  friend GroupParameter operator+(const GroupParameter& a, const GroupParameter& b);
};

/// Throws ZeroK when K vanishes (the stabilizer is the whole group).
SmallGroupDescriptor describe(const KVector& k, double tol = kDefaultTolerances.classify);

/// Throws KindMismatch.
LorentzElement element(const SmallGroupDescriptor& d, const GroupParameter& p);

/// max |act_vector(L, phi) - phi|; zero iff L is in the stabilizer of K.
double stabilizes(const LorentzElement& L, const KVector& k);

/// Distance between element(p1) * element(p2) and element(p1 + p2).
double group_law_check(const SmallGroupDescriptor& d, const GroupParameter& p1, const GroupParameter& p2);

struct CanonicalForm {
  LorentzElement L;
  KVector k_canonical;  // transport_k(L, K)
};

/// A Lorentz element taking phi_hat to a real unit vector (the x axis): a real
/// rotation putting Re phi_hat on x and Im phi_hat on y, followed by a boost
/// along z that cancels the imaginary part. Throws NotNonIsotropic.
CanonicalForm canonical_form(const KVector& k, double tol = kDefaultTolerances.classify);

/// Isotropic variant: takes phi to the reference vector (1, -i, 0).
/// Throws NotIsotropic.
CanonicalForm canonical_form_isotropic(const KVector& k, double tol = kDefaultTolerances.classify);

/// Transport (E, B) and the induced (D, H) by L with K held fixed, re-apply the
/// constitutive map. Returns the max-component mismatch.
double verify_constitutive_invariance(const KVector& k, const LorentzElement& L, const Vec3& E, const Vec3& B);

/// Real rotation with matrix rows (e1, e2, e3), taking e1 to x, e2 to y.
/// The frame must be right-handed orthonormal.
LorentzElement rotation_from_frame(const Vec3& e1, const Vec3& e2, const Vec3& e3);

}  // namespace nclorentz
