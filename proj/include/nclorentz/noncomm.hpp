#pragma once

// The noncommutativity object in its three guises: the antisymmetric tensor
// theta^{mu nu}, the vector pair (eps, theta), and the complex 3-vector
// K = theta - i eps.
//
// Index conventions: eta = diag(+, -, -, -), eps^{123} = +1,
//   eps^m = theta^{m0},   theta^k = -1/2 eps^{klm} theta_{lm},
// with theta_{lm} = theta^{lm} for purely spatial indices.

#include <array>
#include <string_view>

#include "nclorentz/algebra.hpp"
#include "nclorentz/config.hpp"
#include "nclorentz/lorentz.hpp"

namespace nclorentz {

struct ThetaTensor {
  std::array<std::array<double, 4>, 4> m{};

  /// Largest |theta^{mu nu} + theta^{nu mu}|.
  double antisymmetry_defect() const;
  double max_abs() const;
};

struct ThetaVectors {
  Vec3 epsilon;  // electric-like, theta^{m0}
  Vec3 theta;    // magnetic-like
};

/// K = theta - i eps. phi() is the conjugate view theta + i eps, the vector
/// that the small group's elements are built from.
struct KVector {
  CVector3 k;

  CVector3 phi() const { return conj(k); }
  static KVector from_phi(const CVector3& phi) { return {conj(phi)}; }
};

struct KInvariants {
  Complex square;  // K.K
  double re_part;  // theta^2 - eps^2
  double im_part;  // -2 theta.eps
};

enum class KClass { NonIsotropic, Isotropic, Zero };

std::string_view to_string(KClass c);

/// Throws NotAntisymmetric when the tensor's symmetric part exceeds
/// tol.antisymmetry relative to its largest entry.
ThetaVectors vectors_from_tensor(const ThetaTensor& t, const Tolerances& tol = kDefaultTolerances);
ThetaTensor tensor_from_vectors(const ThetaVectors& v);

KVector k_from_vectors(const ThetaVectors& v);
ThetaVectors vectors_from_k(const KVector& k);

KInvariants invariants(const KVector& k);

/// Zero if |K| <= tol; Isotropic if |K.K| <= tol |K|^2; NonIsotropic otherwise.
/// |K| is the Hermitian length.
KClass classify(const KVector& k, double tol = kDefaultTolerances.classify);

/// theta'^{mu nu} = Lambda^mu_a Lambda^nu_b theta^{ab}.
ThetaTensor transport_tensor(const LorentzMatrix4& lambda, const ThetaTensor& t);

/// K transported by L (field law); the tensor picture gives the same result.
KVector transport_k(const LorentzElement& L, const KVector& k);

}  // namespace nclorentz
