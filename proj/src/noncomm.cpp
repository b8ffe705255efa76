#include "nclorentz/noncomm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nclorentz/error.hpp"

namespace nclorentz {

double ThetaTensor::antisymmetry_defect() const {
  double d = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) d = std::max(d, std::abs(m[i][j] + m[j][i]));
  return d;
}

double ThetaTensor::max_abs() const {
  double d = 0.0;
  for (const auto& row : m)
    for (double x : row) d = std::max(d, std::abs(x));
  return d;
}

std::string_view to_string(KClass c) {
  switch (c) {
    case KClass::NonIsotropic: return "NonIsotropic";
    case KClass::Isotropic: return "Isotropic";
    case KClass::Zero: return "Zero";
  }
  return "Unknown";
}

ThetaVectors vectors_from_tensor(const ThetaTensor& t, const Tolerances& tol) {
  for (const auto& row : t.m) {
    for (double x : row) {
      if (!std::isfinite(x)) throw Error(ErrorCode::NotAntisymmetric, "non-finite tensor entry");
    }
  }
  const double defect = t.antisymmetry_defect();
  if (defect > tol.antisymmetry * t.max_abs()) {
    std::ostringstream msg;
    msg << "max |theta^{mu nu} + theta^{nu mu}| = " << defect;
    throw Error(ErrorCode::NotAntisymmetric, msg.str());
  }
  // theta^k = -1/2 eps^{klm} theta_{lm}: theta^1 = -theta_{23}, etc.
  ThetaVectors v;
  v.epsilon = {t.m[1][0], t.m[2][0], t.m[3][0]};
  v.theta = {-t.m[2][3], -t.m[3][1], -t.m[1][2]};
  return v;
}

ThetaTensor tensor_from_vectors(const ThetaVectors& v) {
  ThetaTensor t;
  for (int i = 0; i < 3; ++i) {
    t.m[i + 1][0] = v.epsilon[i];
    t.m[0][i + 1] = -v.epsilon[i];
  }
  t.m[2][3] = -v.theta.x;
  t.m[3][2] = v.theta.x;
  t.m[3][1] = -v.theta.y;
  t.m[1][3] = v.theta.y;
  t.m[1][2] = -v.theta.z;
  t.m[2][1] = v.theta.z;
  return t;
}

KVector k_from_vectors(const ThetaVectors& v) {
  return {CVector3(v.theta) - kI * CVector3(v.epsilon)};
}

ThetaVectors vectors_from_k(const KVector& k) { return {-imag(k.k), real(k.k)}; }

KInvariants invariants(const KVector& k) {
  const Complex sq = dot(k.k, k.k);
  return {sq, sq.real(), sq.imag()};
}

KClass classify(const KVector& k, double tol) {
  const double len = hnorm(k.k);
  if (len <= tol) return KClass::Zero;
  if (std::abs(dot(k.k, k.k)) <= tol * len * len) return KClass::Isotropic;
  return KClass::NonIsotropic;
}

ThetaTensor transport_tensor(const LorentzMatrix4& lambda, const ThetaTensor& t) {
  ThetaTensor r;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      double acc = 0.0;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) acc += lambda.m[mu][a] * lambda.m[nu][b] * t.m[a][b];
      r.m[mu][nu] = acc;
    }
  }
  return r;
}

KVector transport_k(const LorentzElement& L, const KVector& k) { return {act_field(L, k.k)}; }

}  // namespace nclorentz
