#pragma once

// Dual rotations G -> e^{i chi} G, R -> e^{-i chi} R, K -> e^{i chi} K of the
// combinations G = f + h, R = f - h, and the invariance defect they leave in
// the constitutive relations.
//
// Summing and subtracting the two quaternionic constitutive lines gives
//   0  = -1/2 (R* K*)_s G - 1/2 (G* K*)_s R - 1/2 (G* R*)_s K
//   2R =  1/2 (R* K*)_s R + 1/2 (G* K*)_s G + 1/4 (G* G*)_s K + 1/4 (R* R*)_s K
// Under the rotation the terms of the first line pick up e^{i chi} except
// (G* K*)_s R, which picks up e^{-3i chi}; in the second all terms follow
// e^{-i chi} except (R* R*)_s K at e^{3i chi}. The relations map into
// themselves only when e^{4i chi} = 1.

#include <vector>

#include "nclorentz/algebra.hpp"
#include "nclorentz/constitutive.hpp"
#include "nclorentz/noncomm.hpp"

namespace nclorentz {

struct GRState {
  CVector3 G;  // f + h
  CVector3 R;  // f - h

  static GRState from_fields(const QuaternionFields& q) { return {q.f + q.h, q.f - q.h}; }
  QuaternionFields to_fields() const { return {0.5 * (G + R), 0.5 * (G - R)}; }
};

/// Consistent state: h from the forward constitutive map of (E, B).
GRState consistent_state(const FieldState& s, const KVector& k);

struct DualRotated {
  GRState state;
  KVector k;
};

DualRotated dual_rotate(const GRState& s, const KVector& k, double chi);

/// Defect vectors of the two summed/subtracted lines.
struct GRDefect {
  CVector3 sum;         // first line, right side minus left
  CVector3 difference;  // second line
};

GRDefect gr_defect(const GRState& s, const KVector& k);

/// Max-component magnitude of both defect lines.
double constitutive_residual_gr(const GRState& s, const KVector& k);

/// Scaled mismatch between h and the forward map of f; zero for states from
/// consistent_state.
double consistency_defect(const GRState& s, const KVector& k);

/// How far the rotated relations are from the original ones carried along by
/// the phase of G (first line) and of R (second line):
///   max | F(rotated) - e^{+-i chi} F(original) |.
/// Vanishes exactly when e^{i chi} is 1, -1, i or -i, for any state.
double rotation_defect(const GRState& s, const KVector& k, double chi);

enum class DualPhase { Identity, SignFlip, PlusI, MinusI, None };

struct ScanPoint {
  double chi;
  double residual;
  DualPhase phase;  // which of the four invariant phases chi sits on, if any
};

/// chi = 2 pi j / n, j = 0..n-1. Requires n >= 8 and a consistent state
/// (InconsistentInput otherwise).
std::vector<ScanPoint> duality_scan(const GRState& s, const KVector& k, int n,
                                    const Tolerances& tol = kDefaultTolerances);

std::string_view to_string(DualPhase p);

}  // namespace nclorentz
