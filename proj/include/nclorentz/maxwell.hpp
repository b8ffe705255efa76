#pragma once

// Pointwise check that the single quaternion equation
//   nabla (f + h) + conj_complex( nabla (f - h) ) = 0,   nabla = -i d/dt + grad,
// carries the same content as
//   div B = 0,  rot E = -dB/dt,   div D = 0,  rot H = dD/dt.
// Fields enter as samples with their first derivatives, so the comparison is
// purely algebraic.

#include <array>
#include <functional>

#include "nclorentz/algebra.hpp"

namespace nclorentz {

/// Jacobian, grad[i][j] = d F_i / d x_j.
using Jacobian = std::array<std::array<double, 3>, 3>;

struct FieldDerivatives {
  Vec3 value;
  Vec3 dt;
  Jacobian grad{};
};

struct FieldSample {
  FieldDerivatives E, B, D, H;
};

struct MaxwellResiduals {
  Vec3 faraday;   // rot E + dB/dt
  double div_b = 0.0;
  Vec3 ampere;    // rot H - dD/dt
  double div_d = 0.0;

  double max_abs() const;
};

MaxwellResiduals vector_residuals(const FieldSample& s);

/// Left side of the quaternion Maxwell equation.
Biquaternion quaternionic_residual(const FieldSample& s);

using FieldFunction = std::function<Vec3(double t, const Vec3& x)>;

/// Builds a sample from closed-form fields by second-order central
/// differences. Exploratory use only; the tests use analytic derivatives.
FieldSample sample_from_functions(const FieldFunction& E, const FieldFunction& B, const FieldFunction& D,
                                  const FieldFunction& H, double t, const Vec3& x, double step = 1e-5);

}  // namespace nclorentz
