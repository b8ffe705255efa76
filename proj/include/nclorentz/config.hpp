#pragma once

// Numerical tolerances shared by every module. All thresholds that decide
// validity (unit norm, antisymmetry, classification) live here.

namespace nclorentz {

struct Tolerances {
  // |norm(L) - 1| above which an element is renormalized.
  double unit_renormalize = 1e-12;
  // |norm(L) - 1| above which an element is rejected outright.
  double unit_reject = 1e-9;
  // Relative antisymmetry defect of an input tensor.
  double antisymmetry = 1e-12;
  // Relative threshold separating Zero / Isotropic / NonIsotropic.
  double classify = 1e-9;
  // Scaled defect a state may carry and still count as constitutively consistent.
  double consistency = 1e-10;
  // Residual below which a duality scan point counts as invariant.
  double duality_zero = 1e-11;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace nclorentz
