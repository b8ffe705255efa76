#include "nclorentz/duality.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "nclorentz/error.hpp"

namespace nclorentz {

GRState consistent_state(const FieldState& s, const KVector& k) {
  const CVector3 f = to_f(s);
  return GRState::from_fields({f, h_from_f(f, k)});
}

DualRotated dual_rotate(const GRState& s, const KVector& k, double chi) {
  const Complex ph = std::polar(1.0, chi);
  const Complex inv = std::conj(ph);
  return {{ph * s.G, inv * s.R}, {ph * k.k}};
}

GRDefect gr_defect(const GRState& s, const KVector& k) {
  const CVector3 gs = star(s.G);
  const CVector3 rs = star(s.R);
  const CVector3 ks = star(k.k);
  const Complex rk = scalar_bracket(rs, ks);
  const Complex gk = scalar_bracket(gs, ks);
  const Complex gr = scalar_bracket(gs, rs);
  const Complex gg = scalar_bracket(gs, gs);
  const Complex rr = scalar_bracket(rs, rs);

  GRDefect d;
  d.sum = -0.5 * (rk * s.G) - 0.5 * (gk * s.R) - 0.5 * (gr * k.k);
  d.difference = 0.5 * (rk * s.R) + 0.5 * (gk * s.G) + 0.25 * (gg * k.k) + 0.25 * (rr * k.k) - 2.0 * s.R;
  return d;
}

double constitutive_residual_gr(const GRState& s, const KVector& k) {
  const GRDefect d = gr_defect(s, k);
  return std::max(max_abs(d.sum), max_abs(d.difference));
}

double consistency_defect(const GRState& s, const KVector& k) {
  const QuaternionFields q = s.to_fields();
  const double fn = hnorm(q.f);
  const double scale = 1.0 + fn + hnorm(k.k) * fn * fn;
  return max_abs(q.h - h_from_f(q.f, k)) / scale;
}

double rotation_defect(const GRState& s, const KVector& k, double chi) {
  const DualRotated r = dual_rotate(s, k, chi);
  const GRDefect before = gr_defect(s, k);
  const GRDefect after = gr_defect(r.state, r.k);
  const Complex ph = std::polar(1.0, chi);
  return std::max(max_abs(after.sum - ph * before.sum), max_abs(after.difference - std::conj(ph) * before.difference));
}

std::vector<ScanPoint> duality_scan(const GRState& s, const KVector& k, int n, const Tolerances& tol) {
  if (n < 8) throw Error(ErrorCode::InvalidArgument, "duality scan needs n >= 8");
  const double defect = consistency_defect(s, k);
  if (!(defect <= tol.consistency)) {
    std::ostringstream msg;
    msg << "state does not satisfy the constitutive relation (scaled defect " << defect << ")";
    throw Error(ErrorCode::InconsistentInput, msg.str());
  }
  std::vector<ScanPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double chi = 2.0 * std::numbers::pi * j / n;
    DualPhase phase = DualPhase::None;
    if ((4 * j) % n == 0) {
      static constexpr DualPhase quarter[] = {DualPhase::Identity, DualPhase::PlusI, DualPhase::SignFlip,
                                              DualPhase::MinusI};
      phase = quarter[(4 * j) / n];
    }
    out.push_back({chi, rotation_defect(s, k, chi), phase});
  }
  return out;
}

std::string_view to_string(DualPhase p) {
  switch (p) {
    case DualPhase::Identity: return "identity";
    case DualPhase::SignFlip: return "sign_flip";
    case DualPhase::PlusI: return "plus_i";
    case DualPhase::MinusI: return "minus_i";
    case DualPhase::None: return "none";
  }
  return "none";
}

}  // namespace nclorentz
