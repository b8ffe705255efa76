#include "nclorentz/algebra.hpp"

#include <algorithm>

#include "nclorentz/error.hpp"

namespace nclorentz {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorCode::ZeroK: return "ZeroK";
    case ErrorCode::KindMismatch: return "KindMismatch";
    case ErrorCode::NotNonIsotropic: return "NotNonIsotropic";
    case ErrorCode::NotIsotropic: return "NotIsotropic";
    case ErrorCode::InconsistentInput: return "InconsistentInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

double max_abs(const Vec3& a) { return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)}); }

double hnorm(const CVector3& a) { return std::sqrt(std::norm(a.x) + std::norm(a.y) + std::norm(a.z)); }

double max_abs(const CVector3& a) { return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)}); }

bool is_finite(const CVector3& a) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (!std::isfinite(a[i].real()) || !std::isfinite(a[i].imag())) return false;
  }
  return true;
}

Biquaternion Biquaternion::basis(std::size_t i) {
  Biquaternion q;
  q[i] = 1.0;
  return q;
}

double max_abs(const Biquaternion& q) { return std::max(std::abs(q.s), max_abs(q.v)); }

double hnorm(const Biquaternion& q) { return std::sqrt(std::norm(q.s) + std::norm(q.v.x) + std::norm(q.v.y) + std::norm(q.v.z)); }

bool is_finite(const Biquaternion& q) {
  return std::isfinite(q.s.real()) && std::isfinite(q.s.imag()) && is_finite(q.v);
}

std::ostream& operator<<(std::ostream& os, const Vec3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

std::ostream& operator<<(std::ostream& os, const CVector3& v) {
  return os << '(' << v.x << ", " << v.y << ", " << v.z << ')';
}

std::ostream& operator<<(std::ostream& os, const Biquaternion& q) {
  return os << '[' << q.s << "; " << q.v << ']';
}

}  // namespace nclorentz
