#pragma once

// Biquaternion (complex quaternion) arithmetic.
//
// A biquaternion is q = q0 e0 + qa ea with complex components and the basis
// rule  ea eb = -delta_ab e0 + eps_abc ec.  Dot and cross products of complex
// 3-vectors are the bilinear extensions (no conjugation), which is what makes
// the algebra covariant under SO(3,C).

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <ostream>

namespace nclorentz {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Real Euclidean 3-vector (fields E, B, D, H and the parameters epsilon, theta).
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr double& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  constexpr Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  constexpr Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  constexpr Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
double max_abs(const Vec3& a);

/// Complex 3-vector; the vector part of a biquaternion.
struct CVector3 {
  Complex x, y, z;

  constexpr CVector3() = default;
  constexpr CVector3(Complex x_, Complex y_, Complex z_) : x(x_), y(y_), z(z_) {}
  constexpr CVector3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}  // NOLINT: real embedding

  constexpr Complex& operator[](std::size_t i) { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr const Complex& operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }

  CVector3& operator+=(const CVector3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  CVector3& operator-=(const CVector3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  CVector3& operator*=(Complex s) { x *= s; y *= s; z *= s; return *this; }

  friend CVector3 operator+(CVector3 a, const CVector3& b) { return a += b; }
  friend CVector3 operator-(CVector3 a, const CVector3& b) { return a -= b; }
  friend CVector3 operator-(const CVector3& a) { return {-a.x, -a.y, -a.z}; }
  friend CVector3 operator*(Complex s, CVector3 a) { return a *= s; }
  friend CVector3 operator*(CVector3 a, Complex s) { return a *= s; }
  friend CVector3 operator*(double s, CVector3 a) { return a *= Complex(s); }
  friend CVector3 operator/(CVector3 a, Complex s) { return a *= (1.0 / s); }
  friend bool operator==(const CVector3&, const CVector3&) = default;
};

/// Complex-bilinear dot product a.b (no conjugation).
inline Complex dot(const CVector3& a, const CVector3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
/// Complex-bilinear cross product.
inline CVector3 cross(const CVector3& a, const CVector3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
/// Componentwise complex conjugate.
inline CVector3 conj(const CVector3& a) { return {std::conj(a.x), std::conj(a.y), std::conj(a.z)}; }
inline Vec3 real(const CVector3& a) { return {a.x.real(), a.y.real(), a.z.real()}; }
inline Vec3 imag(const CVector3& a) { return {a.x.imag(), a.y.imag(), a.z.imag()}; }
/// Hermitian length sqrt(sum |a_i|^2); a size measure, not an invariant.
double hnorm(const CVector3& a);
/// Largest component modulus.
double max_abs(const CVector3& a);
bool is_finite(const CVector3& a);

/// Complex quaternion q = s e0 + v.e
struct Biquaternion {
  Complex s;
  CVector3 v;

  constexpr Biquaternion() = default;
  constexpr Biquaternion(Complex s_, const CVector3& v_) : s(s_), v(v_) {}

  static constexpr Biquaternion scalar(Complex s) { return {s, {}}; }
  static constexpr Biquaternion vector(const CVector3& v) { return {Complex{}, v}; }
  static constexpr Biquaternion one() { return scalar(1.0); }
  /// Basis element e_i, i in 0..3.
  static Biquaternion basis(std::size_t i);

  /// Component q_i in the basis {e0, e1, e2, e3}.
  const Complex& operator[](std::size_t i) const { return i == 0 ? s : v[i - 1]; }
  Complex& operator[](std::size_t i) { return i == 0 ? s : v[i - 1]; }

  Biquaternion& operator+=(const Biquaternion& o) { s += o.s; v += o.v; return *this; }
  Biquaternion& operator-=(const Biquaternion& o) { s -= o.s; v -= o.v; return *this; }
  Biquaternion& operator*=(Complex c) { s *= c; v *= c; return *this; }

  friend Biquaternion operator+(Biquaternion a, const Biquaternion& b) { return a += b; }
  friend Biquaternion operator-(Biquaternion a, const Biquaternion& b) { return a -= b; }
  friend Biquaternion operator-(const Biquaternion& a) { return {-a.s, -a.v}; }
  friend Biquaternion operator*(Complex c, Biquaternion a) { return a *= c; }
  friend Biquaternion operator*(Biquaternion a, Complex c) { return a *= c; }
  friend bool operator==(const Biquaternion&, const Biquaternion&) = default;
};

/// Quaternion product  qp = (q0 p0 - q.p) e0 + (q0 p + p0 q + q x p).e
inline Biquaternion mul(const Biquaternion& q, const Biquaternion& p) {
  return {q.s * p.s - dot(q.v, p.v), q.s * p.v + p.s * q.v + cross(q.v, p.v)};
}
inline Biquaternion operator*(const Biquaternion& q, const Biquaternion& p) { return mul(q, p); }

/// Quaternion conjugation, q-bar = q0 - q. Reverses products.
inline Biquaternion conj_quat(const Biquaternion& q) { return {q.s, -q.v}; }

/// Complex conjugation in the convention q* = q0* - q*: every component is
/// conjugated and the vector part negated. This is the Hermitian adjoint in
/// the matrix realization ea = -i sigma_a, hence also product-reversing.
inline Biquaternion conj_complex(const Biquaternion& q) { return {std::conj(q.s), -conj(q.v)}; }

/// Plain componentwise conjugation (no vector negation); a homomorphism.
inline Biquaternion conj_components(const Biquaternion& q) { return {std::conj(q.s), conj(q.v)}; }

/// q0^2 + q.q, the complex-bilinear quaternion square q q-bar. Not positive.
inline Complex norm(const Biquaternion& q) { return q.s * q.s + dot(q.v, q.v); }

inline Complex scalar_part(const Biquaternion& q) { return q.s; }
inline CVector3 vector_part(const Biquaternion& q) { return q.v; }

/// e0-component of the product of two pure-vector quaternions, i.e. -(a.b).
inline Complex sym_scalar(const CVector3& a, const CVector3& b) { return -dot(a, b); }

/// Largest component modulus over the four components.
double max_abs(const Biquaternion& q);
/// Hermitian size sqrt(sum |q_i|^2).
double hnorm(const Biquaternion& q);
bool is_finite(const Biquaternion& q);

std::ostream& operator<<(std::ostream& os, const Vec3& v);
std::ostream& operator<<(std::ostream& os, const CVector3& v);
std::ostream& operator<<(std::ostream& os, const Biquaternion& q);

}  // namespace nclorentz
