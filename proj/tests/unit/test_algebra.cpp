#include <doctest.h>

#include "../test_support.hpp"

using namespace nclorentz;
using nctest::Rng;

TEST_CASE("basis products") {
  const Biquaternion e1 = Biquaternion::basis(1), e2 = Biquaternion::basis(2), e3 = Biquaternion::basis(3);
  CHECK(e1 * e2 == e3);
  CHECK(e2 * e3 == e1);
  CHECK(e3 * e1 == e2);
  CHECK(e2 * e1 == -e3);
  for (std::size_t a = 1; a < 4; ++a) CHECK(Biquaternion::basis(a) * Biquaternion::basis(a) == -Biquaternion::one());
  Rng rng;
  const Biquaternion q = rng.quat();
  CHECK(Biquaternion::one() * q == q);
  CHECK(q * Biquaternion::one() == q);
}

TEST_CASE("mul agrees with structure constants") {
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const Biquaternion q = rng.quat(), p = rng.quat();
    CHECK(nctest::rel_err(q * p, nctest::structure_constant_mul(q, p)) <= 1e-13);
  }
}

TEST_CASE("conjugations") {
  const Biquaternion e1 = Biquaternion::basis(1);
  CHECK(conj_quat(Biquaternion::one()) == Biquaternion::one());
  CHECK(conj_quat(e1) == -e1);
  CHECK(conj_complex(kI * e1) == kI * e1);

  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Biquaternion q = rng.quat(), p = rng.quat();
    CHECK(max_abs(conj_quat(q * p) - conj_quat(p) * conj_quat(q)) <= 1e-14);
    CHECK(conj_complex(conj_complex(q)) == q);
    CHECK(max_abs(conj_complex(q * p) - conj_complex(p) * conj_complex(q)) <= 1e-14);
    CHECK(max_abs(conj_components(q * p) - conj_components(q) * conj_components(p)) <= 1e-14);
  }
  Biquaternion real{0.3, CVector3(Vec3{1.0, -2.0, 0.5})};
  CHECK(conj_complex(real) == conj_quat(real));
}

TEST_CASE("norm") {
  CHECK(norm(Biquaternion::one()) == Complex(1.0));
  CHECK(std::abs(norm(Biquaternion::vector({1.0, kI, 0.0}))) == 0.0);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const Biquaternion q = rng.quat(), p = rng.quat();
    const Biquaternion qq = q * conj_quat(q);
    CHECK(std::abs(qq.s - norm(q)) <= 1e-14);
    CHECK(max_abs(qq.v) <= 1e-14 * std::max(1.0, hnorm(q) * hnorm(q)));
    const Complex lhs = norm(q * p), rhs = norm(q) * norm(p);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("sym_scalar") {
  CHECK(sym_scalar(Vec3{1, 0, 0}, Vec3{1, 0, 0}) == Complex(-1.0));
  CHECK(sym_scalar(Vec3{1, 0, 0}, Vec3{0, 1, 0}) == Complex(0.0));
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const CVector3 a = rng.cvec(), b = rng.cvec();
    CHECK(sym_scalar(a, b) == sym_scalar(b, a));
    CHECK(std::abs(sym_scalar(a, b) - scalar_part(Biquaternion::vector(a) * Biquaternion::vector(b))) <= 1e-15);
  }
}

TEST_CASE("associativity and similarity invariance") {
  Rng rng(9);
  for (int t = 0; t < 200; ++t) {
    const Biquaternion q = rng.quat(), p = rng.quat(), r = rng.quat();
    CHECK(nctest::rel_err((q * p) * r, q * (p * r)) <= 1e-13);
    const LorentzElement L = rng.element();
    const Biquaternion s = L.quat() * q * conj_quat(L.quat());
    CHECK(std::abs(s.s - q.s) <= 1e-13 * std::max(1.0, hnorm(L.quat()) * hnorm(L.quat())));
  }
}
