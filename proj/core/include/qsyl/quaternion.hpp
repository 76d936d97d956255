#pragma once

#include <cmath>
#include <ostream>

namespace qsyl {

// a0 + a1 i + a2 j + a3 k
struct Quaternion {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r) : a0(r) {}
  constexpr Quaternion(double w, double x, double y, double z) : a0(w), a1(x), a2(y), a3(z) {}

  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  constexpr Quaternion conj() const { return {a0, -a1, -a2, -a3}; }
  constexpr double norm2() const { return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Quaternion operator-() const { return {-a0, -a1, -a2, -a3}; }
  constexpr Quaternion& operator+=(const Quaternion& q) {
    a0 += q.a0; a1 += q.a1; a2 += q.a2; a3 += q.a3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& q) {
    a0 -= q.a0; a1 -= q.a1; a2 -= q.a2; a3 -= q.a3;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }

// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a0 * q.a0 - p.a1 * q.a1 - p.a2 * q.a2 - p.a3 * q.a3,
          p.a0 * q.a1 + p.a1 * q.a0 + p.a2 * q.a3 - p.a3 * q.a2,
          p.a0 * q.a2 - p.a1 * q.a3 + p.a2 * q.a0 + p.a3 * q.a1,
          p.a0 * q.a3 + p.a1 * q.a2 - p.a2 * q.a1 + p.a3 * q.a0};
}

constexpr Quaternion qmul(const Quaternion& p, const Quaternion& q) { return p * q; }

inline Quaternion inverse(const Quaternion& q) {
  const double n2 = q.norm2();
  const Quaternion c = q.conj();
  return {c.a0 / n2, c.a1 / n2, c.a2 / n2, c.a3 / n2};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qsyl
