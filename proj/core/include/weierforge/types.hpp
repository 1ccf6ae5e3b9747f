#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace weierforge {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Point (or vector) in R^3.
struct Vec3 {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  constexpr Vec3() = default;
  constexpr Vec3(double x1, double x2, double x3) : v{x1, x2, x3} {}

  constexpr double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
  constexpr double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
  }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) {
    for (int i = 0; i < 3; ++i) a[i] -= b[i];
    return a;
  }
  friend constexpr Vec3 operator*(double s, Vec3 a) {
    for (int i = 0; i < 3; ++i) a[i] *= s;
    return a;
  }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

inline double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Point in C^3; also the value type of a triple of 1-forms at a point.
struct CVec3 {
  std::array<cplx, 3> c{};

  constexpr CVec3() = default;
  constexpr CVec3(cplx a, cplx b, cplx d) : c{a, b, d} {}

  cplx& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  const cplx& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  friend CVec3 operator+(CVec3 a, const CVec3& b) {
    for (int i = 0; i < 3; ++i) a[i] += b[i];
    return a;
  }
  friend CVec3 operator-(CVec3 a, const CVec3& b) {
    for (int i = 0; i < 3; ++i) a[i] -= b[i];
    return a;
  }
  friend CVec3 operator*(cplx s, CVec3 a) {
    for (int i = 0; i < 3; ++i) a[i] *= s;
    return a;
  }
  friend CVec3 operator*(double s, CVec3 a) { return cplx(s) * a; }
  friend CVec3 operator*(CVec3 a, cplx s) { return s * a; }

  Vec3 real() const { return {c[0].real(), c[1].real(), c[2].real()}; }
  Vec3 imag() const { return {c[0].imag(), c[1].imag(), c[2].imag()}; }
};

inline double abs_sum(const CVec3& a) { return std::abs(a[0]) + std::abs(a[1]) + std::abs(a[2]); }

}  // namespace weierforge
