#pragma once

#include <map>
#include <vector>

#include "weierforge/types.hpp"

namespace weierforge {

// Finite Laurent polynomial sum_{k=lo}^{hi} a_k w^k with dense storage.
// Trailing and leading exact zeros are trimmed so equality is structural.
class Laurent {
 public:
  Laurent() = default;
  Laurent(int lowest, std::vector<cplx> coeffs);
  explicit Laurent(const std::map<int, cplx>& coeffs);

  static Laurent constant(cplx a) { return Laurent(0, {a}); }
  static Laurent monomial(int k, cplx a = 1.0) { return Laurent(k, {a}); }

  bool is_zero() const { return coeffs_.empty(); }
  int lowest() const { return lo_; }
  int highest() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx coeff(int k) const;

  bool has_negative_powers() const { return !is_zero() && lo_ < 0; }
  bool is_constant() const { return is_zero() || (lo_ == 0 && coeffs_.size() == 1); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  // Order of the pole at w = 0 (0 if none).
  int pole_order() const { return has_negative_powers() ? -lo_ : 0; }

  cplx eval(cplx w) const;
  // Value and first derivative in one pass.
  void eval_with_derivative(cplx w, cplx& value, cplx& deriv) const;

  Laurent derivative() const;
  // Sum without the constant coefficient; the split form used by exp factors.
  Laurent without_constant() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(cplx s);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator-(Laurent a) { return a *= -1.0; }
  friend Laurent operator*(cplx s, Laurent a) { return a *= s; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.lo_ == b.lo_ && a.coeffs_ == b.coeffs_;
  }

  // Composition p(a + b w) for a polynomial p (no negative powers).
  Laurent compose_affine(cplx a, cplx b) const;

  double max_abs_coeff() const;

 private:
  void trim();

  int lo_ = 0;
  std::vector<cplx> coeffs_;
};

}  // namespace weierforge
