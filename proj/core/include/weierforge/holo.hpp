#pragma once

#include <map>
#include <vector>

#include "weierforge/divisor.hpp"
#include "weierforge/laurent.hpp"
#include "weierforge/types.hpp"

namespace weierforge {

// Affine chart w = (z - center) / scale in which coefficients are stored.
struct Frame {
  cplx center{0.0, 0.0};
  double scale = 1.0;

  cplx to_local(cplx z) const { return (z - center) / scale; }
  cplx to_global(cplx w) const { return center + scale * w; }
  friend bool operator==(const Frame&, const Frame&) = default;
};

// A finitely represented holomorphic function on a planar domain:
//
//   f(z) = sum_i  P_i(w) * exp(E_i(w)),   w = (z - c) / s,
//
// with P_i, E_i Laurent polynomials in a shared frame. The only possible
// singularity is the frame center (a pole when every E_i is a polynomial).
// Plain Laurent data has a single term with E = 0. Terms are kept with
// pairwise distinct exponents whose constant part has been folded into P_i,
// so sums, products and derivatives stay exactly representable.
class HoloFunction {
 public:
  struct Term {
    Laurent coeff;
    Laurent exponent;
  };

  HoloFunction() = default;
  explicit HoloFunction(Laurent coeff, Frame frame = {});
  HoloFunction(std::vector<Term> terms, Frame frame);

  static HoloFunction constant(cplx a, Frame frame = {});
  // z itself (expressed in the given frame).
  static HoloFunction identity(Frame frame = {});
  // Laurent polynomial in the global coordinate about `center`:
  // sum a_k (z - center)^k.
  static HoloFunction laurent_about(cplx center, const std::map<int, cplx>& coeffs);
  // exp(E(w)) as a single term.
  static HoloFunction exp_of(const Laurent& exponent, Frame frame = {});

  const Frame& frame() const { return frame_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // True when f is a plain Laurent polynomial (no exp factors).
  bool is_laurent() const;
  bool is_polynomial() const;
  // The plain Laurent coefficients; throws InvalidArgument if !is_laurent().
  const Laurent& laurent() const;

  // Singular at the frame center?
  bool singular_at_center() const;
  // Polar divisor: the center with the largest pole order among the
  // coefficients. An essential singularity (exp of a negative power) is
  // reported with order at least 1; it only matters for clearance checks.
  Divisor pole_divisor() const;
  std::vector<cplx> singular_points() const;

  // Throws PoleHit when z is within pole_tolerance * scale of a singularity.
  cplx eval(cplx z) const;
  void eval_with_derivative(cplx z, cplx& value, cplx& deriv) const;
  // Evaluation without the pole guard; callers have already checked clearance.
  cplx eval_unchecked(cplx z) const;

  HoloFunction derivative() const;

  // Same function expressed in another frame. Exact for polynomial data
  // (binomial re-expansion); throws InvalidArgument otherwise.
  HoloFunction in_frame(const Frame& target) const;

  // Multiplicative inverse when f is a single term with monomial coefficient.
  // Other reciprocals need a refit (see refit.hpp).
  bool has_exact_reciprocal() const;
  HoloFunction reciprocal() const;

  HoloFunction& operator+=(const HoloFunction& o);
  HoloFunction& operator-=(const HoloFunction& o);
  HoloFunction& operator*=(cplx s);

  friend HoloFunction operator+(HoloFunction a, const HoloFunction& b) { return a += b; }
  friend HoloFunction operator-(HoloFunction a, const HoloFunction& b) { return a -= b; }
  friend HoloFunction operator-(HoloFunction a) { return a *= -1.0; }
  friend HoloFunction operator*(cplx s, HoloFunction a) { return a *= s; }
  friend HoloFunction operator*(const HoloFunction& a, const HoloFunction& b);

  // Multiply by exp(E) termwise (exact).
  HoloFunction times_exp(const Laurent& exponent) const;

  static constexpr double pole_tolerance = 1e-12;

 private:
  void normalize();
  HoloFunction aligned(const HoloFunction& o) const;

  Frame frame_{};
  std::vector<Term> terms_;
};

// A holomorphic 1-form f(z) dz on a planar domain, stored by its density.
struct OneForm {
  HoloFunction density;

  OneForm() = default;
  explicit OneForm(HoloFunction f) : density(std::move(f)) {}

  cplx eval(cplx z) const { return density.eval(z); }
};

}  // namespace weierforge
