#pragma once

#include <vector>

#include "weierforge/laurent.hpp"
#include "weierforge/types.hpp"

namespace weierforge {

// Finite formal sum of points with nonzero integer multiplicities.
class Divisor {
 public:
  struct Entry {
    cplx point;
    int multiplicity;
  };

  Divisor() = default;
  // Entries at coincident points are merged; zero multiplicities dropped.
  explicit Divisor(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int degree() const;
  bool is_integral() const;
  // Multiplicity of the entry within tol of p (exact match by default).
  int multiplicity_at(cplx p, double tol = 0.0) const;

  // Additive notation for the multiplicative group: D1 + D2 is D1*D2.
  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a);
  friend Divisor operator-(const Divisor& a, const Divisor& b) { return a + (-b); }
  // D1 >= D2 iff D1 * D2^{-1} is integral.
  friend bool operator>=(const Divisor& a, const Divisor& b) { return (a - b).is_integral(); }

  // Monic polynomial prod (z - p)^m for an integral divisor, as a polynomial
  // in the global coordinate z.
  Laurent monic_polynomial() const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace weierforge
