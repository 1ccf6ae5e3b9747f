#include "weierforge/laurent.hpp"

#include <algorithm>

#include "weierforge/error.hpp"

namespace weierforge {

Laurent::Laurent(int lowest, std::vector<cplx> coeffs) : lo_(lowest), coeffs_(std::move(coeffs)) {
  trim();
}

Laurent::Laurent(const std::map<int, cplx>& coeffs) {
  if (coeffs.empty()) return;
  lo_ = coeffs.begin()->first;
  const int hi = coeffs.rbegin()->first;
  coeffs_.assign(static_cast<std::size_t>(hi - lo_ + 1), cplx{});
  for (const auto& [k, a] : coeffs) coeffs_[static_cast<std::size_t>(k - lo_)] = a;
  trim();
}

void Laurent::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == cplx{}) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    lo_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == cplx{}) --last;
  coeffs_ = std::vector<cplx>(coeffs_.begin() + static_cast<std::ptrdiff_t>(first),
                              coeffs_.begin() + static_cast<std::ptrdiff_t>(last));
  lo_ += static_cast<int>(first);
}

cplx Laurent::coeff(int k) const {
  if (is_zero() || k < lo_ || k > highest()) return {};
  return coeffs_[static_cast<std::size_t>(k - lo_)];
}

cplx Laurent::eval(cplx w) const {
  cplx v, d;
  eval_with_derivative(w, v, d);
  return v;
}

void Laurent::eval_with_derivative(cplx w, cplx& value, cplx& deriv) const {
  value = deriv = cplx{};
  if (is_zero()) return;
  const int hi = highest();
  // Nonnegative part by Horner.
  if (hi >= 0) {
    cplx p{}, dp{};
    for (int k = hi; k >= std::max(lo_, 0); --k) {
      dp = dp * w + p;
      p = p * w + coeff(k);
    }
    if (lo_ > 0) {
      // p currently holds sum a_k w^(k - lo) for k >= lo; shift.
      const cplx wl = std::pow(w, lo_);
      const cplx dwl = static_cast<double>(lo_) * std::pow(w, lo_ - 1);
      value = p * wl;
      deriv = dp * wl + p * dwl;
      return;
    }
    value = p;
    deriv = dp;
  }
  // Negative part sum_{k<0} a_k w^k as a polynomial in u = 1/w.
  if (lo_ < 0) {
    const cplx u = 1.0 / w;
    cplx q{}, dq{};
    for (int k = lo_; k <= std::min(-1, hi); ++k) {
      // Horner in u over exponents -k descending: start from most negative.
      dq = dq * u + q;
      q = q * u + coeff(k);
    }
    // q = sum a_k u^(-k - m) with m = -min(-1,hi); rescale to u^(-k).
    const int m = -std::min(-1, hi);
    const cplx um = std::pow(u, m);
    const cplx qv = q * um;
    const cplx dq_du = dq * um + q * (static_cast<double>(m) * std::pow(u, m - 1));
    value += qv;
    deriv += dq_du * (-u * u);
  }
}

Laurent Laurent::derivative() const {
  if (is_zero()) return {};
  std::vector<cplx> d(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int k = lo_ + static_cast<int>(i);
    d[i] = static_cast<double>(k) * coeffs_[i];
  }
  return Laurent(lo_ - 1, std::move(d));
}

Laurent Laurent::without_constant() const {
  Laurent out = *this;
  if (!is_zero() && lo_ <= 0 && highest() >= 0) {
    out.coeffs_[static_cast<std::size_t>(-lo_)] = cplx{};
    out.trim();
  }
  return out;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(lo_, o.lo_);
  const int hi = std::max(highest(), o.highest());
  std::vector<cplx> c(static_cast<std::size_t>(hi - lo + 1), cplx{});
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(lo_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[static_cast<std::size_t>(o.lo_ - lo) + i] += o.coeffs_[i];
  lo_ = lo;
  coeffs_ = std::move(c);
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += (-1.0) * o; }

Laurent& Laurent::operator*=(cplx s) {
  for (auto& a : coeffs_) a *= s;
  trim();
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> c(a.coeffs_.size() + b.coeffs_.size() - 1, cplx{});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Laurent(a.lo_ + b.lo_, std::move(c));
}

Laurent Laurent::compose_affine(cplx a, cplx b) const {
  if (has_negative_powers())
    throw Error(ErrorKind::InvalidArgument, "affine recentering of a Laurent polynomial with a pole");
  if (is_zero()) return {};
  // Horner with polynomial arithmetic: p(a + b w).
  const Laurent lin(0, {a, b});
  Laurent acc;
  for (int k = highest(); k >= 0; --k) acc = acc * lin + Laurent::constant(coeff(k));
  return acc;
}

double Laurent::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& a : coeffs_) m = std::max(m, std::abs(a));
  return m;
}

}  // namespace weierforge
