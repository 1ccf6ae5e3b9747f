#include "weierforge/holo.hpp"

#include <algorithm>

#include "weierforge/error.hpp"

namespace weierforge {

namespace {

bool is_constant_function(const HoloFunction& f) {
  const auto& t = f.terms();
  return t.empty() || (t.size() == 1 && t[0].coeff.is_constant() && t[0].exponent.is_zero());
}

cplx constant_value(const HoloFunction& f) {
  return f.terms().empty() ? cplx{} : f.terms()[0].coeff.coeff(0);
}

}  // namespace

HoloFunction::HoloFunction(Laurent coeff, Frame frame) : frame_(frame) {
  terms_.push_back({std::move(coeff), Laurent{}});
  normalize();
}

HoloFunction::HoloFunction(std::vector<Term> terms, Frame frame)
    : frame_(frame), terms_(std::move(terms)) {
  if (frame_.scale <= 0.0) throw Error(ErrorKind::InvalidArgument, "frame scale must be positive");
  normalize();
}

HoloFunction HoloFunction::constant(cplx a, Frame frame) { return HoloFunction(Laurent::constant(a), frame); }

HoloFunction HoloFunction::identity(Frame frame) {
  // z = c + s w
  return HoloFunction(Laurent(0, {frame.center, cplx(frame.scale)}), frame);
}

HoloFunction HoloFunction::laurent_about(cplx center, const std::map<int, cplx>& coeffs) {
  return HoloFunction(Laurent(coeffs), Frame{center, 1.0});
}

HoloFunction HoloFunction::exp_of(const Laurent& exponent, Frame frame) {
  return HoloFunction(std::vector<Term>{{Laurent::constant(1.0), exponent}}, frame);
}

void HoloFunction::normalize() {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    const cplx c0 = t.exponent.coeff(0);
    if (c0 != cplx{}) {
      t.coeff *= std::exp(c0);
      t.exponent = t.exponent.without_constant();
    }
    if (t.coeff.is_zero()) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const Term& o) { return o.exponent == t.exponent; });
    if (it != out.end()) {
      it->coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff.is_zero(); }), out.end());
  terms_ = std::move(out);
}

bool HoloFunction::is_laurent() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool HoloFunction::is_polynomial() const {
  for (const auto& t : terms_)
    if (t.coeff.has_negative_powers() || !t.exponent.is_zero()) return false;
  return true;
}

const Laurent& HoloFunction::laurent() const {
  static const Laurent zero;
  if (!is_laurent()) throw Error(ErrorKind::InvalidArgument, "function carries exponential factors");
  return terms_.empty() ? zero : terms_[0].coeff;
}

bool HoloFunction::singular_at_center() const {
  for (const auto& t : terms_)
    if (t.coeff.has_negative_powers() || t.exponent.has_negative_powers()) return true;
  return false;
}

Divisor HoloFunction::pole_divisor() const {
  if (!singular_at_center()) return {};
  int order = 0;
  for (const auto& t : terms_) order = std::max(order, t.coeff.pole_order());
  return Divisor({{frame_.center, std::max(order, 1)}});
}

std::vector<cplx> HoloFunction::singular_points() const {
  if (singular_at_center()) return {frame_.center};
  return {};
}

cplx HoloFunction::eval_unchecked(cplx z) const {
  const cplx w = frame_.to_local(z);
  cplx v{};
  for (const auto& t : terms_) {
    const cplx p = t.coeff.eval(w);
    v += t.exponent.is_zero() ? p : p * std::exp(t.exponent.eval(w));
  }
  return v;
}

cplx HoloFunction::eval(cplx z) const {
  if (singular_at_center() && std::abs(frame_.to_local(z)) < pole_tolerance)
    throw Error(ErrorKind::PoleHit, "evaluation at the pole of a function");
  return eval_unchecked(z);
}

void HoloFunction::eval_with_derivative(cplx z, cplx& value, cplx& deriv) const {
  const cplx w = frame_.to_local(z);
  if (singular_at_center() && std::abs(w) < pole_tolerance)
    throw Error(ErrorKind::PoleHit, "evaluation at the pole of a function");
  value = deriv = cplx{};
  for (const auto& t : terms_) {
    cplx p, dp;
    t.coeff.eval_with_derivative(w, p, dp);
    if (t.exponent.is_zero()) {
      value += p;
      deriv += dp;
    } else {
      cplx e, de;
      t.exponent.eval_with_derivative(w, e, de);
      const cplx ex = std::exp(e);
      value += p * ex;
      deriv += (dp + p * de) * ex;
    }
  }
  deriv /= frame_.scale;
}

HoloFunction HoloFunction::derivative() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  const cplx inv_s = 1.0 / frame_.scale;
  for (const auto& t : terms_) {
    Laurent d = t.coeff.derivative() + t.coeff * t.exponent.derivative();
    out.push_back({inv_s * d, t.exponent});
  }
  return HoloFunction(std::move(out), frame_);
}

HoloFunction HoloFunction::in_frame(const Frame& target) const {
  if (target == frame_) return *this;
  if (is_constant_function(*this)) return constant(constant_value(*this), target);
  // w_old = a + b w_new
  const cplx a = (target.center - frame_.center) / frame_.scale;
  const cplx b = target.scale / frame_.scale;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.coeff.has_negative_powers() || t.exponent.has_negative_powers())
      throw Error(ErrorKind::InvalidArgument, "cannot move a singular function to another frame exactly");
    out.push_back({t.coeff.compose_affine(a, b), t.exponent.compose_affine(a, b)});
  }
  return HoloFunction(std::move(out), target);
}

bool HoloFunction::has_exact_reciprocal() const {
  return terms_.size() == 1 && terms_[0].coeff.is_monomial();
}

HoloFunction HoloFunction::reciprocal() const {
  if (!has_exact_reciprocal())
    throw Error(ErrorKind::RepresentationOverflow, "reciprocal is not exactly representable; refit instead");
  const auto& t = terms_[0];
  const int k = t.coeff.lowest();
  return HoloFunction(std::vector<Term>{{Laurent::monomial(-k, 1.0 / t.coeff.coeff(k)), -t.exponent}}, frame_);
}

HoloFunction HoloFunction::aligned(const HoloFunction& o) const {
  if (o.frame_ == frame_) return o;
  return o.in_frame(frame_);
}

namespace {

bool movable(const HoloFunction& f) {
  for (const auto& t : f.terms())
    if (t.coeff.has_negative_powers() || t.exponent.has_negative_powers()) return false;
  return true;
}

}  // namespace

HoloFunction& HoloFunction::operator+=(const HoloFunction& o) {
  if (o.is_zero()) return *this;
  // Work in the frame of whichever side cannot be re-expanded.
  if (frame_ != o.frame_ && movable(*this) && !movable(o)) {
    HoloFunction sum = o;
    sum += *this;
    return *this = std::move(sum);
  }
  const HoloFunction b = aligned(o);
  terms_.insert(terms_.end(), b.terms_.begin(), b.terms_.end());
  normalize();
  return *this;
}

HoloFunction& HoloFunction::operator-=(const HoloFunction& o) { return *this += (-1.0) * o; }

HoloFunction& HoloFunction::operator*=(cplx s) {
  for (auto& t : terms_) t.coeff *= s;
  normalize();
  return *this;
}

HoloFunction operator*(const HoloFunction& a, const HoloFunction& b) {
  if (a.frame_ != b.frame_ && is_constant_function(a)) return constant_value(a) * b;
  if (a.frame_ != b.frame_ && movable(a) && !movable(b)) return b * a;
  const HoloFunction bb = a.aligned(b);
  std::vector<HoloFunction::Term> out;
  out.reserve(a.terms_.size() * bb.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : bb.terms_) out.push_back({s.coeff * t.coeff, s.exponent + t.exponent});
  return HoloFunction(std::move(out), a.frame_);
}

HoloFunction HoloFunction::times_exp(const Laurent& exponent) const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exponent += exponent;
  return HoloFunction(std::move(out), frame_);
}

}  // namespace weierforge
