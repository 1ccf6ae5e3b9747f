#include "weierforge/divisor.hpp"

#include <algorithm>

namespace weierforge {

Divisor::Divisor(std::vector<Entry> entries) {
  for (const auto& e : entries) {
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& o) { return o.point == e.point; });
    if (it != entries_.end()) {
      it->multiplicity += e.multiplicity;
    } else {
      entries_.push_back(e);
    }
  }
  entries_.erase(std::remove_if(entries_.begin(), entries_.end(), [](const Entry& e) { return e.multiplicity == 0; }),
                 entries_.end());
}

int Divisor::degree() const {
  int d = 0;
  for (const auto& e : entries_) d += e.multiplicity;
  return d;
}

bool Divisor::is_integral() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.multiplicity > 0; });
}

int Divisor::multiplicity_at(cplx p, double tol) const {
  for (const auto& e : entries_)
    if (std::abs(e.point - p) <= tol) return e.multiplicity;
  return 0;
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  std::vector<Divisor::Entry> all = a.entries_;
  all.insert(all.end(), b.entries_.begin(), b.entries_.end());
  return Divisor(std::move(all));
}

Divisor operator-(const Divisor& a) {
  std::vector<Divisor::Entry> neg = a.entries_;
  for (auto& e : neg) e.multiplicity = -e.multiplicity;
  return Divisor(std::move(neg));
}

Laurent Divisor::monic_polynomial() const {
  Laurent p = Laurent::constant(1.0);
  for (const auto& e : entries_) {
    const Laurent factor(0, {-e.point, cplx(1.0)});
    for (int m = 0; m < e.multiplicity; ++m) p = p * factor;
  }
  return p;
}

}  // namespace weierforge
