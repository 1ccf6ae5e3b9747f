#pragma once

#include <functional>
#include <vector>

#include "weierforge/compact_set.hpp"
#include "weierforge/holo.hpp"

namespace weierforge {

struct FitResult {
  Laurent coeffs;           // in the frame passed to the fit
  double sup_error = 0.0;   // max |fit - value| over the samples
  double sup_value = 0.0;   // max |value| over the samples
};

// Least squares for sum_{k=lo..hi} a_k w^k against samples, w = frame-local
// coordinate. Columns are scaled to unit sup norm before the solve.
FitResult fit_laurent(const std::vector<cplx>& z, const std::vector<cplx>& values, const Frame& frame, int lo,
                      int hi);

// Refit f on the boundary of K to the Laurent range [lo, hi] in K's frame
// (or `frame` if given). Refuses with RefitFailure when the sampled error
// exceeds rel_tol * sup |f|.
HoloFunction refit(const std::function<cplx(cplx)>& f, const CompactSet& K, int lo, int hi,
                   double rel_tol = 1e-9, const Frame* frame = nullptr, FitResult* report = nullptr);

}  // namespace weierforge
