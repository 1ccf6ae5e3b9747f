#include "weierforge/refit.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "weierforge/error.hpp"

namespace weierforge {

FitResult fit_laurent(const std::vector<cplx>& z, const std::vector<cplx>& values, const Frame& frame, int lo,
                      int hi) {
  if (hi < lo || z.size() != values.size())
    throw Error(ErrorKind::InvalidArgument, "fit_laurent: bad range or sample sizes");
  const int ncol = hi - lo + 1;
  const int nrow = static_cast<int>(z.size());
  if (nrow < ncol) throw Error(ErrorKind::InvalidArgument, "fit_laurent: fewer samples than unknowns");

  Eigen::MatrixXcd A(nrow, ncol);
  Eigen::VectorXcd b(nrow);
  for (int i = 0; i < nrow; ++i) {
    const cplx w = frame.to_local(z[static_cast<std::size_t>(i)]);
    for (int k = lo; k <= hi; ++k) A(i, k - lo) = std::pow(w, k);
    b(i) = values[static_cast<std::size_t>(i)];
  }
  Eigen::VectorXd colscale(ncol);
  for (int j = 0; j < ncol; ++j) {
    const double m = A.col(j).cwiseAbs().maxCoeff();
    colscale(j) = m > 0.0 ? m : 1.0;
    A.col(j) /= colscale(j);
  }
  const Eigen::VectorXcd x = A.colPivHouseholderQr().solve(b);
  const Eigen::VectorXcd r = A * x - b;

  std::vector<cplx> c(static_cast<std::size_t>(ncol));
  for (int j = 0; j < ncol; ++j) c[static_cast<std::size_t>(j)] = x(j) / colscale(j);
  FitResult out;
  out.coeffs = Laurent(lo, std::move(c));
  out.sup_error = r.cwiseAbs().maxCoeff();
  out.sup_value = b.cwiseAbs().maxCoeff();
  return out;
}

HoloFunction refit(const std::function<cplx(cplx)>& f, const CompactSet& K, int lo, int hi, double rel_tol,
                   const Frame* frame, FitResult* report) {
  const Frame fr = frame ? *frame : K.frame();
  auto pts = K.boundary_points();
  // Oversample so the sampled error means something between nodes.
  const std::size_t need = static_cast<std::size_t>(4 * (hi - lo + 1));
  if (pts.size() < need) {
    std::vector<cplx> more;
    for (const auto& loop : K.boundary_loops()) {
      const auto s = loop.samples(int(need / loop.segment_count()) + 2);
      more.insert(more.end(), s.begin(), s.end());
    }
    pts.insert(pts.end(), more.begin(), more.end());
  }
  std::vector<cplx> vals(pts.size());
  std::transform(pts.begin(), pts.end(), vals.begin(), f);
  FitResult r = fit_laurent(pts, vals, fr, lo, hi);
  if (report) *report = r;
  if (r.sup_error > rel_tol * r.sup_value)
    throw Error(ErrorKind::RefitFailure, "refit error " + std::to_string(r.sup_error) + " exceeds " +
                                             std::to_string(rel_tol) + " x sup " + std::to_string(r.sup_value));
  return HoloFunction(r.coeffs, fr);
}

}  // namespace weierforge
