#include "weierforge/periods.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "weierforge/error.hpp"

namespace weierforge {

PeriodProblem catenoid_problem(Vec3 target, int degree) {
  PeriodProblem pp;
  pp.sd.g = HoloFunction::identity();
  pp.sd.phi3 = OneForm(HoloFunction(Laurent::monomial(-1)));
  pp.domain = CompactSet::annulus(0.0, 0.5, 2.0);
  pp.basis = {Path::circle(0.0, 1.0, 256)};
  pp.target_flux = {target};
  pp.param_degree = degree;
  return pp;
}

namespace {

struct Pointwise {
  const PeriodProblem& pp;
  Frame fr;
  Laurent h1, h2;

  // eta1, eta2, phi3 of the corrected data at z.
  void etas(cplx z, cplx& e1, cplx& e2, cplx& f3) const {
    const cplx g = pp.sd.g.eval_unchecked(z);
    f3 = pp.sd.phi3.density.eval_unchecked(z);
    const cplx w = fr.to_local(z);
    const cplx a = h1.is_zero() ? cplx{} : h1.eval(w);
    const cplx b = h2.is_zero() ? cplx{} : h2.eval(w);
    e1 = std::exp(b - a) * f3 / g;
    e2 = -std::exp(a + b) * g * f3;
    f3 *= std::exp(b);
  }
};

CVec3 to_phi(cplx e1, cplx e2, cplx f3) { return {0.5 * (e1 + e2), 0.5 * kI * (e1 - e2), f3}; }

Laurent laurent_from(const Eigen::VectorXd& x, int offset, int d) {
  std::vector<cplx> c(static_cast<std::size_t>(2 * d + 1));
  for (int k = 0; k <= 2 * d; ++k) c[static_cast<std::size_t>(k)] = {x(offset + 2 * k), x(offset + 2 * k + 1)};
  return Laurent(-d, std::move(c));
}

// Real residual: per loop, Re periods then Im periods minus target flux.
Eigen::VectorXd residual(const PeriodProblem& pp, const Laurent& h1, const Laurent& h2) {
  const Pointwise pw{pp, pp.param_frame(), h1, h2};
  Eigen::VectorXd r(6 * static_cast<int>(pp.basis.size()));
  for (std::size_t i = 0; i < pp.basis.size(); ++i) {
    check_clearance(pp.sd.g.singular_points(), pp.basis[i], pp.quad);
    check_clearance(pp.sd.phi3.density.singular_points(), pp.basis[i], pp.quad);
    const CVec3 I = integrate_fn<CVec3>(
        [&pw](cplx z) {
          cplx e1, e2, f3;
          pw.etas(z, e1, e2, f3);
          return to_phi(e1, e2, f3);
        },
        pp.basis[i], pp.quad);
    const int o = 6 * static_cast<int>(i);
    for (int k = 0; k < 3; ++k) {
      r(o + k) = I[k].real();
      r(o + 3 + k) = I[k].imag() - pp.target_flux[i][k];
    }
  }
  return r;
}

void check_problem(const PeriodProblem& pp) {
  if (pp.basis.empty() || pp.basis.size() != pp.target_flux.size())
    throw Error(ErrorKind::InvalidArgument, "need one target flux per basis loop");
  if (pp.param_degree < 0) throw Error(ErrorKind::InvalidArgument, "param_degree must be >= 0");
  for (const auto& c : pp.basis)
    if (!c.closed()) throw Error(ErrorKind::InvalidArgument, "basis loops must be closed");
}

}  // namespace

std::vector<CVec3> period_map(const PeriodProblem& pp, const Laurent& h1, const Laurent& h2) {
  check_problem(pp);
  const Pointwise base{pp, pp.param_frame(), {}, {}};
  const Pointwise cur{pp, pp.param_frame(), h1, h2};
  std::vector<CVec3> out;
  for (const auto& c : pp.basis) {
    out.push_back(integrate_fn<CVec3>(
        [&](cplx z) {
          cplx a1, a2, a3, b1, b2, b3;
          cur.etas(z, a1, a2, a3);
          base.etas(z, b1, b2, b3);
          return CVec3{a1 - b1, a2 - b2, a3 - b3};
        },
        c, pp.quad));
  }
  return out;
}

std::vector<std::vector<double>> period_jacobian(const PeriodProblem& pp, const Laurent& h1, const Laurent& h2) {
  check_problem(pp);
  const int d = pp.param_degree;
  const int nb = 2 * d + 1;
  const int nu = static_cast<int>(pp.basis.size());
  const Pointwise pw{pp, pp.param_frame(), h1, h2};
  std::vector<std::vector<double>> J(static_cast<std::size_t>(6 * nu), std::vector<double>(static_cast<std::size_t>(4 * nb)));
  for (int i = 0; i < nu; ++i) {
    for (int which = 0; which < 2; ++which) {
      for (int kk = 0; kk < nb; ++kk) {
        const int k = kk - d;
        // d/d(Re a_k) of the corrected densities, integrated over the loop.
        const CVec3 I = integrate_fn<CVec3>(
            [&](cplx z) {
              cplx e1, e2, f3;
              pw.etas(z, e1, e2, f3);
              const cplx wk = std::pow(pw.fr.to_local(z), k);
              if (which == 0) return to_phi(-wk * e1, wk * e2, 0.0);
              return to_phi(wk * e1, wk * e2, wk * f3);
            },
            pp.basis[static_cast<std::size_t>(i)], pp.quad);
        const int col = which * 2 * nb + 2 * kk;
        for (int c = 0; c < 3; ++c) {
          // d/d(Re a) = I, d/d(Im a) = i I.
          J[static_cast<std::size_t>(6 * i + c)][static_cast<std::size_t>(col)] = I[c].real();
          J[static_cast<std::size_t>(6 * i + 3 + c)][static_cast<std::size_t>(col)] = I[c].imag();
          J[static_cast<std::size_t>(6 * i + c)][static_cast<std::size_t>(col + 1)] = -I[c].imag();
          J[static_cast<std::size_t>(6 * i + 3 + c)][static_cast<std::size_t>(col + 1)] = I[c].real();
        }
      }
    }
  }
  return J;
}

PeriodSolution solve_periods(const PeriodProblem& pp) {
  check_problem(pp);
  const int d = pp.param_degree;
  const int nb = 2 * d + 1;
  const int n = 4 * nb;
  const int m = 6 * static_cast<int>(pp.basis.size());
  PeriodReport rep;
  rep.unknowns = n;
  rep.equations = m;

  auto to_eigen = [&](const std::vector<std::vector<double>>& J) {
    Eigen::MatrixXd A(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = J[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return A;
  };
  auto split = [&](const Eigen::VectorXd& x, Laurent& a, Laurent& b) {
    a = laurent_from(x, 0, d);
    b = laurent_from(x, 2 * nb, d);
  };

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  Laurent h1, h2;
  Eigen::MatrixXd J0 = to_eigen(period_jacobian(pp, h1, h2));
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J0);
  const auto sv = svd.singularValues();
  for (int i = 0; i < sv.size(); ++i) rep.singular_values.push_back(sv(i));
  const double smax = sv.size() ? sv(0) : 0.0;
  rep.rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-10 * smax) ++rep.rank;
  if (rep.rank < m)
    throw Error(ErrorKind::RankDeficient, "period Jacobian has rank " + std::to_string(rep.rank) + " < " +
                                              std::to_string(m) + "; increase param_degree");

  // Real periods must reach 1e-10 and flux 1e-8; aim a little below both.
  auto done = [](const Eigen::VectorXd& r, int nu) {
    for (int i = 0; i < nu; ++i)
      for (int k = 0; k < 3; ++k)
        if (std::abs(r(6 * i + k)) > 1e-11 || std::abs(r(6 * i + 3 + k)) > 1e-9) return false;
    return true;
  };
  const int nu = static_cast<int>(pp.basis.size());
  Eigen::VectorXd r = residual(pp, h1, h2);
  rep.residual_history.push_back(r.lpNorm<Eigen::Infinity>());
  Eigen::MatrixXd J = J0;
  for (int it = 0; it < 50 && !done(r, nu); ++it) {
    const Eigen::VectorXd dx = -J.completeOrthogonalDecomposition().solve(r);
    double alpha = 1.0;
    bool improved = false;
    for (int h = 0; h < 30; ++h, alpha *= 0.5) {
      const Eigen::VectorXd xt = x + alpha * dx;
      Laurent a, b;
      split(xt, a, b);
      const Eigen::VectorXd rt = residual(pp, a, b);
      if (rt.norm() < r.norm()) {
        x = xt;
        h1 = a;
        h2 = b;
        r = rt;
        improved = true;
        break;
      }
    }
    rep.iterations = it + 1;
    rep.residual_history.push_back(r.lpNorm<Eigen::Infinity>());
    if (!improved) break;
    J = to_eigen(period_jacobian(pp, h1, h2));
  }
  if (!done(r, nu)) {
    std::string hist;
    for (double v : rep.residual_history) hist += " " + std::to_string(v);
    throw Error(ErrorKind::NewtonDiverged, "residual history:" + hist);
  }

  PeriodSolution sol;
  const Frame fr = pp.param_frame();
  HoloFunction e1 = HoloFunction::exp_of(h1, fr), e2 = HoloFunction::exp_of(h2, fr);
  sol.sd.g = pp.sd.g * e1;
  sol.sd.phi3 = OneForm(pp.sd.phi3.density * e2);
  rep.h1 = h1;
  rep.h2 = h2;

  // Independent check on the exactly represented corrected data.
  const NullTriple t = from_spin_data(sol.sd, pp.domain, false);
  for (std::size_t i = 0; i < pp.basis.size(); ++i) {
    const CVec3 I = integrate_triple(t, pp.basis[i], pp.quad);
    rep.real_periods.push_back(I.real());
    rep.flux.push_back(I.imag());
    for (int k = 0; k < 3; ++k) {
      rep.max_real_period = std::max(rep.max_real_period, std::abs(I[k].real()));
      rep.max_flux_error = std::max(rep.max_flux_error, std::abs(I[k].imag() - pp.target_flux[i][k]));
    }
  }
  rep.converged = true;
  sol.report = rep;
  return sol;
}

}  // namespace weierforge
