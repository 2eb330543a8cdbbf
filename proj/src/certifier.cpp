// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include "reidlab/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "eigen_support.hpp"
#include "reidlab/errors.hpp"
#include "reidlab/predicates.hpp"
#include "reidlab/rng.hpp"
#include "reidlab/spectral.hpp"

namespace reidlab {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Shared state for evaluating f(theta) = lambda_max(cos t H1 + sin t H2 - P)
/// where H1 = (M + M*)/2 and H2 = i(M - M*)/2, so that
/// <(cos t H1 + sin t H2) x, x> = Re(e^{i t} <Mx,x>).
struct SweepContext {
  Eigen::MatrixXcd h1;
  Eigen::MatrixXcd h2;
  Eigen::MatrixXcd p;
  mutable Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver;
  mutable Eigen::MatrixXcd work;
  mutable std::size_t evals = 0;

  SweepContext(const Eigen::MatrixXcd& me, const Eigen::MatrixXcd& pe) {
    h1 = 0.5 * (me + me.adjoint());
    const std::complex<double> iu{0.0, 1.0};
    Eigen::MatrixXcd h2raw = 0.5 * iu * (me - me.adjoint());
    h2 = 0.5 * (h2raw + h2raw.adjoint());
    p = 0.5 * (pe + pe.adjoint());
    work.resize(me.rows(), me.cols());
  }

  double value(double theta) const {
    work = std::cos(theta) * h1 + std::sin(theta) * h2 - p;
    solver.compute(work, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalFailure("gap sweep: eigensolver did not converge");
    }
    ++evals;
    return solver.eigenvalues()(work.rows() - 1);
  }

  Eigen::VectorXcd top_eigenvector(double theta) const {
    work = std::cos(theta) * h1 + std::sin(theta) * h2 - p;
    solver.compute(work, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) {
      throw NumericalFailure("gap sweep: eigensolver did not converge");
    }
    return solver.eigenvectors().col(work.rows() - 1);
  }
};

/// Certified upper bound for sup of f over [a, a+w], w < pi, from the
/// endpoint values.  Writing theta = a + t, the pencil identity
///   C(a+t) = lam(t) C(a) + mu(t) C(a+w) + (lam+mu-1) P,
///   lam = sin(w-t)/sin w,  mu = sin t / sin w  (both >= 0),
/// together with subadditivity of lambda_max gives
///   f(a+t) <= (lam+mu) max(fa, fb) + (lam+mu-1) lambda_max(P)
/// and lam+mu <= sec(w/2).  p_top must be >= max(0, lambda_max(P)).
double interval_bound(double fa, double fb, double w, double p_top) {
  const double m = std::max(fa, fb);
  const double coeff = 1.0 / std::cos(0.5 * w) - 1.0;
  return m + coeff * std::max(0.0, m + p_top);
}

struct Interval {
  double u;   // certified upper bound of f on the interval
  double a;   // left endpoint
  double w;   // width
  double fa;  // f(a)
  double fb;  // f(a + w)
};

struct IntervalOrder {
  // Max-heap on u; ties broken toward the smallest left endpoint.
  bool operator()(const Interval& lhs, const Interval& rhs) const {
    if (lhs.u != rhs.u) return lhs.u < rhs.u;
    return lhs.a > rhs.a;
  }
};

GapCertificate certify_impl(const ComplexMatrix& m, const ComplexMatrix& p,
                            const CertifyOptions& opt) {
  if (!m.is_square() || m.empty()) {
    throw DimensionMismatch("certify_dominated: M must be square");
  }
  if (p.rows() != m.rows() || p.cols() != m.cols()) {
    throw DimensionMismatch("certify_dominated: M and P shapes differ");
  }
  if (!(opt.epsilon > 0.0)) {
    throw std::invalid_argument("certify_dominated: epsilon must be > 0");
  }
  if (opt.eval_cap < 16) {
    throw std::invalid_argument("certify_dominated: eval cap too small");
  }

  const Eigen::MatrixXcd me = detail::to_eigen(m);
  const Eigen::MatrixXcd pe = detail::to_eigen(p);
  const TolerancePolicy& tol = opt.tol;

  // Validate P: Hermitian and positive within tolerance.
  const double p_herm_defect = detail::operator_norm_eigen(pe - pe.adjoint());
  const std::vector<double> p_vals = detail::heev_values(pe);
  const double p_min = p_vals.front();
  const double p_max = p_vals.back();
  const double scale_p = std::max(1.0, std::max(std::abs(p_min), std::abs(p_max)));
  if (p_herm_defect > tol.floor_for_scale(scale_p)) {
    throw NotHermitian("certify_dominated: P not Hermitian");
  }
  if (p_min < -tol.floor_for_scale(scale_p)) {
    throw NotPositive("certify_dominated: P not positive");
  }

  SweepContext ctx(me, pe);
  const double lipschitz = detail::operator_norm_eigen(me);
  const double scale_m = std::max(1.0, lipschitz);
  // Upper bound on lambda_max(P) used by the interval certificate; inflated
  // slightly to absorb the eigensolver's own error.
  const double p_top =
      std::max(0.0, p_max) + 1e-12 * (1.0 + std::abs(p_max));
  // Covers floating-point error in the evaluated f values.
  const double margin = 1e-12 * (1.0 + lipschitz + p_top);
  const double eps_work = 0.9 * opt.epsilon;

  // Coarse uniform grid.  Endpoint values are shared between neighbours and
  // the wrap-around interval reuses f(0).
  const std::size_t n0 =
      std::max<std::size_t>(8, std::min(opt.coarse_intervals, opt.eval_cap));
  std::vector<double> grid_f(n0);
  double best = -std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  for (std::size_t k = 0; k < n0; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n0);
    grid_f[k] = ctx.value(theta);
    if (grid_f[k] > best) {
      best = grid_f[k];
      best_theta = theta;
    }
  }

  std::priority_queue<Interval, std::vector<Interval>, IntervalOrder> heap;
  const double w0 = kTwoPi / static_cast<double>(n0);
  for (std::size_t k = 0; k < n0; ++k) {
    const double a = kTwoPi * static_cast<double>(k) / static_cast<double>(n0);
    const double fa = grid_f[k];
    const double fb = grid_f[(k + 1) % n0];
    heap.push({interval_bound(fa, fb, w0, p_top), a, w0, fa, fb});
  }

  // Bisect the interval with the largest certified bound until every bound
  // is within eps_work of the best evaluated point, or the budget runs out.
  while (true) {
    const Interval top = heap.top();
    if (top.u <= best + eps_work) break;
    if (ctx.evals >= opt.eval_cap) break;
    heap.pop();
    const double half = 0.5 * top.w;
    const double mid = top.a + half;
    const double fm = ctx.value(mid);
    if (fm > best || (fm == best && mid < best_theta)) {
      best = fm;
      best_theta = mid;
    }
    heap.push({interval_bound(top.fa, fm, half, p_top), top.a, half, top.fa, fm});
    heap.push({interval_bound(fm, top.fb, half, p_top), mid, half, fm, top.fb});
  }

  const double certified_upper = std::max(heap.top().u, best) + margin;

  // Golden-section polish around the best grid point.  This only sharpens
  // the witness; the upper bound above never depends on it.
  double theta_star = best_theta;
  double f_star = best;
  {
    const double window = 0.5 * w0;
    double lo = best_theta - window;
    double hi = best_theta + window;
    const double gr = 0.6180339887498949;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = ctx.value(x1);
    double f2 = ctx.value(x2);
    for (int it = 0; it < opt.refine_iters; ++it) {
      if (f1 < f2) {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + gr * (hi - lo);
        f2 = ctx.value(x2);
      } else {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - gr * (hi - lo);
        f1 = ctx.value(x1);
      }
    }
    const double cand = f1 >= f2 ? x1 : x2;
    const double fcand = std::max(f1, f2);
    if (fcand > f_star) {
      f_star = fcand;
      theta_star = cand;
    }
  }
  theta_star = std::fmod(theta_star, kTwoPi);
  if (theta_star < 0.0) theta_star += kTwoPi;

  GapCertificate cert;
  cert.gap_upper = certified_upper;
  cert.theta_star = theta_star;
  cert.grid_points = ctx.evals;
  cert.lipschitz_bound = lipschitz;

  const Eigen::VectorXcd wvec = ctx.top_eigenvector(theta_star);
  cert.witness = detail::from_eigen_vec(wvec);
  cert.gap_lower = pointwise_gap(m, p, cert.witness);

  const double floor = tol.floor_for_scale(std::max(scale_m, scale_p));
  if (cert.gap_lower > floor) {
    cert.status = CertStatus::Violated;
  } else if (cert.gap_upper <= floor + opt.epsilon) {
    cert.status = CertStatus::CertifiedHolds;
  } else {
    cert.status = CertStatus::Inconclusive;
  }
  return cert;
}

}  // namespace

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::CertifiedHolds:
      return "CERTIFIED_HOLDS";
    case CertStatus::Violated:
      return "VIOLATED";
    case CertStatus::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

ReidInstance make_reid_instance(const ComplexMatrix& a, const ComplexMatrix& k,
                                const TolerancePolicy& tol) {
  if (!a.is_square() || a.empty()) {
    throw DimensionMismatch("make_reid_instance: A must be square");
  }
  if (a.rows() != k.rows() || a.cols() != k.cols() || !k.is_square()) {
    throw DimensionMismatch("make_reid_instance: A and K shapes differ");
  }
  if (!a.all_finite() || !k.all_finite()) {
    throw NumericalFailure("make_reid_instance: non-finite entries");
  }
  const PositivityResult pos = is_positive(a, tol);
  if (!pos.positive) {
    throw NotPositive("make_reid_instance: A is not positive (lambda_min = " +
                      std::to_string(pos.lambda_min) + ")");
  }
  ReidInstance inst;
  inst.A = a;
  inst.K = k;
  inst.M = a * k;
  inst.c = operator_norm(k);
  return inst;
}

double default_epsilon(const ComplexMatrix& m) { return 1e-6 * scale_of(m); }

double pointwise_gap(const ComplexMatrix& m, const ComplexMatrix& p,
                     const ComplexVector& x) {
  const Complex mq = quadratic_form(m, x);
  const Complex pq = quadratic_form(p, x);
  return std::abs(mq) - pq.real();
}

double reid_gap_at(const ComplexMatrix& a, const ComplexMatrix& k,
                   const ComplexVector& x, const TolerancePolicy& tol) {
  if (a.rows() != k.rows() || a.cols() != k.cols()) {
    throw DimensionMismatch("reid_gap_at: A and K shapes differ");
  }
  const PositivityResult pos = is_positive(a, tol);
  if (!pos.positive) {
    throw NotPositive("reid_gap_at: A is not positive");
  }
  const ComplexMatrix m = a * k;
  const double c = operator_norm(k);
  const Complex mq = quadratic_form(m, x);
  const Complex aq = quadratic_form(a, x);
  return std::abs(mq) - c * aq.real();
}

double gap_function_at(const ComplexMatrix& m, const ComplexMatrix& p,
                       double theta, const TolerancePolicy& tol) {
  if (!m.is_square() || m.empty()) {
    throw DimensionMismatch("gap_function_at: M must be square");
  }
  if (p.rows() != m.rows() || p.cols() != m.cols()) {
    throw DimensionMismatch("gap_function_at: M and P shapes differ");
  }
  const Eigen::MatrixXcd pe = detail::to_eigen(p);
  const double defect = detail::operator_norm_eigen(pe - pe.adjoint());
  const std::vector<double> pv = detail::heev_values(pe);
  const double scale_p =
      std::max(1.0, std::max(std::abs(pv.front()), std::abs(pv.back())));
  if (defect > tol.floor_for_scale(scale_p)) {
    throw NotHermitian("gap_function_at: P not Hermitian");
  }
  SweepContext ctx(detail::to_eigen(m), pe);
  return ctx.value(theta);
}

GapCertificate certify_dominated(const ComplexMatrix& m,
                                 const ComplexMatrix& p, double epsilon,
                                 const TolerancePolicy& tol) {
  CertifyOptions opt;
  opt.epsilon = epsilon;
  opt.tol = tol;
  return certify_impl(m, p, opt);
}

GapCertificate certify_dominated(const ComplexMatrix& m,
                                 const ComplexMatrix& p,
                                 const CertifyOptions& options) {
  return certify_impl(m, p, options);
}

GapCertificate certify_reid(const ReidInstance& instance, double epsilon,
                            const TolerancePolicy& tol) {
  const ComplexMatrix p = instance.c * instance.A;
  return certify_dominated(instance.M, p, epsilon, tol);
}

GapCertificate certify_reid(const ReidInstance& instance) {
  return certify_reid(instance, default_epsilon(instance.M), {});
}

BruteForceResult brute_force_gap(const ComplexMatrix& m,
                                 const ComplexMatrix& p, std::size_t samples,
                                 std::uint64_t seed,
                                 std::span<const ComplexVector> extra) {
  if (!m.is_square() || m.empty()) {
    throw DimensionMismatch("brute_force_gap: M must be square");
  }
  if (p.rows() != m.rows() || p.cols() != m.cols()) {
    throw DimensionMismatch("brute_force_gap: M and P shapes differ");
  }
  const std::size_t n = m.rows();

  BruteForceResult result;
  result.gap = -std::numeric_limits<double>::infinity();
  auto consider = [&](const ComplexVector& candidate) {
    const ComplexVector unit = normalized(candidate);
    if (norm(unit) == 0.0) return;
    const double g = pointwise_gap(m, p, unit);
    if (g > result.gap) {
      result.gap = g;
      result.argmax = unit;
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    ComplexVector e(n);
    e[i] = 1.0;
    consider(e);
  }
  if (n >= 2) {
    ComplexVector two_one(n);
    two_one[0] = 2.0;
    two_one[1] = 1.0;
    consider(two_one);
  }
  for (const ComplexVector& candidate : extra) {
    if (candidate.dim() == n) consider(candidate);
  }

  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    ComplexVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rng.complex_gaussian();
    consider(x);
  }
  return result;
}

}  // namespace reidlab
