// Copyright (c) Contributors to the reidlab project.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "reidlab/certifier.hpp"
#include "reidlab/errors.hpp"
#include "reidlab/matrix.hpp"
#include "reidlab/rng.hpp"
#include "reidlab/shift.hpp"
#include "reidlab/spectral.hpp"

using namespace reidlab;

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

ComplexMatrix random_matrix(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix m(n, n);
  for (auto& z : m.entries()) z = rng.complex_gaussian();
  return m;
}

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  const ComplexMatrix g = random_matrix(n, seed);
  return 0.5 * (g + adjoint(g));
}

ComplexMatrix random_psd(std::size_t n, std::uint64_t seed) {
  const ComplexMatrix g = random_matrix(n, seed);
  return g * adjoint(g);
}

double lambda_max_of(const ComplexMatrix& h) {
  return hermitian_eig(h).eigenvalues.back();
}

}  // namespace

TEST_CASE("default epsilon scales with the operator norm") {
  const std::vector<double> d{3.0, -4.0};
  CHECK(default_epsilon(ComplexMatrix::diagonal(d)) ==
        doctest::Approx(4e-6).epsilon(1e-10));
  const std::vector<double> small{0.1};
  CHECK(default_epsilon(ComplexMatrix::diagonal(small)) ==
        doctest::Approx(1e-6).epsilon(1e-12));
}

TEST_CASE("slerp pencil identity behind the interval bound") {
  // C(a+t) = lam C(a) + mu C(a+w) + (lam+mu-1) P with
  // lam = sin(w-t)/sin w, mu = sin t/sin w.  This is the exact algebraic
  // fact the sweep's certified upper bound rests on.
  Rng rng(31337);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + static_cast<std::size_t>(rep % 4);
    const ComplexMatrix m = random_matrix(n, 100 + rep);
    const ComplexMatrix p = random_psd(n, 200 + rep);
    const ComplexMatrix h1 = 0.5 * (m + adjoint(m));
    const ComplexMatrix h2raw = Complex{0.0, 0.5} * (m - adjoint(m));
    const ComplexMatrix h2 = 0.5 * (h2raw + adjoint(h2raw));
    auto pencil = [&](double theta) {
      return std::cos(theta) * h1 + std::sin(theta) * h2 - p;
    };
    const double a = rng.uniform(0.0, kTwoPi);
    const double w = rng.uniform(0.05, 3.0);  // < pi
    const double t = rng.uniform(0.0, w);
    const double lam = std::sin(w - t) / std::sin(w);
    const double mu = std::sin(t) / std::sin(w);
    CHECK(lam >= 0.0);
    CHECK(mu >= 0.0);
    CHECK(lam + mu <= 1.0 / std::cos(0.5 * w) + 1e-12);
    const ComplexMatrix lhs = pencil(a + t);
    const ComplexMatrix rhs =
        lam * pencil(a) + mu * pencil(a + w) + (lam + mu - 1.0) * p;
    CHECK(operator_norm(lhs - rhs) <=
          1e-12 * (1.0 + operator_norm(m) + operator_norm(p)));
  }
}

TEST_CASE("trivial instances certify as holding") {
  ComplexMatrix zero(2, 2);
  const GapCertificate z = certify_dominated(zero, zero, 1e-6);
  CHECK(z.status == CertStatus::CertifiedHolds);
  CHECK(z.gap_upper <= 1e-6);
  CHECK(norm(z.witness) == doctest::Approx(1.0).epsilon(1e-12));

  const ComplexMatrix one = ComplexMatrix::identity(1);
  const GapCertificate c = certify_dominated(one, one, 1e-6);
  CHECK(c.status == CertStatus::CertifiedHolds);
  CHECK(c.gap_lower <= 1e-12);
  CHECK(c.gap_upper >= c.gap_lower);
  CHECK(c.lipschitz_bound == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("self-adjoint reduction: sweep brackets the closed form") {
  // For Hermitian M the supremum is exactly
  // max(lambda_max(M - P), lambda_max(-M - P)).
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const std::size_t n = 2 + static_cast<std::size_t>(seed % 5);
    const ComplexMatrix m = random_hermitian(n, 3000 + seed);
    const ComplexMatrix p = random_psd(n, 4000 + seed);
    const double oracle =
        std::max(lambda_max_of(m - p), lambda_max_of(-m - p));
    const double eps = default_epsilon(m);
    const GapCertificate cert = certify_dominated(m, p, eps);
    CHECK(cert.gap_lower <= oracle + 1e-10);
    CHECK(cert.gap_upper >= oracle - 1e-10);
    CHECK(cert.gap_upper - oracle <= eps + 1e-9);
    CHECK(cert.gap_upper >= cert.gap_lower - 1e-15);
  }
}

TEST_CASE("gap function is 2*pi periodic and matches pointwise evaluations") {
  const ComplexMatrix m = random_matrix(3, 55);
  const ComplexMatrix p = random_psd(3, 56);
  for (double theta : {0.0, 0.3, 1.7, 4.4}) {
    const double f0 = gap_function_at(m, p, theta);
    const double f1 = gap_function_at(m, p, theta + kTwoPi);
    CHECK(std::abs(f0 - f1) <= 1e-12 * (1.0 + operator_norm(m)));
  }
  CHECK_THROWS_AS(gap_function_at(m, random_matrix(3, 57), 0.0), NotHermitian);
}

TEST_CASE("scaling covariance of the certificate") {
  const ShiftInstance shift = build_shift_instance(4);
  const ReidInstance inst = make_reid_instance(shift.A, shift.K);
  const double eps = 1e-6;
  const GapCertificate base = certify_reid(inst, eps);
  const ComplexMatrix m2 = 2.0 * inst.M;
  const ComplexMatrix p2 = (2.0 * inst.c) * inst.A;
  const GapCertificate doubled = certify_dominated(m2, p2, 2.0 * eps);
  CHECK(base.status == CertStatus::Violated);
  CHECK(doubled.status == CertStatus::Violated);
  CHECK(doubled.gap_lower == doctest::Approx(2.0 * base.gap_lower).epsilon(1e-9));
  CHECK(doubled.gap_upper == doctest::Approx(2.0 * base.gap_upper).epsilon(1e-6));
}

TEST_CASE("truncated shift: plateau value against the Sturm oracle") {
  // For the shift instance the gap function is constant in theta, equal to
  // lambda_max of the tridiagonal (S + S*)/2 - diag(0,1,...,1).  The Sturm
  // oracle evaluates that eigenvalue without any library code.
  for (std::size_t n : {4UL, 7UL}) {
    const ShiftInstance shift = build_shift_instance(n);
    const ReidInstance inst = make_reid_instance(shift.A, shift.K);

    std::vector<double> diag(n, -1.0);
    diag[0] = 0.0;
    std::vector<double> off(n - 1, 0.5);
    const double oracle = testoracle::tridiag_lambda_max(diag, off);

    const double eps = 1e-6;
    const GapCertificate cert = certify_reid(inst, eps);
    CHECK(cert.status == CertStatus::Violated);
    CHECK(cert.gap_lower == doctest::Approx(oracle).epsilon(1e-8));
    CHECK(cert.gap_upper >= oracle - 1e-12);
    CHECK(cert.gap_upper <= oracle + eps + 1e-9);

    // The plateau really is flat: spot-check a few angles.
    const ComplexMatrix p = inst.c * inst.A;
    for (double theta : {0.0, 0.9, 2.5, 5.0}) {
      CHECK(gap_function_at(inst.M, p, theta) ==
            doctest::Approx(oracle).epsilon(1e-10));
    }
  }
}

TEST_CASE("shift-4 plateau equals the hand-derived quartic root") {
  // det(lambda I - C) for C = tridiag((0,-1,-1,-1); 0.5) expands to
  // lambda^4 + 3 lambda^3 + 2.25 lambda^2 - 3/16, whose largest root is the
  // supremum certified for n = 4.
  auto quartic = [](double x) {
    return ((x + 3.0) * x + 2.25) * x * x - 3.0 / 16.0;
  };
  const double root = testoracle::bisect_root(quartic, 0.2, 0.3);
  std::vector<double> diag{0.0, -1.0, -1.0, -1.0};
  std::vector<double> off{0.5, 0.5, 0.5};
  CHECK(testoracle::tridiag_lambda_max(diag, off) ==
        doctest::Approx(root).epsilon(1e-12));

  const ShiftInstance shift = build_shift_instance(4);
  const ReidInstance inst = make_reid_instance(shift.A, shift.K);
  const GapCertificate cert = certify_reid(inst, 1e-6);
  CHECK(cert.gap_lower == doctest::Approx(root).epsilon(1e-8));
}

TEST_CASE("eval cap produces a sound inconclusive result") {
  // M = P = I: the supremum is 0, but 48 evaluations cannot push the
  // certified bound below epsilon, so the verdict must be INCONCLUSIVE with
  // a still-valid bracket around 0.
  const ComplexMatrix id = ComplexMatrix::identity(2);
  CertifyOptions opt;
  opt.epsilon = 1e-6;
  opt.eval_cap = 48;
  opt.coarse_intervals = 48;
  const GapCertificate cert = certify_dominated(id, id, opt);
  CHECK(cert.status == CertStatus::Inconclusive);
  CHECK(cert.gap_lower <= 1e-12);
  CHECK(cert.gap_upper > 1e-6);   // could not certify at this budget
  CHECK(cert.gap_upper < 1e-2);   // but the bound is still honest
  // Deterministic replay.
  const GapCertificate again = certify_dominated(id, id, opt);
  CHECK(again.status == cert.status);
  CHECK(again.gap_upper == cert.gap_upper);
  CHECK(again.gap_lower == cert.gap_lower);
  CHECK(again.grid_points == cert.grid_points);
}

TEST_CASE("certificates are bitwise reproducible") {
  const ComplexMatrix m = random_matrix(4, 808);
  const ComplexMatrix a = random_psd(4, 809);
  const ReidInstance inst = make_reid_instance(a, m);
  const GapCertificate c1 = certify_reid(inst);
  const GapCertificate c2 = certify_reid(inst);
  CHECK(c1.status == c2.status);
  CHECK(c1.gap_upper == c2.gap_upper);
  CHECK(c1.gap_lower == c2.gap_lower);
  CHECK(c1.theta_star == c2.theta_star);
  CHECK(c1.grid_points == c2.grid_points);
  REQUIRE(c1.witness.dim() == c2.witness.dim());
  for (std::size_t i = 0; i < c1.witness.dim(); ++i) {
    CHECK(c1.witness[i] == c2.witness[i]);
  }
}

TEST_CASE("witness gap always equals gap_lower") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t n = 2 + static_cast<std::size_t>(seed);
    const ComplexMatrix m = random_matrix(n, 7000 + seed);
    const ComplexMatrix p = random_psd(n, 7100 + seed);
    const GapCertificate cert = certify_dominated(m, p, default_epsilon(m));
    CHECK(norm(cert.witness) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pointwise_gap(m, p, cert.witness) == cert.gap_lower);
    CHECK(cert.gap_lower <= cert.gap_upper + 1e-15);
  }
}

TEST_CASE("brute force oracle stays inside the certified bracket") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t n = 2 + static_cast<std::size_t>(seed);
    const ComplexMatrix m = random_matrix(n, 7500 + seed);
    const ComplexMatrix p = random_psd(n, 7600 + seed);
    const GapCertificate cert = certify_dominated(m, p, default_epsilon(m));
    const ComplexVector extras[] = {cert.witness};
    const BruteForceResult bf = brute_force_gap(m, p, 2000, 99 + seed, extras);
    CHECK(bf.gap <= cert.gap_upper + 1e-10);
    CHECK(bf.gap >= cert.gap_lower - 1e-10);  // witness is among candidates
    CHECK(norm(bf.argmax) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pointwise_gap(m, p, bf.argmax) == bf.gap);
  }
}

TEST_CASE("reid_gap_at evaluates the inequality gap at a raw vector") {
  const ShiftInstance shift = build_shift_instance(5);
  // At the integral witness (2,1,0,...) the gap is exactly 2 - 1 = 1.
  CHECK(reid_gap_at(shift.A, shift.K, shift.x_witness) ==
        doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<double> neg{-1.0, 1.0};
  ComplexVector x(2);
  x[0] = 1.0;
  CHECK_THROWS_AS(
      (void)reid_gap_at(ComplexMatrix::diagonal(neg),
                        ComplexMatrix::identity(2), x),
      NotPositive);
}

TEST_CASE("instance and option validation") {
  const ComplexMatrix id = ComplexMatrix::identity(2);
  ComplexMatrix rect(2, 3);
  CHECK_THROWS_AS(certify_dominated(rect, id, 1e-6), DimensionMismatch);
  CHECK_THROWS_AS(certify_dominated(id, ComplexMatrix::identity(3), 1e-6),
                  DimensionMismatch);
  CHECK_THROWS_AS(certify_dominated(id, random_matrix(2, 1), 1e-6),
                  NotHermitian);
  const std::vector<double> neg{-1.0, 1.0};
  CHECK_THROWS_AS(certify_dominated(id, ComplexMatrix::diagonal(neg), 1e-6),
                  NotPositive);
  CHECK_THROWS_AS(certify_dominated(id, id, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(certify_dominated(id, id, -1.0), std::invalid_argument);
  CertifyOptions opt;
  opt.epsilon = 1e-6;
  opt.eval_cap = 8;
  CHECK_THROWS_AS(certify_dominated(id, id, opt), std::invalid_argument);

  CHECK_THROWS_AS(make_reid_instance(ComplexMatrix::diagonal(neg), id),
                  NotPositive);
  CHECK_THROWS_AS(make_reid_instance(id, ComplexMatrix::identity(3)),
                  DimensionMismatch);
  ComplexMatrix bad = id;
  bad(0, 0) = {std::numeric_limits<double>::quiet_NaN(), 0.0};
  CHECK_THROWS_AS(make_reid_instance(id, bad), NumericalFailure);
}

TEST_CASE("certify_reid composes the dominating side as ||K|| A") {
  const ComplexMatrix a = random_psd(3, 91);
  const ComplexMatrix k = random_matrix(3, 92);
  const ReidInstance inst = make_reid_instance(a, k);
  const double eps = default_epsilon(inst.M);
  const GapCertificate via_reid = certify_reid(inst, eps);
  const GapCertificate direct =
      certify_dominated(inst.M, inst.c * inst.A, eps);
  CHECK(via_reid.status == direct.status);
  CHECK(via_reid.gap_upper == direct.gap_upper);
  CHECK(via_reid.gap_lower == direct.gap_lower);
  CHECK(via_reid.theta_star == direct.theta_star);
}
