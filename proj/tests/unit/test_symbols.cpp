#include <gtest/gtest.h>

#include <Eigen/QR>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rigidity/errors.hpp"
#include "rigidity/symbols.hpp"

using namespace rigidity;

namespace {

Eigen::MatrixXd random_symmetric(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = g(rng);
  return 0.5 * (a + a.transpose());
}

Eigen::VectorXd random_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v(i) = g(rng);
  return v;
}

Eigen::MatrixXd random_orthogonal(std::mt19937_64& rng, int n) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(random_symmetric(rng, n) + Eigen::MatrixXd::Identity(n, n) * 0.1);
  return qr.householderQ();
}

Eigen::MatrixXd projector(const Eigen::VectorXd& xi) {
  const int n = static_cast<int>(xi.size());
  return Eigen::MatrixXd::Identity(n, n) - xi * xi.transpose() / xi.squaredNorm();
}

}  // namespace

TEST(BracketL, Examples) {
  auto c = bracket_L(5, 0);
  EXPECT_EQ(c.a, ExactScalar(-1, 8));
  EXPECT_EQ(c.b, ExactScalar(1, 2));
  EXPECT_EQ(c.extra_factor, ExactScalar(1));
  c = bracket_L(3, 1);
  EXPECT_EQ(c.a, ExactScalar(-1, 4));
  EXPECT_EQ(c.b, ExactScalar(1, 2));
}

TEST(BracketL, ShiftInS) {
  std::mt19937_64 rng(3);
  for (int n = 3; n <= 13; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      const ExactScalar s = oracle::random_rational(rng);
      EXPECT_EQ(bracket_L(n, s).a - bracket_L(n, 0).a, s * (s - 1) / ((n - 1) * (n - 1)));
    }
  EXPECT_THROW(bracket_L(2, 0), DomainError);
}

TEST(BracketD2, Examples) {
  auto c = bracket_D2(5, 0);
  EXPECT_EQ(c.a, ExactScalar(1));
  EXPECT_EQ(c.b, ExactScalar(-4));
  EXPECT_EQ(c.extra_factor, ExactScalar(1));  // 2^{floor(5/2) - 2}
  EXPECT_EQ(bracket_D2(7, 0).extra_factor, ExactScalar(2));
  c = bracket_D2(3, 0);
  EXPECT_EQ(c.b, ExactScalar(-2));
  EXPECT_EQ(c.extra_factor, ExactScalar(1, 2));
  for (int n = 3; n <= 13; ++n) EXPECT_EQ(bracket_D2(n, ExactScalar(n - 1, 2)).b, ExactScalar(0));
  for (int n = 3; n <= 13; ++n) EXPECT_GT(bracket_D2(n, 0).extra_factor, 0);
}

TEST(GammaPrefactor, Examples) {
  const auto d3 = gamma_prefactor(3, PrefactorMode::DET_DERIVATIVE_AT_ZERO);
  EXPECT_NEAR(d3.value, 1.0 / 256, 1e-16);
  EXPECT_EQ(d3.sign, 1);
  const auto z4 = gamma_prefactor(4, PrefactorMode::ZETA0_LIMIT_AT_ZERO);
  EXPECT_NEAR(z4.value, 1.0 / (960 * std::numbers::pi * std::numbers::pi), 1e-17);
  EXPECT_EQ(z4.sign, 1);
  EXPECT_EQ(gamma_prefactor(5, PrefactorMode::DET_DERIVATIVE_AT_ZERO).sign, -1);
}

TEST(GammaPrefactor, ParityErrors) {
  EXPECT_THROW(gamma_prefactor(4, PrefactorMode::DET_DERIVATIVE_AT_ZERO), ParityError);
  EXPECT_THROW(gamma_prefactor(5, PrefactorMode::ZETA0_LIMIT_AT_ZERO), ParityError);
}

TEST(GammaPrefactor, DetMatchesHighPrecisionGamma) {
  for (int n = 3; n <= 13; n += 2) {
    const auto p = gamma_prefactor(n, PrefactorMode::DET_DERIVATIVE_AT_ZERO);
    const double ref = static_cast<double>(oracle::det_prefactor_hp(n));
    EXPECT_LT(std::abs(p.value - ref) / std::abs(ref), 1e-12) << n;
    EXPECT_EQ(p.sign, ((n + 1) / 2) % 2 == 0 ? 1 : -1) << n;
  }
}

TEST(GammaPrefactor, ZetaMatchesHighPrecisionLimit) {
  using oracle::HighFloat;
  for (int n = 4; n <= 12; n += 2) {
    const HighFloat s1("1e-6"), s2("1e-7");
    // the prefactor is smooth at s = 0, so linear Richardson in s removes the O(s) term
    const HighFloat p1 = oracle::prefactor_hp(n, s1), p2 = oracle::prefactor_hp(n, s2);
    const double lim = static_cast<double>((s1 * p2 - s2 * p1) / (s1 - s2));
    const auto p = gamma_prefactor(n, PrefactorMode::ZETA0_LIMIT_AT_ZERO);
    EXPECT_LT(std::abs(p.value - lim) / std::abs(lim), 1e-6) << n;
    EXPECT_LT(std::abs(p.value - static_cast<double>(p2)) / std::abs(lim), 1e-5) << n;
    EXPECT_EQ(p.sign, (n / 2) % 2 == 0 ? 1 : -1) << n;
  }
}

TEST(GammaPrefactor, RawValueTendsToDetLimit) {
  for (int n : {3, 5, 7}) {
    const double s = 1e-6;
    const double ratio = gamma_prefactor_raw(n, s) / s;
    const double lim = gamma_prefactor(n, PrefactorMode::DET_DERIVATIVE_AT_ZERO).value;
    EXPECT_LT(std::abs(ratio - lim) / std::abs(lim), 1e-4) << n;
  }
}

TEST(EvaluateForm, Examples) {
  PointData p;
  p.xi = Eigen::Vector3d(0, 0, 1);
  p.k = Eigen::Vector3d(1, -1, 0).asDiagonal();
  QuadFormCoeffs c;
  c.a = 0;
  c.b = 1;
  EXPECT_NEAR(evaluate_form(c, 1.0, p, 0.0), 2.0, 1e-15);

  std::mt19937_64 rng(11);
  for (int n = 3; n <= 8; ++n) {
    QuadFormCoeffs q;
    q.a = oracle::random_rational(rng);
    q.b = oracle::random_rational(rng);
    PointData d;
    d.xi = random_vector(rng, n);
    d.k = projector(d.xi);
    const double m = n - 1;
    EXPECT_NEAR(evaluate_form(q, 1.5, d, 0.0), 1.5 * (to_double(q.a) * m * m + to_double(q.b) * m), 1e-11) << n;
    d.k = d.xi * d.xi.transpose() / d.xi.squaredNorm();
    EXPECT_NEAR(evaluate_form(q, 1.5, d, 0.0), 0.0, 1e-12) << n;
  }
}

TEST(EvaluateForm, HomogeneityInXi) {
  PointData p;
  p.xi = Eigen::Vector3d(0, 0, 2);
  p.k = Eigen::Vector3d(1, -1, 0).asDiagonal();
  QuadFormCoeffs c;
  EXPECT_NEAR(evaluate_form(c, 1.0, p, 1.5), 0.0, 1e-15);
  c.a = 0;
  c.b = 1;
  EXPECT_NEAR(evaluate_form(c, 1.0, p, -3.0), 2.0 / 8.0, 1e-15);
}

TEST(EvaluateForm, ZeroCovector) {
  PointData p;
  p.xi = Eigen::Vector3d::Zero();
  p.k = Eigen::Matrix3d::Identity();
  EXPECT_THROW(evaluate_form(bracket_L(3, 0), 1.0, p, 0.0), ZeroCovector);
}

TEST(EvaluateForm, RotationInvariance) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 3 + rep % 6;
    PointData p;
    p.xi = random_vector(rng, n);
    p.k = random_symmetric(rng, n);
    const Eigen::MatrixXd R = random_orthogonal(rng, n);
    PointData q;
    q.xi = R * p.xi;
    q.k = R * p.k * R.transpose();
    for (const auto& c : {bracket_L(n, ExactScalar(1, 3)), bracket_D2(n, 0)}) {
      const double a = evaluate_form(c, 0.7, p, -1.0 * n);
      const double b = evaluate_form(c, 0.7, q, -1.0 * n);
      EXPECT_LT(std::abs(a - b), 1e-10 * std::max(1.0, std::abs(a))) << rep;
    }
  }
}

TEST(CauchySchwarz, RandomPointData) {
  std::mt19937_64 rng(1000);
  for (int rep = 0; rep < 1000; ++rep) {
    const int n = 3 + rep % 8;
    const Eigen::VectorXd xi = random_vector(rng, n);
    const Eigen::MatrixXd Pi = projector(xi);
    const Eigen::MatrixXd k = random_symmetric(rng, n);
    const Eigen::MatrixXd kp = k * Pi;
    const double t = kp.trace(), u = (kp * kp).trace();
    EXPECT_LE(t * t, (n - 1) * u * (1 + 1e-12)) << rep;
    // equality exactly on K Pi proportional to Pi
    const Eigen::MatrixXd kpp = 2.5 * Pi + xi * xi.transpose();
    const Eigen::MatrixXd e = kpp * Pi;
    EXPECT_NEAR(e.trace() * e.trace(), (n - 1) * (e * e).trace(), 1e-9 * (n - 1) * (e * e).trace());
    EXPECT_LT(t * t, (n - 1) * u * (1 - 1e-9)) << rep;
  }
}

TEST(Definiteness, Examples) {
  for (int n = 3; n <= 13; ++n) {
    const auto l = bracket_definiteness(bracket_L(n, 0), n - 1);
    EXPECT_EQ(l.kind, Definiteness::POS_SEMIDEF) << n;
    EXPECT_EQ(l.null_ray, NullRay::PURE_TRACE) << n;
    const auto d = bracket_definiteness(bracket_D2(n, 0), n - 1);
    EXPECT_EQ(d.kind, Definiteness::NEG_SEMIDEF) << n;
    EXPECT_EQ(d.null_ray, NullRay::PURE_TRACE) << n;
  }
  QuadFormCoeffs c;
  c.a = 0;
  c.b = 1;
  EXPECT_EQ(bracket_definiteness(c, 4).kind, Definiteness::POS_DEF);
  c.a = -1;
  EXPECT_EQ(bracket_definiteness(c, 4).kind, Definiteness::INDEFINITE);
  c.a = 0;
  c.b = 0;
  EXPECT_EQ(bracket_definiteness(c, 4).kind, Definiteness::ZERO);
  c.a = -1;
  EXPECT_EQ(bracket_definiteness(c, 4).kind, Definiteness::NEG_SEMIDEF);
  EXPECT_EQ(bracket_definiteness(c, 4).null_ray, NullRay::TRACE_FREE);
}

TEST(Definiteness, NullRayIsNumericallyNull) {
  std::mt19937_64 rng(8);
  for (int n = 3; n <= 13; ++n) {
    PointData p;
    p.xi = random_vector(rng, n);
    p.k = projector(p.xi) / std::sqrt(n - 1.0);  // unit Frobenius norm on the ray
    EXPECT_LE(std::abs(evaluate_form(bracket_L(n, 0), 1.0, p, 0.0)), 1e-12) << n;
    EXPECT_LE(std::abs(evaluate_form(bracket_D2(n, 0), 1.0, p, 0.0)), 1e-12) << n;
  }
}

// Sampling the constraint set agrees with the two-ray classification.
TEST(Definiteness, SampledSigns) {
  std::mt19937_64 rng(21);
  for (int n = 3; n <= 9; ++n) {
    for (int rep = 0; rep < 50; ++rep) {
      PointData p;
      p.xi = random_vector(rng, n);
      p.k = random_symmetric(rng, n);
      EXPECT_GE(evaluate_form(bracket_L(n, 0), 1.0, p, 0.0), -1e-12);
      EXPECT_LE(evaluate_form(bracket_D2(n, 0), 1.0, p, 0.0), 1e-12);
    }
  }
}

TEST(Extremal, Examples) {
  const auto st = extremal_classification(Functional::DET_L, 7);
  EXPECT_EQ(st.k, 3);
  EXPECT_EQ(st.maximized_sign, 1);
  EXPECT_NE(st.text.find("det L is a local maximum"), std::string::npos);
  const auto z = extremal_classification(Functional::ZETA0_D2, 4);
  EXPECT_EQ(z.maximized_sign, 1);
  EXPECT_NE(z.text.find("zeta_{D^2}(0) is a local maximum"), std::string::npos);
  EXPECT_THROW(extremal_classification(Functional::DET_L, 4), ParityError);
  EXPECT_THROW(extremal_classification(Functional::ZETA0_L, 5), ParityError);
}

TEST(Extremal, SignChainMatchesPrintedTheorems) {
  for (int n = 3; n <= 13; ++n)
    for (auto f : {Functional::DET_L, Functional::ZETA0_L, Functional::DET_D2, Functional::ZETA0_D2}) {
      if (!applicable(f, n)) continue;
      const auto st = extremal_classification(f, n);
      EXPECT_EQ(st.maximized_sign, printed_maximized_sign(f, n)) << to_string(f) << " n=" << n;
      EXPECT_EQ(st.maximized_sign, -st.c_sign);
      const int k = n / 2;
      const int pk = k % 2 == 0 ? 1 : -1;
      if (f == Functional::DET_L) EXPECT_EQ(st.c_sign, pk) << n;
      if (f == Functional::DET_D2) EXPECT_EQ(st.c_sign, -pk) << n;
    }
}

TEST(Extremal, DeterminantCarriesExtraMinus) {
  for (int n = 3; n <= 13; n += 2) {
    const auto st = extremal_classification(Functional::DET_L, n);
    EXPECT_EQ(st.c_sign, -st.prefactor_sign * st.bracket_sign);
  }
  for (int n = 4; n <= 12; n += 2) {
    const auto st = extremal_classification(Functional::ZETA0_L, n);
    EXPECT_EQ(st.c_sign, st.prefactor_sign * st.bracket_sign);
  }
}
