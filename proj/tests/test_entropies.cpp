#include <gtest/gtest.h>

#include <cmath>

#include "qepi/entropies.hpp"

using namespace qepi;

namespace {

Spectrum spec(std::vector<double> p) { return Spectrum::from_probabilities(std::move(p)); }

// Plain bisection on g in long double, independent of g_inv's bracketing.
double g_inv_oracle(double y) {
  auto gl = [](long double x) {
    return x == 0 ? 0.0L : std::log1p(x) + x * std::log1p(1 / x);
  };
  long double lo = 0, hi = 1;
  while (gl(hi) < y) hi *= 2;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    (gl(mid) < y ? lo : hi) = mid;
  }
  return static_cast<double>(0.5L * (lo + hi));
}

}  // namespace

TEST(Entropies, VonNeumannKnownValues) {
  EXPECT_EQ(von_neumann(spec({1.0, 0.0, 0.0})), 0.0);
  for (int d = 2; d <= 8; ++d) {
    EXPECT_NEAR(von_neumann(spec(std::vector<double>(d, 1.0 / d))), std::log(d), 1e-14);
  }
  EXPECT_NEAR(von_neumann(spec({0.25, 0.75})), binary_entropy(0.25), 1e-16);
}

TEST(Entropies, RenyiConventions) {
  const Spectrum s = spec({0.5, 0.3, 0.2, 0.0});
  EXPECT_DOUBLE_EQ(renyi(s, 0.0), std::log(3.0));
  // alpha = 1/2: 2 log(sum sqrt(p)).
  EXPECT_NEAR(renyi(s, 0.5), 2.0 * std::log(std::sqrt(0.5) + std::sqrt(0.3) + std::sqrt(0.2)),
              1e-15);
  // Approaches von Neumann as alpha -> 1.
  EXPECT_NEAR(renyi(s, 1.0 - 1e-7), von_neumann(s), 1e-6);
  // Non-increasing in alpha.
  double prev = renyi(s, 0.0);
  for (double a = 0.05; a < 1.0; a += 0.05) {
    const double v = renyi(s, a);
    EXPECT_LE(v, prev + 1e-15);
    prev = v;
  }
  EXPECT_THROW(renyi(s, 1.0), DomainError);
  EXPECT_THROW(renyi(s, -0.5), DomainError);
}

TEST(Entropies, RenyiIgnoresNoiseFloor) {
  // Eigensolver residue below the noise floor does not change the rank.
  EXPECT_DOUBLE_EQ(renyi(spec({1.0 - 2e-13, 1e-13, 1e-13}), 0.0), 0.0);
}

TEST(Entropies, BinaryEntropy) {
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.5), std::log(2.0), 1e-16);
  EXPECT_THROW(binary_entropy(1.5), DomainError);
}

TEST(Entropies, GValues) {
  EXPECT_EQ(g(0.0), 0.0);
  EXPECT_NEAR(g(1.0), 2.0 * std::log(2.0), 1e-15);
  // g(x) ~ log x + 1 for large x.
  EXPECT_NEAR(g(1e8) - std::log(1e8) - 1.0, 0.0, 1e-8);
  EXPECT_THROW(g(-1.0), DomainError);
}

TEST(Entropies, GInverseMatchesBisectionOracle) {
  for (double y : {1e-12, 1e-6, 0.01, 0.3, 1.0, 2.0, 5.0, 20.0}) {
    const double x = g_inv(y);
    EXPECT_NEAR(x, g_inv_oracle(y), 1e-12 * std::max(1.0, x)) << "y=" << y;
    EXPECT_NEAR(g(x), y, 1e-13 * std::max(1.0, y)) << "y=" << y;
  }
  EXPECT_EQ(g_inv(0.0), 0.0);
  EXPECT_THROW(g_inv(-1e-3), DomainError);
}

TEST(Entropies, EntropyPowerAndPhotonNumber) {
  const Spectrum s = spec({0.6, 0.4});
  const double h = von_neumann(s);
  EXPECT_NEAR(entropy_power(s, 2.0), std::exp(2.0 * h), 1e-15);
  EXPECT_NEAR(g(photon_number(s, 1.0)), h, 1e-13);
}

TEST(Entropies, SurprisalMoments) {
  const SurprisalMoments u = surprisal_moments(spec({0.25, 0.25, 0.25, 0.25}));
  EXPECT_NEAR(u.entropy, std::log(4.0), 1e-15);
  EXPECT_NEAR(u.variance, 0.0, 1e-15);
  const SurprisalMoments m = surprisal_moments(spec({0.5, 0.5 - 1e-3, 1e-3}));
  EXPECT_GT(m.variance, 0.0);
  EXPECT_NEAR(m.second - m.entropy * m.entropy, m.variance, 1e-15);
}

TEST(Entropies, KFunction) {
  EXPECT_EQ(k(0.0), 0.0);
  EXPECT_NEAR(k(1.0), 2.0 * std::pow(std::log(2.0), 2), 1e-15);
  EXPECT_LT(k(1e6), 1.0);
  EXPECT_NEAR(k(1e6), 1.0, 1e-12);
  // 1 - k(x) ~ 1/(12 x^2).
  EXPECT_NEAR(k_complement(1e3) * 12e6, 1.0, 1e-3);
  for (double x : {0.01, 0.5, 2.0, 4.0, 10.0}) {
    EXPECT_NEAR(k_complement(x), 1.0 - k(x), 1e-13) << "x=" << x;
  }
  double prev = 0.0;
  for (double x = 0.01; x < 100.0; x *= 1.3) {
    EXPECT_GT(k(x), prev);
    prev = k(x);
  }
}

TEST(Entropies, KInverseRoundTrip) {
  for (double x : {1e-6, 1e-3, 0.1, 1.0, 3.0, 30.0, 300.0}) {
    EXPECT_NEAR(k_inv(k(x)), x, 1e-8 * std::max(1.0, x * x)) << "x=" << x;
  }
  EXPECT_THROW(k_inv(1.0), DomainError);
}

TEST(Entropies, EllFunction) {
  EXPECT_NEAR(ell(0.0), std::log(2.0), 1e-16);
  EXPECT_EQ(ell(1.0), 0.0);
  EXPECT_NEAR(ell(0.4), binary_entropy(0.7), 1e-16);
}

TEST(Entropies, EllInverseOnGrid) {
  // Near r = 0 the slope of ell vanishes, so the round trip is only
  // conditioned well away from it; r = 0 itself is exact.
  EXPECT_EQ(ell_inv(std::log(2.0)), 0.0);
  for (int j = 1; j <= 1000; ++j) {
    const double r = j / 1000.0;
    EXPECT_NEAR(ell_inv(ell(r)), r, 2e-13 / r + 1e-13) << "r=" << r;
  }
}

TEST(Entropies, FunctionalRegistry) {
  const Spectrum s = spec({0.5, 0.5});
  EXPECT_EQ(EntropyFunctional::von_neumann().name(), "von_neumann");
  EXPECT_EQ(EntropyFunctional::renyi(0.25).name(), "renyi_0.25");
  EXPECT_NEAR(EntropyFunctional::renyi(0.5).evaluate(s), std::log(2.0), 1e-15);
  EXPECT_NEAR(EntropyFunctional::certified_entropy_power_c(2), 2.0813689810056077, 1e-15);
  EXPECT_DOUBLE_EQ(EntropyFunctional::certified_photon_number_c(5), 0.25);
  EXPECT_TRUE(EntropyFunctional::entropy_power(2.0).in_certified_range(2));
  EXPECT_FALSE(EntropyFunctional::entropy_power(2.1).in_certified_range(2));
  EXPECT_FALSE(EntropyFunctional::photon_number(0.6).in_certified_range(3));
}

TEST(Entropies, ZeroExponent) {
  for (const Spectrum& s : {spec({1.0, 0.0}), spec({0.3, 0.3, 0.4})}) {
    EXPECT_EQ(entropy_power(s, 0.0), 1.0);
    EXPECT_EQ(EntropyFunctional::entropy_power(0.0).evaluate(s), 1.0);
    EXPECT_EQ(photon_number(s, 0.0), 0.0);
  }
}
