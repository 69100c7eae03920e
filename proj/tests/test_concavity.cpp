#include <gtest/gtest.h>

#include <cmath>

#include "qepi/concavity.hpp"

using namespace qepi;

TEST(Concavity, TwoValuedEndpoints) {
  // K = 6: x = 0 leaves K - k equal weights, x = 1/K is uniform.
  const int K = 6;
  for (int k = 1; k < K; ++k) {
    const TwoValuedDist lo(K, k, 0.0);
    EXPECT_NEAR(lo.entropy(), std::log(K - k), 1e-15);
    EXPECT_NEAR(lo.second_moment(), std::pow(std::log(K - k), 2), 1e-14);
    const TwoValuedDist hi(K, k, 1.0 / K);
    EXPECT_NEAR(hi.entropy(), std::log(K), 1e-15);
    EXPECT_NEAR(hi.second_moment(), std::pow(std::log(K), 2), 1e-14);
  }
  EXPECT_THROW(TwoValuedDist(6, 7, 0.1), DomainError);
  EXPECT_NEAR(TwoValuedDist(6, 6, 1.0 / 6).entropy(), std::log(6.0), 1e-15);
  EXPECT_THROW(TwoValuedDist(6, 2, 0.2), DomainError);
}

TEST(Concavity, TwoValuedMatchesSpectrum) {
  const TwoValuedDist q(5, 2, 0.1);
  const Spectrum s = q.to_spectrum();
  EXPECT_NEAR(von_neumann(s), q.entropy(), 1e-15);
  EXPECT_NEAR(surprisal_moments(s).second, q.second_moment(), 1e-15);
}

TEST(Concavity, SrAndWr) {
  EXPECT_EQ(s_r(0.0, 3), 0.0);
  EXPECT_EQ(w_r(0.0, 3), 0.0);
  // At x = 1/(r+1) the distribution is uniform on r+1 points.
  EXPECT_NEAR(s_r(0.25, 3), std::log(4.0), 1e-15);
  EXPECT_NEAR(w_r(0.25, 3), 0.0, 1e-16);
  // w_r is the surprisal variance of (x,...,x, 1 - r x).
  const double x = 0.07;
  const int r = 4;
  const double y = 1.0 - r * x;
  const double h = -r * x * std::log(x) - y * std::log(y);
  const double l = r * x * std::pow(std::log(x), 2) + y * std::pow(std::log(y), 2);
  EXPECT_NEAR(w_r(x, r), l - h * h, 1e-14);
  EXPECT_NEAR(s_r(x, r), h, 1e-15);
  EXPECT_THROW(w_r(0.3, 3), DomainError);
}

TEST(Concavity, CmaxQubit) {
  const ThresholdResult t = c_max_entropy_power(2);
  EXPECT_NEAR(t.c_max, 2.2767, 5e-4);
  EXPECT_GT(t.c_max, 1.0 / std::pow(std::log(2.0), 2));
  EXPECT_NEAR(1.0 / t.max_w, t.c_max, 1e-12);
  EXPECT_NEAR(w_r(t.argmax_x, 1), t.max_w, 1e-14);
}

TEST(Concavity, CmaxAboveClosedFormBound) {
  for (int d = 3; d <= 64; ++d) {
    const ThresholdResult t = c_max_entropy_power(d);
    EXPECT_GE(t.c_max, t.lower_bound) << "d=" << d;
    EXPECT_GT(t.lower_bound, 1.0 / std::pow(std::log(d), 2)) << "d=" << d;
    EXPECT_DOUBLE_EQ(t.lower_bound, c_max_lower_bound(d));
  }
}

TEST(Concavity, CmaxRatioTrendsToOne) {
  double prev = 0.0;
  for (int d : {8, 64, 512, 4096}) {
    const ThresholdResult t = c_max_entropy_power(d);
    const double ratio = t.c_max / t.lower_bound;
    EXPECT_GT(ratio, 1.0);
    if (prev > 0.0) EXPECT_LT(ratio, prev);
    prev = ratio;
  }
}

TEST(Concavity, LmaxPrefersLargestK) {
  for (int d = 3; d <= 6; ++d) {
    const double top = std::log(d);
    for (double f : {0.1, 0.5, 0.9}) {
      const double h0 = f * top;
      const LMaxResult r = l_max_bruteforce(d, h0, 1000);
      EXPECT_EQ(r.k_star, d - 1);
      EXPECT_NEAR(r.l_max - h0 * h0, w_r(r.x_star, d - 1), 1e-8);
    }
  }
}

TEST(Concavity, EpniConditionAtCertifiedExponent) {
  for (int d = 2; d <= 16; ++d) {
    const ConditionCheck c = epni_condition_check(d, 1.0 / (d - 1), 10000);
    EXPECT_TRUE(c.holds) << "d=" << d << " margin " << c.worst_margin;
  }
}

TEST(Concavity, GkCurveConcaveIncreasing) {
  const auto pts = parametric_gk_curve(1201);
  const auto slopes = gk_slopes(pts);
  ASSERT_EQ(slopes.size(), pts.size() - 1);
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    EXPECT_GT(slopes[i], 0.0) << i;
    if (i > 0) EXPECT_LE(slopes[i], slopes[i - 1] * (1.0 + 1e-9)) << i;
  }
}

TEST(Concavity, FuzzCertifiedFunctionalsConcave) {
  for (int d : {2, 3, 5}) {
    EXPECT_GE(concavity_fuzz(EntropyFunctional::von_neumann(), d, 300, 1), -1e-12);
    EXPECT_GE(concavity_fuzz(EntropyFunctional::subentropy(), d, 300, 2), -1e-12);
    EXPECT_GE(concavity_fuzz(EntropyFunctional::renyi(0.5), d, 300, 3), -1e-12);
    EXPECT_GE(concavity_fuzz(
                  EntropyFunctional::entropy_power(EntropyFunctional::certified_entropy_power_c(d)),
                  d, 300, 4),
              -1e-12);
    EXPECT_GE(concavity_fuzz(EntropyFunctional::photon_number(
                                 EntropyFunctional::certified_photon_number_c(d)),
                             d, 300, 5),
              -1e-12);
  }
}

TEST(Concavity, FuzzRefusesUncertifiedUnlessForced) {
  const auto f = EntropyFunctional::entropy_power(10.0);
  EXPECT_THROW(concavity_fuzz(f, 3, 10, 1), OutOfCertifiedRange);
  EXPECT_NO_THROW(concavity_fuzz(f, 3, 10, 1, true));
}
