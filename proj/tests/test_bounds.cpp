#include <gtest/gtest.h>

#include <cmath>

#include "qepi/bounds.hpp"
#include "qepi/entropies.hpp"

using namespace qepi;

TEST(Bounds, KindNames) {
  for (BoundKind k : kAllBoundKinds) EXPECT_EQ(parse_bound_kind(to_string(k)), k);
  EXPECT_FALSE(parse_bound_kind("optimal").has_value());
}

TEST(Bounds, EqualEntropiesReturnThatEntropy) {
  for (int d : {2, 3, 8}) {
    for (double f : {0.0, 0.3, 1.0}) {
      const double h = f * std::log(d);
      for (double a : {0.0, 0.2, 0.5, 1.0}) {
        for (BoundKind k : kAllBoundKinds) {
          if (!bound_certified(k, d)) continue;
          EXPECT_NEAR(bound_value(k, h, h, a, d), h, 1e-12)
              << to_string(k) << " d=" << d << " a=" << a;
        }
      }
    }
  }
}

TEST(Bounds, OrderingAtMixedEnvironment) {
  // With H(sigma) = log d every bound is a mean of H0 and log d; a larger
  // exponent pulls it toward the maximum.
  const int d = 2;
  const double top = std::log(2.0);
  for (double h0 : {0.0, 0.2, 0.5}) {
    const double lin = bound_linear(h0, top, 0.5);
    const double ep = bound_entropy_power(h0, top, 0.5, d);
    const double opt = bound_qubit_optimal(h0, top, 0.5);
    EXPECT_GE(ep, lin - 1e-15);
    EXPECT_GE(opt, ep - 1e-12);
  }
}

TEST(Bounds, QubitOptimalRefusedAboveTwo) {
  EXPECT_THROW(bound_value(BoundKind::QubitOptimal, 0.1, 0.1, 0.5, 4), DomainError);
  EXPECT_FALSE(bound_certified(BoundKind::QubitOptimal, 4));
  EXPECT_THROW(sample_bound_curve(BoundKind::QubitOptimal, SwapParams(0.5), 0.3, 4, 10),
               DomainError);
}

TEST(Bounds, QubitOptimalTightForAlignedStates) {
  for (double r1 : {0.0, 0.2, 0.9, 1.0}) {
    for (double r2 : {0.0, 0.5, 1.0}) {
      for (double a : {0.1, 0.5, 0.8}) {
        const DensityMatrix rho = bloch_to_state({0.0, 0.0, r1});
        const DensityMatrix sigma = bloch_to_state({0.0, 0.0, r2});
        const double h_out = von_neumann(spectrum(boxplus_closed_form(rho, sigma, SwapParams(a))));
        EXPECT_NEAR(h_out, bound_qubit_optimal(ell(r1), ell(r2), a), 1e-12);
      }
    }
  }
}

TEST(Bounds, SoundOnRandomInputs) {
  std::mt19937_64 gen(41);
  for (int d : {2, 3, 4}) {
    for (int t = 0; t < 100; ++t) {
      const DensityMatrix rho = random_state(d, 1 + t % d, gen);
      const DensityMatrix sigma = random_state(d, 1 + (t / 3) % d, gen);
      const SwapParams p(std::uniform_real_distribution<double>(0, 1)(gen));
      const double h_out = von_neumann(spectrum(boxplus_closed_form(rho, sigma, p)));
      const double hr = von_neumann(spectrum(rho));
      const double hs = von_neumann(spectrum(sigma));
      for (BoundKind k : kAllBoundKinds) {
        if (!bound_certified(k, d)) continue;
        EXPECT_GE(h_out, bound_value(k, hr, hs, p.a(), d) - 1e-9) << to_string(k);
      }
    }
  }
}

TEST(Bounds, CurveSampling) {
  const BoundCurve c = sample_bound_curve(BoundKind::Linear, SwapParams(0.5), 0.4, 3, 2);
  ASSERT_EQ(c.samples.size(), 2u);
  EXPECT_EQ(c.samples[0].first, 0.0);
  EXPECT_EQ(c.samples[1].first, std::log(3.0));
  EXPECT_DOUBLE_EQ(c.samples[0].second, 0.2);
  EXPECT_THROW(sample_bound_curve(BoundKind::Linear, SwapParams(0.5), 0.4, 3, 1), DomainError);
}

TEST(Bounds, MinimumOutputAtPureInput) {
  const double probs[] = {0.6, 0.3, 0.1};
  const DensityMatrix sigma = DensityMatrix::diagonal(probs);
  for (BoundKind k : {BoundKind::Linear, BoundKind::EntropyPower, BoundKind::PhotonNumber}) {
    const MinOutputBound m = min_output_entropy_lb(k, SwapParams(0.4), sigma);
    EXPECT_TRUE(m.monotone) << to_string(k);
    EXPECT_EQ(m.argmin_h0, 0.0);
    const double hs = von_neumann(spectrum(sigma));
    EXPECT_DOUBLE_EQ(m.value, bound_value(k, 0.0, hs, 0.4, 3));
  }
}

TEST(Bounds, Holevo) {
  for (int d : {2, 3, 8}) {
    for (double a : {0.0, 0.25, 1.0}) {
      const double v = holevo_upper_bound(SwapParams(a), DensityMatrix::maximally_mixed(d));
      EXPECT_NEAR(v, a * std::log(d), 1e-14);
    }
  }
  for (double delta : {0.0, 0.1, 0.5}) {
    const double p[] = {delta, 1.0 - delta};
    const double v = holevo_upper_bound(SwapParams(0.3), DensityMatrix::diagonal(p));
    EXPECT_NEAR(v, std::log(2.0) - 0.7 * binary_entropy(delta), 1e-12);
  }
}
