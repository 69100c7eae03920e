#include <gtest/gtest.h>

#include <cmath>

#include "qepi/channels.hpp"

using namespace qepi;

namespace {

double gap(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Channels, SwapParamsDomain) {
  EXPECT_THROW(SwapParams(-0.1), DomainError);
  EXPECT_THROW(SwapParams(1.1), DomainError);
  EXPECT_THROW(SwapParams(std::nan("")), DomainError);
  EXPECT_DOUBLE_EQ(SwapParams(0.25).cross_weight(), std::sqrt(0.25 * 0.75));
}

TEST(Channels, SwapExchangesFactors) {
  const int d = 3;
  const Matrix s = swap_operator(d);
  EXPECT_LT(gap(s * s, Matrix::Identity(d * d, d * d)), 1e-16);
  // S |i, j> = |j, i>.
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) EXPECT_EQ(s(j * d + i, i * d + j), Complex(1.0));
  }
}

TEST(Channels, PartialSwapIsUnitary) {
  for (double a : {0.0, 0.3, 1.0}) {
    const Matrix u = partial_swap_unitary(3, SwapParams(a));
    EXPECT_LT(gap(u.adjoint() * u, Matrix::Identity(9, 9)), 1e-15);
  }
}

TEST(Channels, KrausCompleteness) {
  for (int d : {2, 3, 5}) {
    const KrausSet k = partial_swap_kraus(d, SwapParams(0.37));
    EXPECT_EQ(static_cast<int>(k.operators.size()), d);
    EXPECT_LT(gap(k.completeness(), Matrix::Identity(d * d, d * d)), 1e-15);
  }
}

TEST(Channels, ThreeRealizationsAgree) {
  std::mt19937_64 gen(21);
  for (int d : {2, 3, 4}) {
    for (int t = 0; t < 20; ++t) {
      const DensityMatrix rho = random_state(d, 1 + t % d, gen);
      const DensityMatrix sigma = random_state(d, d - t % d, gen);
      const SwapParams p(std::uniform_real_distribution<double>(0, 1)(gen));
      const Matrix c = boxplus_closed_form(rho, sigma, p).matrix();
      EXPECT_LT(gap(c, boxplus_via_unitary(rho, sigma, p).matrix()), 1e-14);
      EXPECT_LT(gap(c, boxplus_via_kraus(rho, sigma, p).matrix()), 1e-14);
    }
  }
}

TEST(Channels, Endpoints) {
  std::mt19937_64 gen(2);
  const DensityMatrix rho = random_state(3, 3, gen);
  const DensityMatrix sigma = random_state(3, 2, gen);
  EXPECT_EQ(gap(boxplus_closed_form(rho, sigma, SwapParams(1.0)).matrix(), rho.matrix()), 0.0);
  EXPECT_EQ(gap(boxplus_closed_form(rho, sigma, SwapParams(0.0)).matrix(), sigma.matrix()), 0.0);
}

TEST(Channels, CommutingInputsMix) {
  const double p1[] = {0.7, 0.2, 0.1};
  const double p2[] = {0.1, 0.1, 0.8};
  const DensityMatrix rho = DensityMatrix::diagonal(p1);
  const DensityMatrix sigma = DensityMatrix::diagonal(p2);
  const Matrix out = boxplus_closed_form(rho, sigma, SwapParams(0.25)).matrix();
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(out(i, i).real(), 0.25 * p1[i] + 0.75 * p2[i], 1e-16);
  EXPECT_EQ(gap(out, mixing_channel(rho, sigma, SwapParams(0.25)).matrix()), 0.0);
}

TEST(Channels, ChannelOnProductMatchesRule) {
  std::mt19937_64 gen(8);
  const DensityMatrix rho = random_state(3, 2, gen);
  const DensityMatrix sigma = random_state(3, 3, gen);
  const SwapParams p(0.6);
  const Matrix prod = kron(rho.matrix(), sigma.matrix());
  EXPECT_LT(gap(apply_partial_swap_channel(prod, 3, p).matrix(),
                boxplus_closed_form(rho, sigma, p).matrix()),
            1e-15);
}

TEST(Channels, MixedEnvironmentIsDepolarizing) {
  std::mt19937_64 gen(4);
  const int d = 4;
  const DensityMatrix rho = random_state(d, 2, gen);
  const FixedSigmaChannel ch(DensityMatrix::maximally_mixed(d), SwapParams(0.3));
  const Matrix expect = 0.3 * rho.matrix() + 0.7 * Matrix::Identity(d, d) / d;
  EXPECT_LT(gap(ch.apply(rho).matrix(), expect), 1e-16);
  EXPECT_THROW(ch.apply(DensityMatrix::maximally_mixed(3)), DimensionMismatch);
}

TEST(Channels, BlochRuleMatchesMatrixRule) {
  std::mt19937_64 gen(6);
  for (int t = 0; t < 200; ++t) {
    const BlochVector r1 = random_bloch(gen);
    const BlochVector r2 = random_bloch(gen);
    const SwapParams p(std::uniform_real_distribution<double>(0, 1)(gen));
    const BlochVector r = boxplus_bloch(r1, r2, p);
    const DensityMatrix out = boxplus_closed_form(bloch_to_state(r1), bloch_to_state(r2), p);
    const BlochVector m = state_to_bloch(out);
    EXPECT_NEAR(m.x, r.x, 1e-15);
    EXPECT_NEAR(m.y, r.y, 1e-15);
    EXPECT_NEAR(m.z, r.z, 1e-15);
    EXPECT_LE(r.norm(), 1.0 + 1e-15);
  }
}

TEST(Channels, MismatchedDimensionsRejected) {
  EXPECT_THROW(boxplus_closed_form(DensityMatrix::maximally_mixed(2),
                                   DensityMatrix::maximally_mixed(3), SwapParams(0.5)),
               DimensionMismatch);
}
