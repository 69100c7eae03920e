#include "qepi/concavity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "qepi/channels.hpp"
#include "qepi/parallel.hpp"
#include "qepi/rng.hpp"

namespace qepi {

namespace {

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }
double xlog2x(double x) {
  if (x <= 0.0) return 0.0;
  const double l = std::log(x);
  return x * l * l;
}

void require_x_in_range(double x, int d) {
  const double top = 1.0 / d;
  if (!(x >= 0.0 && x <= top * (1.0 + 1e-14))) {
    throw DomainError("x must lie in [0, 1/d]");
  }
}

constexpr double kGolden = 0.6180339887498948482;

// Maximizes f on [lo, hi] by golden-section search down to width tol.
template <class F>
double golden_section_max(F&& f, double lo, double hi, double tol) {
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kGolden * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kGolden * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TwoValuedDist::TwoValuedDist(int d, int k, double x) : d_(d), k_(k), x_(x), y_(x) {
  if (d < 2 || k < 1 || k > d) throw DomainError("two-valued distribution needs 1 <= k <= d, d >= 2");
  require_x_in_range(x, d);
  x_ = std::min(x, 1.0 / d);
  y_ = k < d ? (1.0 - k * x_) / (d - k) : x_;
}

double TwoValuedDist::entropy() const {
  return -k_ * xlogx(x_) - (d_ - k_) * xlogx(y_);
}

double TwoValuedDist::second_moment() const {
  return k_ * xlog2x(x_) + (d_ - k_) * xlog2x(y_);
}

Spectrum TwoValuedDist::to_spectrum() const {
  std::vector<double> p(static_cast<std::size_t>(d_), y_);
  std::fill_n(p.begin(), k_, x_);
  return Spectrum::from_probabilities(std::move(p));
}

double s_r(double x, int r) {
  if (r < 1) throw DomainError("s_r needs r >= 1");
  require_x_in_range(x, r + 1);
  const double rx = r * x;
  return -r * xlogx(x) - xlogx(1.0 - rx);
}

double w_r(double x, int r) {
  if (r < 1) throw DomainError("w_r needs r >= 1");
  require_x_in_range(x, r + 1);
  if (x == 0.0) return 0.0;
  const double rx = r * x;
  const double gap = std::log(x) - std::log1p(-rx);
  return rx * (1.0 - rx) * gap * gap;
}

LMaxResult l_max_bruteforce(int d, double h0, int grid) {
  if (d < 2) throw DomainError("l_max_bruteforce needs d >= 2");
  if (grid < 1000) throw DomainError("grid must have at least 1000 points");
  const double log_d = std::log(static_cast<double>(d));
  if (!(h0 >= 0.0 && h0 <= log_d + 1e-12)) {
    throw InfeasibleEntropy("entropy target outside [0, log d]");
  }
  if (h0 >= log_d) return {log_d * log_d, d - 1, 1.0 / d};

  LMaxResult best;
  best.l_max = -std::numeric_limits<double>::infinity();
  const double top = 1.0 / d;
  for (int k = 1; k < d; ++k) {
    auto residual = [&](double x) { return TwoValuedDist(d, k, x).entropy() - h0; };
    double x_prev = 0.0;
    double f_prev = residual(0.0);
    for (int i = 1; i <= grid; ++i) {
      const double x_next = i == grid ? top : top * i / grid;
      const double f_next = residual(x_next);
      const bool crosses = (f_prev <= 0.0 && f_next >= 0.0) || (f_prev >= 0.0 && f_next <= 0.0);
      if (crosses) {
        double lo = x_prev;
        double hi = x_next;
        double x_root;
        if (f_prev == 0.0) {
          x_root = lo;
        } else if (f_next == 0.0) {
          x_root = hi;
        } else {
          const bool rising = f_prev < 0.0;
          for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            ((residual(mid) < 0.0) == rising ? lo : hi) = mid;
          }
          x_root = 0.5 * (lo + hi);
        }
        const double l = TwoValuedDist(d, k, x_root).second_moment();
        // Ties go to the larger k.
        if (l >= best.l_max - 1e-13 * std::max(1.0, std::abs(l))) {
          best = {l, k, x_root};
        }
      }
      x_prev = x_next;
      f_prev = f_next;
    }
  }
  if (best.k_star == 0) throw InfeasibleEntropy("no two-valued distribution reaches the target");
  return best;
}

double c_max_lower_bound(int d) {
  if (d < 2) throw DomainError("c_max bound needs d >= 2");
  const double l = std::log(static_cast<double>(d - 1));
  return 1.0 / ((1.0 + l) / 2.0 + l * l / 4.0);
}

ThresholdResult c_max_entropy_power(int d) {
  if (d < 2) throw DomainError("c_max needs d >= 2");
  const int r = d - 1;
  const double top = 1.0 / d;
  constexpr int kGrid = 10000;
  int best_i = 0;
  double best_w = -1.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double x = i == kGrid ? top : top * i / kGrid;
    const double w = w_r(x, r);
    if (w > best_w) {
      best_w = w;
      best_i = i;
    }
  }
  const double lo = top * std::max(0, best_i - 1) / kGrid;
  const double hi = best_i + 1 >= kGrid ? top : top * (best_i + 1) / kGrid;
  const double x_star = golden_section_max([r](double x) { return w_r(x, r); }, lo, hi, 1e-12 * top);
  const double w_star = std::max(w_r(x_star, r), best_w);

  ThresholdResult res;
  res.d = d;
  res.max_w = w_star;
  res.c_max = 1.0 / w_star;
  res.argmax_x = x_star;
  res.lower_bound = c_max_lower_bound(d);
  return res;
}

ConditionCheck epni_condition_check(int d, double c, int grid) {
  if (d < 2) throw DomainError("condition check needs d >= 2");
  if (!(c > 0.0)) throw DomainError("condition check needs c > 0");
  if (grid < 1000) throw DomainError("grid must have at least 1000 points");
  const int r = d - 1;
  const double top = 1.0 / d;
  ConditionCheck res;
  res.worst_margin = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid; ++i) {
    const double x = i == grid ? top : top * i / grid;
    const double y = g_inv(c * s_r(x, r));
    const double margin = k(y) - c * w_r(x, r);
    if (margin < res.worst_margin) {
      res.worst_margin = margin;
      res.worst_x = x;
    }
  }
  res.holds = res.worst_margin >= -1e-10;
  return res;
}

double concavity_fuzz(const EntropyFunctional& f, int d, std::int64_t trials, std::uint64_t seed,
                      bool force) {
  if (!force && !f.in_certified_range(d)) {
    throw OutOfCertifiedRange(f.name() + " parameter is outside the certified range");
  }
  if (trials < 1) throw DomainError("trials must be positive");
  std::vector<double> margins(static_cast<std::size_t>(trials));
  for_each_index(trials, Execution::Parallel, [&](std::int64_t t) {
    std::mt19937_64 gen(trial_seed(seed, d, t));
    std::uniform_int_distribution<int> rank(1, d);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const DensityMatrix rho = random_state(d, rank(gen), gen);
    const DensityMatrix sigma = random_state(d, rank(gen), gen);
    const double p1 = unit(gen);
    const double p2 = unit(gen);
    auto phi = [&](double p) {
      return f.evaluate(spectrum(mixing_channel(rho, sigma, SwapParams(p))));
    };
    margins[static_cast<std::size_t>(t)] = phi(0.5 * (p1 + p2)) - 0.5 * (phi(p1) + phi(p2));
  });
  return *std::min_element(margins.begin(), margins.end());
}

std::vector<GkPoint> parametric_gk_curve(int samples) {
  if (samples < 2) throw DomainError("need at least two samples");
  std::vector<GkPoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double e = -6.0 + 12.0 * i / (samples - 1);
    const double y = std::pow(10.0, e);
    out.push_back({y, g(y), k(y), k_complement(y)});
  }
  return out;
}

std::vector<double> gk_slopes(const std::vector<GkPoint>& curve) {
  std::vector<double> slopes;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const GkPoint& a = curve[i];
    const GkPoint& b = curve[i + 1];
    const double dk = (a.k > 0.5 && b.k > 0.5) ? a.k_complement - b.k_complement : b.k - a.k;
    slopes.push_back(dk / (b.g - a.g));
  }
  return slopes;
}

}  // namespace qepi
