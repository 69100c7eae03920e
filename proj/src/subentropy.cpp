// Subentropy as a divided difference.
//
// With f(t) = t^n log t, the defining sum is -f[l_1, ..., l_n], the divided
// difference of order n-1 over the eigenvalues. Coincident nodes take the
// confluent (Hermite) form f^(m)(t)/m!, which is the limit the definition asks
// for, and f^(m)(0) = 0 for m < n so zero eigenvalues need no special casing.
//
// The table is evaluated in MPFR with enough bits to absorb the cancellation
// from closely spaced nodes; every node is an exact double, so the result is
// the exact divided difference of the computed spectrum rounded once.

#include <algorithm>
#include <cmath>
#include <vector>

#include <mpfr.h>

#include "qepi/entropies.hpp"

namespace qepi {

namespace {

class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(const BigFloat&) = delete;
  BigFloat& operator=(const BigFloat&) = delete;
  BigFloat(BigFloat&& o) noexcept {
    // mpfr_t is an array type; steal the limbs by swapping with a fresh value.
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;
constexpr mpfr_prec_t kMaxBits = 1 << 15;

// Bits needed so that n-1 levels of differencing keep ~64 good bits.
mpfr_prec_t working_precision(const std::vector<double>& nodes) {
  const std::size_t n = nodes.size();
  double bits = 64.0 + static_cast<double>(n);
  for (std::size_t m = 1; m < n; ++m) {
    double min_span = 1.0;
    for (std::size_t i = 0; i + m < n; ++i) {
      const double span = nodes[i + m] - nodes[i];
      if (span > 0.0) min_span = std::min(min_span, span);
    }
    bits += std::max(0.0, -std::log2(min_span));
  }
  return static_cast<mpfr_prec_t>(std::min<double>(bits, kMaxBits));
}

// f^(m)(t)/m! for f(t) = t^n log t: C(n,m) t^(n-m) (log t + H_n - H_(n-m)).
void scaled_derivative(BigFloat& out, double t, int n, int m, mpfr_prec_t bits) {
  if (t == 0.0) {  // m <= n-1 here, so a positive power of t remains
    mpfr_set_zero(out.get(), 1);
    return;
  }
  BigFloat tmp(bits);
  BigFloat logt(bits);
  mpfr_set_d(logt.get(), t, kRnd);
  mpfr_log(logt.get(), logt.get(), kRnd);
  // log t + sum_{j=n-m+1}^{n} 1/j
  for (int j = n - m + 1; j <= n; ++j) {
    mpfr_set_ui(tmp.get(), 1, kRnd);
    mpfr_div_ui(tmp.get(), tmp.get(), static_cast<unsigned long>(j), kRnd);
    mpfr_add(logt.get(), logt.get(), tmp.get(), kRnd);
  }
  mpfr_set_d(tmp.get(), t, kRnd);
  mpfr_pow_ui(tmp.get(), tmp.get(), static_cast<unsigned long>(n - m), kRnd);
  mpfr_mul(out.get(), logt.get(), tmp.get(), kRnd);
  // binomial coefficient, exact in MPFR at these sizes
  mpfr_set_ui(tmp.get(), 1, kRnd);
  for (int j = 1; j <= m; ++j) {
    mpfr_mul_ui(tmp.get(), tmp.get(), static_cast<unsigned long>(n - m + j), kRnd);
    mpfr_div_ui(tmp.get(), tmp.get(), static_cast<unsigned long>(j), kRnd);
  }
  mpfr_mul(out.get(), out.get(), tmp.get(), kRnd);
}

}  // namespace

double subentropy(const Spectrum& s) {
  std::vector<double> nodes(s.values().begin(), s.values().end());
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return 0.0;
  std::sort(nodes.begin(), nodes.end());
  const mpfr_prec_t bits = working_precision(nodes);

  // Column-wise divided-difference table, dd[i] holds f[x_i .. x_{i+m}].
  std::vector<BigFloat> dd;
  dd.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    dd.emplace_back(bits);
    scaled_derivative(dd.back(), nodes[static_cast<std::size_t>(i)], n, 0, bits);
  }
  BigFloat span(bits);
  for (int m = 1; m < n; ++m) {
    for (int i = 0; i + m < n; ++i) {
      const double lo = nodes[static_cast<std::size_t>(i)];
      const double hi = nodes[static_cast<std::size_t>(i + m)];
      if (lo == hi) {
        scaled_derivative(dd[static_cast<std::size_t>(i)], lo, n, m, bits);
      } else {
        mpfr_sub(dd[static_cast<std::size_t>(i)].get(), dd[static_cast<std::size_t>(i + 1)].get(),
                 dd[static_cast<std::size_t>(i)].get(), kRnd);
        mpfr_set_d(span.get(), hi, kRnd);
        mpfr_sub_d(span.get(), span.get(), lo, kRnd);
        mpfr_div(dd[static_cast<std::size_t>(i)].get(), dd[static_cast<std::size_t>(i)].get(),
                 span.get(), kRnd);
      }
    }
  }
  return -mpfr_get_d(dd.front().get(), kRnd);
}

}  // namespace qepi
