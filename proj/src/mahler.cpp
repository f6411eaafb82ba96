#include "toric/mahler.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace toric {

namespace {

// One Graeffe root-squaring step q(x^2) = +-p(x) p(-x) on an mpfr
// coefficient array (degree preserved); returns the applied normalization
// log-scale so exponents stay tame.
double graeffe_step(std::vector<mpfr_t>& a, std::vector<mpfr_t>& scratch,
                    mpfr_t t, mpfr_t acc) {
  const int d = static_cast<int>(a.size()) - 1;
  for (int j = 0; j <= d; ++j) {
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    int lo = std::max(0, 2 * j - d), hi = std::min(d, 2 * j);
    for (int l = lo; l <= hi; ++l) {
      mpfr_mul(t, a[l], a[2 * j - l], MPFR_RNDN);
      if (l & 1)
        mpfr_sub(acc, acc, t, MPFR_RNDN);
      else
        mpfr_add(acc, acc, t, MPFR_RNDN);
    }
    mpfr_set(scratch[j], acc, MPFR_RNDN);
  }
  // normalize by 2^E where E is the max exponent
  mpfr_exp_t emax = 0;
  bool any = false;
  for (int j = 0; j <= d; ++j) {
    if (mpfr_zero_p(scratch[j])) continue;
    mpfr_exp_t e = mpfr_get_exp(scratch[j]);
    if (!any || e > emax) emax = e;
    any = true;
  }
  if (!any) throw std::runtime_error("graeffe: collapsed to zero");
  for (int j = 0; j <= d; ++j) {
    if (!mpfr_zero_p(scratch[j]))
      mpfr_set_exp(scratch[j], mpfr_get_exp(scratch[j]) - emax);
    mpfr_swap(a[j], scratch[j]);
  }
  return static_cast<double>(emax) * std::log(2.0);
}

// 2^-k log ||G^k(p)||_2 at the given precision, with the accumulated
// normalization scales folded back in.
double graeffe_estimate(const std::vector<Int>& s, int k, mpfr_prec_t prec) {
  const int d = static_cast<int>(s.size()) - 1;
  std::vector<mpfr_t> a(d + 1), scratch(d + 1);
  for (int i = 0; i <= d; ++i) {
    mpfr_init2(a[i], prec);
    mpfr_init2(scratch[i], prec);
    mpfr_set_z(a[i], s[i].get_mpz_t(), MPFR_RNDN);
  }
  mpfr_t t, acc;
  mpfr_init2(t, prec);
  mpfr_init2(acc, prec);
  double scale_log = 0.0;  // log of the product of normalizations, unfolded
  for (int step = 0; step < k; ++step)
    scale_log = 2.0 * scale_log + graeffe_step(a, scratch, t, acc);
  mpfr_set_ui(acc, 0, MPFR_RNDN);
  for (int i = 0; i <= d; ++i) {
    mpfr_mul(t, a[i], a[i], MPFR_RNDN);
    mpfr_add(acc, acc, t, MPFR_RNDN);
  }
  mpfr_log(acc, acc, MPFR_RNDN);
  double log_l2 = 0.5 * mpfr_get_d(acc, MPFR_RNDN) + scale_log;
  for (int i = 0; i <= d; ++i) {
    mpfr_clear(a[i]);
    mpfr_clear(scratch[i]);
  }
  mpfr_clear(t);
  mpfr_clear(acc);
  return std::ldexp(log_l2, -k);
}

}  // namespace

MahlerResult mahler_measure(const std::vector<Int>& s_in) {
  std::vector<Int> s = s_in;
  while (!s.empty() && s.back() == 0) s.pop_back();
  if (s.empty()) throw std::domain_error("mahler_measure: zero polynomial");
  size_t low = 0;
  while (low < s.size() && s[low] == 0) ++low;  // x^k factor: measure 0
  s.erase(s.begin(), s.begin() + low);
  const int d = static_cast<int>(s.size()) - 1;

  if (d == 0) {
    signed long e;
    double m = mpz_get_d_2exp(&e, s[0].get_mpz_t());
    double v = std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
    return {v, 1e-15 * (1.0 + std::fabs(v))};
  }

  // Landau / Mignotte sandwich:
  //   m(p) <= 2^-k log ||G^k p||_2 <= m(p) + 2^-k (d log 2 + log sqrt(d+1)),
  // so k Graeffe steps pin m(p) to width w_k, unconditionally.
  const double target = 0.4e-9;
  const double gap = static_cast<double>(d) * std::log(2.0) +
                     0.5 * std::log(static_cast<double>(d + 1));
  int k = 1;
  while (std::ldexp(gap, -k) > target && k < 62) ++k;

  // precision grows with the step count: clustered moduli cost roughly
  // log2(d) mantissa bits per squaring
  const mpfr_prec_t base =
      static_cast<mpfr_prec_t>(k * (std::log2(static_cast<double>(d + 1)) + 4.0));
  double hi1 = graeffe_estimate(s, k, base + 64);
  double hi2 = graeffe_estimate(s, k, base + 160);
  double width = std::ldexp(gap, -k);
  double value = hi2 - 0.5 * width;
  double err = 0.5 * width + std::fabs(hi1 - hi2) + 1e-13 * (1.0 + std::fabs(value));
  return {value, err};
}

}  // namespace toric
