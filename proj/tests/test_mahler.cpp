#include "doctest.h"

#include <complex>
#include <random>

#include "toric/mahler.hpp"
#include "toric/resultant.hpp"

using namespace toric;

namespace {
std::vector<Int> zp(std::vector<long> v) {
  std::vector<Int> out;
  for (long c : v) out.emplace_back(c);
  return out;
}
}  // namespace

TEST_CASE("mahler trivial cases") {
  CHECK(mahler_measure(zp({0, 1})).value == doctest::Approx(0.0).epsilon(1e-12));
  auto r = mahler_measure(zp({-1, 2}));  // 2x - 1
  CHECK(std::fabs(r.value - std::log(2.0)) <= r.error);
  CHECK(r.error <= 1e-9);
  CHECK(mahler_measure(zp({1, 1, 1})).value ==
        doctest::Approx(0.0).epsilon(1e-10));
  CHECK(mahler_measure(zp({5})).value ==
        doctest::Approx(std::log(5.0)).epsilon(1e-12));
  CHECK_THROWS(mahler_measure(zp({0})));
}

TEST_CASE("mahler known values") {
  // x - 2 and repeated factors
  CHECK(mahler_measure(zp({-2, 1})).value ==
        doctest::Approx(std::log(2.0)).epsilon(1e-9));
  // (x-2)^3 = x^3 - 6x^2 + 12x - 8
  CHECK(mahler_measure(zp({-8, 12, -6, 1})).value ==
        doctest::Approx(3 * std::log(2.0)).epsilon(1e-7));
  // Lehmer's polynomial
  auto l = mahler_measure(zp({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}));
  CHECK(l.value == doctest::Approx(0.16235761302889).epsilon(1e-8));
}

TEST_CASE("mahler multiplicativity") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-6, 6);
  for (int rep = 0; rep < 10; ++rep) {
    std::vector<Int> a, b;
    int da = 2 + rep % 3, db = 1 + rep % 4;
    for (int i = 0; i <= da; ++i) a.emplace_back(c(rng));
    for (int i = 0; i <= db; ++i) b.emplace_back(c(rng));
    if (a.back() == 0) a.back() = 1;
    if (b.back() == 0) b.back() = 1;
    bool azero = true, bzero = true;
    for (auto& x : a) azero &= (x == 0);
    for (auto& x : b) bzero &= (x == 0);
    if (azero || bzero) continue;
    std::vector<Int> ab(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) ab[i + j] += a[i] * b[j];
    auto ma = mahler_measure(a), mb = mahler_measure(b), mab = mahler_measure(ab);
    CHECK(mab.value ==
          doctest::Approx(ma.value + mb.value).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("mahler of a galois norm against direct embedding sums") {
  // R = (zeta - zeta^2) x + (1 - zeta^2) over Q(zeta_31)
  const long n = 31;
  CycloPoly r = {Cyclotomic(Rat(1)) - Cyclotomic::zeta(n, 2),
                 Cyclotomic::zeta(n, 1) - Cyclotomic::zeta(n, 2)};
  auto s = galois_norm_poly(r);
  CHECK(static_cast<long>(s.size()) - 1 == euler_phi(n));
  auto m = mahler_measure(s);
  // oracle: log|content-free lead| + sum_u log+ |sigma_u(-b/a)|
  double direct = 0.0;
  {
    signed long e;
    double mm = mpz_get_d_2exp(&e, s.back().get_mpz_t());
    direct = std::log(std::fabs(mm)) + e * std::log(2.0);
  }
  for (long u : units_mod(n)) {
    std::complex<double> a = r[1].galois(u).embed();
    std::complex<double> b = r[0].galois(u).embed();
    double az = std::abs(-b / a);
    if (az > 1.0) direct += std::log(az);
  }
  CHECK(m.value == doctest::Approx(direct).epsilon(1e-7));
  CHECK(m.error <= 1e-9);
  CHECK(std::fabs(m.value - direct) <= 1e-7);
}
