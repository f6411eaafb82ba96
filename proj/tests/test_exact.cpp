#include "doctest.h"

#include "toric/exact.hpp"

using namespace toric;

TEST_CASE("exact scalar arithmetic and zero detection") {
  Exact a = Exact::log_prime(2, Rat(3));
  Exact b = Exact::log_prime(2, Rat(-3));
  CHECK((a + b).is_zero());
  CHECK(a.sign() == 1);
  CHECK(b.sign() == -1);

  // 1 - log 2 > 0, 1 - 2 log 2 < 0
  Exact c = Exact(Rat(1)) - Exact::log_prime(2, Rat(1));
  CHECK(c.sign() == 1);
  Exact d = Exact(Rat(1)) - Exact::log_prime(2, Rat(2));
  CHECK(d.sign() == -1);

  // log 2 + log 3 vs log 5:  6 > 5
  Exact e = Exact::log_prime(2, Rat(1)) + Exact::log_prime(3, Rat(1)) -
            Exact::log_prime(5, Rat(1));
  CHECK(e.sign() == 1);

  Exact f = Exact(Rat(1, 3)) * Rat(3) - Exact(Rat(1));
  CHECK(f.is_zero());
  CHECK(f.is_rational());
}

TEST_CASE("exact scalar ordering and doubles") {
  Exact l2 = Exact::log_prime(2, Rat(1));
  CHECK(l2.to_double() == doctest::Approx(0.6931471805599453).epsilon(1e-12));
  CHECK(Exact(Rat(1, 2)) < Exact::log_prime(2, Rat(1)));
  CHECK(Exact::log_prime(3, Rat(1)) > Exact::log_prime(2, Rat(1)));
}
