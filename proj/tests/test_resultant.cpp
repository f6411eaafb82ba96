#include "doctest.h"

#include <random>

#include "toric/resultant.hpp"

using namespace toric;

namespace {

LaurentPoly lp(std::vector<std::pair<VecZ, Rat>> terms) {
  return LaurentPoly::from_rational_terms(2, terms);
}

std::mt19937_64 rng(555);

}  // namespace

TEST_CASE("split system resultant") {
  auto f = lp({{{1, 0}, Rat(1)}, {{0, 0}, Rat(-2)}});  // x - 2
  auto g = lp({{{0, 1}, Rat(1)}, {{0, 0}, Rat(-3)}});  // y - 3
  auto r = resultant_eliminate(f, g, 1);               // eliminate y
  CHECK(cyclopoly_degree(r.torus_part) == 1);
  CHECK(r.stripped_power == 0);
  CHECK(r.torus_part[0] == Cyclotomic(Rat(-2)));
  CHECK(r.torus_part[1] == Cyclotomic(Rat(1)));
}

TEST_CASE("boundary artifact stripped") {
  // f = 1+x+y, g = 1+2x+y: Res_y = +-x, torus intersection empty in x
  auto f = lp({{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
  auto g = lp({{{0, 0}, Rat(1)}, {{1, 0}, Rat(2)}, {{0, 1}, Rat(1)}});
  auto r = resultant_eliminate(f, g, 1);
  CHECK(r.stripped_power == 1);
  CHECK(cyclopoly_degree(r.torus_part) == 0);
}

TEST_CASE("non-coprime input rejected") {
  auto f = lp({{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
  CHECK_THROWS_AS(resultant_eliminate(f, f, 1), std::domain_error);
}

TEST_CASE("twisted line meets line in MV points") {
  auto f = lp({{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
  auto g = twist(f, TorsionPoint::make(5, {1, 2}));
  auto r = resultant_eliminate(f, g, 1);
  Rat mv = mixed_volume({f.newton_polytope(), g.newton_polytope()});
  CHECK(Rat(cyclopoly_degree(r.torus_part)) == mv);
  // and along the other axis
  auto r2 = resultant_eliminate(f, g, 0);
  CHECK(Rat(cyclopoly_degree(r2.torus_part)) == mv);
}

TEST_CASE("upsilon test") {
  auto f = lp({{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
  auto id = TorsionPoint::identity(2);
  CHECK(upsilon_test(f, f, id, id));
  // translated support: g = x*(1+x+y), still proportional up to monomial
  auto g = lp({{{1, 0}, Rat(1)}, {{2, 0}, Rat(1)}, {{1, 1}, Rat(1)}});
  CHECK(upsilon_test(f, g, id, id));
  // different support shape: never in Upsilon
  auto h = lp({{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{1, 1}, Rat(1)}});
  CHECK(!upsilon_test(f, h, id, id));
  // twist by (zeta_5, zeta_5): coefficients no longer proportional
  auto t = TorsionPoint::make(5, {1, 1});
  CHECK(!upsilon_test(f, f, id, t));
  // but twisting both slots identically keeps proportionality
  CHECK(upsilon_test(f, f, t, t));
}

TEST_CASE("upsilon membership implies improper intersection") {
  auto f = lp({{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
  auto t = TorsionPoint::make(7, {2, 5});
  auto tf = twist(f, t);
  CHECK(upsilon_test(f, f, t, t));
  CHECK_THROWS_AS(resultant_eliminate(tf, tf, 1), std::domain_error);
}

TEST_CASE("galois norm poly small cases") {
  // R in Q[x]: primitive multiple
  CycloPoly r0 = {Cyclotomic(Rat(4, 3)), Cyclotomic(Rat(2))};
  auto s0 = galois_norm_poly(r0);
  CHECK(s0 == std::vector<Int>{Int(2), Int(3)});

  // R = x - zeta_3 -> x^2 + x + 1
  CycloPoly r1 = {-Cyclotomic::zeta(3), Cyclotomic(Rat(1))};
  auto s1 = galois_norm_poly(r1);
  CHECK(s1 == std::vector<Int>{Int(1), Int(1), Int(1)});

  // R = 2x - zeta_4 -> 4x^2 + 1
  CycloPoly r2 = {-Cyclotomic::zeta(4), Cyclotomic(Rat(2))};
  auto s2 = galois_norm_poly(r2);
  CHECK(s2 == std::vector<Int>{Int(1), Int(0), Int(4)});
}

TEST_CASE("galois norm is galois stable") {
  std::uniform_int_distribution<int> c(-3, 3);
  for (long n : {5L, 7L, 12L}) {
    CycloPoly r;
    for (int d = 0; d < 3; ++d) {
      std::vector<Rat> coeffs(euler_phi(n));
      for (auto& q : coeffs) q = Rat(c(rng), 1 + (c(rng) & 1));
      r.push_back(Cyclotomic::from_coeffs(n, coeffs));
    }
    if (cyclopoly_degree(r) < 0) continue;
    auto s = galois_norm_poly(r);
    for (long u : units_mod(n)) {
      auto su = galois_norm_poly(cyclopoly_galois(r, u));
      CHECK(su == s);
    }
  }
}

TEST_CASE("bkk count equals mixed volume on random twisted pairs") {
  std::uniform_int_distribution<int> e(-2, 2), c(1, 5), np(3, 6);
  std::vector<long> orders = {11, 13, 17, 19, 23};
  int done = 0;
  while (done < 8) {
    LaurentPoly f(2), g(2);
    for (int i = 0; i < np(rng); ++i)
      f.set_term({e(rng), e(rng)}, Cyclotomic(Rat(c(rng))));
    for (int i = 0; i < np(rng); ++i)
      g.set_term({e(rng), e(rng)}, Cyclotomic(Rat(c(rng))));
    if (f.is_zero() || g.is_zero()) continue;
    Rat mv = mixed_volume({f.newton_polytope(), g.newton_polytope()});
    if (mv == 0) continue;
    long ord = orders[done % orders.size()];
    auto t = TorsionPoint::make(
        ord, {std::uniform_int_distribution<long>(1, ord - 1)(rng),
              std::uniform_int_distribution<long>(1, ord - 1)(rng)});
    auto tg = twist(g, t);
    if (upsilon_test(f, g, TorsionPoint::identity(2), t)) continue;
    EliminationResult r;
    try {
      r = resultant_eliminate(f, tg, 1);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK(Rat(cyclopoly_degree(r.torus_part)) == mv);
    ++done;
  }
}
