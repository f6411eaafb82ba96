#include "doctest.h"

#include <cmath>

#include "toric/ronkin.hpp"

using namespace toric;

namespace {

// independent high-precision value of m(1+x+y), computed by reducing the
// torus average through Jensen's formula to a 1-D integral and checked
// against the Hurwitz-zeta form of L'(chi_-3, -1)
constexpr double kMahler1xy = 0.32306594721945051409;

LaurentPoly line() {
  return LaurentPoly::from_rational_terms(
      2, {{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
}

}  // namespace

TEST_CASE("tropical ronkin functions") {
  // single term: one affine piece
  auto mono = LaurentPoly::from_rational_terms(2, {{{3, -1}, Rat(5, 2)}});
  auto r = ronkin_nonarch(mono, 5);
  REQUIRE(r.parts().size() == 1);
  CHECK(r.parts()[0].vec == to_vecq({3, -1}));
  CHECK(r.parts()[0].val == Exact::log_prime(5, Rat(1)));  // ord_5(5/2) = 1

  // unit coefficients: pure support function
  auto f = line();
  auto rf = ronkin_nonarch(f, 7);
  CHECK(rf == PAConcave::min_of_affine(
                  2, {{{Rat(0), Rat(0)}, Exact(Rat(0))},
                      {{Rat(1), Rat(0)}, Exact(Rat(0))},
                      {{Rat(0), Rat(1)}, Exact(Rat(0))}}));

  // f = 1 + (1/2) x at p = 2: min(0, u1 - log 2)
  auto g = LaurentPoly::from_rational_terms(2, {{{0, 0}, Rat(1)}, {{1, 0}, Rat(1, 2)}});
  auto rg = ronkin_nonarch(g, 2);
  REQUIRE(rg.parts().size() == 2);
  CHECK(rg.parts()[1].val == Exact::log_prime(2, Rat(-1)));
}

TEST_CASE("tropical ronkin duals") {
  auto mono = LaurentPoly::from_rational_terms(2, {{{2, 1}, Rat(3)}});
  auto d = ronkin_dual_nonarch(mono, 3);
  CHECK(d == PAConcave::indicator(to_vecq({2, 1}), Exact::log_prime(3, Rat(-1))));

  auto f = line();
  CHECK(ronkin_dual_nonarch(f, 11) ==
        PAConcave::zero_on(f.newton_polytope()));

  // 1 + x + p x^2 in one variable: hull of (0,0),(1,0),(2,-log p)
  long p = 5;
  auto h = LaurentPoly::from_rational_terms(
      1, {{{0}, Rat(1)}, {{1}, Rat(1)}, {{2}, Rat(p)}});
  auto dh = ronkin_dual_nonarch(h, p);
  auto at2 = dh.evaluate({Rat(2)});
  REQUIRE(at2.has_value());
  CHECK(*at2 == Exact::log_prime(p, Rat(-1)));
  auto at1 = dh.evaluate({Rat(1)});
  CHECK(at1->is_zero());
  // vertex values equal log|alpha_m|_p exactly (acceptance 4a shape)
  auto at0 = dh.evaluate({Rat(0)});
  CHECK(at0->is_zero());
}

TEST_CASE("unit coefficients degenerate to the zero dual at every prime") {
  auto f = LaurentPoly::from_rational_terms(
      2, {{{0, 0}, Rat(-1)}, {{2, 0}, Rat(1)}, {{1, 1}, Rat(-1)}, {{0, 2}, Rat(1)}});
  for (long p : {2L, 3L, 5L, 13L}) {
    CHECK(ronkin_dual_nonarch(f, p) ==
          PAConcave::zero_on(f.newton_polytope()));
  }
}

TEST_CASE("archimedean ronkin: monomial is exact") {
  auto mono = LaurentPoly::from_rational_terms(2, {{{2, -1}, Rat(3)}});
  auto est = ronkin_arch(mono, {0.4, -0.3}, 1 << 12, 7);
  CHECK(est.value ==
        doctest::Approx(2 * 0.4 + (-1) * (-0.3) - std::log(3.0)).epsilon(1e-12));
  CHECK(est.error < 1e-10);
}

TEST_CASE("archimedean ronkin of 1+x against Jensen") {
  auto f = LaurentPoly::from_rational_terms(1, {{{0}, Rat(1)}, {{1}, Rat(1)}});
  // rho(u) = -log+ (e^-u): at u = 0 the value is 0
  auto e0 = ronkin_arch(f, {0.0}, 1 << 18, 42);
  CHECK(std::fabs(e0.value) <= 1e-4);
  // exact slice evaluation
  CHECK(std::fabs(ronkin_arch_slice(f, {0.0})) <= 1e-10);
  // at u = -log 2 (|x| = 2): rho = -log 2
  double u = -std::log(2.0);
  CHECK(ronkin_arch_slice(f, {u}) == doctest::Approx(-std::log(2.0)).epsilon(1e-9));
  auto e1 = ronkin_arch(f, {u}, 1 << 16, 43);
  CHECK(e1.value == doctest::Approx(-std::log(2.0)).epsilon(2e-3));
  // tropical piece domination: rho(u) <= min(0, u)
  for (double uu : {-1.3, -0.2, 0.0, 0.4, 2.0}) {
    double v = ronkin_arch_slice(f, {uu});
    CHECK(v <= std::min(0.0, uu) + 1e-9);
  }
}

TEST_CASE("archimedean ronkin of the line") {
  auto f = line();
  double v = ronkin_arch_slice(f, {0.0, 0.0}, 1e-9);
  CHECK(v == doctest::Approx(-kMahler1xy).epsilon(1e-8));
  auto est = ronkin_arch(f, {0.0, 0.0}, 1 << 18, 2024);
  CHECK(std::fabs(est.value - (-kMahler1xy)) <= 1e-3);
  CHECK(std::fabs(est.value - (-kMahler1xy)) <= 3 * est.error + 1e-6);
  // concavity along a segment (midpoint test, slice accuracy)
  double a = ronkin_arch_slice(f, {-0.7, 0.3});
  double b = ronkin_arch_slice(f, {0.5, -0.4});
  double mid = ronkin_arch_slice(f, {-0.1, -0.05});
  CHECK(mid >= 0.5 * (a + b) - 1e-7);
  // vertex-piece domination
  for (auto u : std::vector<std::vector<double>>{{0.3, -0.2}, {-1, 2}, {0, 0}}) {
    double trop = std::min({0.0, u[0], u[1]});
    CHECK(ronkin_arch_slice(f, u) <= trop + 1e-8);
  }
  // monomial-factor equivariance: rho_{3x*f}(u) = u1 - log 3 + rho_f(u)
  auto xf = LaurentPoly::from_rational_terms(
      2, {{{1, 0}, Rat(3)}, {{2, 0}, Rat(3)}, {{1, 1}, Rat(3)}});
  double lhs = ronkin_arch_slice(xf, {0.25, -0.4});
  double rhs = 0.25 - std::log(3.0) + ronkin_arch_slice(f, {0.25, -0.4});
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
}

TEST_CASE("archimedean ronkin dual grid") {
  auto f = line();
  auto dual = ronkin_dual_arch(f, 32, 1 << 14, 5);
  const auto& g = dual.grid;
  CHECK(g.point_error < 5e-3);
  // vertex values approach log|alpha_m| = 0; dual dominates the tropical
  // dual (zero) on the simplex
  double v00 = g.eval(0.0, 0.0);
  CHECK(std::fabs(v00) <= 0.05);
  double interior = g.eval(1.0 / 3, 1.0 / 3);
  CHECK(interior >= -1e-6);
  CHECK(interior <= kMahler1xy + 0.05);
  // the dual peaks at the barycenter with value m(1+x+y):
  // rho(0) = -sup rho^vee
  double peak = 0.0;
  for (long j = 0; j < g.ny; ++j)
    for (long i = 0; i < g.nx; ++i)
      if (g.finite_at(i, j)) peak = std::max(peak, g.at(i, j));
  CHECK(peak == doctest::Approx(kMahler1xy).epsilon(0.02));
}

TEST_CASE("grid path agrees with the exact PA path") {
  // sample an exact PA function, reintegrate through the numeric MI
  auto sq = Polytope::from_lattice_points(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  std::vector<PAConcave::Part> lifted = {
      {{Rat(0), Rat(0)}, Exact(Rat(0))}, {{Rat(1), Rat(0)}, Exact(Rat(0))},
      {{Rat(0), Rat(1)}, Exact(Rat(0))}, {{Rat(1), Rat(1)}, Exact(Rat(0))},
      {{Rat(1, 2), Rat(1, 2)}, Exact(Rat(1))}};
  auto fpa = PAConcave::upper_envelope(2, lifted);
  auto tri = PAConcave::zero_on(
      Polytope::from_lattice_points(2, {{0, 0}, {1, 0}, {0, 1}}));
  auto z = PAConcave::zero_on(sq);

  std::vector<ConcaveFn> exact_in = {fpa, tri, z};
  auto exact = mixed_integral_any(exact_in, Rat(1, 32));
  CHECK(exact.exact);

  std::vector<ConcaveFn> mixed_in = {GridConcave::sample_pa(fpa, Rat(1, 32)),
                                     tri, z};
  auto numeric = mixed_integral_any(mixed_in, Rat(1, 32));
  CHECK(!numeric.exact);
  CHECK(std::fabs(numeric.value - exact.value) <= numeric.error + 1e-12);
}
