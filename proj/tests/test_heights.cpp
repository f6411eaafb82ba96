#include "doctest.h"

#include <cmath>

#include "toric/heights.hpp"

using namespace toric;

namespace {

constexpr double kMahler1xy = 0.32306594721945051409;

Polytope square01() {
  return Polytope::from_lattice_points(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

LaurentPoly line() {
  return LaurentPoly::from_rational_terms(
      2, {{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
}

}  // namespace

TEST_CASE("relevant places") {
  auto d = MetrizedToricDivisor::canonical(square01());
  CHECK(relevant_places({d, d, d}, {line()}) ==
        std::vector<Place>{Place::infinity()});
  auto f = LaurentPoly::from_rational_terms(2, {{{0, 0}, Rat(1)}, {{1, 0}, Rat(1, 2)}});
  auto pl = relevant_places({d}, {f});
  CHECK(pl == std::vector<Place>{Place::infinity(), Place::prime(2)});
  auto g = LaurentPoly::from_rational_terms(2, {{{0, 0}, Rat(6, 5)}, {{1, 1}, Rat(1)}});
  auto pl2 = relevant_places({d}, {g});
  CHECK(pl2 == std::vector<Place>{Place::infinity(), Place::prime(2),
                                  Place::prime(3), Place::prime(5)});
}

TEST_CASE("torus height of canonical divisors vanishes") {
  auto d = MetrizedToricDivisor::canonical(square01());
  auto r = torus_height({d, d, d});
  CHECK(r.all_exact);
  CHECK(r.exact_total.is_zero());
  CHECK(r.total() == 0.0);
}

TEST_CASE("torus height shifts by c * MV when a roof is shifted") {
  auto sq = square01();
  auto d = MetrizedToricDivisor::canonical(sq);
  auto shifted = MetrizedToricDivisor::canonical(sq);
  shifted.set_roof(Place::infinity(),
                   PAConcave::constant_on(sq, Exact(Rat(3, 4))));
  shifted.label = "custom";
  auto base = torus_height({d, d, d});
  auto moved = torus_height({shifted, d, d});
  Exact expect = Exact(Rat(3, 4)) * mixed_volume({sq, sq});
  CHECK(moved.exact_total - base.exact_total == expect);
}

TEST_CASE("torus height with a point-polytope partner is zero") {
  // roof min(x, 1-x) at infinity on [0,1], partner the origin point divisor:
  // every mixed-integral summand involving the point has measure zero and
  // the monomial-slot law kills the rest
  auto seg = Polytope::from_lattice_points(1, {{0}, {1}});
  auto roof = PAConcave::min_of_affine_on(
      seg, {{{Rat(1)}, Exact(Rat(0))}, {{Rat(-1)}, Exact(Rat(1))}});
  auto d0 = MetrizedToricDivisor::canonical(seg);
  d0.set_roof(Place::infinity(), roof);
  auto d1 = MetrizedToricDivisor::canonical(
      Polytope::from_lattice_points(1, {{0}}));
  auto r = torus_height({d0, d1});
  CHECK(r.all_exact);
  CHECK(r.exact_total.is_zero());
}

TEST_CASE("hypersurface height of a monomial cancels by the product formula") {
  auto d = MetrizedToricDivisor::canonical(square01());
  auto mono = LaurentPoly::from_rational_terms(2, {{{1, 1}, Rat(6)}});
  auto r = hypersurface_height(mono, {d, d});
  CHECK(r.all_exact);
  CHECK(r.exact_total.is_zero());
  CHECK(r.terms.size() == 3);  // inf, 2, 3
  // each finite-place term is nonzero individually
  CHECK(!r.terms[1].exact_value.is_zero());
}

TEST_CASE("scaling f shifts each place but not the total") {
  auto d = MetrizedToricDivisor::canonical(square01());
  auto f = line();
  PredictorParams params;
  params.grid_res = 32;
  params.budget = 1 << 12;
  auto base = hypersurface_height(f, {d, d}, params);
  auto scaled = hypersurface_height(f.scaled(Cyclotomic(Rat(2))), {d, d}, params);
  // per-place: the 2-adic term moves by -log2 * MV(sq, sq, NPf -> wait k=1:
  // MV(sq, sq? no: divisors sq, sq and NP f) ... the shift cancels in total
  CHECK(std::fabs(scaled.total() - base.total()) <=
        base.error() + scaled.error() + 1e-9);
  // and the exact parts of the finite places cancel against nothing locally:
  CHECK(scaled.terms.size() >= base.terms.size());
}

TEST_CASE("limit height reduces to torus and hypersurface heights") {
  auto d = MetrizedToricDivisor::canonical(square01());
  auto f = line();
  PredictorParams params;
  params.grid_res = 32;
  params.budget = 1 << 12;
  auto h0 = torus_height({d, d, d}, params);
  auto l0 = limit_height({}, {d, d, d}, params);
  CHECK(h0.total() == l0.total());
  auto h1 = hypersurface_height(f, {d, d}, params);
  auto l1 = limit_height({f}, {d, d}, params);
  CHECK(h1.total() == l1.total());
  CHECK(h1.error() == l1.error());
}

TEST_CASE("limit height vanishes when any input is a monomial") {
  auto d = MetrizedToricDivisor::canonical(square01());
  auto mono = LaurentPoly::from_rational_terms(2, {{{1, 0}, Rat(3, 2)}});
  auto r = limit_height({mono, line()}, {d});
  CHECK(r.all_exact);
  CHECK(r.exact_total.is_zero());
  CHECK(std::fabs(r.total()) <= 1e-9);
}

TEST_CASE("limit height of the line pair is the archimedean bubble") {
  auto d = MetrizedToricDivisor::canonical(square01());
  auto f = line();
  PredictorParams params;
  params.grid_res = 32;
  params.budget = 1 << 14;
  auto r = limit_height({f, f}, {d}, params);
  REQUIRE(r.terms.size() == 1);
  CHECK(r.terms[0].place == Place::infinity());
  CHECK(!r.all_exact);
  CHECK(r.error() < 0.02);
  // positive, below the trivial upper bound MI with constant m(1+x+y) caps
  CHECK(r.total() > 0.0);
  CHECK(r.total() < 6 * kMahler1xy);
}

TEST_CASE("degree predictions") {
  auto f = line();
  CHECK(degree_prediction({f, f}, {}) == 1);
  auto pt = Polytope::from_lattice_points(2, {{1, 1}});
  CHECK(degree_prediction({f}, {pt}) == 0);
  auto big = LaurentPoly::from_rational_terms(
      2, {{{0, 0}, Rat(1)}, {{2, 0}, Rat(1)}, {{0, 2}, Rat(1)}, {{2, 2}, Rat(1)}});
  CHECK(degree_prediction({big, big}, {}) == 8);
}

TEST_CASE("permutation invariance of reports") {
  auto d = MetrizedToricDivisor::canonical(square01());
  auto f = line();
  auto g = LaurentPoly::from_rational_terms(
      2, {{{0, 0}, Rat(2)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
  PredictorParams params;
  params.grid_res = 16;
  params.budget = 1 << 10;
  auto a = limit_height({f, g}, {d}, params);
  auto b = limit_height({g, f}, {d}, params);
  CHECK(a.total() == doctest::Approx(b.total()).epsilon(1e-12));
}
