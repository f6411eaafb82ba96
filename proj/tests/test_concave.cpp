#include "doctest.h"

#include <random>

#include "toric/concave.hpp"

using namespace toric;

namespace {

std::mt19937_64 rng(777123);

Rat rnd_rat(int lo = -3, int hi = 3, int den = 4) {
  std::uniform_int_distribution<int> dn(lo * den, hi * den);
  return Rat(dn(rng), den);
}

VecQ rnd_vec(int n, int lo = -2, int hi = 2) {
  VecQ v(n);
  for (int i = 0; i < n; ++i) v[i] = Rat(std::uniform_int_distribution<int>(lo, hi)(rng));
  return v;
}

PAConcave random_hull_form(int n, int npts) {
  std::vector<PAConcave::Part> lifted;
  for (int i = 0; i < npts; ++i) lifted.push_back({rnd_vec(n), Exact(rnd_rat())});
  return PAConcave::upper_envelope(n, lifted);
}

PAConcave random_min_form(int n, int npieces) {
  std::vector<PAConcave::Part> pieces;
  for (int i = 0; i < npieces; ++i) pieces.push_back({rnd_vec(n), Exact(rnd_rat())});
  return PAConcave::min_of_affine(n, pieces);
}

Polytope lat(int n, std::vector<VecZ> pts) {
  return Polytope::from_lattice_points(n, pts);
}

// Grid oracle for the dual: min over a u-grid of <u,x> - f(u).
Rat dual_grid_oracle(const PAConcave& f, const VecQ& x, int radius, int den) {
  bool first = true;
  Rat best;
  const int n = f.ambient_dim();
  std::vector<int> idx(n, -radius * den);
  while (true) {
    VecQ u(n);
    for (int i = 0; i < n; ++i) u[i] = Rat(idx[i], den);
    Exact fu = *f.evaluate(u);
    Rat val = dot(u, x) - fu.rational_part();
    if (first || val < best) {
      best = val;
      first = false;
    }
    int k = 0;
    while (k < n && ++idx[k] > radius * den) idx[k++] = -radius * den;
    if (k == n) break;
  }
  return best;
}

}  // namespace

TEST_CASE("legendre dual of a single affine piece is a shifted indicator") {
  // f(u) = <m,u> - c  ->  iota_{m} + c
  VecQ m = {Rat(2), Rat(-1)};
  Exact c{Rat(5, 2)};
  auto f = PAConcave::min_of_affine(2, {{m, -c}});
  auto d = f.legendre_dual();
  CHECK(d.is_hull_form());
  REQUIRE(d.parts().size() == 1);
  CHECK(d.parts()[0].vec == m);
  CHECK(d.parts()[0].val == c);
  CHECK(d == PAConcave::indicator(m, c));
}

TEST_CASE("dual of zero on a point is zero on R^n") {
  auto f = PAConcave::indicator({Rat(0), Rat(0)}, Exact(Rat(0)));
  auto d = f.legendre_dual();
  CHECK(!d.is_hull_form());
  CHECK(*d.evaluate({Rat(7), Rat(-3)}) == Exact(Rat(0)));
}

TEST_CASE("dual of min(0,u1,u2) is zero on the unit simplex") {
  auto f = PAConcave::min_of_affine(
      2, {{{Rat(0), Rat(0)}, Exact(Rat(0))},
          {{Rat(1), Rat(0)}, Exact(Rat(0))},
          {{Rat(0), Rat(1)}, Exact(Rat(0))}});
  auto d = f.legendre_dual();
  CHECK(d == PAConcave::zero_on(lat(2, {{0, 0}, {1, 0}, {0, 1}})));
  // grid oracle at a few interior points
  for (auto x : {VecQ{Rat(1, 4), Rat(1, 4)}, VecQ{Rat(1, 2), Rat(1, 4)}}) {
    CHECK(d.evaluate(x)->rational_part() == dual_grid_oracle(f, x, 3, 3));
  }
}

TEST_CASE("legendre involution on random instances") {
  for (int rep = 0; rep < 30; ++rep) {
    int n = 1 + rep % 3;
    auto f = random_min_form(n, 2 + rep % 5);
    CHECK(f.legendre_dual().legendre_dual() == f);
    auto h = random_hull_form(n, 3 + rep % 5);
    CHECK(h.legendre_dual().legendre_dual() == h);
  }
}

TEST_CASE("sup convolution basics") {
  auto q = lat(2, {{0, 0}, {1, 0}, {0, 1}});
  auto f = random_hull_form(2, 5);
  auto neutral = PAConcave::indicator({Rat(0), Rat(0)}, Exact(Rat(0)));
  CHECK(sup_convolution(f, neutral) == f);

  auto zp = PAConcave::zero_on(q);
  auto zq = PAConcave::zero_on(lat(2, {{0, 0}, {1, 1}}));
  auto s = sup_convolution(zp, zq);
  CHECK(s == PAConcave::zero_on(minkowski_sum(q, lat(2, {{0, 0}, {1, 1}}))));

  auto i1 = PAConcave::indicator({Rat(1), Rat(0)}, Exact(Rat(3)));
  auto i2 = PAConcave::indicator({Rat(0), Rat(2)}, Exact(Rat(-1)));
  CHECK(sup_convolution(i1, i2) ==
        PAConcave::indicator({Rat(1), Rat(2)}, Exact(Rat(2))));
}

TEST_CASE("dual exchanges sup convolution and addition pointwise") {
  for (int rep = 0; rep < 12; ++rep) {
    int n = 1 + rep % 2;
    auto f = random_hull_form(n, 4);
    auto g = random_hull_form(n, 4);
    auto lhs = sup_convolution(f, g).legendre_dual();
    auto fd = f.legendre_dual();
    auto gd = g.legendre_dual();
    for (int t = 0; t < 6; ++t) {
      VecQ u = rnd_vec(n, -3, 3);
      Exact want = *fd.evaluate(u) + *gd.evaluate(u);
      CHECK(*lhs.evaluate(u) == want);
    }
  }
}

TEST_CASE("integrate basic examples") {
  auto q = lat(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  CHECK(PAConcave::zero_on(q).integrate() == Exact(Rat(0)));
  CHECK(PAConcave::constant_on(q, Exact(Rat(7, 3))).integrate() ==
        Exact(Rat(7, 3)));

  // min(x, 1-x) on [0,1] integrates to 1/4
  auto roof = PAConcave::min_of_affine_on(
      lat(1, {{0}, {1}}),
      {{{Rat(1)}, Exact(Rat(0))}, {{Rat(-1)}, Exact(Rat(1))}});
  CHECK(roof.integrate() == Exact(Rat(1, 4)));

  // lower-dimensional domains integrate to zero
  CHECK(PAConcave::constant_on(lat(2, {{0, 0}, {1, 1}}), Exact(Rat(9)))
            .integrate() == Exact(Rat(0)));
  CHECK(PAConcave::indicator({Rat(1), Rat(1)}, Exact(Rat(5))).integrate() ==
        Exact(Rat(0)));
}

TEST_CASE("integrate a pyramid") {
  // envelope of corners at 0 and center at 1 over [0,1]^2: integral 1/3
  std::vector<PAConcave::Part> lifted = {
      {{Rat(0), Rat(0)}, Exact(Rat(0))}, {{Rat(1), Rat(0)}, Exact(Rat(0))},
      {{Rat(0), Rat(1)}, Exact(Rat(0))}, {{Rat(1), Rat(1)}, Exact(Rat(0))},
      {{Rat(1, 2), Rat(1, 2)}, Exact(Rat(1))}};
  auto f = PAConcave::upper_envelope(2, lifted);
  CHECK(f.integrate() == Exact(Rat(1, 3)));
}

TEST_CASE("mixed integral trivial and monomial-slot examples") {
  auto sq = lat(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto tri = lat(2, {{0, 0}, {1, 0}, {0, 1}});
  // all zero functions -> 0
  CHECK(mixed_integral({PAConcave::zero_on(sq), PAConcave::zero_on(tri),
                        PAConcave::zero_on(sq)}) == Exact(Rat(0)));
  // all point indicators -> 0 (zero-dimensional domains)
  CHECK(mixed_integral({PAConcave::indicator({Rat(0), Rat(0)}, Exact(Rat(2))),
                        PAConcave::indicator({Rat(1), Rat(0)}, Exact(Rat(-1))),
                        PAConcave::indicator({Rat(0), Rat(1)}, Exact(Rat(1)))}) ==
        Exact(Rat(0)));
  // monomial slot: MI(f0, iota_m + c, f2) = c * MV(Q0, Q2)
  for (int rep = 0; rep < 10; ++rep) {
    auto f0 = random_hull_form(2, 4);
    auto f2 = random_hull_form(2, 4);
    VecQ m = rnd_vec(2);
    Exact c{rnd_rat()};
    Exact mi = mixed_integral({f0, PAConcave::indicator(m, c), f2});
    Rat mv = mixed_volume({f0.domain(), f2.domain()});
    CHECK(mi == c * mv);
  }
  // one-dimensional check: MI(roof, iota_0 + 0) = 0
  auto roof = PAConcave::min_of_affine_on(
      lat(1, {{0}, {1}}),
      {{{Rat(1)}, Exact(Rat(0))}, {{Rat(-1)}, Exact(Rat(1))}});
  CHECK(mixed_integral({roof, PAConcave::indicator({Rat(0)}, Exact(Rat(0)))}) ==
        Exact(Rat(0)));
  // shifting a slot by a constant adds c * MV of the others
  auto f0 = PAConcave::zero_on(sq);
  auto shifted = PAConcave::constant_on(sq, Exact(Rat(3, 2)));
  auto g = random_hull_form(2, 4);
  Exact base = mixed_integral({f0, f0, g});
  Exact shift = mixed_integral({shifted, f0, g});
  CHECK(shift - base == Exact(Rat(3, 2)) * mixed_volume({sq, g.domain()}));
}

TEST_CASE("mixed integral diagonal normalization") {
  for (int rep = 0; rep < 6; ++rep) {
    int n = 1 + rep % 2;
    auto g = random_hull_form(n, 4);
    std::vector<PAConcave> diag(n + 1, g);
    Rat fact = (n == 1) ? 2 : 6;
    CHECK(mixed_integral(diag) == g.integrate() * fact);
  }
}

TEST_CASE("mixed integral symmetry and sup-convolution multilinearity") {
  for (int rep = 0; rep < 10; ++rep) {
    int n = 1 + rep % 2;
    std::vector<PAConcave> fs;
    for (int i = 0; i <= n; ++i) fs.push_back(random_hull_form(n, 3 + rep % 3));
    Exact mi = mixed_integral(fs);
    auto perm = fs;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(mixed_integral(perm) == mi);

    auto h = random_hull_form(n, 3);
    auto fs2 = fs;
    fs2[0] = sup_convolution(fs[0], h);
    auto fsh = fs;
    fsh[0] = h;
    CHECK(mixed_integral(fs2) == mi + mixed_integral(fsh));
  }
}

TEST_CASE("uniform perturbation bound") {
  auto sq = lat(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  std::vector<PAConcave> orig = {PAConcave::zero_on(sq), PAConcave::zero_on(sq),
                                 PAConcave::zero_on(sq)};
  // eps = 0
  auto pb0 = uniform_perturbation_bound(orig, orig, Rat(0));
  CHECK(pb0.difference.is_zero());
  CHECK(pb0.within);
  // constant shift of one slot: |dMI| = eps * MV of the others = 2 eps
  Rat eps(1, 100);
  auto pert = orig;
  pert[0] = PAConcave::constant_on(sq, Exact(eps));
  auto pb = uniform_perturbation_bound(orig, pert, eps);
  CHECK(pb.difference == Exact(eps * mixed_volume({sq, sq})));
  CHECK(pb.within);
  // random jitter within eps
  for (int rep = 0; rep < 8; ++rep) {
    int n = 1 + rep % 2;
    std::vector<PAConcave> fs;
    for (int i = 0; i <= n; ++i) fs.push_back(random_hull_form(n, 4));
    Rat e(1, 1000);
    std::vector<PAConcave> gs;
    for (auto& f : fs) {
      std::vector<PAConcave::Part> parts = f.parts();
      for (auto& p : parts) {
        Rat jitter(std::uniform_int_distribution<int>(-1000, 1000)(rng),
                   1000000);
        p.val += Exact(jitter);
      }
      gs.push_back(PAConcave::upper_envelope(n, parts));
    }
    auto pb2 = uniform_perturbation_bound(fs, gs, e);
    CHECK(pb2.within);
  }
}
