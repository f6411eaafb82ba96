#include "doctest.h"

#include <random>

#include "toric/laurent.hpp"

using namespace toric;

TEST_CASE("cyclotomic polynomial table") {
  auto& p1 = cyclotomic_polynomial(1);
  CHECK(p1 == std::vector<Int>{Int(-1), Int(1)});
  auto& p4 = cyclotomic_polynomial(4);
  CHECK(p4 == std::vector<Int>{Int(1), Int(0), Int(1)});
  auto& p6 = cyclotomic_polynomial(6);
  CHECK(p6 == std::vector<Int>{Int(1), Int(-1), Int(1)});
  // prime: all-ones
  auto& p7 = cyclotomic_polynomial(7);
  CHECK(p7.size() == 7);
  for (auto& c : p7) CHECK(c == 1);
  // Phi_12 = t^4 - t^2 + 1
  auto& p12 = cyclotomic_polynomial(12);
  CHECK(p12 == std::vector<Int>{Int(1), Int(0), Int(-1), Int(0), Int(1)});
}

TEST_CASE("cyclotomic arithmetic") {
  auto z3 = Cyclotomic::zeta(3);
  auto one = Cyclotomic(Rat(1));
  // 1 + z + z^2 = 0
  CHECK((one + z3 + z3 * z3).is_zero());
  // z^3 = 1
  CHECK(z3 * z3 * z3 == one);
  // inverse
  auto z5 = Cyclotomic::zeta(5, 2);
  CHECK(z5 * z5.inverse() == one);
  auto a = Cyclotomic::from_coeffs(5, {Rat(1), Rat(2), Rat(0), Rat(-1)});
  CHECK(a * a.inverse() == one);
  // galois action is a field automorphism
  auto b = Cyclotomic::from_coeffs(5, {Rat(1, 2), Rat(0), Rat(3), Rat(1)});
  for (long u : units_mod(5)) {
    CHECK((a * b).galois(u) == a.galois(u) * b.galois(u));
    CHECK((a + b).galois(u) == a.galois(u) + b.galois(u));
  }
  // conductor mixing: z6 = -z3^2
  auto z6 = Cyclotomic::zeta(6);
  CHECK(z6 == -(z3 * z3));
  // embed: zeta_4 -> i
  auto z4 = Cyclotomic::zeta(4);
  auto e = z4.embed();
  CHECK(std::abs(e - std::complex<double>(0, 1)) < 1e-12);
}

TEST_CASE("torsion points") {
  auto t = TorsionPoint::make(6, {2, 4});
  CHECK(t.order == 3);  // gcd normalization
  CHECK(t.exps == VecZ{1, 2});
  auto id = TorsionPoint::identity(2);
  CHECK(id.is_identity());
  CHECK(t.mul(id) == t);
  // character: chi^{(1,1)}(zeta_3, zeta_3^2) = zeta_3^3 = 1
  CHECK(t.character({1, 1}) == Cyclotomic(Rat(1)));
  CHECK(t.character({1, 0}) == Cyclotomic::zeta(3));
  auto orb = GaloisOrbit::of(TorsionPoint::make(5, {1, 2}));
  CHECK(orb.size() == 4);
}

TEST_CASE("twist") {
  auto f = LaurentPoly::from_rational_terms(
      2, {{{0, 0}, Rat(1)}, {{1, 0}, Rat(1)}, {{0, 1}, Rat(1)}});
  // identity twist
  CHECK(twist(f, TorsionPoint::identity(2)) == f);
  // f = 1 + x + y twisted by (zeta_3, 1)
  auto t = TorsionPoint::make(3, {1, 0});
  auto tf = twist(f, t);
  CHECK(tf.terms().at({1, 0}) == Cyclotomic::zeta(3));
  CHECK(tf.terms().at({0, 1}) == Cyclotomic(Rat(1)));
  // composition law on random instances
  std::mt19937_64 rng(42);
  for (int rep = 0; rep < 10; ++rep) {
    std::uniform_int_distribution<long> ord(1, 12), ex(0, 20), coef(-3, 3);
    auto s = TorsionPoint::make(ord(rng), {ex(rng), ex(rng)});
    auto u = TorsionPoint::make(ord(rng), {ex(rng), ex(rng)});
    LaurentPoly g(2);
    for (int k = 0; k < 4; ++k) {
      VecZ e = {ex(rng) - 2, ex(rng) - 2};
      g.set_term(e, Cyclotomic(Rat(coef(rng))));
    }
    if (g.is_zero()) continue;
    CHECK(twist(twist(g, s), u) == twist(g, s.mul(u)));
  }
}

TEST_CASE("newton polytope and conductor") {
  auto f = LaurentPoly::from_rational_terms(
      2, {{{0, 0}, Rat(1)}, {{2, 0}, Rat(1, 2)}, {{0, 2}, Rat(3)}, {{1, 1}, Rat(1)}});
  auto np = f.newton_polytope();
  CHECK(np.vertices().size() == 3);  // (1,1) is on the hull boundary? no: inside edge
  CHECK(f.has_rational_coeffs());
  auto tf = twist(f, TorsionPoint::make(7, {1, 3}));
  CHECK(tf.conductor() == 7);
  CHECK(tf.newton_polytope() == np);
}

TEST_CASE("quasi strict sequence") {
  auto seq = quasi_strict_sequence(SequenceKind::kSqrtExponent, 1, 5);
  REQUIRE(seq.size() == 1);
  CHECK(seq[0].first.is_identity());
  CHECK(seq[0].second.order == 5);
  CHECK(seq[0].second.exps == VecZ{1, 2});

  auto seq2 = quasi_strict_sequence(SequenceKind::kSqrtExponent, 6, 5);
  // pairwise distinct prime orders
  for (size_t i = 0; i < seq2.size(); ++i)
    for (size_t j = i + 1; j < seq2.size(); ++j)
      CHECK(seq2[i].second.order != seq2[j].second.order);
  // no emitted point lies in the subgroup x = 1
  for (auto& [a, b] : seq2) CHECK(b.exps[0] % b.order != 0);
  // seeded kind: s in [2, N-2], gcd = 1
  auto seq3 = quasi_strict_sequence(SequenceKind::kSeeded, 5, 11, 1L << 40, 99);
  for (auto& [a, b] : seq3) {
    CHECK(b.exps[1] >= 2);
    CHECK(b.exps[1] <= b.order - 2);
  }
}
