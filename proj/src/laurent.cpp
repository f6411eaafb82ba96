#include "toric/laurent.hpp"

#include <numeric>
#include <random>

namespace toric {

TorsionPoint TorsionPoint::make(long order, VecZ exps) {
  if (order < 1) throw std::invalid_argument("torsion point: order < 1");
  for (auto& e : exps) {
    e %= order;
    if (e < 0) e += order;
  }
  long g = order;
  for (long e : exps) g = std::gcd(g, e);
  if (g > 1) {
    order /= g;
    for (auto& e : exps) e /= g;
  }
  TorsionPoint t;
  t.order = order;
  t.exps = std::move(exps);
  return t;
}

TorsionPoint TorsionPoint::identity(int n) {
  return make(1, VecZ(n, 0));
}

TorsionPoint TorsionPoint::mul(const TorsionPoint& o) const {
  if (exps.size() != o.exps.size())
    throw std::invalid_argument("torsion mul: dimension mismatch");
  long l = std::lcm(order, o.order);
  VecZ e(exps.size());
  for (size_t i = 0; i < exps.size(); ++i)
    e[i] = (exps[i] * (l / order) + o.exps[i] * (l / o.order)) % l;
  return make(l, std::move(e));
}

Cyclotomic TorsionPoint::character(const VecZ& m) const {
  if (m.size() != exps.size())
    throw std::invalid_argument("character: dimension mismatch");
  long e = 0;
  for (size_t i = 0; i < m.size(); ++i)
    e = (e + (m[i] % order) * exps[i]) % order;
  return Cyclotomic::zeta(order, e);
}

GaloisOrbit GaloisOrbit::of(const TorsionPoint& t) {
  GaloisOrbit o;
  o.base = t;
  o.multipliers = units_mod(t.order);
  if (t.order == 1) o.multipliers = {1};
  return o;
}

TorsionPoint GaloisOrbit::element(size_t i) const {
  long u = multipliers[i];
  VecZ e(base.exps.size());
  for (size_t j = 0; j < e.size(); ++j) e[j] = (base.exps[j] * u) % base.order;
  return TorsionPoint::make(base.order, std::move(e));
}

LaurentPoly LaurentPoly::from_terms(
    int n, const std::vector<std::pair<VecZ, Cyclotomic>>& terms) {
  LaurentPoly f(n);
  for (const auto& [e, c] : terms) f.set_term(e, c);
  return f;
}

LaurentPoly LaurentPoly::from_rational_terms(
    int n, const std::vector<std::pair<VecZ, Rat>>& terms) {
  LaurentPoly f(n);
  for (const auto& [e, c] : terms) f.set_term(e, Cyclotomic(c));
  return f;
}

void LaurentPoly::set_term(const VecZ& exp, const Cyclotomic& c) {
  if (static_cast<int>(exp.size()) != n_)
    throw std::invalid_argument("laurent term: dimension mismatch");
  if (c.is_zero())
    terms_.erase(exp);
  else
    terms_[exp] = c;
}

long LaurentPoly::conductor() const {
  long l = 1;
  for (const auto& [e, c] : terms_) l = std::lcm(l, c.conductor());
  return l;
}

bool LaurentPoly::has_rational_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

Polytope LaurentPoly::newton_polytope() const {
  if (terms_.empty()) throw std::logic_error("newton polytope of zero");
  std::vector<VecZ> pts;
  for (const auto& [e, c] : terms_) pts.push_back(e);
  return Polytope::from_lattice_points(n_, pts);
}

std::vector<VecZ> LaurentPoly::support() const {
  std::vector<VecZ> s;
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("laurent mul: dimension mismatch");
  LaurentPoly out(n_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      VecZ e(n_);
      for (int i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
      auto it = out.terms_.find(e);
      Cyclotomic c = c1 * c2;
      if (it == out.terms_.end()) {
        if (!c.is_zero()) out.terms_[e] = c;
      } else {
        Cyclotomic s = it->second + c;
        if (s.is_zero())
          out.terms_.erase(it);
        else
          it->second = s;
      }
    }
  }
  return out;
}

LaurentPoly LaurentPoly::scaled(const Cyclotomic& c) const {
  LaurentPoly out(n_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

std::complex<double> LaurentPoly::eval_complex(
    const std::vector<std::complex<double>>& x) const {
  std::complex<double> acc(0.0, 0.0);
  for (const auto& [e, c] : terms_) {
    std::complex<double> mono = c.embed();
    for (int i = 0; i < n_; ++i) {
      long k = e[i];
      std::complex<double> base = x[i];
      if (k < 0) {
        base = 1.0 / base;
        k = -k;
      }
      for (long j = 0; j < k; ++j) mono *= base;
    }
    acc += mono;
  }
  return acc;
}

LaurentPoly twist(const LaurentPoly& f, const TorsionPoint& t) {
  if (t.dim() != f.ambient_dim())
    throw std::invalid_argument("twist: dimension mismatch");
  LaurentPoly out(f.ambient_dim());
  for (const auto& [e, c] : f.terms()) out.set_term(e, c * t.character(e));
  return out;
}

std::vector<std::pair<TorsionPoint, TorsionPoint>> quasi_strict_sequence(
    SequenceKind kind, int length, long first_order, long last_order,
    std::uint64_t seed) {
  std::vector<std::pair<TorsionPoint, TorsionPoint>> out;
  std::mt19937_64 rng(seed);
  long n = std::max<long>(first_order, 5);
  while (static_cast<int>(out.size()) < length && n <= last_order) {
    if (is_prime_u64(static_cast<unsigned long>(n))) {
      long s;
      // smallest |a| + |b| with a + b s = 0 mod n over 1 <= b <= bound;
      // rejecting small relations keeps the emitted family off every fixed
      // proper subgroup (the points (zeta_n, zeta_n^s) with a + b s = 0
      // lie on the subtorus x^a y^b = 1)
      auto min_relation = [&](long cand, long bound) {
        long best = bound + 1000;
        for (long b = 1; b <= bound; ++b) {
          long r = (b * cand) % n;
          long a = std::min(r, n - r);
          best = std::min(best, a + b);
        }
        return best;
      };
      long reject = std::max<long>(
          6, static_cast<long>(std::pow(static_cast<double>(n), 0.25)) + 3);
      // small orders admit no relation-free exponents; cap by sqrt(n)
      reject = std::min<long>(
          reject, static_cast<long>(std::sqrt(static_cast<double>(n))) - 1);
      if (reject < 2) reject = 2;
      if (kind == SequenceKind::kSqrtExponent) {
        s = static_cast<long>(std::sqrt(static_cast<double>(n)));
        while (s * s > n) --s;
        while ((s + 1) * (s + 1) <= n) ++s;
        if (s < 2) s = 2;
        if (s >= n - 1) s = n - 2;
      } else {
        std::uniform_int_distribution<long> d(2, n - 2);
        do {
          s = d(rng);
        } while (min_relation(s, reject) <= reject);
      }
      out.emplace_back(TorsionPoint::identity(2),
                       TorsionPoint::make(n, {1, s}));
    }
    ++n;
  }
  return out;
}

}  // namespace toric
