#ifndef TORIC_LAURENT_HPP
#define TORIC_LAURENT_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "toric/cyclotomic.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Torsion point of the split torus: (zeta_N^{a_1}, ..., zeta_N^{a_n}),
/// gcd-normalized so that N is the exact order.
struct TorsionPoint {
  long order = 1;
  VecZ exps;

  static TorsionPoint make(long order, VecZ exps);
  static TorsionPoint identity(int n);
  int dim() const { return static_cast<int>(exps.size()); }
  bool is_identity() const { return order == 1; }
  TorsionPoint mul(const TorsionPoint& o) const;
  /// chi^m(t) = zeta_order^{<m, exps>}
  Cyclotomic character(const VecZ& m) const;
  bool operator==(const TorsionPoint& o) const {
    return order == o.order && exps == o.exps;
  }
};

/// Galois orbit of a torsion point over Q: the (Z/N)^x multiplier action.
struct GaloisOrbit {
  TorsionPoint base;
  std::vector<long> multipliers;
  static GaloisOrbit of(const TorsionPoint& t);
  size_t size() const { return multipliers.size(); }
  TorsionPoint element(size_t i) const;
};

/// Finitely supported exponent -> coefficient map over a cyclotomic field.
class LaurentPoly {
 public:
  explicit LaurentPoly(int n) : n_(n) {}
  static LaurentPoly from_terms(
      int n, const std::vector<std::pair<VecZ, Cyclotomic>>& terms);
  /// Convenience: rational coefficients.
  static LaurentPoly from_rational_terms(
      int n, const std::vector<std::pair<VecZ, Rat>>& terms);

  int ambient_dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<VecZ, Cyclotomic>& terms() const { return terms_; }
  void set_term(const VecZ& exp, const Cyclotomic& c);
  long conductor() const;
  bool has_rational_coeffs() const;
  Polytope newton_polytope() const;
  std::vector<VecZ> support() const;

  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly scaled(const Cyclotomic& c) const;
  bool operator==(const LaurentPoly& o) const;

  /// Complex value under the embedding zeta_N -> e^(2 pi i/N) at the point x.
  std::complex<double> eval_complex(const std::vector<std::complex<double>>& x)
      const;

 private:
  int n_;
  std::map<VecZ, Cyclotomic> terms_;
};

/// t*f = sum_m alpha_m chi^m(t) chi^m.
LaurentPoly twist(const LaurentPoly& f, const TorsionPoint& t);

enum class SequenceKind {
  kSqrtExponent,  // s = floor(sqrt(N)), deterministic strictness
  kSeeded,        // s uniform in [2, N-2] from the seed
};

/// Pairs (identity, (zeta_N, zeta_N^s)) for primes N ascending in
/// [first_order, last_order]; strictness comes from the growth of the orders
/// together with s != 0, +-1.
std::vector<std::pair<TorsionPoint, TorsionPoint>> quasi_strict_sequence(
    SequenceKind kind, int length, long first_order = 5,
    long last_order = 1L << 40, std::uint64_t seed = 1);

}  // namespace toric

#endif
