#ifndef TORIC_CYCLOTOMIC_HPP
#define TORIC_CYCLOTOMIC_HPP

#include <complex>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

long euler_phi(long n);
std::vector<long> units_mod(long n);
/// Phi_n as a monic integer polynomial (coefficient list, degree phi(n)),
/// computed by the divisibility recursion Phi_n = (t^n-1) / prod Phi_d.
const std::vector<Int>& cyclotomic_polynomial(long n);

/// Element of Q(zeta_N) as a dense rational vector modulo Phi_N.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, Rat(0)) {}
  explicit Cyclotomic(const Rat& q) : n_(1), c_(1, q) {}
  explicit Cyclotomic(long q) : n_(1), c_(1, Rat(q)) {}
  static Cyclotomic zeta(long n, long power = 1);
  static Cyclotomic from_coeffs(long n, std::vector<Rat> c);

  long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  /// Galois action zeta -> zeta^u for gcd(u, N) = 1.
  Cyclotomic galois(long u) const;
  /// Rewrite in Q(zeta_m) for N | m.
  Cyclotomic lift_to(long m) const;
  /// Express in Q(zeta_m) for m | N; throws when the element does not lie
  /// in the subfield.
  Cyclotomic descend_to(long m) const;
  /// Complex value under zeta_N -> exp(2 pi i u / N).
  std::complex<double> embed(long u = 1) const;

  /// Clears denominators: *this == (1/d) * z with z integral. Returns d and
  /// the integer coefficient vector of z.
  std::pair<Int, std::vector<Int>> integral_scaled() const;

 private:
  void reduce(std::vector<Rat> raw);  // raw has arbitrary degree in zeta
  long n_;
  std::vector<Rat> c_;  // length phi(n_)
};

}  // namespace toric

#endif
