#ifndef TORIC_EXACT_HPP
#define TORIC_EXACT_HPP

#include <map>
#include <string>

#include "toric/rational.hpp"

namespace toric {

/// Scalar of the form  q0 + sum_p q_p * log p  (finitely many primes p).
///
/// This is the value field of the exact finite-place calculus: tropical
/// Ronkin intercepts are rational multiples of log p, and adelic sums mix
/// those with plain rationals.  Zero testing is exact: 1 and the log p are
/// linearly independent over Q, so the value vanishes iff every coefficient
/// does.  Sign of a nonzero value is decided by interval evaluation in MPFR
/// with escalating precision.
class Exact {
 public:
  Exact() : q_(0) {}
  Exact(const Rat& q) : q_(q) {}  // NOLINT: implicit by design
  Exact(long v) : q_(v) {}        // NOLINT
  static Exact log_prime(long p, const Rat& coeff);

  const Rat& rational_part() const { return q_; }
  const std::map<long, Rat>& log_coeffs() const { return logs_; }
  bool is_rational() const { return logs_.empty(); }
  bool is_zero() const { return q_ == 0 && logs_.empty(); }

  Exact& operator+=(const Exact& o);
  Exact& operator-=(const Exact& o);
  Exact& operator*=(const Rat& s);
  friend Exact operator+(Exact a, const Exact& b) { return a += b; }
  friend Exact operator-(Exact a, const Exact& b) { return a -= b; }
  friend Exact operator*(Exact a, const Rat& s) { return a *= s; }
  friend Exact operator*(const Rat& s, Exact a) { return a *= s; }
  Exact operator-() const;

  /// -1, 0, +1.
  int sign() const;
  bool operator==(const Exact& o) const { return (*this - o).is_zero(); }
  bool operator!=(const Exact& o) const { return !(*this == o); }
  bool operator<(const Exact& o) const { return (*this - o).sign() < 0; }
  bool operator<=(const Exact& o) const { return (*this - o).sign() <= 0; }
  bool operator>(const Exact& o) const { return (*this - o).sign() > 0; }
  bool operator>=(const Exact& o) const { return (*this - o).sign() >= 0; }

  double to_double() const;
  std::string str() const;

 private:
  void prune();
  Rat q_;
  std::map<long, Rat> logs_;
};

}  // namespace toric

#endif
