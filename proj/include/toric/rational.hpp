#ifndef TORIC_RATIONAL_HPP
#define TORIC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using VecQ = std::vector<Rat>;
using VecZ = std::vector<long>;
using MatQ = std::vector<VecQ>;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline VecQ to_vecq(const VecZ& v) {
  VecQ out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline Rat dot(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline VecQ add(const VecQ& a, const VecQ& b) {
  VecQ c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline VecQ sub(const VecQ& a, const VecQ& b) {
  VecQ c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline VecQ scale(const VecQ& a, const Rat& s) {
  VecQ c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  return c;
}

inline bool lex_less(const VecQ& a, const VecQ& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

/// Determinant by fraction-free-ish Gaussian elimination over Q.
Rat det(MatQ m);

/// Solves A x = b for square A; nullopt if A is singular.
std::optional<VecQ> solve_linear(MatQ a, VecQ b);

/// Rank of a rational matrix.
int rank(MatQ m);

double rat_to_double(const Rat& q);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

/// p-adic valuation of a nonzero rational (positive on p-divisible numerators).
long ord_p(const Rat& q, long p);

/// Primes dividing numerator or denominator of q.
std::vector<long> prime_support(const Rat& q);

bool is_prime_u64(unsigned long n);

}  // namespace toric

#endif
