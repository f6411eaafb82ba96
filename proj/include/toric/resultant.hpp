#ifndef TORIC_RESULTANT_HPP
#define TORIC_RESULTANT_HPP

#include <cstdint>

#include "toric/laurent.hpp"

namespace toric {

/// Dense univariate polynomial over a cyclotomic field; index = degree.
using CycloPoly = std::vector<Cyclotomic>;

int cyclopoly_degree(const CycloPoly& p);
CycloPoly cyclopoly_galois(const CycloPoly& p, long u);
/// lcm of the coefficient conductors: the cyclotomic field the Galois norm
/// ranges over.
long cyclopoly_conductor(const CycloPoly& p);

struct EliminationResult {
  CycloPoly torus_part;     // boundary monomial factors stripped
  long stripped_power = 0;  // the removed w^k
  int nominal_degree = 0;   // Sylvester bound before drops
};

/// Resultant of two bivariate Laurent polynomials along the eliminated
/// variable `axis` (0 or 1); returns a polynomial in the other variable
/// whose torus roots are the coordinates of the intersection cycle.
/// Throws domain_error when the twisted pair is non-coprime (identically
/// vanishing resultant, improper intersection).
EliminationResult resultant_eliminate(const LaurentPoly& f,
                                      const LaurentPoly& g, int axis);

/// Upsilon membership: supports are translates and t1*f, t2*g agree up to a
/// monomial factor (all proportionality generators vanish).
bool upsilon_test(const LaurentPoly& f, const LaurentPoly& g,
                  const TorsionPoint& t1, const TorsionPoint& t2);

/// Content-normalized integer polynomial prod_u sigma_u(R), the full Galois
/// norm down to Q; computed modularly with CRT reconstruction.
std::vector<Int> galois_norm_poly(const CycloPoly& r);

namespace modarith {
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Primes q = 1 (mod n) with q > floor; count of them, ascending.
std::vector<std::uint64_t> primes_1_mod_n(long n, int count,
                                          std::uint64_t floor_bound);
/// Element of exact multiplicative order n in F_q (requires q = 1 mod n).
std::uint64_t root_of_unity(std::uint64_t q, long n);
}  // namespace modarith

}  // namespace toric

#endif
