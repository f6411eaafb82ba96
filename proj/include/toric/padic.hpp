#ifndef TORIC_PADIC_HPP
#define TORIC_PADIC_HPP

#include "toric/cyclotomic.hpp"

namespace toric {

/// Places of Q(zeta_N) above an odd prime p.  Write N = p^k M with p not
/// dividing M: the places correspond to the monic irreducible factors of
/// Phi_M mod p (equal degree f = ord(p mod M)), with ramification
/// e = phi(p^k).  Unramified valuations come from Hensel-lifted factors; in
/// the ramified case ord_w is computed by relative norms down the totally
/// ramified tower (v_w(x) = v_{w'}(Nm(x)) one p-layer at a time).  The
/// distinguished place is the lexicographically smallest factor mod p.
class CyclotomicPrime {
 public:
  CyclotomicPrime(long n, long p);
  long n() const { return n_; }
  long p() const { return p_; }
  long residue_degree() const { return f_; }
  long ramification() const { return e_; }
  int num_places() const { return static_cast<int>(factors_.size()); }

  /// ord_w(x) at every place w (Z-normalized: ord_w(p) = e), x != 0.
  std::vector<long> valuations(const Cyclotomic& x) const;
  /// ord_w at the distinguished place.
  long valuation(const Cyclotomic& x) const { return valuations(x)[0]; }

 private:
  void lift_to(long k) const;  // ensure factors are known mod p^k
  long n_, p_, f_, e_ = 1, m_ = 1;  // n = p^k m
  std::vector<std::vector<std::uint64_t>> factors_mod_p_;  // monic, deg f
  mutable long k_ = 1;                                     // current p-power
  mutable Int pk_;
  mutable std::vector<std::vector<Int>> factors_;  // lifted mod p^k
};

/// Exact norm N_{Q(zeta_N)/Q}(x) of a cyclotomic integer (integral
/// coordinates required).
Int cyclotomic_integer_norm(const Cyclotomic& x);

/// Phi_N evaluated at an integer argument.
Int cyclotomic_value_at(long n, const Int& x);

}  // namespace toric

#endif
