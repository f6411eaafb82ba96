#ifndef TORIC_VERIFIER_HPP
#define TORIC_VERIFIER_HPP

#include "toric/heights.hpp"
#include "toric/resultant.hpp"

namespace toric {

/// Desk-scale verification on the fixed model P^1 x P^1 with the canonical
/// O(1,1) metrized divisor (polytope [0,1]^2, zero roofs): the canonical
/// height of a torus point splits as h(x) + h(y), which makes intersection
/// 0-cycle heights exactly computable through resultants, Galois norms and
/// Mahler measures.

struct CycleHeightResult {
  double height = 0.0;
  double error = 0.0;
  long degree = 0;  // torus-part degree of the x-side resultant
  long shears = 0;  // coordinate changes applied for multiplicity safety
  std::string status = "ok";
};

/// h(Z(w1*f, w2*g)) = [m(S_x) + m(S_y)] / phi(N), S_* the Galois norms of
/// the torus parts of the two eliminations.
CycleHeightResult cycle_height_exact(const LaurentPoly& f, const LaurentPoly& g,
                                     const TorsionPoint& w1,
                                     const TorsionPoint& w2);

struct ExperimentConfig {
  LaurentPoly f{2}, g{2};
  long prime_lo = 101;
  long prime_hi = 401;
  SequenceKind kind = SequenceKind::kSeeded;
  std::uint64_t seed = 1;
  long budget = 1 << 18;
  int grid_res = 64;
};

struct ExperimentRow {
  long n = 0;      // torsion order N
  long s = 0;      // exponent of the second coordinate
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_dev = 0.0;
  long degree = 0;
  std::string status = "ok";
  long wall_ms = 0;
};

struct ConvergenceResult {
  std::vector<ExperimentRow> rows;
  double rhs = 0.0;
  double rhs_error = 0.0;
  double max_tail_dev = 0.0;  // over the last three proper rows
};

ConvergenceResult convergence_experiment(const ExperimentConfig& config);

/// I_p(t) for a good odd prime p (not dividing the coefficients, the orders,
/// with absolutely irreducible reductions):  deg * log max |delta_{m,m'}|_p
/// at the distinguished place of Q(zeta_N) above p; -infinity on Upsilon.
double local_error_term(const LaurentPoly& f, const LaurentPoly& g,
                        const TorsionPoint& t1, const TorsionPoint& t2, long p);

/// Orbit-averaged adelic tail sum_{good p <= bound} (1/#O) sum_eta I_p(eta),
/// one row per sequence element; every contribution is an exact integer
/// multiple of log p / phi(N).
struct TailRow {
  long n = 0;
  long s = 0;
  double total = 0.0;
  bool nonpositive = true;
  bool value_group_exact = true;
  long wall_ms = 0;
};
std::vector<TailRow> adelic_tail(
    const LaurentPoly& f, const LaurentPoly& g,
    const std::vector<std::pair<TorsionPoint, TorsionPoint>>& sequence,
    long prime_bound);

/// Orbit averages of log|h| on (zeta_N, zeta_N^s) against the Mahler
/// measure m(h); exact integer-norm route for linear integer h in n = 1.
struct EquidistRow {
  long n = 0;
  long s = 0;
  double average = 0.0;
  double mahler = 0.0;
  double deviation = 0.0;
  bool flagged = false;  // orbit hit a zero of h
  long wall_ms = 0;
};
std::vector<EquidistRow> equidistribution_demo(const LaurentPoly& h,
                                               const std::vector<long>& orders,
                                               long s);

}  // namespace toric

#endif
