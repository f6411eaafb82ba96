#ifndef TORIC_RONKIN_HPP
#define TORIC_RONKIN_HPP

#include "toric/grid.hpp"
#include "toric/laurent.hpp"

namespace toric {

/// v-adic Ronkin function, concave normalization:
///   rho_{f,v}(u) = -(average of log|f|_v over the fiber val_v^{-1}(u)),
/// with val_v(t) = (-log|t_1|_v, ...).  At a finite place this is the
/// tropical form min_m(<m,u> - log|alpha_m|_p); at the Archimedean place it
/// is minus the classical Ronkin function at -u.  The Legendre dual
/// rho^vee lives on NP(f) and at a vertex m equals log|alpha_m|_v.

/// Exact tropical Ronkin function (min form on R^n); rational coefficients.
PAConcave ronkin_nonarch(const LaurentPoly& f, long p);
/// Its dual: upper hull of {(m, log|alpha_m|_p)} on NP(f).
PAConcave ronkin_dual_nonarch(const LaurentPoly& f, long p);

struct ArchRonkinEstimate {
  double value = 0.0;
  double error = 0.0;
  long nodes = 0;
  bool resampled = false;  // hit the amoeba singular set and jittered
};

/// Rank-1 lattice QMC estimate of rho_{f,inf}(u) with the given node budget
/// (rounded down to a Fibonacci size in dimension 2); error from two
/// independently shifted half-budget lattices.
ArchRonkinEstimate ronkin_arch(const LaurentPoly& f,
                               const std::vector<double>& u, long budget,
                               std::uint64_t seed);

/// High-accuracy evaluation for n <= 2: the inner fiber integral is done
/// exactly by Jensen's formula on each theta-slice, the outer one
/// adaptively.
double ronkin_arch_slice(const LaurentPoly& f, const std::vector<double>& u,
                         double tol = 1e-8);

struct RonkinDualGrid {
  GridConcave grid;
  long budget = 0;
  std::uint64_t seed = 0;
  double net_radius = 0.0;
  double net_spacing = 0.0;
  double net_error = 0.0;
  double eval_error = 0.0;
};

/// Archimedean Ronkin dual on NP(f) as a sampled grid: pointwise
/// inf over a u-net of <u,x> - rho(u), rho evaluated by the slice
/// integrator; the reported pointwise error adds the net-halving
/// difference to the evaluator tolerance.
RonkinDualGrid ronkin_dual_arch(const LaurentPoly& f, int grid_res,
                                long budget, std::uint64_t seed);

}  // namespace toric

#endif
