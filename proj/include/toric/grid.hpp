#ifndef TORIC_GRID_HPP
#define TORIC_GRID_HPP

#include <functional>
#include <variant>

#include "toric/concave.hpp"

namespace toric {

/// Concave function carried by samples on a dyadic grid over a polytope
/// (ambient dimension 1 or 2), interpolated simplicially.  Carries an
/// attached pointwise error bound and a slope scale.
struct GridConcave {
  Polytope domain;
  Rat h;                      // dyadic spacing; domain vertices must be nodes
  long i0 = 0, j0 = 0;        // node (i,j) sits at ((i0+i)h, (j0+j)h)
  long nx = 0, ny = 1;
  std::vector<double> values;  // row-major [j*nx + i]; quiet NaN off-domain
  std::vector<double> errs;    // per-node error bounds; empty = point_error
  double point_error = 0.0;    // max pointwise error
  double slope_bound = 0.0;

  int dim() const { return domain.ambient_dim(); }
  double at(long i, long j) const { return values[j * nx + i]; }
  double err_at(long i, long j) const {
    return errs.empty() ? point_error : errs[j * nx + i];
  }
  bool finite_at(long i, long j) const;
  /// simplicial interpolation at a point inside the domain
  double eval(double x, double y = 0.0) const;

  static GridConcave sample_pa(const PAConcave& f, const Rat& h);
  static GridConcave sample_fn(const Polytope& domain, const Rat& h,
                               const std::function<double(const VecQ&)>& fn,
                               double point_error, double slope_bound);
};

using ConcaveFn = std::variant<PAConcave, GridConcave>;

struct MIValue {
  bool exact = false;
  Exact exact_value;
  double value = 0.0;
  double error = 0.0;
};

/// Mixed integral accepting exact and sampled slots.  All-PA input follows
/// the exact path; otherwise the inclusion-exclusion is evaluated on dyadic
/// grids (max-plus convolution for the sup-convolutions, cellwise simplicial
/// quadrature, exact clipped areas at the boundary) at spacing h and 2h,
/// with the step-halving difference folded into the reported error.
MIValue mixed_integral_any(const std::vector<ConcaveFn>& fs, const Rat& h);

}  // namespace toric

#endif
