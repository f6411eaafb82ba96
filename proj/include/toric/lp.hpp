#ifndef TORIC_LP_HPP
#define TORIC_LP_HPP

#include <optional>
#include <vector>

#include "toric/exact.hpp"
#include "toric/rational.hpp"

namespace toric {

/// Exact simplex solve of the "concave envelope" program:
///
///   max  sum_i vals[i] * lambda_i
///   s.t. sum_i lambda_i * pts[i] = x,  sum_i lambda_i = 1,  lambda >= 0,
///
/// over all i != skip.  Returns nullopt when x is not in the convex hull of
/// the selected points.  Bland's rule, rational tableau, Exact objective.
std::optional<Exact> envelope_max(const std::vector<VecQ>& pts,
                                  const std::vector<Exact>& vals, const VecQ& x,
                                  int skip = -1);

/// Membership test x in conv(pts) (values all zero).
bool in_hull(const std::vector<VecQ>& pts, const VecQ& x, int skip = -1);

}  // namespace toric

#endif
