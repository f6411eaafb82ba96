#ifndef TORIC_MAHLER_HPP
#define TORIC_MAHLER_HPP

#include <vector>

#include "toric/rational.hpp"

namespace toric {

struct MahlerResult {
  double value;
  double error;  // certified-style bound from root inclusion radii
};

/// Mahler measure m(S) = log|lead| + sum log+ |roots| of a nonzero integer
/// polynomial.  Aberth iteration with exponent-tracked evaluation, then
/// MPFR Newton refinement with per-root inclusion radii.
MahlerResult mahler_measure(const std::vector<Int>& s);

}  // namespace toric

#endif
