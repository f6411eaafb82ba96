#ifndef TORIC_POLYTOPE_HPP
#define TORIC_POLYTOPE_HPP

#include <utility>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

/// Convex polytope in M_R = R^n with exact rational vertices, canonicalized
/// as the lex-sorted list of extreme points.  Lattice polytopes are the main
/// clients (Newton polytopes, divisor polytopes) but rational vertices are
/// allowed everywhere; lower-dimensional polytopes are legal and measure 0.
class Polytope {
 public:
  struct Halfspace {
    VecQ normal;  // primitive integer vector
    Rat offset;   // <normal, x> <= offset
  };

  Polytope() = default;
  static Polytope from_points(int n, std::vector<VecQ> pts);
  static Polytope from_lattice_points(int n, const std::vector<VecZ>& pts);
  static Polytope point(VecQ p);
  static Polytope empty(int n);

  int ambient_dim() const { return n_; }
  bool is_empty() const { return verts_.empty(); }
  /// Affine dimension; -1 for the empty polytope.
  int dim() const;
  const std::vector<VecQ>& vertices() const { return verts_; }
  /// Vertices in counterclockwise boundary order (ambient dim 2 only).
  std::vector<VecQ> hull_order_2d() const;
  VecQ lex_min_vertex() const;

  Rat support_value(const VecQ& u) const;
  bool contains(const VecQ& x) const;
  Rat normalized_volume() const;
  std::pair<Rat, VecQ> volume_and_centroid() const;
  /// Facet halfspaces of a full-dimensional polytope.
  std::vector<Halfspace> facets() const;
  /// Affine hull as a list of equations <a,x> = b (empty when full-dim).
  std::vector<std::pair<VecQ, Rat>> affine_hull_equations() const;
  /// Simplices (as vertex-index tuples into vertices()) triangulating the
  /// polytope; each has dim()+1 entries.
  std::vector<std::vector<int>> triangulation() const;

  bool operator==(const Polytope& o) const {
    return n_ == o.n_ && verts_ == o.verts_;
  }
  bool operator!=(const Polytope& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::vector<VecQ> verts_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);

/// Normalized mixed volume of n polytopes in R^n, inclusion-exclusion form:
/// MV = sum over nonempty J of (-1)^(n-|J|) vol(sum_{j in J} P_j).
/// MV(Q,...,Q) = n! vol(Q).
Rat mixed_volume(const std::vector<Polytope>& ps);

/// Extreme points of a rational point set (exposed for reuse/tests).
std::vector<VecQ> extreme_points(int n, std::vector<VecQ> pts);

/// Affine frame of a point set: origin plus a basis of the affine hull.
struct AffineFrame {
  VecQ origin;
  std::vector<VecQ> basis;
  int dim;
};
AffineFrame affine_frame_of(const std::vector<VecQ>& pts);
/// Coordinates of x in the frame: x = origin + sum c_j basis_j.
VecQ frame_coords_of(const AffineFrame& fr, const VecQ& x);
VecQ frame_point_of(const AffineFrame& fr, const VecQ& coords);

}  // namespace toric

#endif
