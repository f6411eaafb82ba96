#ifndef TORIC_CONCAVE_HPP
#define TORIC_CONCAVE_HPP

#include <optional>
#include <vector>

#include "toric/exact.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Exact piecewise-affine concave function in one of two canonical shapes:
///
///  - MIN form: f(u) = min_i (<slope_i, u> + intercept_i) on all of R^n
///    (metric-side functions on N_R: support functions, tropical Ronkin
///    functions);
///
///  - HULL form: the concave envelope over P = conv(points) of a lifted
///    point set {(p_i, v_i)}, with f = -infinity off P (polytope-side
///    functions on M_R: roof functions, Ronkin duals, indicators).
///
/// Legendre-Fenchel duality with the convention
///     f^vee(x) = inf_u (<u, x> - f(u))
/// exchanges the two shapes part-for-part: MIN{(a,b)} <-> HULL{(a,-b)}.
/// Both shapes canonicalize to the same minimal part list, so the involution
/// is the syntactic identity and equality of canonical forms is structural.
class PAConcave {
 public:
  struct Part {
    VecQ vec;   // slope (MIN) or base point (HULL)
    Exact val;  // intercept (MIN) or lifted value (HULL)
    bool operator==(const Part& o) const {
      return vec == o.vec && val == o.val;
    }
  };
  enum class Form { kMin, kHull };

  /// min of affine pieces on all of R^n.
  static PAConcave min_of_affine(int n, std::vector<Part> pieces);
  /// min of affine pieces restricted to a polytope (converted to HULL form;
  /// rational intercepts only).
  static PAConcave min_of_affine_on(const Polytope& domain,
                                    std::vector<Part> pieces);
  /// concave envelope of lifted points.
  static PAConcave upper_envelope(int n, std::vector<Part> lifted);
  static PAConcave zero_on(const Polytope& p);
  static PAConcave constant_on(const Polytope& p, const Exact& c);
  /// iota_{point} + value: 0-at-a-point indicator shifted by value.
  static PAConcave indicator(const VecQ& point, const Exact& value);

  Form form() const { return form_; }
  bool is_hull_form() const { return form_ == Form::kHull; }
  int ambient_dim() const { return n_; }
  const std::vector<Part>& parts() const { return parts_; }
  /// HULL form only: the domain polytope.
  const Polytope& domain() const;

  PAConcave legendre_dual() const;
  /// Value at a point; nullopt encodes -infinity (HULL form, x off domain).
  std::optional<Exact> evaluate(const VecQ& x) const;

  /// Cells of the regular subdivision induced by the lift, with the affine
  /// function active on each cell (HULL form).
  struct Cell {
    std::vector<int> part_indices;   // tight lifted points
    std::vector<Exact> grad;         // active affine piece:
    Exact offset;                    //   value = <grad, x> + offset
    Polytope cell;
  };
  std::vector<Cell> upper_cells() const;

  /// Exact integral over the domain w.r.t. the covolume-1 Haar measure
  /// (HULL form; 0 for lower-dimensional domains).
  Exact integrate() const;

  bool operator==(const PAConcave& o) const {
    return n_ == o.n_ && form_ == o.form_ && parts_ == o.parts_;
  }
  bool operator!=(const PAConcave& o) const { return !(*this == o); }

 private:
  PAConcave() = default;
  int n_ = 0;
  Form form_ = Form::kMin;
  std::vector<Part> parts_;
  Polytope domain_;  // HULL form
};

/// Sup-convolution (f [+] g)(x) = sup_{x1+x2=x} f(x1) + g(x2) of HULL forms:
/// lifted points add pairwise, domains add Minkowski.
PAConcave sup_convolution(const PAConcave& f, const PAConcave& g);

/// Exact mixed integral of n+1 HULL-form concave functions in dimension n:
///   MI(f_0..f_n) = sum_{J nonempty} (-1)^(n+1-|J|)
///                  int_{(+)_J Q_j} ([+]_J f_j).
/// Symmetric and multilinear with respect to sup-convolution;
/// MI(g,...,g) = (n+1)! int g.
Exact mixed_integral(const std::vector<PAConcave>& fs);

/// Stability constant and check for intercept perturbations:
/// C = (n+1) * sum_J vol((+)_J Q_j); asserts |MI(pert) - MI(orig)| <= C*eps.
struct PerturbationBound {
  Rat constant;
  Exact difference;  // MI(perturbed) - MI(original)
  bool within;
};
PerturbationBound uniform_perturbation_bound(
    const std::vector<PAConcave>& original,
    const std::vector<PAConcave>& perturbed, const Rat& eps);

}  // namespace toric

#endif
