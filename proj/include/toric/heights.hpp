#ifndef TORIC_HEIGHTS_HPP
#define TORIC_HEIGHTS_HPP

#include <map>
#include <string>

#include "toric/grid.hpp"
#include "toric/laurent.hpp"
#include "toric/ronkin.hpp"

namespace toric {

/// Place of Q with its weight (always 1 here).
struct Place {
  bool archimedean = true;
  long p = 0;
  static Place infinity() { return {true, 0}; }
  static Place prime(long q) { return {false, q}; }
  bool operator<(const Place& o) const {
    if (archimedean != o.archimedean) return archimedean;
    return p < o.p;
  }
  bool operator==(const Place& o) const {
    return archimedean == o.archimedean && p == o.p;
  }
  std::string str() const { return archimedean ? "inf" : std::to_string(p); }
};

/// Semipositive toric metrized divisor: polytope plus per-place roof
/// functions on it (zero roof at every unlisted place).
struct MetrizedToricDivisor {
  Polytope polytope;
  std::map<Place, ConcaveFn> roofs;
  std::string label = "custom";

  static MetrizedToricDivisor canonical(Polytope p);
  /// Divisor of NP(f) carrying the v-adic Ronkin metrics of f.
  static MetrizedToricDivisor ronkin(const LaurentPoly& f, int grid_res = 64,
                                     long budget = 1 << 18,
                                     std::uint64_t seed = 1);
  void set_roof(const Place& v, ConcaveFn fn);
  ConcaveFn roof_at(const Place& v) const;
  std::vector<Place> roof_places() const;
};

struct PlaceTerm {
  Place place;
  bool exact = false;
  Exact exact_value;
  double value = 0.0;
  double error = 0.0;
};

struct HeightReport {
  std::vector<PlaceTerm> terms;  // infinity first, then primes ascending
  bool all_exact = true;
  Exact exact_total;  // sum of the exact contributions
  double total() const;
  double error() const;
  /// honest comparison: refuses to distinguish within the error bound
  bool distinguishable_from(double x) const;
};

struct PredictorParams {
  int grid_res = 64;
  long budget = 1 << 18;
  std::uint64_t seed = 1;
  Rat mi_grid{1, 64};
};

/// Archimedean place, every prime dividing a coefficient numerator or
/// denominator, and every place carrying a nonzero roof; the mixed-integral
/// summand vanishes identically elsewhere.
std::vector<Place> relevant_places(
    const std::vector<MetrizedToricDivisor>& divisors,
    const std::vector<LaurentPoly>& laurents);

/// h = sum_v n_v MI(theta_{0,v}, ..., theta_{n,v}).
HeightReport torus_height(const std::vector<MetrizedToricDivisor>& divisors,
                          const PredictorParams& params = {});

/// h(Z(f)) = sum_v n_v MI(theta's, rho_{f,v}^vee).
HeightReport hypersurface_height(const LaurentPoly& f,
                                 const std::vector<MetrizedToricDivisor>& divisors,
                                 const PredictorParams& params = {});

/// Limit height of the twisted intersection family:
/// sum_v n_v MI(theta_{0,v}, ..., theta_{n-k,v}, rho_{f_1,v}^vee, ...,
/// rho_{f_k,v}^vee).
HeightReport limit_height(const std::vector<LaurentPoly>& fs,
                          const std::vector<MetrizedToricDivisor>& divisors,
                          const PredictorParams& params = {});

/// MV(Delta_{D_1}, ..., Delta_{D_{n-k}}, NP(f_1), ..., NP(f_k)).
Rat degree_prediction(const std::vector<LaurentPoly>& fs,
                      const std::vector<Polytope>& divisor_polytopes);

}  // namespace toric

#endif
