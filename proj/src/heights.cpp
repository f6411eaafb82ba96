#include "toric/heights.hpp"

#include <algorithm>
#include <set>

namespace toric {

MetrizedToricDivisor MetrizedToricDivisor::canonical(Polytope p) {
  MetrizedToricDivisor d;
  d.polytope = std::move(p);
  d.label = "canonical";
  return d;
}

MetrizedToricDivisor MetrizedToricDivisor::ronkin(const LaurentPoly& f,
                                                  int grid_res, long budget,
                                                  std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("ronkin divisor of zero");
  if (!f.has_rational_coeffs())
    throw std::invalid_argument("ronkin divisor: rational coefficients");
  MetrizedToricDivisor d;
  d.polytope = f.newton_polytope();
  d.label = "ronkin";
  // finite places with non-unit coefficient absolute values
  std::set<long> primes;
  for (const auto& [m, c] : f.terms())
    for (long p : prime_support(c.rational_value())) primes.insert(p);
  for (long p : primes) {
    PAConcave dual = ronkin_dual_nonarch(f, p);
    d.roofs.emplace(Place::prime(p), std::move(dual));
  }
  if (f.is_monomial()) {
    const auto& [m, c] = *f.terms().begin();
    Exact v;
    for (long p : prime_support(c.rational_value()))
      v += Exact::log_prime(p, Rat(ord_p(c.rational_value(), p)));
    d.roofs.emplace(Place::infinity(), PAConcave::indicator(to_vecq(m), v));
  } else {
    auto dual = ronkin_dual_arch(f, grid_res, budget, seed);
    d.roofs.emplace(Place::infinity(), std::move(dual.grid));
  }
  return d;
}

void MetrizedToricDivisor::set_roof(const Place& v, ConcaveFn fn) {
  const Polytope& dom = std::holds_alternative<PAConcave>(fn)
                            ? std::get<PAConcave>(fn).domain()
                            : std::get<GridConcave>(fn).domain;
  if (!(dom == polytope))
    throw std::invalid_argument("roof domain must equal the divisor polytope");
  roofs.insert_or_assign(v, std::move(fn));
}

ConcaveFn MetrizedToricDivisor::roof_at(const Place& v) const {
  auto it = roofs.find(v);
  if (it != roofs.end()) return it->second;
  return PAConcave::zero_on(polytope);
}

std::vector<Place> MetrizedToricDivisor::roof_places() const {
  std::vector<Place> out;
  for (const auto& [v, fn] : roofs) out.push_back(v);
  return out;
}

double HeightReport::total() const {
  double t = 0.0;
  for (const auto& term : terms) t += term.exact ? term.exact_value.to_double() : term.value;
  return t;
}

double HeightReport::error() const {
  double e = 0.0;
  for (const auto& term : terms) e += term.error;
  return e;
}

bool HeightReport::distinguishable_from(double x) const {
  return std::fabs(total() - x) > error();
}

std::vector<Place> relevant_places(
    const std::vector<MetrizedToricDivisor>& divisors,
    const std::vector<LaurentPoly>& laurents) {
  std::set<Place> places;
  places.insert(Place::infinity());
  for (const auto& f : laurents) {
    if (!f.has_rational_coeffs())
      throw std::invalid_argument("relevant_places: rational coefficients");
    for (const auto& [m, c] : f.terms())
      for (long p : prime_support(c.rational_value()))
        places.insert(Place::prime(p));
  }
  for (const auto& d : divisors)
    for (const auto& [v, fn] : d.roofs) places.insert(v);
  return {places.begin(), places.end()};
}

namespace {

ConcaveFn ronkin_dual_at(const LaurentPoly& f, const Place& v,
                         const PredictorParams& params) {
  if (!v.archimedean) return ronkin_dual_nonarch(f, v.p);
  if (f.is_monomial()) {
    const auto& [m, c] = *f.terms().begin();
    Exact val;
    for (long p : prime_support(c.rational_value()))
      val += Exact::log_prime(p, Rat(ord_p(c.rational_value(), p)));
    return PAConcave::indicator(to_vecq(m), val);
  }
  auto dual = ronkin_dual_arch(f, params.grid_res, params.budget, params.seed);
  return dual.grid;
}

}  // namespace

HeightReport limit_height(const std::vector<LaurentPoly>& fs,
                          const std::vector<MetrizedToricDivisor>& divisors,
                          const PredictorParams& params) {
  if (divisors.empty()) throw std::invalid_argument("limit_height: no divisors");
  const int n = divisors[0].polytope.ambient_dim();
  const int k = static_cast<int>(fs.size());
  if (static_cast<int>(divisors.size()) != n - k + 1)
    throw std::invalid_argument(
        "limit_height: need n-k+1 divisors for k laurent polynomials");
  for (const auto& f : fs) {
    if (f.is_zero()) throw std::domain_error("limit_height: zero polynomial");
    if (f.ambient_dim() != n)
      throw std::invalid_argument("limit_height: dimension mismatch");
  }
  HeightReport report;
  report.exact_total = Exact(Rat(0));
  // repeated polynomials share one dual per place
  std::vector<std::map<Place, ConcaveFn>> dual_cache(fs.size());
  std::vector<size_t> alias(fs.size());
  for (size_t j = 0; j < fs.size(); ++j) {
    alias[j] = j;
    for (size_t i = 0; i < j; ++i)
      if (fs[i] == fs[j]) {
        alias[j] = alias[i];
        break;
      }
  }
  auto dual_for = [&](size_t j, const Place& v) -> const ConcaveFn& {
    size_t a = alias[j];
    auto it = dual_cache[a].find(v);
    if (it == dual_cache[a].end())
      it = dual_cache[a].emplace(v, ronkin_dual_at(fs[a], v, params)).first;
    return it->second;
  };
  for (const Place& v : relevant_places(divisors, fs)) {
    std::vector<ConcaveFn> slots;
    for (const auto& d : divisors) slots.push_back(d.roof_at(v));
    for (size_t j = 0; j < fs.size(); ++j) slots.push_back(dual_for(j, v));
    MIValue mi = mixed_integral_any(slots, params.mi_grid);
    PlaceTerm term;
    term.place = v;
    term.exact = mi.exact;
    term.exact_value = mi.exact_value;
    term.value = mi.value;
    term.error = mi.error;
    if (mi.exact)
      report.exact_total += mi.exact_value;
    else
      report.all_exact = false;
    report.terms.push_back(std::move(term));
  }
  return report;
}

HeightReport torus_height(const std::vector<MetrizedToricDivisor>& divisors,
                          const PredictorParams& params) {
  return limit_height({}, divisors, params);
}

HeightReport hypersurface_height(const LaurentPoly& f,
                                 const std::vector<MetrizedToricDivisor>& divisors,
                                 const PredictorParams& params) {
  return limit_height({f}, divisors, params);
}

Rat degree_prediction(const std::vector<LaurentPoly>& fs,
                      const std::vector<Polytope>& divisor_polytopes) {
  std::vector<Polytope> ps = divisor_polytopes;
  for (const auto& f : fs) {
    if (f.is_zero()) throw std::domain_error("degree_prediction: zero input");
    ps.push_back(f.newton_polytope());
  }
  return mixed_volume(ps);
}

}  // namespace toric
