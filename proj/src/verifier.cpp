#include "toric/verifier.hpp"

#include <chrono>
#include <numeric>

#include "toric/mahler.hpp"
#include "toric/padic.hpp"

namespace toric {

namespace {

long now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

// y |-> x^j y (keeps x-coordinates of points): exponent (a,b) -> (a + j b, b);
// axis = 1 shears the second variable, axis = 0 the first
LaurentPoly shear(const LaurentPoly& f, int axis, long j) {
  LaurentPoly out(2);
  for (const auto& [e, c] : f.terms()) {
    VecZ ne = e;
    if (axis == 1)
      ne[0] += j * e[1];
    else
      ne[1] += j * e[0];
    out.set_term(ne, c);
  }
  return out;
}

// univariate gcd degree over the coefficient field, via one split prime;
// deg 0 certifies coprimality
bool coprime_with_derivative(const CycloPoly& r) {
  int d = cyclopoly_degree(r);
  if (d <= 1) return true;
  long n = cyclopoly_conductor(r);
  auto q = modarith::primes_1_mod_n(n, 1, 1ULL << 31)[0];
  std::uint64_t w = modarith::root_of_unity(q, n);
  std::vector<std::uint64_t> wpow(n);
  wpow[0] = 1;
  for (long i = 1; i < n; ++i) wpow[i] = modarith::mulmod(wpow[i - 1], w, q);
  // reduce coefficients mod q with zeta -> w
  std::vector<std::uint64_t> a(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    Cyclotomic c = r[k].lift_to(n);
    auto [den, z] = c.integral_scaled();
    Int dq = den % Int(static_cast<unsigned long>(q));
    if (dq == 0) return false;  // unlucky prime; be conservative
    std::uint64_t deninv =
        modarith::powmod(dq.get_ui(), q - 2, q);
    std::uint64_t acc = 0;
    for (size_t i = 0; i < z.size(); ++i) {
      if (z[i] == 0) continue;
      Int red = z[i] % Int(static_cast<unsigned long>(q));
      if (red < 0) red += Int(static_cast<unsigned long>(q));
      acc = (acc + modarith::mulmod(red.get_ui(), wpow[i % n], q)) % q;
    }
    a[k] = modarith::mulmod(acc, deninv, q);
  }
  if (a[d] == 0) return false;
  std::vector<std::uint64_t> b(d, 0);
  for (int k = 1; k <= d; ++k)
    b[k - 1] = modarith::mulmod(a[k], static_cast<std::uint64_t>(k), q);
  // euclid
  auto trim = [](std::vector<std::uint64_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    std::uint64_t linv = modarith::powmod(b.back(), q - 2, q);
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t c = modarith::mulmod(a.back(), linv, q);
      size_t off = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) {
        std::uint64_t t = modarith::mulmod(c, b[i], q);
        a[off + i] = (a[off + i] + q - t) % q;
      }
      trim(a);
    }
    std::swap(a, b);
    trim(b);
  }
  return a.size() == 1;
}

// leading/trailing coefficient degeneracy along `axis`: solutions escaping
// to 0/infinity in the eliminated variable over torus values of the other
bool phantom_risk(const LaurentPoly& f, const LaurentPoly& g, int axis) {
  auto edge_poly = [&](const LaurentPoly& h, bool top) {
    long best = 0;
    bool first = true;
    for (const auto& [e, c] : h.terms()) {
      long v = e[axis];
      if (first || (top ? v > best : v < best)) best = v;
      first = false;
    }
    CycloPoly out;
    long wmin = 0;
    bool wfirst = true;
    for (const auto& [e, c] : h.terms()) {
      if (e[axis] != best) continue;
      if (wfirst || e[1 - axis] < wmin) wmin = e[1 - axis];
      wfirst = false;
    }
    for (const auto& [e, c] : h.terms()) {
      if (e[axis] != best) continue;
      size_t idx = e[1 - axis] - wmin;
      if (out.size() <= idx) out.resize(idx + 1, Cyclotomic(Rat(0)));
      out[idx] = c;
    }
    return out;
  };
  for (bool top : {true, false}) {
    CycloPoly lf = edge_poly(f, top), lg = edge_poly(g, top);
    if (cyclopoly_degree(lf) == 0 || cyclopoly_degree(lg) == 0) continue;
    // a common torus root of the two edge polynomials is a phantom risk:
    // check gcd degree via the resultant of the pair as univariates
    LaurentPoly a(2), b(2);
    for (int k = 0; k <= cyclopoly_degree(lf); ++k)
      if (!lf[k].is_zero()) a.set_term({k, 0}, lf[k]);
    for (int k = 0; k <= cyclopoly_degree(lg); ++k)
      if (!lg[k].is_zero()) b.set_term({k, 0}, lg[k]);
    try {
      auto r = resultant_eliminate(a, b, 0);
      (void)r;
    } catch (const std::domain_error&) {
      return true;  // identically vanishing resultant: shared factor
    }
    // nonzero resultant may still vanish... the Sylvester determinant of two
    // univariate polynomials vanishes iff they share a root; nonzero value
    // means no phantom
  }
  return false;
}

// Hmm: resultant_eliminate on univariate-in-x inputs returns the constant
// Res; zero Res throws. A nonzero constant certifies no common root.

struct AxisHeight {
  double mahler = 0.0;
  double err = 0.0;
  long torus_degree = 0;
  long shears = 0;
};

AxisHeight axis_height(LaurentPoly F, LaurentPoly G, int axis, long phi_n) {
  AxisHeight out;
  for (long attempt = 0;; ++attempt) {
    bool risky = phantom_risk(F, G, axis);
    EliminationResult elim;
    bool squarefree = true;
    if (!risky) {
      elim = resultant_eliminate(F, G, axis);
      squarefree = coprime_with_derivative(elim.torus_part);
    }
    if (risky || !squarefree) {
      if (attempt >= 5)
        throw std::runtime_error(
            "cycle_height: projection still degenerate after 5 shears");
      long j = attempt + 1;
      F = shear(F, axis, j);
      G = shear(G, axis, j);
      ++out.shears;
      continue;
    }
    out.torus_degree = cyclopoly_degree(elim.torus_part);
    if (out.torus_degree == 0) return out;  // empty slice: no contribution
    auto s = galois_norm_poly(elim.torus_part);
    long cond = cyclopoly_conductor(elim.torus_part);
    auto m = mahler_measure(s);
    // the Galois norm ranges over units mod `cond`; heights divide by that
    // many conjugates, not by phi(N) of the ambient field
    double scale = static_cast<double>(euler_phi(cond));
    out.mahler = m.value / scale;
    out.err = m.error / scale;
    (void)phi_n;
    return out;
  }
}

}  // namespace

CycleHeightResult cycle_height_exact(const LaurentPoly& f, const LaurentPoly& g,
                                     const TorsionPoint& w1,
                                     const TorsionPoint& w2) {
  if (f.ambient_dim() != 2 || g.ambient_dim() != 2)
    throw std::invalid_argument("cycle_height_exact: bivariate model");
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("cycle_height_exact: zero polynomial");
  CycleHeightResult res;
  if (upsilon_test(f, g, w1, w2)) {
    res.status = "upsilon";
    return res;
  }
  LaurentPoly F = twist(f, w1);
  LaurentPoly G = twist(g, w2);
  try {
    AxisHeight hx = axis_height(F, G, 1, 0);  // eliminate y: roots are x's
    AxisHeight hy = axis_height(F, G, 0, 0);
    res.height = hx.mahler + hy.mahler;
    res.error = hx.err + hy.err;
    res.degree = hx.torus_degree;
    res.shears = hx.shears + hy.shears;
    if (hx.torus_degree != hy.torus_degree) res.status = "degree-mismatch";
  } catch (const std::domain_error&) {
    res.status = "improper";
  } catch (const std::runtime_error& e) {
    res.status = e.what();
  }
  return res;
}

ConvergenceResult convergence_experiment(const ExperimentConfig& config) {
  ConvergenceResult out;
  auto sq =
      Polytope::from_lattice_points(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  auto d0 = MetrizedToricDivisor::canonical(sq);
  PredictorParams params;
  params.grid_res = config.grid_res;
  params.budget = config.budget;
  params.seed = config.seed;
  params.mi_grid = Rat(1, config.grid_res);
  auto rhs_report = limit_height({config.f, config.g}, {d0}, params);
  out.rhs = rhs_report.total();
  out.rhs_error = rhs_report.error();

  Rat expected_degree = degree_prediction({config.f, config.g}, {});
  auto seq = quasi_strict_sequence(config.kind, 1 << 20, config.prime_lo,
                                   config.prime_hi, config.seed);
  for (const auto& [w1, w2] : seq) {
    ExperimentRow row;
    row.n = w2.order;
    row.s = w2.exps.size() > 1 ? w2.exps[1] : 0;
    row.rhs = out.rhs;
    long t0 = now_ms();
    auto ch = cycle_height_exact(config.f, config.g, w1, w2);
    row.wall_ms = now_ms() - t0;
    row.status = ch.status;
    row.degree = ch.degree;
    if (ch.status == "ok" || ch.status == "degree-mismatch") {
      row.lhs = ch.height;
      row.abs_dev = std::fabs(row.lhs - row.rhs);
      if (Rat(ch.degree) != expected_degree && row.status == "ok")
        row.status = "degree-off";
    } else {
      row.lhs = std::numeric_limits<double>::quiet_NaN();
      row.abs_dev = std::numeric_limits<double>::quiet_NaN();
    }
    out.rows.push_back(std::move(row));
  }
  int counted = 0;
  for (auto it = out.rows.rbegin(); it != out.rows.rend() && counted < 3; ++it) {
    if (it->status != "ok") continue;
    out.max_tail_dev = std::max(out.max_tail_dev, it->abs_dev);
    ++counted;
  }
  return out;
}

namespace {

// the Upsilon proportionality generators of the twisted pair
std::vector<Cyclotomic> upsilon_generators(const LaurentPoly& f,
                                           const LaurentPoly& g,
                                           const TorsionPoint& t1,
                                           const TorsionPoint& t2,
                                           bool* translates) {
  std::vector<Cyclotomic> out;
  auto sf = f.support();
  auto sg = g.support();
  *translates = false;
  if (sf.size() != sg.size()) return out;
  const int n = f.ambient_dim();
  VecZ shift(n);
  for (int i = 0; i < n; ++i) shift[i] = sg[0][i] - sf[0][i];
  for (size_t k = 0; k < sf.size(); ++k)
    for (int i = 0; i < n; ++i)
      if (sf[k][i] + shift[i] != sg[k][i]) return out;
  *translates = true;
  auto cf = [&](const VecZ& m) { return f.terms().at(m) * t1.character(m); };
  auto cg = [&](const VecZ& m) { return g.terms().at(m) * t2.character(m); };
  for (size_t a = 0; a < sf.size(); ++a)
    for (size_t b = a + 1; b < sf.size(); ++b)
      out.push_back(cf(sf[a]) * cg(sg[b]) - cf(sf[b]) * cg(sg[a]));
  return out;
}

void check_good_prime(const LaurentPoly& f, const LaurentPoly& g, long n,
                      long p) {
  if (p < 3 || !is_prime_u64(static_cast<unsigned long>(p)))
    throw std::invalid_argument("local error term: p must be an odd prime");
  auto unit_coeffs = [&](const LaurentPoly& h) {
    for (const auto& [m, c] : h.terms()) {
      if (!c.is_rational() || ord_p(c.rational_value(), p) != 0) return false;
    }
    return true;
  };
  if (!unit_coeffs(f) || !unit_coeffs(g))
    throw std::invalid_argument(
        "local error term: coefficients must be p-adic units");
  // absolute irreducibility probe for the reductions: a Laurent polynomial
  // of degree one in some variable with coprime coefficient rows stays
  // absolutely irreducible; larger degrees are outside this probe
  auto probe = [&](const LaurentPoly& h) {
    for (int axis : {0, 1}) {
      long lo = 0, hi = 0;
      bool first = true;
      for (const auto& [e, c] : h.terms()) {
        long v = e[axis];
        if (first || v < lo) lo = v;
        if (first || v > hi) hi = v;
        first = false;
      }
      if (hi - lo == 1) return true;
    }
    return false;
  };
  if (!probe(f) || !probe(g))
    throw std::invalid_argument(
        "local error term: irreducibility probe supports degree-one "
        "directions only");
}

}  // namespace

double local_error_term(const LaurentPoly& f, const LaurentPoly& g,
                        const TorsionPoint& t1, const TorsionPoint& t2,
                        long p) {
  long n = std::lcm(t1.order, t2.order);
  check_good_prime(f, g, n, p);
  bool translates = false;
  auto gens = upsilon_generators(f, g, t1, t2, &translates);
  if (!translates) return 0.0;
  bool all_zero = true;
  for (const auto& d : gens) all_zero &= d.is_zero();
  if (all_zero) return -std::numeric_limits<double>::infinity();
  auto sq = Polytope::from_lattice_points(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  Rat deg = mixed_volume({sq, f.newton_polytope()});
  if (n == 1) {
    // rational generators: |.|_p directly
    long mn = std::numeric_limits<long>::max();
    for (const auto& d : gens) {
      if (d.is_zero()) continue;
      mn = std::min(mn, ord_p(d.rational_value(), p));
    }
    return -rat_to_double(deg) * static_cast<double>(mn) * std::log(p);
  }
  CyclotomicPrime cp(n, p);
  long mn = std::numeric_limits<long>::max();
  for (const auto& d : gens) {
    if (d.is_zero()) continue;
    mn = std::min(mn, cp.valuation(d.lift_to(n)));
  }
  // |.|_p on C_p: p^(-ord_w / e)
  return -rat_to_double(deg) * static_cast<double>(mn) * std::log(p) /
         static_cast<double>(cp.ramification());
}

std::vector<TailRow> adelic_tail(
    const LaurentPoly& f, const LaurentPoly& g,
    const std::vector<std::pair<TorsionPoint, TorsionPoint>>& sequence,
    long prime_bound) {
  std::vector<TailRow> rows;
  auto sq = Polytope::from_lattice_points(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  Rat deg = mixed_volume({sq, f.newton_polytope()});
  for (const auto& [w1, w2] : sequence) {
    TailRow row;
    long t0 = now_ms();
    long n = std::lcm(w1.order, w2.order);
    row.n = n;
    row.s = w2.exps.size() > 1 ? w2.exps[1] : 0;
    bool translates = false;
    auto gens = upsilon_generators(f, g, w1, w2, &translates);
    double total = 0.0;
    if (translates) {
      long phi = euler_phi(n);
      for (long p = 3; p <= prime_bound; ++p) {
        if (!is_prime_u64(static_cast<unsigned long>(p))) continue;
        bool good = true;
        try {
          check_good_prime(f, g, n, p);
        } catch (const std::invalid_argument&) {
          good = false;
        }
        if (!good) continue;
        long places_total = 0;
        if (n == 1) {
          long mn = std::numeric_limits<long>::max();
          for (const auto& d : gens)
            if (!d.is_zero()) mn = std::min(mn, ord_p(d.rational_value(), p));
          places_total = mn;
        } else {
          // sum over the orbit: each place is visited e*f times, each visit
          // contributing min_w(ord)/e * log p, so the ramification cancels
          CyclotomicPrime cp(n, p);
          std::vector<std::vector<long>> vals;
          for (const auto& d : gens)
            if (!d.is_zero()) vals.push_back(cp.valuations(d.lift_to(n)));
          long sum = 0;
          for (int place = 0; place < cp.num_places(); ++place) {
            long mn = std::numeric_limits<long>::max();
            for (const auto& v : vals) mn = std::min(mn, v[place]);
            sum += mn;
          }
          places_total = sum * cp.residue_degree();
        }
        if (places_total < 0) row.nonpositive = false;
        total += -rat_to_double(deg) * static_cast<double>(places_total) *
                 std::log(p) / static_cast<double>(phi);
      }
    }
    row.total = total;
    row.wall_ms = now_ms() - t0;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<EquidistRow> equidistribution_demo(const LaurentPoly& h,
                                               const std::vector<long>& orders,
                                               long s) {
  if (h.is_zero()) throw std::domain_error("equidistribution_demo: zero");
  const int n = h.ambient_dim();
  std::vector<EquidistRow> rows;
  double mh = -ronkin_arch_slice(h, std::vector<double>(n, 0.0), 1e-9);
  // exact route for integer linear h = x - a in one variable
  bool exact_linear = false;
  Int lin_a;
  if (n == 1 && h.terms().size() == 2) {
    auto it = h.terms().begin();
    if (it->first == VecZ{0} && std::next(it)->first == VecZ{1} &&
        std::next(it)->second == Cyclotomic(Rat(1)) &&
        it->second.is_rational() && it->second.rational_value().get_den() == 1) {
      exact_linear = true;
      lin_a = -Int(it->second.rational_value().get_num());
    }
  }
  for (long N : orders) {
    EquidistRow row;
    long t0 = now_ms();
    row.n = N;
    long srow = s;
    if (srow <= 0) {
      srow = static_cast<long>(std::sqrt(static_cast<double>(N)));
      if (srow < 2) srow = 2;
    }
    row.s = srow % N;
    row.mahler = mh;
    if (exact_linear) {
      // average log|zeta - a| over the primitive orbit = log|Phi_N(a)|/phi(N)
      Int v = cyclotomic_value_at(N, lin_a);
      if (v == 0) {
        row.flagged = true;
      } else {
        signed long e;
        double m = mpz_get_d_2exp(&e, v.get_mpz_t());
        row.average = (std::log(std::fabs(m)) + e * std::log(2.0)) /
                      static_cast<double>(euler_phi(N));
      }
    } else {
      double acc = 0.0;
      long cnt = 0;
      const double tau = 6.283185307179586;
      for (long u = 1; u < N; ++u) {
        if (std::gcd(u, N) != 1) continue;
        std::vector<std::complex<double>> x;
        x.push_back(std::polar(1.0, tau * u / N));
        if (n == 2) x.push_back(std::polar(1.0, tau * ((srow * u) % N) / N));
        double a = std::abs(h.eval_complex(x));
        if (a < 1e-13) {
          row.flagged = true;
          break;
        }
        acc += std::log(a);
        ++cnt;
      }
      if (!row.flagged && cnt > 0) row.average = acc / cnt;
    }
    row.deviation = row.average - row.mahler;
    row.wall_ms = now_ms() - t0;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace toric
