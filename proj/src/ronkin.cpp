#include "toric/ronkin.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace toric {

namespace {

constexpr double kTau = 6.283185307179586476925;

double log_abs_coeff(const Cyclotomic& c) { return std::log(std::abs(c.embed())); }

// f as a polynomial in the last variable with theta-evaluated coefficients:
// for n = 2 returns the coefficients c_j(theta) of w^j (j shifted so the
// lowest power is 0) plus the stripped power.
struct SliceEval {
  const LaurentPoly* f;
  int n;
  long wmin, wdeg;
  // per w-power: list of (x-exponent, coefficient embedding)
  std::vector<std::vector<std::pair<long, std::complex<double>>>> rows;

  explicit SliceEval(const LaurentPoly& poly) : f(&poly) {
    n = poly.ambient_dim();
    bool first = true;
    long wmax = 0;
    for (const auto& [e, c] : poly.terms()) {
      long w = (n == 2) ? e[1] : e[0];
      if (first || w < wmin) wmin = w;
      if (first || w > wmax) wmax = w;
      first = false;
    }
    wdeg = wmax - wmin;
    rows.assign(wdeg + 1, {});
    for (const auto& [e, c] : poly.terms()) {
      long w = ((n == 2) ? e[1] : e[0]) - wmin;
      long a = (n == 2) ? e[0] : 0;
      rows[w].push_back({a, c.embed()});
    }
  }

  // coefficients of the w-polynomial on the fiber x = exp(-u1 + i theta)
  void coeffs(double u1, double theta,
              std::vector<std::complex<double>>& out) const {
    out.assign(wdeg + 1, {0.0, 0.0});
    for (long j = 0; j <= wdeg; ++j) {
      std::complex<double> acc(0.0, 0.0);
      for (const auto& [a, c] : rows[j]) {
        double mag = std::exp(-u1 * static_cast<double>(a));
        double ang = theta * static_cast<double>(a);
        acc += c * std::complex<double>(mag * std::cos(ang), mag * std::sin(ang));
      }
      out[j] = acc;
    }
  }
};

// roots of a small complex polynomial (degree <= ~8): closed forms for
// degree <= 2, Durand-Kerner otherwise
void small_roots(const std::vector<std::complex<double>>& c,
                 std::vector<std::complex<double>>& roots) {
  roots.clear();
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && std::abs(c[d]) == 0.0) --d;
  if (d <= 0) return;
  if (d == 1) {
    roots.push_back(-c[0] / c[1]);
    return;
  }
  if (d == 2) {
    std::complex<double> a = c[2], b = c[1], cc = c[0];
    std::complex<double> disc = std::sqrt(b * b - 4.0 * a * cc);
    std::complex<double> q = -0.5 * (b + (std::real(std::conj(b) * disc) >= 0 ? disc : -disc));
    if (std::abs(q) > 0) {
      roots.push_back(q / a);
      roots.push_back(cc / q);
    } else {
      roots.push_back(std::sqrt(-cc / a));
      roots.push_back(-roots[0]);
    }
    return;
  }
  std::vector<std::complex<double>> z(d);
  double r = 1.0 + std::abs(c[d - 1] / c[d]);
  for (int i = 0; i < d; ++i)
    z[i] = std::polar(r * (0.5 + 0.5 * i / d), kTau * (i + 0.25) / d);
  for (int it = 0; it < 200; ++it) {
    double worst = 0.0;
    for (int i = 0; i < d; ++i) {
      std::complex<double> p(c[d]);
      for (int k = d - 1; k >= 0; --k) p = p * z[i] + c[k];
      std::complex<double> denom(c[d]);
      for (int j = 0; j < d; ++j)
        if (j != i) denom *= (z[i] - z[j]);
      if (std::abs(denom) < 1e-280) continue;
      std::complex<double> corr = p / denom;
      z[i] -= corr;
      worst = std::max(worst, std::abs(corr));
    }
    if (worst < 1e-14) break;
  }
  roots = z;
}

// (1/2pi) int log|g(e^{-u2 + i phi})| dphi via Jensen, g given by w-coeffs
double jensen_fiber(const std::vector<std::complex<double>>& c, long wmin,
                    double u2) {
  int d = static_cast<int>(c.size()) - 1;
  while (d > 0 && std::abs(c[d]) < 1e-290) --d;
  double r = std::exp(-u2);
  if (d == 0) return std::log(std::abs(c[0])) + wmin * (-u2);
  std::vector<std::complex<double>> roots;
  std::vector<std::complex<double>> cc(c.begin(), c.begin() + d + 1);
  small_roots(cc, roots);
  double acc = std::log(std::abs(c[d])) + (wmin + d) * 0.0;
  // log avg = log|lead| + sum log max(r, |w_k|) + wmin * log r
  acc += static_cast<double>(wmin) * std::log(r);
  for (const auto& w : roots) acc += std::log(std::max(r, std::abs(w)));
  return acc;
}

struct Simpson {
  const std::function<double(double)>& fn;
  double tol;
  int max_depth;
  double run(double a, double b) {
    double fa = fn(a), fb = fn(b), fm = fn(0.5 * (a + b));
    return rec(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), 0);
  }
  double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }
  double rec(double a, double b, double fa, double fm, double fb, double whole,
             int depth) {
    double m = 0.5 * (a + b);
    double lm = fn(0.5 * (a + m)), rm = fn(0.5 * (m + b));
    double left = simpson(a, m, fa, lm, fm), right = simpson(m, b, fm, rm, fb);
    double delta = left + right - whole;
    if (depth >= max_depth || std::fabs(delta) <= 15.0 * tol)
      return left + right + delta / 15.0;
    return rec(a, m, fa, lm, fm, left, depth + 1) +
           rec(m, b, fm, rm, fb, right, depth + 1);
  }
};

}  // namespace

PAConcave ronkin_nonarch(const LaurentPoly& f, long p) {
  if (f.is_zero()) throw std::domain_error("ronkin_nonarch: zero polynomial");
  if (!f.has_rational_coeffs())
    throw std::invalid_argument(
        "ronkin_nonarch: rational coefficients required");
  if (!is_prime_u64(static_cast<unsigned long>(p)))
    throw std::invalid_argument("ronkin_nonarch: p must be prime");
  std::vector<PAConcave::Part> pieces;
  for (const auto& [m, c] : f.terms()) {
    // <m,u> - log|alpha|_p with log|alpha|_p = -ord_p(alpha) log p
    Rat ord(ord_p(c.rational_value(), p));
    pieces.push_back({to_vecq(m), Exact::log_prime(p, ord)});
  }
  return PAConcave::min_of_affine(f.ambient_dim(), std::move(pieces));
}

PAConcave ronkin_dual_nonarch(const LaurentPoly& f, long p) {
  return ronkin_nonarch(f, p).legendre_dual();
}

ArchRonkinEstimate ronkin_arch(const LaurentPoly& f,
                               const std::vector<double>& u, long budget,
                               std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("ronkin_arch: zero polynomial");
  const int n = f.ambient_dim();
  if (static_cast<int>(u.size()) != n)
    throw std::invalid_argument("ronkin_arch: dimension mismatch");
  if (n > 2) throw std::invalid_argument("ronkin_arch: n <= 2 only");
  ArchRonkinEstimate out;
  if (f.is_monomial()) {
    const auto& [m, c] = *f.terms().begin();
    double v = -std::log(std::abs(c.embed()));
    for (int i = 0; i < n; ++i) v += m[i] * u[i];
    out.value = v;
    out.error = 1e-15 * (1.0 + std::fabs(v));
    out.nodes = 0;
    return out;
  }
  // Fibonacci rank-1 lattice sizes
  long f1 = 1, f2 = 1;
  while (f1 + f2 <= std::max<long>(budget / 2, 8)) {
    long t = f1 + f2;
    f1 = f2;
    f2 = t;
  }
  const long N = f2;       // half-budget lattice size
  const long gen = f1;     // lattice generator for n = 2
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> radius(n);
  for (int i = 0; i < n; ++i) radius[i] = std::exp(-u[i]);
  auto estimate = [&](double s1, double s2) {
    double acc = 0.0;
    std::vector<std::complex<double>> x(n);
    for (long j = 0; j < N; ++j) {
      double t1 = std::fmod(static_cast<double>(j) / N + s1, 1.0);
      double t2 =
          (n == 2)
              ? std::fmod(static_cast<double>(j) * gen / N + s2, 1.0)
              : 0.0;
      for (int attempt = 0;; ++attempt) {
        x[0] = std::polar(radius[0], kTau * t1);
        if (n == 2) x[1] = std::polar(radius[1], kTau * t2);
        double a = std::abs(f.eval_complex(x));
        if (a > 1e-15 || attempt >= 8) {
          if (a <= 1e-15) a = 1e-15;
          acc += std::log(a);
          break;
        }
        out.resampled = true;
        t1 = std::fmod(t1 + 1e-6 * unif(rng), 1.0);
        if (n == 2) t2 = std::fmod(t2 + 1e-6 * unif(rng), 1.0);
      }
    }
    return -acc / static_cast<double>(N);
  };
  double e1 = estimate(unif(rng), unif(rng));
  double e2 = estimate(unif(rng), unif(rng));
  out.value = 0.5 * (e1 + e2);
  out.error = 0.75 * std::fabs(e1 - e2) + 1e-7;
  out.nodes = 2 * N;
  return out;
}

double ronkin_arch_slice(const LaurentPoly& f, const std::vector<double>& u,
                         double tol) {
  if (f.is_zero()) throw std::domain_error("ronkin_arch_slice: zero");
  const int n = f.ambient_dim();
  if (n == 1) {
    SliceEval se(f);
    std::vector<std::complex<double>> c;
    se.coeffs(0.0, 0.0, c);  // coefficients are constants in n = 1
    return -jensen_fiber(c, se.wmin, u[0]);
  }
  if (n != 2) throw std::invalid_argument("ronkin_arch_slice: n <= 2 only");
  SliceEval se(f);
  std::vector<std::complex<double>> c;
  std::function<double(double)> integrand = [&](double theta) {
    se.coeffs(u[0], theta, c);
    return jensen_fiber(c, se.wmin, u[1]);
  };
  Simpson s{integrand, tol / kTau, 22};
  double avg = s.run(0.0, kTau) / kTau;
  return -avg;
}

RonkinDualGrid ronkin_dual_arch(const LaurentPoly& f, int grid_res, long budget,
                                std::uint64_t seed) {
  if (f.is_zero()) throw std::domain_error("ronkin_dual_arch: zero");
  const int n = f.ambient_dim();
  if (n > 2) throw std::invalid_argument("ronkin_dual_arch: n <= 2 only");
  Polytope np = f.newton_polytope();
  RonkinDualGrid out;
  out.budget = budget;
  out.seed = seed;

  // u-net radius from the polytope geometry and the coefficient sizes
  double diam = 0.0;
  for (const auto& a : np.vertices())
    for (const auto& b : np.vertices()) {
      double d2 = 0.0;
      for (int i = 0; i < n; ++i) d2 += std::pow(rat_to_double(a[i] - b[i]), 2);
      diam = std::max(diam, std::sqrt(d2));
    }
  double maxlog = 0.0;
  for (const auto& [m, c] : f.terms())
    maxlog = std::max(maxlog, std::fabs(std::log(std::abs(c.embed()))));
  // slope-bound radius, enlarged by log(grid_res): near a face of NP the
  // optimizer norm grows like log of the distance, and the nearest sample
  // sits at distance 1/grid_res
  double radius = 2.0 * (diam + 1.0) * (1.0 + maxlog) +
                  2.0 * std::log(std::max(grid_res, 2));
  double spacing = 0.03;
  int net_half = static_cast<int>(radius / spacing) + 1;
  out.net_radius = radius;
  out.net_spacing = spacing;

  const double slice_tol = 2e-7;
  out.eval_error = slice_tol;

  // precompute rho on the net
  const long side = 2 * net_half + 1;
  std::vector<double> rho(side * (n == 2 ? side : 1));
  std::vector<double> uu(n);
  for (long a = 0; a < side; ++a) {
    uu[0] = (a - net_half) * spacing;
    if (n == 1) {
      rho[a] = ronkin_arch_slice(f, uu, slice_tol);
      continue;
    }
    for (long b = 0; b < side; ++b) {
      uu[1] = (b - net_half) * spacing;
      rho[a * side + b] = ronkin_arch_slice(f, uu, slice_tol);
    }
  }

  Rat h = Rat(1, grid_res);
  double net_err_max = 0.0;
  std::vector<double> node_errs;
  auto dual_value = [&](const VecQ& xq, int stride) {
    double x0 = rat_to_double(xq[0]);
    double x1 = n == 2 ? rat_to_double(xq[1]) : 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (long a = 0; a < side; a += stride) {
      double u0 = (a - net_half) * spacing;
      if (n == 1) {
        best = std::min(best, u0 * x0 - rho[a]);
        continue;
      }
      for (long b = 0; b < side; b += stride) {
        double u1 = (b - net_half) * spacing;
        best = std::min(best, u0 * x0 + u1 * x1 - rho[a * side + b]);
      }
    }
    return best;
  };
  GridConcave g = GridConcave::sample_fn(
      np, h,
      [&](const VecQ& xq) {
        double fine = dual_value(xq, 1);
        double coarse = dual_value(xq, 2);
        // net refinement is O(spacing^2): Richardson bound for the fine net
        double e = std::fabs(fine - coarse) / 3.0 + slice_tol;
        node_errs.push_back(e);
        net_err_max = std::max(net_err_max, e);
        return fine;
      },
      0.0, radius);
  // scatter the per-node refinement differences into the grid layout
  g.errs.assign(g.values.size(), 0.0);
  size_t kn = 0;
  for (size_t t = 0; t < g.values.size(); ++t)
    if (!std::isnan(g.values[t])) g.errs[t] = node_errs[kn++];
  out.net_error = net_err_max;
  g.point_error = net_err_max;
  out.grid = std::move(g);
  return out;
}

}  // namespace toric
