#include "toric/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

namespace toric {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool is_dyadic(const Rat& h) {
  Int d = h.get_den();
  while (mpz_even_p(d.get_mpz_t())) d /= 2;
  return d == 1;
}

// node index box covering a polytope for spacing h; requires vertices on
// the h-lattice is NOT required, only the box is aligned
struct Box {
  long i0, j0, nx, ny;
};

Box box_of(const Polytope& p, const Rat& h) {
  Box b{0, 0, 1, 1};
  bool first = true;
  Rat xmin, xmax, ymin, ymax;
  for (const auto& v : p.vertices()) {
    Rat x = v[0], y = p.ambient_dim() == 2 ? v[1] : Rat(0);
    if (first || x < xmin) xmin = x;
    if (first || x > xmax) xmax = x;
    if (first || y < ymin) ymin = y;
    if (first || y > ymax) ymax = y;
    first = false;
  }
  auto fl = [&](const Rat& q) {
    Rat t = q / h;
    Int z;
    mpz_fdiv_q(z.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return z.get_si();
  };
  auto ce = [&](const Rat& q) {
    Rat t = q / h;
    Int z;
    mpz_cdiv_q(z.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    return z.get_si();
  };
  b.i0 = fl(xmin);
  b.nx = ce(xmax) - b.i0 + 1;
  if (p.ambient_dim() == 2) {
    b.j0 = fl(ymin);
    b.ny = ce(ymax) - b.j0 + 1;
  }
  return b;
}

// inside-domain mask over the node box (exact tests)
std::vector<char> inside_mask(const Polytope& p, const Rat& h, const Box& b) {
  std::vector<char> in(b.nx * b.ny, 0);
  const int n = p.ambient_dim();
  if (p.dim() == n) {
    auto facets = p.facets();
    for (long j = 0; j < b.ny; ++j) {
      for (long i = 0; i < b.nx; ++i) {
        VecQ x = {Rat(b.i0 + i) * h};
        if (n == 2) x.push_back(Rat(b.j0 + j) * h);
        bool ok = true;
        for (const auto& f : facets)
          if (dot(f.normal, x) > f.offset) {
            ok = false;
            break;
          }
        in[j * b.nx + i] = ok;
      }
    }
  } else {
    for (long j = 0; j < b.ny; ++j)
      for (long i = 0; i < b.nx; ++i) {
        VecQ x = {Rat(b.i0 + i) * h};
        if (n == 2) x.push_back(Rat(b.j0 + j) * h);
        in[j * b.nx + i] = p.contains(x);
      }
  }
  return in;
}

Rat clipped_cell_area(const Polytope& s,
                      const std::vector<Polytope::Halfspace>& facets,
                      const Rat& h, long ci, long cj) {
  // Sutherland-Hodgman of the cell square against the convex domain
  std::vector<VecQ> poly = {
      {Rat(ci) * h, Rat(cj) * h},
      {Rat(ci + 1) * h, Rat(cj) * h},
      {Rat(ci + 1) * h, Rat(cj + 1) * h},
      {Rat(ci) * h, Rat(cj + 1) * h}};
  for (const auto& f : facets) {
    if (poly.empty()) break;
    std::vector<VecQ> next;
    const size_t m = poly.size();
    for (size_t k = 0; k < m; ++k) {
      const VecQ& a = poly[k];
      const VecQ& b = poly[(k + 1) % m];
      Rat da = f.offset - dot(f.normal, a);
      Rat db = f.offset - dot(f.normal, b);
      bool ina = da >= 0, inb = db >= 0;
      if (ina) next.push_back(a);
      if (ina != inb) {
        Rat t = da / (da - db);
        next.push_back(add(a, scale(sub(b, a), t)));
      }
    }
    poly = std::move(next);
  }
  (void)s;
  if (poly.size() < 3) return Rat(0);
  Rat area(0);
  for (size_t k = 1; k + 1 < poly.size(); ++k) {
    Rat x1 = poly[k][0] - poly[0][0], y1 = poly[k][1] - poly[0][1];
    Rat x2 = poly[k + 1][0] - poly[0][0], y2 = poly[k + 1][1] - poly[0][1];
    area += x1 * y2 - x2 * y1;
  }
  area /= 2;
  return abs(area);
}

struct Slot {
  Polytope domain;
  bool is_point = false;
  VecQ point;         // for 0-dimensional domains
  double point_value = 0.0;
  std::function<double(const VecQ&)> eval;      // defined on the domain
  std::function<double(const VecQ&)> eval_err;  // pointwise error bound
  double err = 0.0;   // max pointwise error (metadata)
  double slope = 0.0;
};

struct Field {
  Box b;
  std::vector<double> lo, hi;  // bracketing envelopes; kNegInf outside
};

// max-plus convolution of a bracketed field with a sampled slot; the
// sup-convolution is monotone in its arguments, so running the recursion on
// the lower/upper envelopes brackets the true values
Field combine(const Field& f, const Slot& g, const Polytope& fdom,
              const Rat& h) {
  Polytope sdom = minkowski_sum(fdom, g.domain);
  Box gb = box_of(g.domain, h);
  auto gin = inside_mask(g.domain, h, gb);
  std::vector<double> glo(gb.nx * gb.ny, kNegInf), ghi(gb.nx * gb.ny, kNegInf);
  const int n = g.domain.ambient_dim();
  for (long j = 0; j < gb.ny; ++j)
    for (long i = 0; i < gb.nx; ++i) {
      if (!gin[j * gb.nx + i]) continue;
      VecQ x = {Rat(gb.i0 + i) * h};
      if (n == 2) x.push_back(Rat(gb.j0 + j) * h);
      double v = g.eval(x);
      double e = g.eval_err ? g.eval_err(x) : g.err;
      glo[j * gb.nx + i] = v - e;
      ghi[j * gb.nx + i] = v + e;
    }
  Field out;
  out.b = box_of(sdom, h);
  out.lo.assign(out.b.nx * out.b.ny, kNegInf);
  out.hi.assign(out.b.nx * out.b.ny, kNegInf);
  for (long j = 0; j < out.b.ny; ++j) {
    for (long i = 0; i < out.b.nx; ++i) {
      double bl = kNegInf, bh = kNegInf;
      for (long gj = 0; gj < gb.ny; ++gj) {
        long fj = (out.b.j0 + j) - (gb.j0 + gj) - f.b.j0;
        if (fj < 0 || fj >= f.b.ny) continue;
        const double* flo = &f.lo[fj * f.b.nx];
        const double* fhi = &f.hi[fj * f.b.nx];
        const double* grl = &glo[gj * gb.nx];
        const double* grh = &ghi[gj * gb.nx];
        for (long gi = 0; gi < gb.nx; ++gi) {
          if (grl[gi] == kNegInf) continue;
          long fi = (out.b.i0 + i) - (gb.i0 + gi) - f.b.i0;
          if (fi < 0 || fi >= f.b.nx) continue;
          if (flo[fi] == kNegInf) continue;
          double cl = flo[fi] + grl[gi];
          double ch = fhi[fi] + grh[gi];
          if (cl > bl) bl = cl;
          if (ch > bh) bh = ch;
        }
      }
      out.lo[j * out.b.nx + i] = bl;
      out.hi[j * out.b.nx + i] = bh;
    }
  }
  return out;
}

// integral of the sampled field over the exact polytope; integrates the
// bracket midpoint and charges the bracket half-width to the error
double integrate_field(const Field& f, const Polytope& dom, const Rat& h,
                       double slope_scale, double& extra_err) {
  const int n = dom.ambient_dim();
  const double hd = rat_to_double(h);
  if (dom.dim() < n) return 0.0;
  auto facets = dom.facets();
  auto inside = inside_mask(dom, h, f.b);
  std::vector<double> v(f.lo.size(), kNegInf), w(f.lo.size(), 0.0);
  for (size_t t = 0; t < v.size(); ++t)
    if (f.lo[t] != kNegInf) {
      v[t] = 0.5 * (f.lo[t] + f.hi[t]);
      w[t] = 0.5 * (f.hi[t] - f.lo[t]);
    }
  // patch isolated interior holes (nodes inside the domain that received no
  // grid decomposition) from neighbors
  for (long j = 0; j < f.b.ny; ++j)
    for (long i = 0; i < f.b.nx; ++i) {
      if (!inside[j * f.b.nx + i] || v[j * f.b.nx + i] != kNegInf) continue;
      double best = kNegInf;
      for (long dj = -1; dj <= 1; ++dj)
        for (long di = -1; di <= 1; ++di) {
          long jj = j + dj, ii = i + di;
          if (jj < 0 || jj >= f.b.ny || ii < 0 || ii >= f.b.nx) continue;
          size_t t = jj * f.b.nx + ii;
          if (v[t] != kNegInf) best = std::max(best, v[t]);
        }
      if (best != kNegInf) {
        v[j * f.b.nx + i] = best;
        w[j * f.b.nx + i] = slope_scale * hd;
      }
    }
  // bracket width integrated over the node cells
  {
    double width_int = 0.0;
    long cnt = 0;
    for (long j = 0; j < f.b.ny; ++j)
      for (long i = 0; i < f.b.nx; ++i) {
        size_t t = j * f.b.nx + i;
        if (!inside[t] || v[t] == kNegInf) continue;
        width_int += w[t];
        ++cnt;
      }
    double cell = (n == 1) ? hd : hd * hd;
    extra_err += width_int * cell;
    (void)cnt;
  }

  double total = 0.0;
  if (n == 1) {
    for (long i = 0; i + 1 < f.b.nx; ++i) {
      bool in0 = inside[i], in1 = inside[i + 1];
      if (!in0 || !in1) continue;  // domain endpoints are integers: aligned
      double a = v[i], b = v[i + 1];
      if (a == kNegInf || b == kNegInf) continue;
      total += hd * 0.5 * (a + b);
    }
    return total;
  }
  Rat full_area(0);
  for (long j = 0; j + 1 < f.b.ny; ++j) {
    for (long i = 0; i + 1 < f.b.nx; ++i) {
      long ci = f.b.i0 + i, cj = f.b.j0 + j;
      bool c00 = inside[j * f.b.nx + i], c10 = inside[j * f.b.nx + i + 1];
      bool c01 = inside[(j + 1) * f.b.nx + i],
           c11 = inside[(j + 1) * f.b.nx + i + 1];
      double v00 = v[j * f.b.nx + i], v10 = v[j * f.b.nx + i + 1];
      double v01 = v[(j + 1) * f.b.nx + i], v11 = v[(j + 1) * f.b.nx + i + 1];
      if (c00 && c10 && c01 && c11) {
        bool fin = v00 != kNegInf && v10 != kNegInf && v01 != kNegInf &&
                   v11 != kNegInf;
        if (fin) {
          // two triangles, linear interpolation
          total += hd * hd *
                   ((v00 + v10 + v11) / 6.0 + (v00 + v11 + v01) / 6.0);
          full_area += h * h;
          continue;
        }
      }
      if (!c00 && !c10 && !c01 && !c11) {
        Rat a = clipped_cell_area(dom, facets, h, ci, cj);
        if (a == 0) continue;
        // corner-free sliver: nearest finite sample, generous error
        double val = 0.0;
        bool found = false;
        for (long dj = -2; dj <= 2 && !found; ++dj)
          for (long di = -2; di <= 2 && !found; ++di) {
            long jj = j + dj, ii = i + di;
            if (jj < 0 || jj >= f.b.ny || ii < 0 || ii >= f.b.nx) continue;
            if (v[jj * f.b.nx + ii] != kNegInf) {
              val = v[jj * f.b.nx + ii];
              found = true;
            }
          }
        double ad = rat_to_double(a);
        total += ad * val;
        extra_err += ad * (std::fabs(val) * 0.0 + 3.0 * slope_scale * hd);
        continue;
      }
      // boundary cell: exact clipped area, mean of available corner samples,
      // error from the measured local oscillation
      Rat a = clipped_cell_area(dom, facets, h, ci, cj);
      if (a == 0) continue;
      double sum = 0.0, vmin = 1e300, vmax = -1e300;
      int cnt = 0;
      auto acc = [&](bool c, double val) {
        if (c && val != kNegInf) {
          sum += val;
          vmin = std::min(vmin, val);
          vmax = std::max(vmax, val);
          ++cnt;
        }
      };
      acc(c00, v00);
      acc(c10, v10);
      acc(c01, v01);
      acc(c11, v11);
      double ad = rat_to_double(a);
      if (cnt == 0) {
        extra_err += ad * 3.0 * slope_scale * hd;
        continue;
      }
      total += ad * (sum / cnt);
      double spread = (cnt >= 2) ? (vmax - vmin) : slope_scale * hd;
      extra_err += ad * (1.5 * spread + 1e-12);
    }
  }
  return total;
}

Slot make_slot(const ConcaveFn& fn) {
  Slot s;
  if (std::holds_alternative<PAConcave>(fn)) {
    const auto& f = std::get<PAConcave>(fn);
    if (!f.is_hull_form())
      throw std::invalid_argument("numeric MI: polytope domains required");
    s.domain = f.domain();
    const int n = f.ambient_dim();
    if (s.domain.dim() == 0) {
      s.is_point = true;
      s.point = f.parts()[0].vec;
      s.point_value = f.parts()[0].val.to_double();
      return s;
    }
    if (s.domain.dim() < n)
      throw std::invalid_argument(
          "numeric MI: positive-but-lower-dimensional domains unsupported");
    // evaluation by min over the active affine pieces
    auto cells = f.upper_cells();
    auto aff = std::make_shared<std::vector<std::pair<std::vector<double>, double>>>();
    double slope = 0.0;
    for (const auto& c : cells) {
      std::vector<double> g(n);
      double norm = 0.0;
      for (int k = 0; k < n; ++k) {
        g[k] = c.grad[k].to_double();
        norm += std::fabs(g[k]);
      }
      slope = std::max(slope, norm);
      aff->push_back({std::move(g), c.offset.to_double()});
    }
    s.slope = slope;
    s.err = 1e-14;
    s.eval = [aff, n](const VecQ& x) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& [g, c] : *aff) {
        double v = c;
        for (int k = 0; k < n; ++k) v += g[k] * rat_to_double(x[k]);
        best = std::min(best, v);
      }
      return best;
    };
    return s;
  }
  const auto& g = std::get<GridConcave>(fn);
  s.domain = g.domain;
  if (s.domain.dim() == 0) {
    s.is_point = true;
    s.point = s.domain.vertices()[0];
    s.point_value = g.values.empty() ? 0.0 : g.values[0];
    return s;
  }
  s.err = g.point_error;
  s.slope = g.slope_bound;
  auto gg = std::make_shared<GridConcave>(g);
  s.eval = [gg](const VecQ& x) {
    double xx = rat_to_double(x[0]);
    double yy = gg->dim() == 2 ? rat_to_double(x[1]) : 0.0;
    return gg->eval(xx, yy);
  };
  if (!g.errs.empty()) {
    s.eval_err = [gg](const VecQ& x) {
      // nearest-node error bound
      double xx = rat_to_double(x[0]) / rat_to_double(gg->h) - gg->i0;
      double yy = gg->dim() == 2
                      ? rat_to_double(x[1]) / rat_to_double(gg->h) - gg->j0
                      : 0.0;
      long i = std::clamp<long>(std::lround(xx), 0, gg->nx - 1);
      long j = std::clamp<long>(std::lround(yy), 0, gg->ny - 1);
      double e = gg->err_at(i, j);
      return std::isnan(e) ? gg->point_error : e;
    };
  }
  return s;
}

}  // namespace

bool GridConcave::finite_at(long i, long j) const {
  double v = at(i, j);
  return !std::isnan(v) && v != kNegInf;
}

double GridConcave::eval(double x, double y) const {
  const double hd = rat_to_double(h);
  double fi = x / hd - i0, fj = dim() == 2 ? y / hd - j0 : 0.0;
  long i = std::clamp<long>(static_cast<long>(std::floor(fi)), 0, nx - 2);
  double tx = fi - i;
  if (dim() == 1) {
    if (nx == 1) return values[0];
    double a = at(i, 0), b = at(i + 1, 0);
    if (std::isnan(a)) return b;
    if (std::isnan(b)) return a;
    return a + (b - a) * tx;
  }
  long j = std::clamp<long>(static_cast<long>(std::floor(fj)), 0, ny - 2);
  double ty = fj - j;
  double v00 = at(i, j), v10 = at(i + 1, j), v01 = at(i, j + 1),
         v11 = at(i + 1, j + 1);
  double best = kNan;
  auto pick = [&](double v) {
    if (!std::isnan(v) && (std::isnan(best))) best = v;
  };
  // simplicial interpolation on the split square; fall back to any finite
  // corner at the boundary
  if (!std::isnan(v00) && !std::isnan(v10) && !std::isnan(v11) &&
      !std::isnan(v01)) {
    if (tx >= ty) return v00 + tx * (v10 - v00) + ty * (v11 - v10);
    return v00 + ty * (v01 - v00) + tx * (v11 - v01);
  }
  pick(v00);
  pick(v10);
  pick(v01);
  pick(v11);
  return best;
}

GridConcave GridConcave::sample_pa(const PAConcave& f, const Rat& h) {
  if (!f.is_hull_form())
    throw std::invalid_argument("sample_pa: polytope domain required");
  const int n = f.ambient_dim();
  if (n > 2) throw std::invalid_argument("sample_pa: dimension 1 or 2 only");
  auto cells = f.upper_cells();
  std::vector<std::pair<std::vector<double>, double>> aff;
  double slope = 0.0;
  for (const auto& c : cells) {
    std::vector<double> g(n);
    double norm = 0.0;
    for (int k = 0; k < n; ++k) {
      g[k] = c.grad[k].to_double();
      norm += std::fabs(g[k]);
    }
    slope = std::max(slope, norm);
    aff.push_back({std::move(g), c.offset.to_double()});
  }
  return sample_fn(
      f.domain(), h,
      [&aff, n](const VecQ& x) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& [g, c] : aff) {
          double v = c;
          for (int k = 0; k < n; ++k) v += g[k] * rat_to_double(x[k]);
          best = std::min(best, v);
        }
        return best;
      },
      1e-14, slope);
}

GridConcave GridConcave::sample_fn(const Polytope& domain, const Rat& h,
                                   const std::function<double(const VecQ&)>& fn,
                                   double point_error, double slope_bound) {
  if (!is_dyadic(h)) throw std::invalid_argument("grid spacing must be dyadic");
  GridConcave g;
  g.domain = domain;
  g.h = h;
  g.point_error = point_error;
  g.slope_bound = slope_bound;
  Box b = box_of(domain, h);
  g.i0 = b.i0;
  g.j0 = b.j0;
  g.nx = b.nx;
  g.ny = b.ny;
  g.values.assign(b.nx * b.ny, kNan);
  auto in = inside_mask(domain, h, b);
  const int n = domain.ambient_dim();
  for (long j = 0; j < b.ny; ++j)
    for (long i = 0; i < b.nx; ++i) {
      if (!in[j * b.nx + i]) continue;
      VecQ x = {Rat(b.i0 + i) * h};
      if (n == 2) x.push_back(Rat(b.j0 + j) * h);
      g.values[j * b.nx + i] = fn(x);
    }
  return g;
}

namespace {

double mi_at_spacing(const std::vector<Slot>& slots, const Rat& h, int n,
                     double& err_accum) {
  const unsigned full = (1u << slots.size()) - 1;
  double mi = 0.0;
  for (unsigned mask = 1; mask <= full; ++mask) {
    // point slots only shift; gather them and the sampled ones
    VecQ shift(n, Rat(0));
    double shift_val = 0.0;
    std::vector<int> active;
    for (size_t j = 0; j < slots.size(); ++j) {
      if (!(mask & (1u << j))) continue;
      if (slots[j].is_point) {
        shift = add(shift, slots[j].point);
        shift_val += slots[j].point_value;
      } else {
        active.push_back(static_cast<int>(j));
      }
    }
    int count = __builtin_popcount(mask);
    double sign = ((static_cast<int>(n) + 1 - count) % 2 == 0) ? 1.0 : -1.0;
    if (active.empty()) continue;  // zero-dimensional summand: measure zero

    // build the field for the active slots
    Field f;
    Polytope dom = slots[active[0]].domain;
    {
      Box b = box_of(dom, h);
      f.b = b;
      f.lo.assign(b.nx * b.ny, kNegInf);
      f.hi.assign(b.nx * b.ny, kNegInf);
      auto in = inside_mask(dom, h, b);
      const Slot& s0 = slots[active[0]];
      for (long j = 0; j < b.ny; ++j)
        for (long i = 0; i < b.nx; ++i) {
          if (!in[j * b.nx + i]) continue;
          VecQ x = {Rat(b.i0 + i) * h};
          if (n == 2) x.push_back(Rat(b.j0 + j) * h);
          double val = s0.eval(x);
          double e = s0.eval_err ? s0.eval_err(x) : s0.err;
          f.lo[j * b.nx + i] = val - e;
          f.hi[j * b.nx + i] = val + e;
        }
    }
    for (size_t k = 1; k < active.size(); ++k) {
      f = combine(f, slots[active[k]], dom, h);
      dom = minkowski_sum(dom, slots[active[k]].domain);
    }
    double slope_scale = 0.0;
    for (int j : active) slope_scale += slots[j].slope;
    // shift by the point slots: translate the domain, add the constant
    double extra = 0.0;
    double integral = integrate_field(f, dom, h, slope_scale, extra);
    double vol = rat_to_double(dom.normalized_volume());
    integral += shift_val * vol;  // translation leaves the measure invariant
    err_accum += extra;
    mi += sign * integral;
  }
  return mi;
}

}  // namespace

MIValue mixed_integral_any(const std::vector<ConcaveFn>& fs, const Rat& h) {
  bool all_pa = true;
  for (const auto& f : fs) all_pa &= std::holds_alternative<PAConcave>(f);
  MIValue out;
  // monomial-slot reduction: a point-domain slot collapses the whole mixed
  // integral to value * MV(remaining domains), keeping exactness even when
  // other slots are sampled
  for (size_t i = 0; i < fs.size(); ++i) {
    const PAConcave* pa = std::get_if<PAConcave>(&fs[i]);
    bool point_pa = pa && pa->is_hull_form() && pa->domain().dim() == 0;
    const GridConcave* gc = std::get_if<GridConcave>(&fs[i]);
    bool point_gc = gc && gc->domain.dim() == 0;
    if (!point_pa && !point_gc) continue;
    std::vector<Polytope> rest;
    for (size_t j = 0; j < fs.size(); ++j) {
      if (j == i) continue;
      rest.push_back(std::holds_alternative<PAConcave>(fs[j])
                         ? std::get<PAConcave>(fs[j]).domain()
                         : std::get<GridConcave>(fs[j]).domain);
    }
    Rat mv = mixed_volume(rest);
    if (point_pa) {
      out.exact = true;
      out.exact_value = pa->parts()[0].val * mv;
      out.value = out.exact_value.to_double();
      out.error = 0.0;
    } else {
      out.exact = false;
      out.value = (gc->values.empty() ? 0.0 : gc->values[0]) * rat_to_double(mv);
      out.error = gc->point_error * std::fabs(rat_to_double(mv));
    }
    return out;
  }
  if (all_pa) {
    std::vector<PAConcave> pas;
    for (const auto& f : fs) pas.push_back(std::get<PAConcave>(f));
    out.exact = true;
    out.exact_value = mixed_integral(pas);
    out.value = out.exact_value.to_double();
    out.error = 0.0;
    return out;
  }
  int n = std::holds_alternative<PAConcave>(fs[0])
              ? std::get<PAConcave>(fs[0]).ambient_dim()
              : std::get<GridConcave>(fs[0]).domain.ambient_dim();
  if (static_cast<int>(fs.size()) != n + 1)
    throw std::invalid_argument("mixed_integral_any: need n+1 functions");
  if (n > 2)
    throw std::invalid_argument("numeric mixed integral supports n <= 2");
  std::vector<Slot> slots;
  for (const auto& f : fs) slots.push_back(make_slot(f));
  double err_h = 0.0, err_2h = 0.0;
  double mi_h = mi_at_spacing(slots, h, n, err_h);
  double mi_2h = mi_at_spacing(slots, h * 2, n, err_2h);
  out.exact = false;
  out.value = mi_h;
  out.error = err_h + std::fabs(mi_h - mi_2h);
  if (getenv("TORIC_MI_DEBUG"))
    fprintf(stderr, "[mi] h=%g mi_h=%.8g mi_2h=%.8g bracket_err=%.3g rich=%.3g\n",
            rat_to_double(h), mi_h, mi_2h, err_h, std::fabs(mi_h - mi_2h));
  return out;
}

}  // namespace toric
