#include "toric/concave.hpp"

#include <algorithm>
#include <map>

#include "toric/lp.hpp"

namespace toric {

namespace {

// Minimal generating set of a lifted family: keep the points that are
// vertices of the upper graph (strictly above the envelope of the others).
std::vector<PAConcave::Part> canonical_lift(std::vector<PAConcave::Part> in) {
  // dedupe by base point, keeping the largest value
  std::sort(in.begin(), in.end(),
            [](const auto& a, const auto& b) { return lex_less(a.vec, b.vec); });
  std::vector<PAConcave::Part> pts;
  for (auto& p : in) {
    if (!pts.empty() && pts.back().vec == p.vec) {
      if ((p.val - pts.back().val).sign() > 0) pts.back().val = p.val;
    } else {
      pts.push_back(std::move(p));
    }
  }
  if (pts.size() <= 1) return pts;
  std::vector<VecQ> xs;
  std::vector<Exact> vs;
  for (const auto& p : pts) {
    xs.push_back(p.vec);
    vs.push_back(p.val);
  }
  std::vector<PAConcave::Part> keep;
  for (size_t i = 0; i < pts.size(); ++i) {
    auto r = envelope_max(xs, vs, xs[i], static_cast<int>(i));
    if (r && (*r - vs[i]).sign() >= 0) continue;
    keep.push_back(pts[i]);
  }
  return keep;
}

std::vector<Exact> solve_exact_rhs(MatQ a, std::vector<Exact> b) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve_exact_rhs: singular");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rat inv = 1 / a[col][col];
    for (size_t c = col; c < n; ++c) a[col][c] *= inv;
    b[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= b[col] * f;
    }
  }
  return b;
}

}  // namespace

PAConcave PAConcave::min_of_affine(int n, std::vector<Part> pieces) {
  if (pieces.empty()) throw std::invalid_argument("min_of_affine: no pieces");
  for (const auto& p : pieces)
    if (static_cast<int>(p.vec.size()) != n)
      throw std::invalid_argument("min_of_affine: slope dimension mismatch");
  // canonicalize through the dual lift (a, b) -> (a, -b)
  std::vector<Part> lifted;
  lifted.reserve(pieces.size());
  for (auto& p : pieces) lifted.push_back({std::move(p.vec), -p.val});
  lifted = canonical_lift(std::move(lifted));
  PAConcave f;
  f.n_ = n;
  f.form_ = Form::kMin;
  for (auto& p : lifted) f.parts_.push_back({std::move(p.vec), -p.val});
  return f;
}

PAConcave PAConcave::upper_envelope(int n, std::vector<Part> lifted) {
  if (lifted.empty())
    throw std::invalid_argument("upper_envelope: no lifted points");
  for (const auto& p : lifted)
    if (static_cast<int>(p.vec.size()) != n)
      throw std::invalid_argument("upper_envelope: point dimension mismatch");
  PAConcave f;
  f.n_ = n;
  f.form_ = Form::kHull;
  f.parts_ = canonical_lift(std::move(lifted));
  std::vector<VecQ> xs;
  for (const auto& p : f.parts_) xs.push_back(p.vec);
  f.domain_ = Polytope::from_points(n, xs);
  return f;
}

PAConcave PAConcave::zero_on(const Polytope& p) {
  return constant_on(p, Exact(Rat(0)));
}

PAConcave PAConcave::constant_on(const Polytope& p, const Exact& c) {
  if (p.is_empty()) throw std::invalid_argument("constant_on: empty polytope");
  std::vector<Part> lifted;
  for (const auto& v : p.vertices()) lifted.push_back({v, c});
  return upper_envelope(p.ambient_dim(), std::move(lifted));
}

PAConcave PAConcave::indicator(const VecQ& point, const Exact& value) {
  return upper_envelope(static_cast<int>(point.size()), {{point, value}});
}

PAConcave PAConcave::min_of_affine_on(const Polytope& domain,
                                      std::vector<Part> pieces) {
  if (domain.is_empty())
    throw std::invalid_argument("min_of_affine_on: empty domain");
  if (pieces.empty()) throw std::invalid_argument("min_of_affine_on: no pieces");
  const int n = domain.ambient_dim();
  for (const auto& p : pieces) {
    if (static_cast<int>(p.vec.size()) != n)
      throw std::invalid_argument("min_of_affine_on: dimension mismatch");
    if (!p.val.is_rational())
      throw std::invalid_argument(
          "min_of_affine_on: only rational intercepts admit exact graph "
          "vertices");
  }
  const int d = domain.dim();
  auto piece_min = [&](const VecQ& x) {
    Exact best = pieces[0].val + dot(pieces[0].vec, x);
    for (size_t i = 1; i < pieces.size(); ++i) {
      Exact v = pieces[i].val + dot(pieces[i].vec, x);
      if ((v - best).sign() < 0) best = v;
    }
    return best;
  };
  if (d == 0) {
    const VecQ& v = domain.vertices()[0];
    return upper_envelope(n, {{v, piece_min(v)}});
  }
  if (d < n) {
    AffineFrame fr = affine_frame_of(domain.vertices());
    std::vector<VecQ> dverts;
    for (const auto& v : domain.vertices())
      dverts.push_back(frame_coords_of(fr, v));
    std::vector<Part> dpieces;
    for (const auto& p : pieces) {
      VecQ slope(d);
      for (int j = 0; j < d; ++j) slope[j] = dot(p.vec, fr.basis[j]);
      dpieces.push_back({std::move(slope), p.val + dot(p.vec, fr.origin)});
    }
    PAConcave sub =
        min_of_affine_on(Polytope::from_points(d, dverts), std::move(dpieces));
    std::vector<Part> lifted;
    for (const auto& p : sub.parts())
      lifted.push_back({frame_point_of(fr, p.vec), p.val});
    return upper_envelope(n, std::move(lifted));
  }

  // Full-dimensional: enumerate vertices of the graph polyhedron
  //   { (x,t) : x in domain, t <= piece_i(x) }.
  struct Row {
    VecQ cx;
    Rat ct;
    Rat rhs;
    bool is_piece;
  };
  std::vector<Row> rows;
  for (const auto& h : domain.facets())
    rows.push_back({h.normal, Rat(0), h.offset, false});
  for (const auto& p : pieces) {
    VecQ cx(n);
    for (int j = 0; j < n; ++j) cx[j] = -p.vec[j];
    rows.push_back({cx, Rat(1), p.val.rational_part(), true});
  }
  const int total = static_cast<int>(rows.size());
  std::vector<Part> cand;
  std::vector<int> comb(n + 1);
  for (int i = 0; i <= n; ++i) comb[i] = i;
  auto advance = [&]() -> bool {
    int i = n;
    while (i >= 0 && comb[i] == total - (n + 1) + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j <= n; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  do {
    bool has_piece = false;
    for (int i = 0; i <= n; ++i) has_piece |= rows[comb[i]].is_piece;
    if (!has_piece) continue;
    MatQ m;
    VecQ rhs;
    for (int i = 0; i <= n; ++i) {
      VecQ r = rows[comb[i]].cx;
      r.push_back(rows[comb[i]].ct);
      m.push_back(std::move(r));
      rhs.push_back(rows[comb[i]].rhs);
    }
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol) continue;
    bool feasible = true;
    for (const auto& r : rows) {
      Rat lhs = r.ct * (*sol)[n];
      for (int j = 0; j < n; ++j) lhs += r.cx[j] * (*sol)[j];
      if (lhs > r.rhs) {
        feasible = false;
        break;
      }
    }
    if (!feasible) continue;
    VecQ x(sol->begin(), sol->begin() + n);
    cand.push_back({std::move(x), Exact((*sol)[n])});
  } while (advance());
  return upper_envelope(n, std::move(cand));
}

const Polytope& PAConcave::domain() const {
  if (form_ != Form::kHull)
    throw std::logic_error("domain(): min-form functions live on all of R^n");
  return domain_;
}

PAConcave PAConcave::legendre_dual() const {
  PAConcave d;
  d.n_ = n_;
  d.parts_.reserve(parts_.size());
  for (const auto& p : parts_) d.parts_.push_back({p.vec, -p.val});
  if (form_ == Form::kMin) {
    d.form_ = Form::kHull;
    std::vector<VecQ> xs;
    for (const auto& p : d.parts_) xs.push_back(p.vec);
    d.domain_ = Polytope::from_points(n_, xs);
  } else {
    d.form_ = Form::kMin;
  }
  return d;  // canonical in, canonical out: the reduction is self-dual
}

std::optional<Exact> PAConcave::evaluate(const VecQ& x) const {
  if (static_cast<int>(x.size()) != n_)
    throw std::invalid_argument("evaluate: dimension mismatch");
  if (form_ == Form::kMin) {
    Exact best = parts_[0].val + dot(parts_[0].vec, x);
    for (size_t i = 1; i < parts_.size(); ++i) {
      Exact v = parts_[i].val + dot(parts_[i].vec, x);
      if ((v - best).sign() < 0) best = v;
    }
    return best;
  }
  std::vector<VecQ> xs;
  std::vector<Exact> vs;
  for (const auto& p : parts_) {
    xs.push_back(p.vec);
    vs.push_back(p.val);
  }
  return envelope_max(xs, vs, x);
}

std::vector<PAConcave::Cell> PAConcave::upper_cells() const {
  if (form_ != Form::kHull)
    throw std::logic_error("upper_cells: hull form only");
  std::vector<Cell> out;
  const int n = n_;
  if (domain_.dim() < n) return out;
  const int m = static_cast<int>(parts_.size());
  std::map<std::vector<int>, bool> seen;
  std::vector<int> comb(n + 1);
  for (int i = 0; i <= n; ++i) comb[i] = i;
  auto advance = [&]() -> bool {
    int i = n;
    while (i >= 0 && comb[i] == m - (n + 1) + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j <= n; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  if (m < n + 1) return out;
  do {
    {
      MatQ diff;
      for (int i = 1; i <= n; ++i)
        diff.push_back(sub(parts_[comb[i]].vec, parts_[comb[0]].vec));
      if (rank(diff) < n) continue;
    }
    MatQ a;
    std::vector<Exact> rhs;
    for (int i = 0; i <= n; ++i) {
      VecQ row = parts_[comb[i]].vec;
      row.push_back(Rat(1));
      a.push_back(std::move(row));
      rhs.push_back(parts_[comb[i]].val);
    }
    std::vector<Exact> w = solve_exact_rhs(std::move(a), std::move(rhs));
    std::vector<int> tight;
    bool supports = true;
    for (int j = 0; j < m; ++j) {
      Exact lv = w[n];
      for (int k = 0; k < n; ++k) lv += w[k] * parts_[j].vec[k];
      int s = (lv - parts_[j].val).sign();
      if (s < 0) {
        supports = false;
        break;
      }
      if (s == 0) tight.push_back(j);
    }
    if (!supports) continue;
    if (seen.contains(tight)) continue;
    seen[tight] = true;
    std::vector<VecQ> cellpts;
    for (int j : tight) cellpts.push_back(parts_[j].vec);
    Polytope cell = Polytope::from_points(n, cellpts);
    if (cell.dim() < n) continue;
    Cell c;
    c.part_indices = tight;
    c.grad.assign(w.begin(), w.begin() + n);
    c.offset = w[n];
    c.cell = std::move(cell);
    out.push_back(std::move(c));
  } while (advance());
  return out;
}

Exact PAConcave::integrate() const {
  if (form_ != Form::kHull)
    throw std::invalid_argument("integrate: unbounded domain (min form)");
  if (domain_.dim() < n_) return Exact(Rat(0));
  Exact total{Rat(0)};
  Rat covered(0);
  for (const auto& c : upper_cells()) {
    auto [vol, cent] = c.cell.volume_and_centroid();
    covered += vol;
    Exact v = c.offset;
    for (int k = 0; k < n_; ++k) v += c.grad[k] * cent[k];
    total += v * vol;
  }
  if (covered != domain_.normalized_volume())
    throw std::runtime_error("integrate: subdivision does not tile the domain");
  return total;
}

PAConcave sup_convolution(const PAConcave& f, const PAConcave& g) {
  if (f.ambient_dim() != g.ambient_dim())
    throw std::invalid_argument("sup_convolution: dimension mismatch");
  if (!f.is_hull_form() || !g.is_hull_form())
    throw std::invalid_argument(
        "sup_convolution: both inputs must have polytope domains");
  std::vector<PAConcave::Part> sums;
  sums.reserve(f.parts().size() * g.parts().size());
  for (const auto& a : f.parts())
    for (const auto& b : g.parts())
      sums.push_back({add(a.vec, b.vec), a.val + b.val});
  return PAConcave::upper_envelope(f.ambient_dim(), std::move(sums));
}

Exact mixed_integral(const std::vector<PAConcave>& fs) {
  if (fs.empty()) throw std::invalid_argument("mixed_integral: no inputs");
  const int n = fs[0].ambient_dim();
  if (static_cast<int>(fs.size()) != n + 1)
    throw std::invalid_argument("mixed_integral: need n+1 functions in dim n");
  for (const auto& f : fs) {
    if (f.ambient_dim() != n)
      throw std::invalid_argument("mixed_integral: dimension mismatch");
    if (!f.is_hull_form())
      throw std::invalid_argument("mixed_integral: domains must be polytopes");
  }
  const unsigned full = (1u << (n + 1)) - 1;
  std::vector<std::optional<PAConcave>> conv(full + 1);
  Exact mi{Rat(0)};
  for (unsigned mask = 1; mask <= full; ++mask) {
    int low = __builtin_ctz(mask);
    unsigned rest = mask & (mask - 1u);
    if (rest == 0)
      conv[mask] = fs[low];
    else
      conv[mask] = sup_convolution(*conv[rest], fs[low]);
    int count = __builtin_popcount(mask);
    Exact term = conv[mask]->integrate();
    if ((n + 1 - count) % 2 == 0)
      mi += term;
    else
      mi -= term;
  }
  return mi;
}

PerturbationBound uniform_perturbation_bound(
    const std::vector<PAConcave>& original,
    const std::vector<PAConcave>& perturbed, const Rat& eps) {
  if (original.size() != perturbed.size())
    throw std::invalid_argument("perturbation bound: arity mismatch");
  const int n = original[0].ambient_dim();
  const unsigned full = (1u << (n + 1)) - 1;
  std::vector<std::optional<Polytope>> sums(full + 1);
  Rat c(0);
  for (unsigned mask = 1; mask <= full; ++mask) {
    int low = __builtin_ctz(mask);
    unsigned rest = mask & (mask - 1u);
    sums[mask] = (rest == 0)
                     ? original[low].domain()
                     : minkowski_sum(*sums[rest], original[low].domain());
    c += sums[mask]->normalized_volume();
  }
  c *= Rat(n + 1);
  PerturbationBound out;
  out.constant = c;
  out.difference = mixed_integral(perturbed) - mixed_integral(original);
  Exact bound{c * eps};
  out.within = (out.difference - bound).sign() <= 0 &&
               (-out.difference - bound).sign() <= 0;
  return out;
}

}  // namespace toric
