#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/lp.hpp"

namespace toric {

namespace {

Rat cross2(const VecQ& o, const VecQ& a, const VecQ& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain; strict turns only, so collinear interior points drop.
std::vector<VecQ> hull2d(std::vector<VecQ> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<VecQ> h(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  size_t lower = k + 1;
  for (size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross2(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;  // counterclockwise
}

}  // namespace

// Affine basis of a point set: origin plus vectors spanning the affine hull.
AffineFrame affine_frame_of(const std::vector<VecQ>& pts) {
  AffineFrame fr;
  fr.origin = pts[0];
  fr.dim = 0;
  const size_t n = pts[0].size();
  MatQ rows;  // reduced spanning rows
  for (size_t i = 1; i < pts.size(); ++i) {
    VecQ v = sub(pts[i], fr.origin);
    // reduce against rows
    MatQ test = rows;
    test.push_back(v);
    if (rank(test) > static_cast<int>(rows.size())) {
      rows.push_back(v);
      fr.basis.push_back(sub(pts[i], fr.origin));
      fr.dim++;
      if (fr.dim == static_cast<int>(n)) break;
    }
  }
  return fr;
}

// Coordinates of x in the frame (solves sum c_i basis_i = x - origin).
VecQ frame_coords_of(const AffineFrame& fr, const VecQ& x) {
  const int d = fr.dim;
  const size_t n = fr.origin.size();
  // Solve least-structured: pick d independent rows of the basis matrix.
  MatQ bt(n, VecQ(d));
  for (int j = 0; j < d; ++j)
    for (size_t i = 0; i < n; ++i) bt[i][j] = fr.basis[j][i];
  // Gaussian elimination on the n x d system bt * c = x - origin.
  VecQ rhs = sub(x, fr.origin);
  MatQ m = bt;
  std::vector<int> piv_rows;
  std::vector<int> piv_cols;
  size_t row = 0;
  for (int col = 0; col < d && row < n; ++col) {
    size_t p = row;
    while (p < n && m[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(m[p], m[row]);
    std::swap(rhs[p], rhs[row]);
    Rat inv = 1 / m[row][col];
    for (int c = col; c < d; ++c) m[row][c] *= inv;
    rhs[row] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = col; c < d; ++c) m[r][c] -= f * m[row][c];
      rhs[r] -= f * rhs[row];
    }
    piv_rows.push_back(static_cast<int>(row));
    piv_cols.push_back(col);
    ++row;
  }
  VecQ c(d, Rat(0));
  for (size_t k = 0; k < piv_cols.size(); ++k) c[piv_cols[k]] = rhs[piv_rows[k]];
  return c;
}

VecQ frame_point_of(const AffineFrame& fr, const VecQ& coords) {
  VecQ x = fr.origin;
  for (int j = 0; j < fr.dim; ++j) x = add(x, scale(fr.basis[j], coords[j]));
  return x;
}

namespace {

std::vector<VecQ> to_frame(const AffineFrame& fr, const std::vector<VecQ>& pts) {
  std::vector<VecQ> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(frame_coords_of(fr, p));
  return out;
}

// Brute-force facet enumeration of a full-dimensional hull in R^d given its
// extreme points: every facet hyperplane is spanned by d affinely independent
// vertices.  Fine at desk scale (vertex counts stay small).
struct FacetData {
  VecQ normal;      // outward, primitive integer
  Rat offset;       // <normal,x> <= offset
  std::vector<int> verts;  // indices on the facet
};

VecQ primitive_normal(VecQ a) {
  Int l(1);
  for (const auto& q : a) l = lcm(l, q.get_den());
  Int g(0);
  VecQ out(a.size());
  std::vector<Int> zs(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    zs[i] = Int(a[i] * Rat(l));
    g = gcd(g, zs[i]);
  }
  if (g == 0) g = 1;
  for (size_t i = 0; i < a.size(); ++i) out[i] = Rat(zs[i] / g);
  return out;
}

std::vector<FacetData> facets_fulldim(const std::vector<VecQ>& v, int d) {
  std::vector<FacetData> out;
  std::set<std::vector<int>> seen;
  const int m = static_cast<int>(v.size());
  std::vector<int> idx(d);
  // iterate over d-subsets
  std::vector<int> comb(d);
  for (int i = 0; i < d; ++i) comb[i] = i;
  auto advance = [&]() -> bool {
    int i = d - 1;
    while (i >= 0 && comb[i] == m - d + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  if (m < d) return out;
  do {
    // hyperplane through v[comb[0..d-1]]: normal = nullspace of difference rows
    MatQ rows;
    for (int i = 1; i < d; ++i) rows.push_back(sub(v[comb[i]], v[comb[0]]));
    if (d > 1 && rank(rows) < d - 1) continue;
    // find normal: solve rows * a = 0 with a != 0 via elimination
    VecQ a(d, Rat(0));
    {
      MatQ m2 = rows;
      std::vector<int> pivcol;
      size_t r = 0;
      for (int col = 0; col < d && r < m2.size(); ++col) {
        size_t p = r;
        while (p < m2.size() && m2[p][col] == 0) ++p;
        if (p == m2.size()) continue;
        std::swap(m2[p], m2[r]);
        Rat inv = 1 / m2[r][col];
        for (int c = col; c < d; ++c) m2[r][c] *= inv;
        for (size_t rr = 0; rr < m2.size(); ++rr) {
          if (rr == r || m2[rr][col] == 0) continue;
          Rat f = m2[rr][col];
          for (int c = col; c < d; ++c) m2[rr][c] -= f * m2[r][c];
        }
        pivcol.push_back(col);
        ++r;
      }
      int freecol = -1;
      for (int c = 0; c < d; ++c)
        if (std::find(pivcol.begin(), pivcol.end(), c) == pivcol.end()) {
          freecol = c;
          break;
        }
      if (freecol < 0) continue;
      a[freecol] = 1;
      for (size_t k = 0; k < pivcol.size(); ++k) a[pivcol[k]] = -m2[k][freecol];
    }
    a = primitive_normal(a);
    Rat b = dot(a, v[comb[0]]);
    bool all_le = true, all_ge = true;
    for (int i = 0; i < m; ++i) {
      int c = cmp(dot(a, v[i]), b);
      if (c > 0) all_le = false;
      if (c < 0) all_ge = false;
      if (!all_le && !all_ge) break;
    }
    if (!all_le && !all_ge) continue;
    FacetData f;
    if (all_le) {
      f.normal = a;
      f.offset = b;
    } else {
      f.normal = scale(a, Rat(-1));
      f.offset = -b;
    }
    for (int i = 0; i < m; ++i)
      if (dot(f.normal, v[i]) == f.offset) f.verts.push_back(i);
    if (!seen.insert(f.verts).second) continue;
    out.push_back(std::move(f));
  } while (advance());
  return out;
}

// Triangulation of conv(points) (full-dim in R^d, extreme points given):
// fan from the lex-min vertex over recursively triangulated facets.
std::vector<std::vector<int>> triangulate_fulldim(const std::vector<VecQ>& v,
                                                  int d) {
  std::vector<std::vector<int>> out;
  if (static_cast<int>(v.size()) == d + 1) {
    std::vector<int> all(v.size());
    for (size_t i = 0; i < v.size(); ++i) all[i] = static_cast<int>(i);
    out.push_back(all);
    return out;
  }
  int apex = 0;
  for (size_t i = 1; i < v.size(); ++i)
    if (lex_less(v[i], v[apex])) apex = static_cast<int>(i);
  for (const auto& f : facets_fulldim(v, d)) {
    if (std::find(f.verts.begin(), f.verts.end(), apex) != f.verts.end())
      continue;
    // facet is a (d-1)-polytope; triangulate it in its own frame
    std::vector<VecQ> fv;
    for (int i : f.verts) fv.push_back(v[i]);
    std::vector<std::vector<int>> fsimps;
    if (d - 1 == 0) {
      fsimps = {{0}};
    } else {
      AffineFrame fr = affine_frame_of(fv);
      auto coords = to_frame(fr, fv);
      fsimps = triangulate_fulldim(coords, fr.dim);
    }
    for (const auto& s : fsimps) {
      std::vector<int> simplex;
      simplex.push_back(apex);
      for (int i : s) simplex.push_back(f.verts[i]);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

}  // namespace

std::vector<VecQ> extreme_points(int n, std::vector<VecQ> pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 1) return pts;
  if (n == 1) {
    return {pts.front(), pts.back()};
  }
  if (n == 2) {
    auto h = hull2d(pts);
    std::sort(h.begin(), h.end(), lex_less);
    return h;
  }
  std::vector<VecQ> keep;
  for (size_t i = 0; i < pts.size(); ++i) {
    if (!in_hull(pts, pts[i], static_cast<int>(i))) keep.push_back(pts[i]);
  }
  return keep;
}

Polytope Polytope::from_points(int n, std::vector<VecQ> pts) {
  for (const auto& p : pts)
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("polytope: point dimension mismatch");
  Polytope p;
  p.n_ = n;
  p.verts_ = extreme_points(n, std::move(pts));
  return p;
}

Polytope Polytope::from_lattice_points(int n, const std::vector<VecZ>& pts) {
  std::vector<VecQ> qs;
  qs.reserve(pts.size());
  for (const auto& z : pts) qs.push_back(to_vecq(z));
  return from_points(n, std::move(qs));
}

Polytope Polytope::point(VecQ p) {
  Polytope out;
  out.n_ = static_cast<int>(p.size());
  out.verts_ = {std::move(p)};
  return out;
}

Polytope Polytope::empty(int n) {
  Polytope out;
  out.n_ = n;
  return out;
}

int Polytope::dim() const {
  if (verts_.empty()) return -1;
  if (verts_.size() == 1) return 0;
  return affine_frame_of(verts_).dim;
}

std::vector<VecQ> Polytope::hull_order_2d() const {
  if (n_ != 2) throw std::logic_error("hull_order_2d: ambient dim != 2");
  return hull2d(verts_);
}

VecQ Polytope::lex_min_vertex() const {
  if (verts_.empty()) throw std::logic_error("empty polytope");
  return verts_.front();  // canonical order is lex
}

Rat Polytope::support_value(const VecQ& u) const {
  if (static_cast<int>(u.size()) != n_)
    throw std::invalid_argument("support_value: dimension mismatch");
  if (verts_.empty()) throw std::logic_error("support of empty polytope");
  Rat best = dot(u, verts_[0]);
  for (size_t i = 1; i < verts_.size(); ++i) {
    Rat v = dot(u, verts_[i]);
    if (v < best) best = v;
  }
  return best;
}

bool Polytope::contains(const VecQ& x) const {
  if (verts_.empty()) return false;
  if (verts_.size() == 1) return verts_[0] == x;
  if (n_ == 1) return verts_.front()[0] <= x[0] && x[0] <= verts_.back()[0];
  if (n_ == 2 && dim() == 2) {
    auto h = hull2d(verts_);
    for (size_t i = 0; i < h.size(); ++i) {
      if (cross2(h[i], h[(i + 1) % h.size()], x) < 0) return false;
    }
    return true;
  }
  return in_hull(verts_, x);
}

Rat Polytope::normalized_volume() const { return volume_and_centroid().first; }

std::pair<Rat, VecQ> Polytope::volume_and_centroid() const {
  VecQ zero(n_, Rat(0));
  if (verts_.empty()) return {Rat(0), zero};
  if (dim() < n_) {
    // measure zero; centroid = average of vertices (adequate for reporting)
    VecQ c = zero;
    for (const auto& v : verts_) c = add(c, v);
    return {Rat(0), scale(c, Rat(1) / Rat(static_cast<long>(verts_.size())))};
  }
  Rat total(0);
  VecQ cent = zero;
  for (const auto& s : triangulation()) {
    MatQ m;
    for (size_t i = 1; i < s.size(); ++i)
      m.push_back(sub(verts_[s[i]], verts_[s[0]]));
    Rat vol = abs(det(m));
    Int fact(1);
    for (int k = 2; k <= n_; ++k) fact *= k;
    vol /= Rat(fact);
    total += vol;
    VecQ sc = zero;
    for (int i : s) sc = add(sc, verts_[i]);
    cent = add(cent, scale(sc, vol / Rat(static_cast<long>(s.size()))));
  }
  if (total != 0) cent = scale(cent, 1 / total);
  return {total, cent};
}

std::vector<Polytope::Halfspace> Polytope::facets() const {
  if (dim() != n_)
    throw std::logic_error("facets: polytope not full-dimensional");
  std::vector<Halfspace> out;
  if (n_ == 1) {
    out.push_back({{Rat(-1)}, -verts_.front()[0]});
    out.push_back({{Rat(1)}, verts_.back()[0]});
    return out;
  }
  if (n_ == 2) {
    auto h = hull2d(verts_);
    for (size_t i = 0; i < h.size(); ++i) {
      const VecQ& a = h[i];
      const VecQ& b = h[(i + 1) % h.size()];
      VecQ nrm = {b[1] - a[1], a[0] - b[0]};  // outward for ccw order
      nrm = primitive_normal(nrm);
      out.push_back({nrm, dot(nrm, a)});
    }
    return out;
  }
  for (auto& f : facets_fulldim(verts_, n_)) out.push_back({f.normal, f.offset});
  return out;
}

std::vector<std::pair<VecQ, Rat>> Polytope::affine_hull_equations() const {
  std::vector<std::pair<VecQ, Rat>> eqs;
  if (verts_.empty()) return eqs;
  AffineFrame fr = affine_frame_of(verts_);
  if (fr.dim == n_) return eqs;
  // Nullspace of the basis-vector rows gives normals of the hull equations.
  MatQ rows;
  for (const auto& b : fr.basis) rows.push_back(b);
  // Reduce and extract nullspace basis.
  MatQ m = rows;
  std::vector<int> pivcol;
  size_t r = 0;
  for (int col = 0; col < n_ && r < m.size(); ++col) {
    size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][col];
    for (int c = col; c < n_; ++c) m[r][c] *= inv;
    for (size_t rr = 0; rr < m.size(); ++rr) {
      if (rr == r || m[rr][col] == 0) continue;
      Rat f = m[rr][col];
      for (int c = col; c < n_; ++c) m[rr][c] -= f * m[r][c];
    }
    pivcol.push_back(col);
    ++r;
  }
  for (int c = 0; c < n_; ++c) {
    if (std::find(pivcol.begin(), pivcol.end(), c) != pivcol.end()) continue;
    VecQ a(n_, Rat(0));
    a[c] = 1;
    for (size_t k = 0; k < pivcol.size(); ++k) a[pivcol[k]] = -m[k][c];
    a = primitive_normal(a);
    eqs.push_back({a, dot(a, verts_[0])});
  }
  return eqs;
}

std::vector<std::vector<int>> Polytope::triangulation() const {
  if (verts_.empty()) return {};
  int d = dim();
  if (d == 0) return {{0}};
  if (d == n_) return triangulate_fulldim(verts_, n_);
  AffineFrame fr = affine_frame_of(verts_);
  auto coords = to_frame(fr, verts_);
  return triangulate_fulldim(coords, fr.dim);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim())
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  if (p.is_empty() || q.is_empty()) return Polytope::empty(p.ambient_dim());
  std::vector<VecQ> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) sums.push_back(add(a, b));
  return Polytope::from_points(p.ambient_dim(), std::move(sums));
}

Rat mixed_volume(const std::vector<Polytope>& ps) {
  if (ps.empty()) throw std::invalid_argument("mixed_volume: no polytopes");
  const int n = ps[0].ambient_dim();
  if (static_cast<int>(ps.size()) != n)
    throw std::invalid_argument(
        "mixed_volume: need exactly n polytopes in dimension n");
  for (const auto& p : ps) {
    if (p.ambient_dim() != n)
      throw std::invalid_argument("mixed_volume: ambient dimension mismatch");
    if (p.is_empty()) throw std::invalid_argument("mixed_volume: empty input");
  }
  Rat mv(0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Polytope sum;
    bool first = true;
    int count = 0;
    for (int j = 0; j < n; ++j) {
      if (!(mask & (1u << j))) continue;
      ++count;
      sum = first ? ps[j] : minkowski_sum(sum, ps[j]);
      first = false;
    }
    Rat vol = sum.normalized_volume();
    mv += ((n - count) % 2 == 0) ? vol : -vol;
  }
  return mv;
}

}  // namespace toric
