#include "toric/lp.hpp"

namespace toric {

namespace {

// Dense exact simplex, two phases.  Rows: n equality constraints.
// Columns 0..m-1 structural, then artificials.  Maximization.
struct Tableau {
  size_t rows, cols;           // cols excludes the rhs
  std::vector<VecQ> t;         // rows x (cols+1), last column = rhs
  std::vector<int> basis;      // basis[r] = column basic in row r

  Rat& at(size_t r, size_t c) { return t[r][c]; }
  Rat& rhs(size_t r) { return t[r][cols]; }

  void pivot(size_t pr, size_t pc) {
    Rat inv = 1 / t[pr][pc];
    for (size_t c = 0; c <= cols; ++c) t[pr][c] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pr || t[r][pc] == 0) continue;
      Rat f = t[r][pc];
      for (size_t c = 0; c <= cols; ++c) t[r][c] -= f * t[pr][c];
    }
    basis[pr] = static_cast<int>(pc);
  }

  // Ratio test; returns row or -1 (unbounded; cannot happen on a simplex).
  int ratio_row(size_t pc) const {
    int best = -1;
    Rat best_ratio;
    for (size_t r = 0; r < rows; ++r) {
      if (t[r][pc] <= 0) continue;
      Rat ratio = t[r][cols] / t[r][pc];
      if (best < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[r] < basis[best])) {
        best = static_cast<int>(r);
        best_ratio = ratio;
      }
    }
    return best;
  }
};

}  // namespace

std::optional<Exact> envelope_max(const std::vector<VecQ>& pts,
                                  const std::vector<Exact>& vals, const VecQ& x,
                                  int skip) {
  const size_t n = x.size();
  std::vector<int> col_to_pt;
  for (size_t i = 0; i < pts.size(); ++i)
    if (static_cast<int>(i) != skip) col_to_pt.push_back(static_cast<int>(i));
  const size_t m = col_to_pt.size();
  if (m == 0) return std::nullopt;

  const size_t rows = n + 1;
  Tableau tb;
  tb.rows = rows;
  tb.cols = m + rows;  // structural + artificial
  tb.t.assign(rows, VecQ(tb.cols + 1, Rat(0)));
  tb.basis.assign(rows, 0);

  for (size_t r = 0; r < n; ++r) {
    for (size_t j = 0; j < m; ++j) tb.at(r, j) = pts[col_to_pt[j]][r];
    tb.rhs(r) = x[r];
  }
  for (size_t j = 0; j < m; ++j) tb.at(n, j) = 1;
  tb.rhs(n) = 1;
  // Make rhs nonnegative, install artificial basis.
  for (size_t r = 0; r < rows; ++r) {
    if (tb.rhs(r) < 0)
      for (size_t c = 0; c <= tb.cols; ++c) tb.t[r][c] = -tb.t[r][c];
    tb.at(r, m + r) = 1;
    tb.basis[r] = static_cast<int>(m + r);
  }

  // Phase 1: minimize sum of artificials == maximize -(sum artificials).
  // Reduced cost of column j: sum over rows with artificial basis of t[r][j].
  while (true) {
    int pc = -1;
    for (size_t j = 0; j < m; ++j) {
      Rat rc(0);
      for (size_t r = 0; r < rows; ++r)
        if (tb.basis[r] >= static_cast<int>(m)) rc += tb.t[r][j];
      if (rc > 0) {
        pc = static_cast<int>(j);
        break;  // Bland: first improving column
      }
    }
    if (pc < 0) break;
    int pr = tb.ratio_row(pc);
    if (pr < 0) break;
    tb.pivot(pr, pc);
  }
  Rat infeas(0);
  for (size_t r = 0; r < rows; ++r)
    if (tb.basis[r] >= static_cast<int>(m)) infeas += tb.rhs(r);
  if (infeas != 0) return std::nullopt;

  // Drive zero-level artificials out of the basis when possible.
  for (size_t r = 0; r < rows; ++r) {
    if (tb.basis[r] < static_cast<int>(m)) continue;
    int pc = -1;
    for (size_t j = 0; j < m; ++j)
      if (tb.t[r][j] != 0) {
        pc = static_cast<int>(j);
        break;
      }
    if (pc >= 0) tb.pivot(r, pc);
    // else: redundant row; harmless to keep (its artificial stays at 0).
  }

  auto cost = [&](int col) -> Exact {
    return col < static_cast<int>(m) ? vals[col_to_pt[col]] : Exact(Rat(0));
  };

  // Phase 2 with Exact objective.
  while (true) {
    int pc = -1;
    for (size_t j = 0; j < m; ++j) {
      if (static_cast<int>(j) == tb.basis[0] ||
          std::find(tb.basis.begin(), tb.basis.end(), static_cast<int>(j)) !=
              tb.basis.end())
        continue;
      Exact rc = cost(static_cast<int>(j));
      for (size_t r = 0; r < rows; ++r) {
        if (tb.t[r][j] == 0) continue;
        rc -= cost(tb.basis[r]) * tb.t[r][j];
      }
      if (rc.sign() > 0) {
        pc = static_cast<int>(j);
        break;
      }
    }
    if (pc < 0) break;
    int pr = tb.ratio_row(pc);
    if (pr < 0) break;  // unbounded; unreachable on a bounded feasible set
    tb.pivot(pr, pc);
  }

  Exact value{Rat(0)};
  for (size_t r = 0; r < rows; ++r)
    if (tb.basis[r] < static_cast<int>(m) && tb.rhs(r) != 0)
      value += cost(tb.basis[r]) * tb.rhs(r);
  return value;
}

bool in_hull(const std::vector<VecQ>& pts, const VecQ& x, int skip) {
  std::vector<Exact> zero(pts.size(), Exact(Rat(0)));
  return envelope_max(pts, zero, x, skip).has_value();
}

}  // namespace toric
