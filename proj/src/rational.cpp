#include "toric/rational.hpp"

namespace toric {

Rat det(MatQ m) {
  const size_t n = m.size();
  if (n == 0) return Rat(1);
  Rat result(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = -result;
    }
    result *= m[col][col];
    Rat inv = 1 / m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

std::optional<VecQ> solve_linear(MatQ a, VecQ b) {
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    Rat inv = 1 / a[col][col];
    for (size_t c = col; c <= n; ++c) a[col][c] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col];
      for (size_t c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  VecQ x(n);
  for (size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

int rank(MatQ m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  int rk = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    Rat inv = 1 / m[row][col];
    for (size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] * inv;
      for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
    }
    ++row;
    ++rk;
  }
  return rk;
}

double rat_to_double(const Rat& q) { return q.get_d(); }

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

long ord_p(const Rat& q, long p) {
  if (q == 0) throw std::invalid_argument("ord_p of zero");
  long v = 0;
  Int num = q.get_num(), den = q.get_den();
  Int pp(p), r;
  while (mpz_divisible_p(num.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t());
    ++v;
  }
  while (mpz_divisible_p(den.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
    --v;
  }
  return v;
}

static void collect_primes(Int n, std::vector<long>& out) {
  n = abs(n);
  for (long p = 2; Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p))
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n > 1) {
    if (!n.fits_slong_p()) throw std::overflow_error("prime factor too large");
    out.push_back(n.get_si());
  }
}

std::vector<long> prime_support(const Rat& q) {
  std::vector<long> out;
  if (q == 0) return out;
  collect_primes(q.get_num(), out);
  collect_primes(q.get_den(), out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_prime_u64(unsigned long n) {
  Int z(n);
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace toric
