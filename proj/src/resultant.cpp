#include "toric/resultant.hpp"

#include <numeric>

namespace toric {

namespace {

bool cp_is_zero(const CycloPoly& p) {
  for (const auto& c : p)
    if (!c.is_zero()) return false;
  return true;
}

void cp_trim(CycloPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

CycloPoly cp_mul(const CycloPoly& a, const CycloPoly& b) {
  if (a.empty() || b.empty()) return {};
  CycloPoly out(a.size() + b.size() - 1, Cyclotomic(Rat(0)));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  cp_trim(out);
  return out;
}

CycloPoly cp_sub(const CycloPoly& a, const CycloPoly& b) {
  CycloPoly out = a;
  out.resize(std::max(a.size(), b.size()), Cyclotomic(Rat(0)));
  for (size_t i = 0; i < b.size(); ++i) out[i] = out[i] - b[i];
  cp_trim(out);
  return out;
}

// Exact division (throws when not divisible) over the coefficient field.
CycloPoly cp_divexact(const CycloPoly& num, const CycloPoly& den) {
  CycloPoly r = num;
  cp_trim(r);
  CycloPoly d = den;
  cp_trim(d);
  if (d.empty()) throw std::domain_error("cp_divexact: division by zero");
  if (r.empty()) return {};
  if (r.size() < d.size()) throw std::logic_error("cp_divexact: degree");
  Cyclotomic lead_inv = d.back().inverse();
  CycloPoly q(r.size() - d.size() + 1, Cyclotomic(Rat(0)));
  for (size_t i = r.size(); i-- >= d.size();) {
    if (!r[i].is_zero()) {
      Cyclotomic c = r[i] * lead_inv;
      q[i - (d.size() - 1)] = c;
      for (size_t j = 0; j < d.size(); ++j)
        r[i - (d.size() - 1) + j] = r[i - (d.size() - 1) + j] - c * d[j];
    }
    if (i + 1 == d.size()) break;
  }
  for (const auto& c : r)
    if (!c.is_zero()) throw std::logic_error("cp_divexact: not divisible");
  return q;
}

// Fraction-free Bareiss determinant over the polynomial ring Q(zeta)[w].
CycloPoly bareiss_det(std::vector<std::vector<CycloPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return {Cyclotomic(Rat(1))};
  int sign = 1;
  CycloPoly prev = {Cyclotomic(Rat(1))};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (cp_is_zero(m[k][k])) {
      size_t sw = k + 1;
      while (sw < n && cp_is_zero(m[sw][k])) ++sw;
      if (sw == n) return {};  // zero determinant
      std::swap(m[k], m[sw]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        CycloPoly t = cp_sub(cp_mul(m[k][k], m[i][j]), cp_mul(m[i][k], m[k][j]));
        m[i][j] = cp_divexact(t, prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  CycloPoly det = m[n - 1][n - 1];
  if (sign < 0)
    for (auto& c : det) c = -c;
  return det;
}

}  // namespace

int cyclopoly_degree(const CycloPoly& p) {
  for (size_t i = p.size(); i-- > 0;)
    if (!p[i].is_zero()) return static_cast<int>(i);
  return -1;
}

CycloPoly cyclopoly_galois(const CycloPoly& p, long u) {
  CycloPoly out = p;
  for (auto& c : out) c = c.galois(u);
  return out;
}

long cyclopoly_conductor(const CycloPoly& p) {
  long n = 1;
  for (const auto& c : p) n = std::lcm(n, c.conductor());
  return n;
}

EliminationResult resultant_eliminate(const LaurentPoly& f,
                                      const LaurentPoly& g, int axis) {
  if (f.ambient_dim() != 2 || g.ambient_dim() != 2)
    throw std::invalid_argument("resultant_eliminate: bivariate only");
  if (f.is_zero() || g.is_zero())
    throw std::domain_error("resultant_eliminate: zero polynomial");
  if (axis != 0 && axis != 1)
    throw std::invalid_argument("resultant_eliminate: axis must be 0 or 1");
  const int keep = 1 - axis;

  // shift exponents to make both genuine polynomials in (v, w)
  auto as_matrix = [&](const LaurentPoly& h) {
    long vmin = 0, wmin = 0;
    bool first = true;
    for (const auto& [e, c] : h.terms()) {
      if (first || e[axis] < vmin) vmin = e[axis];
      if (first || e[keep] < wmin) wmin = e[keep];
      first = false;
    }
    long vdeg = 0, wdeg = 0;
    for (const auto& [e, c] : h.terms()) {
      vdeg = std::max(vdeg, e[axis] - vmin);
      wdeg = std::max(wdeg, e[keep] - wmin);
    }
    std::vector<CycloPoly> rows(vdeg + 1, CycloPoly(wdeg + 1, Cyclotomic(Rat(0))));
    for (const auto& [e, c] : h.terms())
      rows[e[axis] - vmin][e[keep] - wmin] = c;
    for (auto& r : rows) cp_trim(r);
    return rows;
  };

  auto fv = as_matrix(f);
  auto gv = as_matrix(g);
  const int df = static_cast<int>(fv.size()) - 1;
  const int dg = static_cast<int>(gv.size()) - 1;

  CycloPoly res;
  if (df == 0) {
    // Res_v(f, g) = f^{deg_v g}
    res = {Cyclotomic(Rat(1))};
    for (int i = 0; i < dg; ++i) res = cp_mul(res, fv[0]);
  } else if (dg == 0) {
    res = {Cyclotomic(Rat(1))};
    for (int i = 0; i < df; ++i) res = cp_mul(res, gv[0]);
  } else {
    const int size = df + dg;
    std::vector<std::vector<CycloPoly>> syl(
        size, std::vector<CycloPoly>(size, CycloPoly{}));
    for (int r = 0; r < dg; ++r)
      for (int i = 0; i <= df; ++i) syl[r][r + i] = fv[df - i];
    for (int r = 0; r < df; ++r)
      for (int i = 0; i <= dg; ++i) syl[dg + r][r + i] = gv[dg - i];
    res = bareiss_det(std::move(syl));
  }

  cp_trim(res);
  if (res.empty())
    throw std::domain_error(
        "resultant_eliminate: improper intersection (common factor)");

  EliminationResult out;
  out.nominal_degree = static_cast<int>(res.size()) - 1;
  size_t low = 0;
  while (low < res.size() && res[low].is_zero()) ++low;
  out.stripped_power = static_cast<long>(low);
  out.torus_part.assign(res.begin() + low, res.end());
  return out;
}

bool upsilon_test(const LaurentPoly& f, const LaurentPoly& g,
                  const TorsionPoint& t1, const TorsionPoint& t2) {
  if (f.is_zero() || g.is_zero()) return false;
  auto sf = f.support();
  auto sg = g.support();
  if (sf.size() != sg.size()) return false;
  // supports sorted (map order); translate test
  const int n = f.ambient_dim();
  VecZ shift(n);
  for (int i = 0; i < n; ++i) shift[i] = sg[0][i] - sf[0][i];
  for (size_t k = 0; k < sf.size(); ++k)
    for (int i = 0; i < n; ++i)
      if (sf[k][i] + shift[i] != sg[k][i]) return false;
  // proportionality of the twisted coefficient vectors:
  // alpha_m chi^m(t1) * beta_{m'+m0} chi^{m'+m0}(t2)
  //   == alpha_{m'} chi^{m'}(t1) * beta_{m+m0} chi^{m+m0}(t2) for all m, m'.
  auto coeff_f = [&](const VecZ& m) { return f.terms().at(m) * t1.character(m); };
  auto coeff_g = [&](const VecZ& m) { return g.terms().at(m) * t2.character(m); };
  for (size_t a = 0; a < sf.size(); ++a) {
    for (size_t b = a + 1; b < sf.size(); ++b) {
      VecZ ma = sf[a], mb = sf[b];
      VecZ mas = sg[a], mbs = sg[b];
      Cyclotomic lhs = coeff_f(ma) * coeff_g(mbs);
      Cyclotomic rhs = coeff_f(mb) * coeff_g(mas);
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

namespace modarith {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> primes_1_mod_n(long n, int count,
                                          std::uint64_t floor_bound) {
  std::vector<std::uint64_t> out;
  std::uint64_t k = floor_bound / static_cast<std::uint64_t>(n) + 1;
  while (static_cast<int>(out.size()) < count) {
    std::uint64_t q = k * static_cast<std::uint64_t>(n) + 1;
    if (q > (1ULL << 62)) throw std::overflow_error("prime search overflow");
    if (is_prime_u64(q)) out.push_back(q);
    ++k;
  }
  return out;
}

std::uint64_t root_of_unity(std::uint64_t q, long n) {
  if ((q - 1) % static_cast<std::uint64_t>(n) != 0)
    throw std::invalid_argument("root_of_unity: q != 1 mod n");
  std::vector<long> prime_divs;
  long m = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      prime_divs.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) prime_divs.push_back(m);
  for (std::uint64_t a = 2;; ++a) {
    std::uint64_t w = powmod(a, (q - 1) / static_cast<std::uint64_t>(n), q);
    if (w == 1) continue;
    bool exact = true;
    for (long p : prime_divs)
      if (powmod(w, static_cast<std::uint64_t>(n / p), q) == 1) {
        exact = false;
        break;
      }
    if (exact) return w;
  }
}

}  // namespace modarith

std::vector<Int> galois_norm_poly(const CycloPoly& r) {
  CycloPoly rr = r;
  while (!rr.empty() && rr.back().is_zero()) rr.pop_back();
  if (rr.empty()) throw std::domain_error("galois_norm_poly: zero polynomial");
  long n = 1;
  for (const auto& c : rr) n = std::lcm(n, c.conductor());

  // clear denominators into Z[zeta]
  std::vector<std::vector<Int>> zc;  // integer coefficient vectors, len phi(n)
  {
    Int den(1);
    std::vector<Cyclotomic> lifted;
    for (const auto& c : rr) {
      Cyclotomic cl = c.lift_to(n);
      den = lcm(den, cl.integral_scaled().first);
      lifted.push_back(std::move(cl));
    }
    for (const auto& c : lifted) {
      auto [d, z] = c.integral_scaled();
      Int mult = den / d;
      for (auto& x : z) x *= mult;
      zc.push_back(std::move(z));
    }
  }
  const long phi = euler_phi(n);
  const auto units = units_mod(n);

  if (n == 1) {
    std::vector<Int> s;
    for (const auto& z : zc) s.push_back(z[0]);
    Int content(0);
    for (const auto& c : s) content = gcd(content, c);
    if (s.back() < 0) content = -content;
    for (auto& c : s) c /= content;
    return s;
  }

  // coefficient bound: prod_u sum_j |sigma_u(coeff_j)| <= (sum_j ||c_j||_1)^phi
  Int s1(0);
  for (const auto& z : zc) {
    Int t(0);
    for (const auto& x : z) t += abs(x);
    s1 += t;
  }
  if (s1 == 0) throw std::logic_error("galois_norm_poly: zero after scaling");
  double log2_bound =
      static_cast<double>(phi) *
          std::max(1.0, std::log2(std::max(1.0, s1.get_d()))) +
      2.0;
  int nprimes = static_cast<int>(log2_bound / 50.0) + 2;

  auto primes = modarith::primes_1_mod_n(n, nprimes + 1, 1ULL << 50);
  const int deg_r = static_cast<int>(zc.size()) - 1;
  const long out_deg = static_cast<long>(deg_r) * phi;

  std::vector<std::vector<std::uint64_t>> residues;  // per prime: out_deg+1
  for (auto q : primes) {
    std::uint64_t w = modarith::root_of_unity(q, n);
    std::vector<std::uint64_t> wpow(n);
    wpow[0] = 1;
    for (long i = 1; i < n; ++i) wpow[i] = modarith::mulmod(wpow[i - 1], w, q);
    std::vector<std::uint64_t> prod = {1};
    for (long u : units) {
      // conjugate coefficients evaluated at w^u
      std::vector<std::uint64_t> conj(deg_r + 1, 0);
      for (int j = 0; j <= deg_r; ++j) {
        std::uint64_t acc = 0;
        for (long i = 0; i < static_cast<long>(zc[j].size()); ++i) {
          if (zc[j][i] == 0) continue;
          Int red = zc[j][i] % Int(static_cast<unsigned long>(q));
          if (red < 0) red += Int(static_cast<unsigned long>(q));
          std::uint64_t cv = red.get_ui();
          acc = (acc + modarith::mulmod(cv, wpow[(i * u) % n], q)) % q;
        }
        conj[j] = acc;
      }
      std::vector<std::uint64_t> next(prod.size() + conj.size() - 1, 0);
      for (size_t i = 0; i < prod.size(); ++i) {
        if (!prod[i]) continue;
        for (size_t j = 0; j < conj.size(); ++j) {
          if (!conj[j]) continue;
          next[i + j] = (next[i + j] + modarith::mulmod(prod[i], conj[j], q)) % q;
        }
      }
      prod = std::move(next);
    }
    prod.resize(out_deg + 1, 0);
    residues.push_back(std::move(prod));
  }

  // CRT using the first nprimes primes, verify against the last one
  std::vector<Int> s(out_deg + 1, Int(0));
  Int modulus(1);
  for (int k = 0; k < nprimes; ++k) {
    Int q(static_cast<unsigned long>(primes[k]));
    if (k == 0) {
      for (long j = 0; j <= out_deg; ++j)
        s[j] = Int(static_cast<unsigned long>(residues[k][j]));
      modulus = q;
      continue;
    }
    Int minv;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), q.get_mpz_t());
    for (long j = 0; j <= out_deg; ++j) {
      Int rq(static_cast<unsigned long>(residues[k][j]));
      Int diff = ((rq - s[j]) % q + q) % q;
      s[j] += modulus * ((diff * minv) % q);
    }
    modulus *= q;
  }
  for (long j = 0; j <= out_deg; ++j)
    if (s[j] * 2 > modulus) s[j] -= modulus;
  {
    // consistency check with the spare prime
    Int q(static_cast<unsigned long>(primes[nprimes]));
    for (long j = 0; j <= out_deg; ++j) {
      Int red = s[j] % q;
      if (red < 0) red += q;
      if (red.get_ui() != residues[nprimes][j])
        throw std::runtime_error("galois_norm_poly: CRT bound violated");
    }
  }

  while (s.size() > 1 && s.back() == 0) s.pop_back();
  Int content(0);
  for (const auto& c : s) content = gcd(content, c);
  if (content == 0) throw std::logic_error("galois_norm_poly: zero norm");
  if (s.back() < 0) content = -content;
  for (auto& c : s) c /= content;
  return s;
}

}  // namespace toric
