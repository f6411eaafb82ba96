#include "toric/padic.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "toric/resultant.hpp"

namespace toric {

namespace {

using Fp = std::vector<std::uint64_t>;  // dense poly over F_p, index = degree

void fp_trim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp fp_mul(const Fp& a, const Fp& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Fp c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!b[j]) continue;
      c[i + j] = (c[i + j] + modarith::mulmod(a[i], b[j], p)) % p;
    }
  }
  return c;
}

Fp fp_mod(Fp a, const Fp& b, std::uint64_t p) {
  fp_trim(a);
  if (b.empty()) throw std::domain_error("fp_mod by zero");
  std::uint64_t linv = modarith::powmod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    std::uint64_t c = modarith::mulmod(a.back(), linv, p);
    if (c) {
      size_t off = a.size() - b.size();
      for (size_t j = 0; j + 1 < b.size(); ++j) {
        std::uint64_t t = modarith::mulmod(c, b[j], p);
        a[off + j] = (a[off + j] + p - t) % p;
      }
    }
    a.pop_back();
    fp_trim(a);
    if (a.empty()) break;
  }
  return a;
}

// exact quotient a / b when b | a
Fp fp_div(Fp a, const Fp& b, std::uint64_t p) {
  fp_trim(a);
  if (a.empty()) return {};
  std::uint64_t linv = modarith::powmod(b.back(), p - 2, p);
  Fp q(a.size() - b.size() + 1, 0);
  for (size_t i = a.size(); i-- + 1 >= b.size() + 1;) {
    std::uint64_t c = modarith::mulmod(a[i], linv, p);
    size_t qi = i - (b.size() - 1);
    q[qi] = c;
    if (c)
      for (size_t j = 0; j < b.size(); ++j) {
        std::uint64_t t = modarith::mulmod(c, b[j], p);
        a[qi + j] = (a[qi + j] + p - t) % p;
      }
    if (qi == 0) break;
  }
  return q;
}

Fp fp_gcd(Fp a, Fp b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    Fp r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t linv = modarith::powmod(a.back(), p - 2, p);
    for (auto& c : a) c = modarith::mulmod(c, linv, p);
  }
  return a;
}

Fp fp_powmod_mpz(Fp base, const Int& e, const Fp& m, std::uint64_t p) {
  Fp result = {1};
  base = fp_mod(std::move(base), m, p);
  long bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (long i = bits - 1; i >= 0; --i) {
    result = fp_mod(fp_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      result = fp_mod(fp_mul(result, base, p), m, p);
  }
  return result;
}

// extended gcd: s*a + t*b = 1 for coprime a, b
void fp_bezout(const Fp& a, const Fp& b, std::uint64_t p, Fp& s, Fp& t) {
  Fp r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
  fp_trim(r0);
  fp_trim(r1);
  while (!r1.empty()) {
    // q = r0 / r1 (with remainder)
    Fp q(std::max<size_t>(r0.size(), r1.size()), 0);
    Fp rem = r0;
    std::uint64_t linv = modarith::powmod(r1.back(), p - 2, p);
    while (rem.size() >= r1.size() && !rem.empty()) {
      std::uint64_t c = modarith::mulmod(rem.back(), linv, p);
      size_t off = rem.size() - r1.size();
      q[off] = c;
      if (c)
        for (size_t j = 0; j < r1.size(); ++j) {
          std::uint64_t v = modarith::mulmod(c, r1[j], p);
          rem[off + j] = (rem[off + j] + p - v) % p;
        }
      fp_trim(rem);
      if (rem.size() < r1.size()) break;
    }
    fp_trim(q);
    auto combine = [&](const Fp& x0, const Fp& x1) {
      Fp qx = fp_mul(q, x1, p);
      Fp out = x0;
      out.resize(std::max(out.size(), qx.size()), 0);
      for (size_t i = 0; i < qx.size(); ++i) out[i] = (out[i] + p - qx[i]) % p;
      fp_trim(out);
      return out;
    };
    Fp s2 = combine(s0, s1), t2 = combine(t0, t1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd (constant); normalize to 1
  std::uint64_t ginv = modarith::powmod(r0[0], p - 2, p);
  for (auto& c : s0) c = modarith::mulmod(c, ginv, p);
  for (auto& c : t0) c = modarith::mulmod(c, ginv, p);
  s = std::move(s0);
  t = std::move(t0);
}

// equal-degree splitting: all irreducible factors of `poly` have degree f
void edf(const Fp& poly, long f, std::uint64_t p, std::mt19937_64& rng,
         std::vector<Fp>& out) {
  long deg = static_cast<long>(poly.size()) - 1;
  if (deg == f) {
    out.push_back(poly);
    return;
  }
  Int pf = Int(static_cast<unsigned long>(p));
  mpz_pow_ui(pf.get_mpz_t(), pf.get_mpz_t(), static_cast<unsigned long>(f));
  Int e = (pf - 1) / 2;  // p odd
  while (true) {
    Fp r(deg, 0);
    std::uniform_int_distribution<std::uint64_t> d(0, p - 1);
    for (auto& c : r) c = d(rng);
    fp_trim(r);
    if (r.empty()) continue;
    Fp w = fp_powmod_mpz(r, e, poly, p);
    if (w.empty()) continue;
    w[0] = (w[0] + p - 1) % p;  // w - 1
    fp_trim(w);
    if (w.empty()) continue;
    Fp g = fp_gcd(poly, w, p);
    long dg = static_cast<long>(g.size()) - 1;
    if (dg <= 0 || dg >= deg) continue;
    edf(g, f, p, rng, out);
    edf(fp_div(poly, g, p), f, p, rng, out);
    return;
  }
}

std::vector<Int> zmodk_mod(std::vector<Int> a, const std::vector<Int>& b,
                           const Int& pk) {
  // b monic; reduce a mod (b, pk)
  auto trim = [&](std::vector<Int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  for (auto& c : a) {
    c %= pk;
    if (c < 0) c += pk;
  }
  trim(a);
  while (a.size() >= b.size()) {
    Int c = a.back();
    size_t off = a.size() - b.size();
    if (c != 0)
      for (size_t j = 0; j + 1 < b.size(); ++j) {
        a[off + j] = (a[off + j] - c * b[j]) % pk;
        if (a[off + j] < 0) a[off + j] += pk;
      }
    a.pop_back();
    trim(a);
  }
  return a;
}

}  // namespace

CyclotomicPrime::CyclotomicPrime(long n, long p) : n_(n), p_(p) {
  if (p < 3 || !is_prime_u64(static_cast<unsigned long>(p)))
    throw std::invalid_argument("CyclotomicPrime: p must be an odd prime");
  if (n < 1) throw std::invalid_argument("CyclotomicPrime: n < 1");
  m_ = n;
  long pk = 1;
  while (m_ % p == 0) {
    m_ /= p;
    pk *= p;
  }
  e_ = pk - pk / p;  // phi(p^k); 1 when unramified
  const long m = m_;
  // residue degree = multiplicative order of p mod m
  f_ = 1;
  {
    long x = p % m;
    long cur = x % m;
    while (cur != 1 % m) {
      cur = (cur * (p % m)) % m;
      ++f_;
      if (f_ > m) throw std::logic_error("order computation failed");
    }
  }
  const auto& phi = cyclotomic_polynomial(m);
  Fp phi_p(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) {
    Int r = phi[i] % p;
    if (r < 0) r += p;
    phi_p[i] = r.get_ui();
  }
  std::mt19937_64 rng(0x5eedULL + n * 1315423911ULL + p);
  std::vector<Fp> factors;
  edf(phi_p, f_, static_cast<std::uint64_t>(p), rng, factors);
  std::sort(factors.begin(), factors.end());
  factors_mod_p_ = std::move(factors);
  k_ = 1;
  pk_ = p;
  factors_.clear();
  for (const auto& g : factors_mod_p_) {
    std::vector<Int> gi(g.size());
    for (size_t i = 0; i < g.size(); ++i)
      gi[i] = Int(static_cast<unsigned long>(g[i]));
    factors_.push_back(std::move(gi));
  }
}

void CyclotomicPrime::lift_to(long k) const {
  if (k <= k_) return;
  const auto& phi_z = cyclotomic_polynomial(m_);
  const std::uint64_t p = static_cast<std::uint64_t>(p_);
  for (size_t fi = 0; fi < factors_.size(); ++fi) {
    // cofactor mod p and Bezout data
    Fp g0 = factors_mod_p_[fi];
    Fp h0 = g0;
    {
      Fp phi_p(phi_z.size());
      for (size_t i = 0; i < phi_z.size(); ++i) {
        Int r = phi_z[i] % p_;
        if (r < 0) r += p_;
        phi_p[i] = r.get_ui();
      }
      h0 = fp_div(phi_p, g0, p);
    }
    Fp s, t;
    fp_bezout(g0, h0, p, s, t);
    // lift g (and implicitly h) linearly: g_{j+1} = g_j + p^j * u
    std::vector<Int> g = factors_[fi];
    std::vector<Int> h(h0.size());
    // recover current h = Phi / g mod p^{k_}
    Int pj(1);
    for (long i = 0; i < k_; ++i) pj *= p_;
    {
      // exact-ish division of Phi by monic g mod p^{k_}
      std::vector<Int> rem(phi_z.begin(), phi_z.end());
      for (auto& c : rem) {
        c %= pj;
        if (c < 0) c += pj;
      }
      std::vector<Int> q(rem.size() - g.size() + 1, Int(0));
      for (size_t i = rem.size(); i-- + 1 >= g.size() + 1;) {
        Int c = rem[i];
        size_t qi = i - (g.size() - 1);
        q[qi] = c;
        if (c != 0)
          for (size_t j = 0; j < g.size(); ++j) {
            rem[qi + j] = (rem[qi + j] - c * g[j]) % pj;
            if (rem[qi + j] < 0) rem[qi + j] += pj;
          }
        if (qi == 0) break;
      }
      h.assign(q.begin(), q.end());
    }
    for (long j = k_; j < k; ++j) {
      Int pjn = pj * p_;
      // e = (Phi - g h) / p^j  (mod p)
      std::vector<Int> gh(g.size() + h.size() - 1, Int(0));
      for (size_t a = 0; a < g.size(); ++a) {
        if (g[a] == 0) continue;
        for (size_t b = 0; b < h.size(); ++b) gh[a + b] += g[a] * h[b];
      }
      Fp e(phi_z.size(), 0);
      for (size_t i = 0; i < phi_z.size(); ++i) {
        Int diff = phi_z[i] - (i < gh.size() ? gh[i] : Int(0));
        diff %= pjn;
        if (diff < 0) diff += pjn;
        Int q = diff / pj;  // divisible by p^j by construction
        Int r = q % p_;
        e[i] = r.get_ui();
      }
      fp_trim(e);
      // u = t*e mod g0, v = s*e mod h0: then g += p^j u, h += p^j v
      Fp u = fp_mod(fp_mul(t, e, p), g0, p);
      Fp v = fp_mod(fp_mul(s, e, p), h0, p);
      for (size_t i = 0; i < u.size(); ++i)
        g[i] += pj * Int(static_cast<unsigned long>(u[i]));
      for (size_t i = 0; i < v.size(); ++i)
        h[i] += pj * Int(static_cast<unsigned long>(v[i]));
      for (auto& c : g) c %= pjn;
      for (auto& c : h) c %= pjn;
      pj = pjn;
    }
    factors_[fi] = std::move(g);
  }
  k_ = k;
  pk_ = 1;
  for (long i = 0; i < k; ++i) pk_ *= p_;
}

std::vector<long> CyclotomicPrime::valuations(const Cyclotomic& x) const {
  if (x.is_zero()) throw std::domain_error("valuations: zero element");
  Cyclotomic xl = x.lift_to(n_);
  auto [den, coeffs0] = xl.integral_scaled();
  long den_ord = 0;
  {
    Int d = den;
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p_))) {
      mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(),
                      static_cast<unsigned long>(p_));
      ++den_ord;
    }
  }
  // clear the denominator, then norm the integral part down the totally
  // ramified tower: the relative norm of each p-layer preserves the
  // Z-normalized valuation (residue degree one)
  Cyclotomic z = xl * Cyclotomic(Rat(den));
  long cur = n_;
  while (cur != m_) {
    long nxt = cur / p_;
    Cyclotomic nm(Rat(1));
    for (long u : units_mod(cur))
      if (u % nxt == 1 % nxt) nm = nm * z.galois(u);
    z = nm.descend_to(nxt);
    cur = nxt;
  }
  auto [zden, coeffs] = z.integral_scaled();
  if (zden != 1) throw std::logic_error("valuations: norm not integral");
  std::vector<long> out;
  for (int place = 0; place < num_places(); ++place) {
    long k = std::max<long>(k_, 8);
    while (true) {
      lift_to(k);
      auto rem = zmodk_mod(coeffs, factors_[place], pk_);
      long v = k;
      for (const auto& c : rem) {
        if (c == 0) continue;
        Int cc = c;
        long vc = 0;
        while (mpz_divisible_ui_p(cc.get_mpz_t(),
                                  static_cast<unsigned long>(p_))) {
          mpz_divexact_ui(cc.get_mpz_t(), cc.get_mpz_t(),
                          static_cast<unsigned long>(p_));
          ++vc;
        }
        v = std::min(v, vc);
        if (v == 0) break;
      }
      if (v < k) {
        out.push_back(v - den_ord * e_);
        break;
      }
      if (k > 4096)
        throw std::runtime_error("valuations: element vanishes beyond cap");
      k *= 2;
    }
  }
  return out;
}

Int cyclotomic_integer_norm(const Cyclotomic& x) {
  if (x.is_zero()) return Int(0);
  auto [den, coeffs] = x.integral_scaled();
  if (den != 1)
    throw std::invalid_argument("cyclotomic_integer_norm: not integral");
  const long n = x.conductor();
  if (n == 1) return coeffs[0];
  const long phi = euler_phi(n);
  // |N(x)| <= prod over embeddings of ||x||_1
  Int s1(0);
  for (const auto& c : coeffs) s1 += abs(c);
  double log2b =
      static_cast<double>(phi) * std::log2(std::max(2.0, s1.get_d())) + 2;
  int nprimes = static_cast<int>(log2b / 50.0) + 2;
  auto primes = modarith::primes_1_mod_n(n, nprimes, 1ULL << 50);
  Int result(0), modulus(1);
  for (int kp = 0; kp < nprimes; ++kp) {
    std::uint64_t q = primes[kp];
    std::uint64_t w = modarith::root_of_unity(q, n);
    std::vector<std::uint64_t> wpow(n);
    wpow[0] = 1;
    for (long i = 1; i < n; ++i) wpow[i] = modarith::mulmod(wpow[i - 1], w, q);
    std::uint64_t prod = 1;
    for (long u : units_mod(n)) {
      std::uint64_t acc = 0;
      for (long i = 0; i < static_cast<long>(coeffs.size()); ++i) {
        if (coeffs[i] == 0) continue;
        Int red = coeffs[i] % Int(static_cast<unsigned long>(q));
        if (red < 0) red += Int(static_cast<unsigned long>(q));
        acc = (acc + modarith::mulmod(red.get_ui(), wpow[(i * u) % n], q)) % q;
      }
      prod = modarith::mulmod(prod, acc, q);
    }
    Int qq(static_cast<unsigned long>(q));
    if (kp == 0) {
      result = Int(static_cast<unsigned long>(prod));
      modulus = qq;
      continue;
    }
    Int minv;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), qq.get_mpz_t());
    Int diff = ((Int(static_cast<unsigned long>(prod)) - result) % qq + qq) % qq;
    result += modulus * ((diff * minv) % qq);
    modulus *= qq;
  }
  if (result * 2 > modulus) result -= modulus;
  return result;
}

Int cyclotomic_value_at(long n, const Int& x) {
  const auto& phi = cyclotomic_polynomial(n);
  Int acc(0);
  for (size_t i = phi.size(); i-- > 0;) acc = acc * x + phi[i];
  return acc;
}

}  // namespace toric
