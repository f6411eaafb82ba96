#include "toric/cyclotomic.hpp"

#include <map>
#include <numeric>

namespace toric {

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> units_mod(long n) {
  std::vector<long> out;
  for (long u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) out.push_back(u);
  if (n == 1) out.push_back(0);  // the trivial group
  return out;
}

namespace {

// Exact division of integer polynomials (assumes divisibility).
std::vector<Int> zpoly_divexact(const std::vector<Int>& num,
                                const std::vector<Int>& den) {
  std::vector<Int> r = num;
  const size_t dn = den.size() - 1;
  if (r.size() < den.size()) throw std::logic_error("zpoly_divexact: degree");
  std::vector<Int> q(r.size() - dn, Int(0));
  for (size_t i = r.size(); i-- > dn;) {
    size_t qi = i - dn;
    if (r[i] == 0) continue;
    Int c = r[i] / den[dn];
    q[qi] = c;
    for (size_t j = 0; j <= dn; ++j) r[qi + j] -= c * den[j];
    if (qi == 0) break;
  }
  for (const auto& c : r)
    if (c != 0) throw std::logic_error("zpoly_divexact: not divisible");
  return q;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Int>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Int> result;
  if (n == 1) {
    result = {Int(-1), Int(1)};  // t - 1
  } else {
    std::vector<Int> num(n + 1, Int(0));
    num[0] = -1;
    num[n] = 1;  // t^n - 1
    std::vector<Int> den = {Int(1)};
    for (long d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      const auto& phi_d = cyclotomic_polynomial(d);
      std::vector<Int> nd(den.size() + phi_d.size() - 1, Int(0));
      for (size_t i = 0; i < den.size(); ++i)
        for (size_t j = 0; j < phi_d.size(); ++j) nd[i + j] += den[i] * phi_d[j];
      den = std::move(nd);
    }
    result = zpoly_divexact(num, den);
  }
  return cache.emplace(n, std::move(result)).first->second;
}

void Cyclotomic::reduce(std::vector<Rat> raw) {
  const auto& phi = cyclotomic_polynomial(n_);
  const size_t deg = phi.size() - 1;  // phi(n_)
  // first fold exponents mod n_ (zeta^n = 1)
  if (raw.size() > static_cast<size_t>(n_)) {
    std::vector<Rat> folded(n_, Rat(0));
    for (size_t i = 0; i < raw.size(); ++i) folded[i % n_] += raw[i];
    raw = std::move(folded);
  }
  // then long-divide by Phi_n
  while (raw.size() > deg) {
    size_t i = raw.size() - 1;
    if (raw[i] != 0) {
      Rat c = raw[i] / Rat(phi[deg]);
      for (size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= c * Rat(phi[j]);
    }
    raw.pop_back();
  }
  raw.resize(deg, Rat(0));
  c_ = std::move(raw);
}

Cyclotomic Cyclotomic::zeta(long n, long power) {
  if (n < 1) throw std::invalid_argument("zeta: order must be positive");
  power %= n;
  if (power < 0) power += n;
  Cyclotomic z;
  z.n_ = n;
  std::vector<Rat> raw(power + 1, Rat(0));
  raw[power] = 1;
  z.reduce(std::move(raw));
  return z;
}

Cyclotomic Cyclotomic::from_coeffs(long n, std::vector<Rat> c) {
  Cyclotomic z;
  z.n_ = n;
  z.reduce(std::move(c));
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational value");
  return c_[0];
}

Cyclotomic Cyclotomic::lift_to(long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw std::invalid_argument("lift_to: conductor must divide");
  long k = m / n_;
  Cyclotomic z;
  z.n_ = m;
  std::vector<Rat> raw(static_cast<size_t>(k) * (c_.size() - 1) + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) raw[i * k] = c_[i];
  z.reduce(std::move(raw));
  return z;
}

Cyclotomic Cyclotomic::descend_to(long m) const {
  if (m == n_) return *this;
  if (n_ % m != 0) throw std::invalid_argument("descend_to: m must divide N");
  const long phim = euler_phi(m);
  const long phin = static_cast<long>(c_.size());
  // columns: lifts of zeta_m^j, j < phi(m)
  MatQ a(phin, VecQ(phim, Rat(0)));
  for (long j = 0; j < phim; ++j) {
    Cyclotomic col = Cyclotomic::zeta(m, j).lift_to(n_);
    for (long i = 0; i < phin; ++i) a[i][j] = col.coeffs()[i];
  }
  // solve a * c = coeffs by elimination; overdetermined and consistent
  VecQ rhs = c_;
  std::vector<int> pivrow(phim, -1);
  long row = 0;
  MatQ mtx = a;
  for (long col = 0; col < phim && row < phin; ++col) {
    long piv = row;
    while (piv < phin && mtx[piv][col] == 0) ++piv;
    if (piv == phin) continue;
    std::swap(mtx[piv], mtx[row]);
    std::swap(rhs[piv], rhs[row]);
    Rat inv = 1 / mtx[row][col];
    for (long cc = col; cc < phim; ++cc) mtx[row][cc] *= inv;
    rhs[row] *= inv;
    for (long r = 0; r < phin; ++r) {
      if (r == row || mtx[r][col] == 0) continue;
      Rat f = mtx[r][col];
      for (long cc = col; cc < phim; ++cc) mtx[r][cc] -= f * mtx[row][cc];
      rhs[r] -= f * rhs[row];
    }
    pivrow[col] = row;
    ++row;
  }
  VecQ out(phim, Rat(0));
  for (long col = 0; col < phim; ++col)
    if (pivrow[col] >= 0) out[col] = rhs[pivrow[col]];
  // consistency: residual rows must vanish
  Cyclotomic cand = Cyclotomic::from_coeffs(m, out);
  if (!(cand.lift_to(n_) == *this))
    throw std::invalid_argument("descend_to: element not in the subfield");
  return cand;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long l = std::lcm(n_, o.n_);
  Cyclotomic a = lift_to(l), b = o.lift_to(l);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  return *this + (-o);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic z = *this;
  for (auto& q : z.c_) q = -q;
  return z;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  long l = std::lcm(n_, o.n_);
  Cyclotomic a = lift_to(l), b = o.lift_to(l);
  std::vector<Rat> raw(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Cyclotomic z;
  z.n_ = l;
  z.reduce(std::move(raw));
  return z;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long l = std::lcm(n_, o.n_);
  return lift_to(l).c_ == o.lift_to(l).c_;
}

Cyclotomic Cyclotomic::galois(long u) const {
  u %= n_;
  if (u < 0) u += n_;
  if (n_ == 1) return *this;
  if (std::gcd(u, n_) != 1)
    throw std::invalid_argument("galois: multiplier not a unit");
  std::vector<Rat> raw(n_, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    raw[(i * u) % n_] += c_[i];
  }
  Cyclotomic z;
  z.n_ = n_;
  z.reduce(std::move(raw));
  return z;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return Cyclotomic::from_coeffs(n_, {1 / c_[0]});
  // extended Euclid in Q[t] for (this, Phi_n); Phi_n irreducible over Q.
  const auto& phi_z = cyclotomic_polynomial(n_);
  std::vector<Rat> r0(phi_z.size());
  for (size_t i = 0; i < phi_z.size(); ++i) r0[i] = Rat(phi_z[i]);
  std::vector<Rat> r1 = c_;
  while (!r1.empty() && r1.back() == 0) r1.pop_back();
  std::vector<Rat> s0 = {Rat(0)}, s1 = {Rat(1)};  // Bezout coeffs of *this
  auto deg = [](const std::vector<Rat>& p) {
    return static_cast<int>(p.size()) - 1;
  };
  while (deg(r1) > 0) {
    std::vector<Rat> r2 = r0;
    std::vector<Rat> q(std::max<int>(deg(r0) - deg(r1) + 1, 1), Rat(0));
    for (int i = deg(r2); i >= deg(r1); --i) {
      if (r2[i] == 0) continue;
      Rat c = r2[i] / r1.back();
      q[i - deg(r1)] = c;
      for (int j = 0; j <= deg(r1); ++j) r2[i - deg(r1) + j] -= c * r1[j];
    }
    while (!r2.empty() && r2.back() == 0) r2.pop_back();
    std::vector<Rat> s2 = s0;
    s2.resize(std::max(s0.size(), q.size() + s1.size() - 1), Rat(0));
    for (size_t i = 0; i < q.size(); ++i) {
      if (q[i] == 0) continue;
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    }
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw std::logic_error("inverse: unexpected zero remainder");
  }
  Rat c = r1[0];
  for (auto& q : s1) q /= c;
  return Cyclotomic::from_coeffs(n_, std::move(s1));
}

std::complex<double> Cyclotomic::embed(long u) const {
  std::complex<double> z(0.0, 0.0);
  const double tau = 2.0 * 3.14159265358979323846;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double ang = tau * static_cast<double>((static_cast<long>(i) * u) % n_) /
                 static_cast<double>(n_);
    z += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return z;
}

std::pair<Int, std::vector<Int>> Cyclotomic::integral_scaled() const {
  Int d(1);
  for (const auto& q : c_) d = lcm(d, q.get_den());
  std::vector<Int> z(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) z[i] = Int(c_[i] * Rat(d));
  return {d, z};
}

}  // namespace toric
