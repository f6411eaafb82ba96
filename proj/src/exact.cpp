#include "toric/exact.hpp"

#include <mpfr.h>

#include <sstream>

namespace toric {

Exact Exact::log_prime(long p, const Rat& coeff) {
  Exact e;
  if (coeff != 0) e.logs_[p] = coeff;
  return e;
}

void Exact::prune() {
  for (auto it = logs_.begin(); it != logs_.end();) {
    if (it->second == 0)
      it = logs_.erase(it);
    else
      ++it;
  }
}

Exact& Exact::operator+=(const Exact& o) {
  q_ += o.q_;
  for (const auto& [p, c] : o.logs_) logs_[p] += c;
  prune();
  return *this;
}

Exact& Exact::operator-=(const Exact& o) {
  q_ -= o.q_;
  for (const auto& [p, c] : o.logs_) logs_[p] -= c;
  prune();
  return *this;
}

Exact& Exact::operator*=(const Rat& s) {
  q_ *= s;
  if (s == 0) {
    logs_.clear();
  } else {
    for (auto& [p, c] : logs_) c *= s;
  }
  return *this;
}

Exact Exact::operator-() const {
  Exact e;
  e.q_ = -q_;
  for (const auto& [p, c] : logs_) e.logs_[p] = -c;
  return e;
}

namespace {

// Evaluates q0 + sum c_p log p into [lo, hi] at the given precision.
void eval_interval(const Rat& q, const std::map<long, Rat>& logs,
                   mpfr_prec_t prec, mpfr_t lo, mpfr_t hi) {
  mpfr_set_prec(lo, prec);
  mpfr_set_prec(hi, prec);
  mpfr_set_q(lo, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi, q.get_mpq_t(), MPFR_RNDU);
  mpfr_t t, c;
  mpfr_init2(t, prec);
  mpfr_init2(c, prec);
  for (const auto& [p, coeff] : logs) {
    // lower bound of the term
    mpfr_set_ui(t, static_cast<unsigned long>(p), MPFR_RNDD);
    mpfr_log(t, t, coeff > 0 ? MPFR_RNDD : MPFR_RNDU);
    mpfr_set_q(c, coeff.get_mpq_t(), MPFR_RNDD);
    mpfr_mul(t, t, c, MPFR_RNDD);
    mpfr_add(lo, lo, t, MPFR_RNDD);
    // upper bound
    mpfr_set_ui(t, static_cast<unsigned long>(p), MPFR_RNDU);
    mpfr_log(t, t, coeff > 0 ? MPFR_RNDU : MPFR_RNDD);
    mpfr_set_q(c, coeff.get_mpq_t(), MPFR_RNDU);
    mpfr_mul(t, t, c, MPFR_RNDU);
    mpfr_add(hi, hi, t, MPFR_RNDU);
  }
  mpfr_clear(t);
  mpfr_clear(c);
}

}  // namespace

int Exact::sign() const {
  if (logs_.empty()) return sgn(q_);
  mpfr_t lo, hi;
  mpfr_init2(lo, 64);
  mpfr_init2(hi, 64);
  int result = 0;
  bool decided = false;
  for (mpfr_prec_t prec = 128; prec <= 4096; prec *= 2) {
    eval_interval(q_, logs_, prec, lo, hi);
    if (mpfr_sgn(lo) > 0) {
      result = 1;
      decided = true;
      break;
    }
    if (mpfr_sgn(hi) < 0) {
      result = -1;
      decided = true;
      break;
    }
  }
  mpfr_clear(lo);
  mpfr_clear(hi);
  if (!decided)
    throw std::runtime_error("Exact::sign: undecided at 4096 bits: " + str());
  return result;
}

double Exact::to_double() const {
  mpfr_t lo, hi;
  mpfr_init2(lo, 128);
  mpfr_init2(hi, 128);
  eval_interval(q_, logs_, 128, lo, hi);
  mpfr_add(lo, lo, hi, MPFR_RNDN);
  mpfr_div_ui(lo, lo, 2, MPFR_RNDN);
  double d = mpfr_get_d(lo, MPFR_RNDN);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return d;
}

std::string Exact::str() const {
  std::ostringstream os;
  os << q_.get_str();
  for (const auto& [p, c] : logs_) os << " + (" << c.get_str() << ")*log(" << p << ")";
  return os.str();
}

}  // namespace toric
