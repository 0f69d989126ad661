#include "qeuler/padic.hpp"

#include "qeuler/errors.hpp"

#include <algorithm>
#include <sstream>

namespace qeuler {
namespace {

Integer ppow(long p, long e) { return ipow(p, static_cast<unsigned long>(e)); }

long strip(Integer& x, long p) {
  long t = 0;
  const unsigned long up = static_cast<unsigned long>(p);
  while (mpz_divisible_ui_p(x.get_mpz_t(), up)) {
    mpz_divexact_ui(x.get_mpz_t(), x.get_mpz_t(), up);
    ++t;
  }
  return t;
}

void require_same_prime(const Padic& a, const Padic& b) {
  if (a.prime() != b.prime()) throw ParameterError("mixing p-adic numbers of different primes");
}

long sat_add(long a, long b) { return std::min(Padic::kExact, a + b); }

}  // namespace

Padic::Padic(long p) : Padic(p, kExact, 0, Integer(0)) {}

Padic::Padic(long p, long v, long r, Integer u) : p_(p), v_(v), r_(r), u_(std::move(u)) {}

Padic Padic::zero(long p, long absolute_precision) {
  return Padic(p, std::min(absolute_precision, kExact), 0, Integer(0));
}

Padic Padic::normalized(long p, long w, long absolute, Integer x) {
  // value = p^w * x, known modulo p^absolute
  if (absolute <= w) return zero(p, absolute);
  x = mod_floor(x, ppow(p, absolute - w));
  if (x == 0) return zero(p, absolute);
  const long t = strip(x, p);
  const long v = w + t;
  return Padic(p, v, absolute - v, mod_floor(x, ppow(p, absolute - v)));
}

Padic Padic::from_integer(const Integer& n, long p, long relative_precision) {
  if (p < 3 || !is_prime(p)) throw ParameterError("p must be an odd prime");
  if (relative_precision < 1) throw ParameterError("p-adic precision must be positive");
  if (n == 0) return Padic(p);
  Integer u = n;
  const long v = strip(u, p);
  return Padic(p, v, relative_precision, mod_floor(u, ppow(p, relative_precision)));
}

Padic Padic::from_rational(const Rational& r, long p, long relative_precision) {
  if (r == 0) {
    if (p < 3 || !is_prime(p)) throw ParameterError("p must be an odd prime");
    return Padic(p);
  }
  Integer num = r.get_num(), den = r.get_den();
  const long v = strip(num, p) - strip(den, p);
  const Integer mod = ppow(p, relative_precision);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  Padic out = from_integer(num * inv, p, relative_precision);
  out.v_ = v;
  return out;
}

Padic Padic::truncated(long digits) const {
  if (digits >= absolute_precision()) return *this;
  if (digits <= v_) return zero(p_, digits);
  return Padic(p_, v_, digits - v_, mod_floor(u_, ppow(p_, digits - v_)));
}

Integer Padic::residue(long digits) const {
  if (digits > absolute_precision()) throw PrecisionError("residue requested beyond known precision", absolute_precision());
  if (is_zero() || v_ >= digits) return 0;
  if (v_ < 0) throw DomainError("residue of a non-integral p-adic number");
  return mod_floor(u_ * ppow(p_, v_), ppow(p_, digits));
}

std::vector<long> Padic::unit_digits() const {
  std::vector<long> out;
  Integer x = u_;
  for (long i = 0; i < r_; ++i) {
    Integer d;
    mpz_fdiv_qr_ui(x.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p_));
    out.push_back(d.get_si());
  }
  return out;
}

Padic Padic::inverse() const {
  if (is_zero()) throw DomainError("p-adic inverse of a value indistinguishable from zero");
  const Integer mod = ppow(p_, r_);
  Integer inv;
  mpz_invert(inv.get_mpz_t(), u_.get_mpz_t(), mod.get_mpz_t());
  return Padic(p_, -v_, r_, inv);
}

Padic Padic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (e == 0) return one(p_, is_zero() ? 64 : r_);  // 0^0 = 1
  if (is_zero()) return is_exact_zero() ? *this : zero(p_, sat_add(0, v_ * e));
  Integer u;
  const Integer mod = ppow(p_, r_);
  mpz_powm_ui(u.get_mpz_t(), u_.get_mpz_t(), static_cast<unsigned long>(e), mod.get_mpz_t());
  return Padic(p_, v_ * e, r_, u);
}

Padic operator+(const Padic& a, const Padic& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  const long absolute = std::min(a.absolute_precision(), b.absolute_precision());
  const long w = std::min(a.v_, b.v_);
  if (absolute <= w) return Padic::zero(a.p_, absolute);
  Integer x = 0;
  if (!a.is_zero() && a.v_ < absolute) x += a.u_ * ppow(a.p_, a.v_ - w);
  if (!b.is_zero() && b.v_ < absolute) x += b.u_ * ppow(b.p_, b.v_ - w);
  return Padic::normalized(a.p_, w, absolute, std::move(x));
}

Padic operator*(const Padic& a, const Padic& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero() || b.is_exact_zero()) return Padic(a.p_);
  if (a.is_zero() || b.is_zero()) {
    // Known only to be divisible by p^(v_a + v_b) at best.
    return Padic::zero(a.p_, sat_add(a.v_, b.v_));
  }
  const long r = std::min(a.r_, b.r_);
  const Integer mod = ppow(a.p_, r);
  return Padic(a.p_, a.v_ + b.v_, r, mod_floor(a.u_ * b.u_, mod));
}

Padic Padic::operator-() const {
  if (is_zero()) return *this;
  return Padic(p_, v_, r_, mod_floor(-u_, ppow(p_, r_)));
}

std::string Padic::to_string() const {
  std::ostringstream os;
  if (is_exact_zero()) {
    os << "0";
  } else if (is_zero()) {
    os << "O(" << p_ << "^" << v_ << ")";
  } else {
    os << u_.get_str();
    if (v_ != 0) os << "*" << p_ << "^" << v_;
    os << " + O(" << p_ << "^" << absolute_precision() << ")";
  }
  return os.str();
}

long agreement(const Padic& a, const Padic& b) {
  // For a zero difference valuation() is the certified absolute precision.
  return (a - b).valuation();
}

bool congruent(const Padic& x, const Rational& r, long digits) {
  if (x.absolute_precision() < digits) return false;
  const Padic rr = r == 0 ? Padic(x.prime()) : Padic::from_rational(r, x.prime(), digits + std::max(0L, -valuation(r, x.prime())) + 1);
  return agreement(x, rr) >= digits;
}

}  // namespace qeuler
