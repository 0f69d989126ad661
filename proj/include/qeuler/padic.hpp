#pragma once

#include "qeuler/integer.hpp"

#include <limits>
#include <string>
#include <vector>

namespace qeuler {

/// Element of Q_p (p odd) known to a finite absolute precision.
///
/// A nonzero value is p^v * u with u a unit known modulo p^r; the absolute
/// precision is v + r. A value indistinguishable from zero is stored as
/// "zero known modulo p^A". The exact zero has infinite absolute precision.
/// Arithmetic propagates precision: a result never claims more digits than
/// its operands support.
class Padic {
 public:
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  /// Exact zero.
  explicit Padic(long p);

  static Padic zero(long p, long absolute_precision = kExact);
  /// n known to `relative_precision` digits beyond its valuation.
  static Padic from_integer(const Integer& n, long p, long relative_precision);
  static Padic from_rational(const Rational& r, long p, long relative_precision);
  static Padic one(long p, long relative_precision) { return from_integer(1, p, relative_precision); }

  long prime() const noexcept { return p_; }
  /// For a zero value this is the absolute precision.
  long valuation() const noexcept { return v_; }
  long absolute_precision() const noexcept { return v_ + r_; }
  long relative_precision() const noexcept { return r_; }
  const Integer& unit() const noexcept { return u_; }
  bool is_zero() const noexcept { return r_ == 0; }
  bool is_exact_zero() const noexcept { return r_ == 0 && v_ >= kExact; }

  /// Drops digits beyond absolute precision `digits` (no-op if already coarser).
  Padic truncated(long digits) const;

  /// Representative of the value modulo p^digits in [0, p^digits); requires
  /// valuation >= 0 (or zero) and digits <= absolute precision.
  Integer residue(long digits) const;

  /// Base-p digits of the unit, least significant first.
  std::vector<long> unit_digits() const;

  Padic inverse() const;
  Padic pow(long e) const;

  Padic& operator+=(const Padic& rhs) { return *this = *this + rhs; }
  Padic& operator-=(const Padic& rhs) { return *this = *this - rhs; }
  Padic& operator*=(const Padic& rhs) { return *this = *this * rhs; }
  Padic& operator/=(const Padic& rhs) { return *this = *this / rhs; }

  friend Padic operator+(const Padic& a, const Padic& b);
  friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }
  friend Padic operator*(const Padic& a, const Padic& b);
  friend Padic operator/(const Padic& a, const Padic& b) { return a * b.inverse(); }
  Padic operator-() const;

  std::string to_string() const;

 private:
  Padic(long p, long v, long r, Integer u);
  static Padic normalized(long p, long w, long absolute, Integer x);

  long p_;
  long v_;
  long r_;
  Integer u_;
};

/// Largest k with a ≡ b mod p^k that the operands' precision can certify.
long agreement(const Padic& a, const Padic& b);

/// Exact rational check: is `r` congruent to `x` to at least `digits` digits?
bool congruent(const Padic& x, const Rational& r, long digits);

}  // namespace qeuler
