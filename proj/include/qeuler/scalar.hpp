#pragma once

#include "qeuler/cyclotomic.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/integer.hpp"
#include "qeuler/padic.hpp"

#include <complex>

namespace qeuler {

using Complex = std::complex<double>;

/// Builds constants in a scalar domain. Rational and complex constants need
/// no context; p-adic constants need the prime and a working precision.
template <class S>
struct Domain;

template <>
struct Domain<Rational> {
  Rational from_integer(const Integer& n) const { return Rational(n); }
  Rational from_rational(const Rational& r) const { return r; }
  bool is_zero(const Rational& x) const { return x == 0; }
};

template <>
struct Domain<Complex> {
  Complex from_integer(const Integer& n) const { return Complex(n.get_d(), 0.0); }
  Complex from_rational(const Rational& r) const { return Complex(r.get_d(), 0.0); }
  bool is_zero(const Complex& x) const { return x == Complex(0.0, 0.0); }
};

template <>
struct Domain<Padic> {
  long p;
  long precision;
  Padic from_integer(const Integer& n) const { return Padic::from_integer(n, p, precision); }
  Padic from_rational(const Rational& r) const { return Padic::from_rational(r, p, precision); }
  bool is_zero(const Padic& x) const { return x.is_zero(); }
};

inline Domain<Rational> domain_of(const Rational&) { return {}; }
inline Domain<Complex> domain_of(const Complex&) { return {}; }
inline Domain<Padic> domain_of(const Padic& like) {
  return {like.prime(), std::max(1L, like.is_zero() ? 1L : like.relative_precision())};
}

/// x^e with the convention 0^0 = 1.
template <class S>
S power(const S& x, unsigned long e, const Domain<S>& dom) {
  S result = dom.from_integer(1);
  S base = x;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1UL;
    if (e > 0) base = base * base;
  }
  return result;
}

enum class BracketSign { plus, minus };

/// [x]_q = (1 - q^x)/(1 - q), or [x]_{-q} = (1 - (-q)^x)/(1 + q) for BracketSign::minus.
/// At q = 1 the plus bracket is the limit value x.
template <class S>
S q_bracket(const Integer& x, const S& q, BracketSign sign, const Domain<S>& dom) {
  if (x < 0) throw ParameterError("q-bracket needs a nonnegative integer");
  const S one = dom.from_integer(1);
  const S base = sign == BracketSign::plus ? q : -q;
  const S denom = one - base;
  if (dom.is_zero(denom)) {
    if (sign == BracketSign::minus) throw ParameterError("q = -1 is not admissible");
    return dom.from_integer(x);
  }
  if (!x.fits_ulong_p()) throw ParameterError("q-bracket argument too large");
  return (one - power(base, x.get_ui(), dom)) / denom;
}

template <class S>
S q_bracket(long x, const S& q, BracketSign sign = BracketSign::plus) {
  return q_bracket(Integer(x), q, sign, domain_of(q));
}

/// s(s-1)...(s-k+1)/k!, the coefficient C(s, k) for arbitrary s.
template <class S>
S gen_binomial(const S& s, unsigned long k, const Domain<S>& dom) {
  S acc = dom.from_integer(1);
  for (unsigned long j = 0; j < k; ++j) acc = acc * (s - dom.from_integer(static_cast<long>(j)));
  return acc / dom.from_integer(factorial(k));
}

template <class S>
S gen_binomial(const S& s, unsigned long k) {
  return gen_binomial(s, k, domain_of(s));
}

}  // namespace qeuler
