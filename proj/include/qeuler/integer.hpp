#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace qeuler {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exponent of p in n; n must be nonzero.
long valuation(const Integer& n, long p);
/// v_p(num) - v_p(den); r must be nonzero.
long valuation(const Rational& r, long p);

Integer ipow(long base, unsigned long exp);
Rational rpow(const Rational& base, long exp);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// Legendre's formula.
long factorial_valuation(unsigned long n, long p);

bool is_prime(long n);
std::vector<std::pair<long, int>> factorize(long n);
long euler_phi(long n);
long mod_pow(long base, long exp, long mod);
long lcm_long(long a, long b);

/// Accepts "a", "-a", "a/b".
Rational parse_rational(const std::string& text);

inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace qeuler
