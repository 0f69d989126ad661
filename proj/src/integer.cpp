#include "qeuler/integer.hpp"

#include "qeuler/errors.hpp"

#include <cstdlib>

namespace qeuler {

long valuation(const Integer& n, long p) {
  if (n == 0) throw DomainError("valuation of zero");
  Integer m = abs(n);
  const unsigned long up = static_cast<unsigned long>(p);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), up)) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), up);
    ++v;
  }
  return v;
}

long valuation(const Rational& r, long p) {
  return valuation(r.get_num(), p) - valuation(r.get_den(), p);
}

Integer ipow(long base, unsigned long exp) {
  Integer out;
  Integer b = base;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), exp);
  return out;
}

Rational rpow(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  Integer num, den;
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return exp > 0 ? make_rational(num, den) : make_rational(den, num);
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

long factorial_valuation(unsigned long n, long p) {
  long v = 0;
  for (unsigned long pk = static_cast<unsigned long>(p); pk <= n; pk *= static_cast<unsigned long>(p)) {
    v += static_cast<long>(n / pk);
    if (pk > n / static_cast<unsigned long>(p)) break;
  }
  return v;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  for (long d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long euler_phi(long n) {
  long phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

long mod_pow(long base, long exp, long mod) {
  __int128 result = 1 % mod;
  __int128 b = ((base % mod) + mod) % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<long>(result);
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw ParameterError("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw ParameterError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace qeuler
