#include "qeuler/teichmuller.hpp"

#include "qeuler/errors.hpp"

namespace qeuler {

Padic teichmuller(long a, long p, long precision) {
  if (p < 3 || !is_prime(p)) throw ParameterError("p must be an odd prime");
  if (precision < 1) throw ParameterError("p-adic precision must be positive");
  if (a % p == 0) return Padic(p);
  const Integer mod = ipow(p, static_cast<unsigned long>(precision));
  Integer x = mod_floor(Integer(a), mod);
  // x <- x^p gains one correct digit per step; M - 1 steps reach p^M.
  for (long i = 1; i < precision; ++i) {
    Integer next;
    mpz_powm_ui(next.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
    if (next == x) break;
    x = std::move(next);
  }
  return Padic::from_integer(x, p, precision);
}

Padic angle(long a, long p, long precision) {
  if (a % p == 0) throw DomainError("<a> is undefined for p | a");
  return Padic::from_integer(a, p, precision) / teichmuller(a, p, precision);
}

}  // namespace qeuler
