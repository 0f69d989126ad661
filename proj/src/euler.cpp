#include "qeuler/euler.hpp"

namespace qeuler {

Value euler_number_q(std::size_t n, const QParameter& q) {
  return std::visit([n](const auto& qv) -> Value { return euler_number_q(n, qv); }, q.value());
}

Value euler_poly_q(std::size_t n, const Rational& x, const QParameter& q) {
  return std::visit(
      [&](const auto& qv) -> Value {
        const auto dom = domain_of(qv);
        return EulerTable(qv, dom).poly(n, dom.from_rational(x));
      },
      q.value());
}

Rational classical_euler(std::size_t n) { return euler_number_q(n, Rational(1)); }

namespace {

Rational alternating_power_sum(long n, long k, const Rational& q, bool general_sign) {
  Rational acc = 0;
  for (long l = 0; l < n; ++l) {
    const long sign_exp = general_sign ? n - l - 1 : l;
    const Rational term = rpow(q, l) * Rational(ipow(l, static_cast<unsigned long>(k)));
    acc += sign_exp % 2 == 0 ? term : Rational(-term);
  }
  return (1 + q) * acc;
}

void require_translation_args(long n, long k, const Rational& q) {
  if (n < 1) throw ParameterError("translation identity needs n >= 1");
  if (k < 0) throw ParameterError("translation identity needs k >= 0");
  if (q == -1) throw ParameterError("q = -1 is not admissible");
}

}  // namespace

Rational translation_residual(long n, long k, const Rational& q) {
  require_translation_args(n, k, q);
  EulerTable<Rational> table(q);
  const Rational shifted = table.poly(static_cast<std::size_t>(k), Rational(n));
  const Rational sign = (n - 1) % 2 == 0 ? 1 : -1;
  return rpow(q, n) * shifted + sign * table[static_cast<std::size_t>(k)] - alternating_power_sum(n, k, q, true);
}

Rational odd_translation_residual(long n, long k, const Rational& q) {
  require_translation_args(n, k, q);
  if (n % 2 == 0) throw ParameterError("odd translation identity needs odd n");
  EulerTable<Rational> table(q);
  return rpow(q, n) * table.poly(static_cast<std::size_t>(k), Rational(n)) + table[static_cast<std::size_t>(k)] -
         alternating_power_sum(n, k, q, false);
}

void require_admissible_F(long F, long modulus) {
  if (F < 1 || F % 2 == 0) throw ParameterError("F must be an odd positive integer");
  if (F % modulus != 0) throw ParameterError("F must be a multiple of the character modulus");
}

Cyclotomic gen_euler_number(std::size_t n, const DirichletCharacter& chi, const Rational& q, long F) {
  if (q == -1) throw ParameterError("q = -1 is not admissible");
  return gen_euler_number(n, q, F, chi.modulus(), [&](long a) { return chi(a); }, Domain<Rational>{});
}

Complex gen_euler_number(std::size_t n, const DirichletCharacter& chi, const Complex& q, long F) {
  return gen_euler_number(n, q, F, chi.modulus(), [&](long a) { return chi(a).to_complex(); }, Domain<Complex>{});
}

Padic gen_euler_number(std::size_t n, const DirichletCharacter& chi, const Padic& q, long F) {
  const auto dom = domain_of(q);
  return gen_euler_number(
      n, q, F, chi.modulus(), [&](long a) { return char_value_padic(chi, a, dom.p, dom.precision); }, dom);
}

}  // namespace qeuler
