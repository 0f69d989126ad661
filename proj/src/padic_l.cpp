#include "qeuler/padic_l.hpp"

#include "qeuler/teichmuller.hpp"

#include <numeric>

namespace qeuler {

namespace {

void check_prime(long p) {
  if (p < 3 || !is_prime(p)) throw ParameterError("p must be an odd prime");
}

long admissible_F(const DirichletCharacter& chi, long p, long F) {
  if (F == 0) F = std::lcm(chi.modulus(), p);
  if (F < 1 || F % 2 == 0 || F % p != 0 || F % chi.modulus() != 0)
    throw ParameterError("F must be an odd multiple of p and of the character modulus");
  return F;
}

void check_order(const DirichletCharacter& chi, long p) {
  if ((p - 1) % chi.order() != 0)
    throw ParameterError("character order " + std::to_string(chi.order()) + " does not divide p - 1");
}

long slack_of(const Padic& x, long precision) { return std::max(0L, precision - x.absolute_precision()); }

long certified(long p, long K) { return (K * (p - 2) + p - 2) / (p - 1); }

// C(-s, k) for k < K.
std::vector<Padic> binomials(const Padic& s, long K, const Domain<Padic>& dom) {
  std::vector<Padic> out;
  Padic acc = dom.from_integer(1);
  const Padic minus_s = -s;
  for (long k = 0; k < K; ++k) {
    out.push_back(acc);
    acc = acc * (minus_s - dom.from_integer(k)) / dom.from_integer(k + 1);
  }
  return out;
}

// sum_{k<K} C(-s,k) (F/a)^k e_k
Padic k_series(const std::vector<Padic>& binom, const std::vector<Padic>& e, long a, long F, const Domain<Padic>& dom) {
  const Padic ratio = dom.from_rational(Rational(F, a));
  Padic ratio_pow = dom.from_integer(1);
  Padic acc = dom.from_integer(0);
  for (std::size_t k = 0; k < binom.size(); ++k) {
    acc += binom[k] * ratio_pow * e[k];
    ratio_pow *= ratio;
  }
  return acc;
}

Padic angle_series(long a, const std::vector<Padic>& binom, long p, long precision) {
  const Padic delta = angle(a, p, precision) - Padic::one(p, precision);
  Padic delta_pow = Padic::one(p, precision);
  Padic acc(p);
  for (const auto& b : binom) {
    acc += b * delta_pow;
    delta_pow *= delta;
  }
  return acc;
}

}  // namespace

long truncation_for(long p, long precision) {
  check_prime(p);
  if (precision < 1) throw ParameterError("precision must be positive");
  return (precision * (p - 1) + p - 3) / (p - 2);
}

PLContext make_pl_context(const DirichletCharacter& chi, long p, const Rational& q, long precision, long F) {
  check_prime(p);
  if (q == -1) throw ParameterError("q = -1 is not admissible");
  auto ctx = make_pl_context(chi, Padic::from_rational(q, p, precision), F);
  ctx.exact_q = q;
  return ctx;
}

PLContext make_pl_context(const DirichletCharacter& chi, const Padic& q, long F) {
  const long p = q.prime();
  check_prime(p);
  check_order(chi, p);
  F = admissible_F(chi, p, F);
  const long precision = domain_of(q).precision;
  if ((Padic::one(p, precision) - q).valuation() < 1) throw ParameterError("p-adic q must satisfy |1 - q|_p < 1");
  return {p, q, std::nullopt, chi, F, precision, truncation_for(p, precision)};
}

void require_in_disk(const Padic& s) {
  if (!s.is_zero() && s.valuation() < 0) throw DomainError("s lies outside the disk of analyticity");
}

Padic angle_power(long a, const Padic& s, const PLContext& ctx) {
  require_in_disk(s);
  if (a % ctx.p == 0) throw DomainError("<a> needs a prime to p");
  const Domain<Padic> dom{ctx.p, ctx.precision};
  return angle_series(a, binomials(s, ctx.truncation, dom), ctx.p, ctx.precision);
}

PLValue H_pq(const Padic& s, long a, const PLContext& ctx) {
  require_in_disk(s);
  if (a % ctx.p == 0) throw DomainError("H_{p,q} needs a prime to p");
  if (a <= 0 || a >= ctx.F) throw ParameterError("need 0 < a < F");
  const Domain<Padic> dom{ctx.p, ctx.precision};
  const auto binom = binomials(s, ctx.truncation, dom);
  const Padic qF = ctx.q.pow(ctx.F);
  EulerTable<Padic> table(qF, dom);
  std::vector<Padic> e;
  for (long k = 0; k < ctx.truncation; ++k) e.push_back(table[static_cast<std::size_t>(k)]);
  const Padic one = dom.from_integer(1);
  const Padic lead = (-ctx.q).pow(a) * (one + ctx.q) / (one + qF);
  const Padic value = lead * angle_series(a, binom, ctx.p, ctx.precision) * k_series(binom, e, a, ctx.F, dom);
  return {value, slack_of(value, ctx.precision), certified(ctx.p, ctx.truncation)};
}

PLValue l_pq(const Padic& s, const PLContext& ctx) {
  require_in_disk(s);
  const Domain<Padic> dom{ctx.p, ctx.precision};
  const auto binom = binomials(s, ctx.truncation, dom);
  const Padic one = dom.from_integer(1);
  const Padic qF = ctx.q.pow(ctx.F);
  EulerTable<Padic> table(qF, dom);
  std::vector<Padic> e;
  for (long k = 0; k < ctx.truncation; ++k) e.push_back(table[static_cast<std::size_t>(k)]);

  Padic acc(ctx.p);
  Padic signed_qa = one;
  for (long a = 1; a <= ctx.F; ++a) {
    signed_qa = -(signed_qa * ctx.q);
    if (a % ctx.p == 0) continue;
    const Padic chi_a = char_value_padic(ctx.chi, a, ctx.p, ctx.precision);
    if (chi_a.is_exact_zero()) continue;
    acc += chi_a * signed_qa * angle_series(a, binom, ctx.p, ctx.precision) * k_series(binom, e, a, ctx.F, dom);
  }
  const Padic value = acc * (one + ctx.q) / (one + qF);
  return {value, slack_of(value, ctx.precision), certified(ctx.p, ctx.truncation)};
}

PLValue thm7b_rhs(unsigned n, const PLContext& ctx) {
  if (n < 1) throw ParameterError("the interpolation formula needs n >= 1");
  const long p = ctx.p, m = ctx.precision;
  const DirichletCharacter chi_n = OmegaTwist(ctx.chi, p, static_cast<long>(n)).exact().p_primitive_part(p);
  const long f = chi_n.modulus();
  const Padic pn = Padic::from_integer(ipow(p, n), p, m);
  Padic value(p);
  if (ctx.exact_q) {
    const Rational& q = *ctx.exact_q;
    const Rational qp = rpow(q, p);
    const Cyclotomic first = gen_euler_number(n, chi_n, q, f);
    Cyclotomic rhs = first;
    if (f % p != 0) rhs = rhs - chi_n(p) * gen_euler_number(n, chi_n, qp, f) * Rational(Rational(ipow(p, n)) * (1 + q) / (1 + qp));
    value = embed_padic(rhs, p, m);
  } else {
    const Padic one = Padic::one(p, m);
    const Padic qp = ctx.q.pow(p);
    value = gen_euler_number(n, chi_n, ctx.q, f);
    if (f % p != 0)
      value -= pn * char_value_padic(chi_n, p, p, m) * (one + ctx.q) / (one + qp) * gen_euler_number(n, chi_n, qp, f);
  }
  return {value, slack_of(value, m), 0};
}

Padic thm7c_integral(unsigned n, const PLContext& ctx, long max_level) {
  const auto measure = padic_measure(ctx.q, ctx.chi.modulus());
  return witt_restricted_units(n, OmegaTwist(ctx.chi, ctx.p, static_cast<long>(n)), measure, max_level);
}

Cyclotomic euler_factor_residual(unsigned n, const DirichletCharacter& chi, long p, const Rational& q) {
  check_prime(p);
  const DirichletCharacter twisted = OmegaTwist(chi, p, static_cast<long>(n)).exact();
  const DirichletCharacter primitive = twisted.p_primitive_part(p);
  const long f = primitive.modulus();
  const Rational qp = rpow(q, p);
  Cyclotomic rhs = gen_euler_number(n, primitive, q, f);
  if (f % p != 0) rhs = rhs - primitive(p) * gen_euler_number(n, primitive, qp, f) * Rational(Rational(ipow(p, n)) * (1 + q) / (1 + qp));
  return gen_euler_number(n, twisted, q, twisted.modulus()) - rhs;
}

PLValue corollary8_lp(const Padic& s, const DirichletCharacter& chi, long p, long precision, long F) {
  check_prime(p);
  check_order(chi, p);
  require_in_disk(s);
  F = admissible_F(chi, p, F);
  const long K = truncation_for(p, precision);
  const Domain<Padic> dom{p, precision};
  const auto binom = binomials(s, K, dom);
  std::vector<Padic> e;
  for (long k = 0; k < K; ++k) e.push_back(dom.from_rational(classical_euler(static_cast<std::size_t>(k))));
  Padic acc(p);
  for (long a = 1; a <= F; ++a) {
    if (a % p == 0) continue;
    const Padic chi_a = char_value_padic(chi, a, p, precision);
    if (chi_a.is_exact_zero()) continue;
    const Padic term = chi_a * angle_series(a, binom, p, precision) * k_series(binom, e, a, F, dom);
    acc += a % 2 == 0 ? term : -term;
  }
  return {acc, slack_of(acc, precision), certified(p, K)};
}

}  // namespace qeuler
