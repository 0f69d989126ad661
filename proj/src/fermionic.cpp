#include "qeuler/fermionic.hpp"

#include <algorithm>

namespace qeuler {

MeasureContext<Rational> exact_measure(long p, const Rational& q, long d) {
  if (p < 3 || !is_prime(p)) throw ParameterError("p must be an odd prime");
  if (d < 1) throw ParameterError("d must be positive");
  if (q == -1) throw ParameterError("q = -1 is not admissible");
  return {p, q, d, Domain<Rational>{}};
}

MeasureContext<Padic> padic_measure(const Padic& q, long d) {
  if (d < 1 || d % 2 == 0) throw ParameterError("d must be odd and positive");
  const auto dom = domain_of(q);
  if ((dom.from_integer(1) - q).valuation() < 1) throw ParameterError("p-adic q must satisfy |1 - q|_p < 1");
  return {q.prime(), q, d, dom};
}

WittResult stabilized_sum(const Integrand<Padic>& f, const MeasureContext<Padic>& ctx, long max_level) {
  const long target = ctx.precision();
  Padic previous = riemann_sum(f, 1, ctx);
  long depth = 0;
  for (long level = 2; level <= max_level; ++level) {
    Padic current = riemann_sum(f, level, ctx);
    depth = agreement(current, previous);
    if (depth >= target) return {current.truncated(target), level};
    previous = std::move(current);
  }
  throw PrecisionError("level sums did not stabilize to " + std::to_string(target) + " digits by level " +
                           std::to_string(max_level),
                       depth);
}

Padic witt_euler(unsigned n, const MeasureContext<Padic>& ctx, long max_level) {
  return stabilized_sum(Integrand<Padic>::monomial(n), ctx, max_level).value;
}

Padic witt_euler_poly(unsigned n, const Rational& x, const MeasureContext<Padic>& ctx, long max_level) {
  return stabilized_sum(Integrand<Padic>::translated(n, ctx.dom.from_rational(x)), ctx, max_level).value;
}

Padic witt_gen_euler(unsigned n, const DirichletCharacter& chi, const MeasureContext<Padic>& ctx, long max_level) {
  if (ctx.d % chi.modulus() != 0) throw ParameterError("the X-level d must be a multiple of the character modulus");
  const long p = ctx.p, m = ctx.precision();
  auto weight = [chi, p, m](long x) { return char_value_padic(chi, x, p, m); };
  return stabilized_sum(Integrand<Padic>::character(n, weight, chi.modulus()), ctx, max_level).value;
}

Padic witt_restricted_units(unsigned n, const OmegaTwist& chi_n, const MeasureContext<Padic>& ctx, long max_level) {
  if (chi_n.prime() != ctx.p) throw ParameterError("twist prime differs from the measure prime");
  if (ctx.d % chi_n.base().modulus() != 0) throw ParameterError("the X-level d must be a multiple of the character modulus");
  const long m = ctx.precision();
  auto weight = [chi_n, m](long x) { return chi_n(x, m); };
  const long period = std::lcm(chi_n.base().modulus(), ctx.p);
  return stabilized_sum(Integrand<Padic>::character(n, weight, period).restricted_to_units(), ctx, max_level).value;
}

Padic translation_defect(unsigned k, long level, const MeasureContext<Padic>& ctx) {
  const auto& dom = ctx.dom;
  const Padic one = dom.from_integer(1);
  const Padic shifted = riemann_sum(Integrand<Padic>::translated(k, one), level, ctx);
  const Padic plain = riemann_sum(Integrand<Padic>::monomial(k), level, ctx);
  const Padic f0 = k == 0 ? one : dom.from_integer(0);
  return ctx.q * shifted + plain - (one + ctx.q) * f0;
}

namespace {

// Dense polynomial with machine-word coefficients; the residuals below have
// coefficients bounded by p in absolute value.
using SmallPoly = std::vector<long>;

SmallPoly poly_mul(const SmallPoly& a, const SmallPoly& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> sb;
  for (std::size_t j = 0; j < b.size(); ++j)
    if (b[j] != 0) sb.push_back(j);
  SmallPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j : sb) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPoly poly_sub(const SmallPoly& a, const SmallPoly& b) {
  IntPoly out(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return out;
}

// sign * q^degree
SmallPoly monomial(long degree, long sign) {
  SmallPoly out(static_cast<std::size_t>(degree) + 1, 0);
  out.back() = sign;
  return out;
}

// (-q^stride)^degree
SmallPoly minus_power(long degree, long stride) { return monomial(degree * stride, degree % 2 == 0 ? 1 : -1); }

// [count]_{-q^stride} = sum_{j<count} (-q^stride)^j
SmallPoly minus_bracket(long count, long stride) {
  SmallPoly out(static_cast<std::size_t>((count - 1) * stride) + 1, 0);
  for (long j = 0; j < count; ++j) out[static_cast<std::size_t>(j * stride)] = j % 2 == 0 ? 1 : -1;
  return out;
}

long level_size(long d, long p, long level) {
  long out = d;
  for (long i = 0; i < level; ++i) out *= p;
  return out;
}

}  // namespace

bool is_zero_poly(const IntPoly& poly) {
  return std::all_of(poly.begin(), poly.end(), [](const Integer& c) { return c == 0; });
}

IntPoly measure_additivity_residual(long p, long d, long level, long a) {
  const long coarse = level_size(d, p, level);
  if (a < 0 || a >= coarse) throw ParameterError("residue outside [0, d p^N)");
  const SmallPoly lhs = poly_mul(minus_bracket(coarse * p, 1), minus_power(a, 1));
  SmallPoly children(static_cast<std::size_t>(a + (p - 1) * coarse) + 1, 0);
  for (long i = 0; i < p; ++i) {
    const long e = a + i * coarse;
    children[static_cast<std::size_t>(e)] += e % 2 == 0 ? 1 : -1;
  }
  return poly_sub(lhs, poly_mul(minus_bracket(coarse, 1), children));
}

IntPoly measure_scaling_residual(long p, long level, long a) {
  const long size = level_size(1, p, level);
  if (a < 0 || a >= size) throw ParameterError("residue outside [0, p^N)");
  // left: (-q)^(p a) / [p^(N+1)]_{-q}
  const SmallPoly num_left = minus_power(p * a, 1);
  const SmallPoly den_left = minus_bracket(size * p, 1);
  // right: (1 + q) (-q^p)^a / ((1 + q^p) [p^N]_{-q^p})
  const SmallPoly num_right = poly_mul(SmallPoly{1, 1}, minus_power(a, p));
  SmallPoly two_qp(static_cast<std::size_t>(p) + 1, 0);
  two_qp.front() = 1;
  two_qp.back() = 1;
  const SmallPoly den_right = poly_mul(minus_bracket(size, p), two_qp);
  return poly_sub(poly_mul(den_right, num_left), poly_mul(den_left, num_right));
}

Rational measure_additivity_residual(long p, long d, long level, long a, const Rational& q) {
  const auto ctx = exact_measure(p, q, d);
  const long coarse = level_size(d, p, level);
  Rational rhs = 0;
  for (long i = 0; i < p; ++i) rhs += mu_value(Integer(a + i * coarse), level + 1, ctx);
  return mu_value(Integer(a), level, ctx) - rhs;
}

Rational measure_scaling_residual(long p, long level, long a, const Rational& q) {
  const auto ctx = exact_measure(p, q);
  const Rational qp = rpow(q, p);
  const auto ctx_p = exact_measure(p, qp);
  const Rational lhs = mu_value(Integer(p * a), level + 1, ctx);
  const Rational rhs = (1 + q) / (1 + qp) * mu_value(Integer(a), level, ctx_p);
  return lhs - rhs;
}

}  // namespace qeuler
