#pragma once

#include "qeuler/dirichlet.hpp"
#include "qeuler/scalar.hpp"
#include "qeuler/teichmuller.hpp"

#include <functional>
#include <optional>
#include <string_view>

namespace qeuler {

/// Level sums run over x in [0, d p^N), matching the normalizer [d p^N]_{-q}.
inline constexpr std::string_view kSumConvention = "x in [0, d*p^N), normalized by [d*p^N]_{-q}";

/// Parameters of the fermionic measure mu_{-q} on X_d = lim Z/(d p^N).
template <class S>
struct MeasureContext {
  long p;
  S q;
  long d = 1;
  Domain<S> dom;

  long precision() const {
    if constexpr (std::is_same_v<S, Padic>)
      return dom.precision;
    else
      return Padic::kExact;
  }
};

MeasureContext<Rational> exact_measure(long p, const Rational& q, long d = 1);
/// Requires |1 - q|_p < 1 (q = 1 allowed) and odd d. Working precision is q's.
MeasureContext<Padic> padic_measure(const Padic& q, long d = 1);

enum class IntegrandKind { monomial, character_monomial, translated_monomial };

/// f(x) = w(x) (x + c)^n, optionally restricted to x prime to p. The weight
/// w is periodic with the given period (characters, twisted characters).
template <class S>
struct Integrand {
  IntegrandKind kind = IntegrandKind::monomial;
  unsigned exponent = 0;
  std::optional<S> shift;
  std::function<S(long)> weight;
  long period = 1;
  bool units_only = false;

  static Integrand monomial(unsigned n) { return {IntegrandKind::monomial, n, std::nullopt, {}, 1, false}; }
  static Integrand translated(unsigned n, S c) { return {IntegrandKind::translated_monomial, n, std::move(c), {}, 1, false}; }
  static Integrand character(unsigned n, std::function<S(long)> w, long period) {
    return {IntegrandKind::character_monomial, n, std::nullopt, std::move(w), period, false};
  }
  Integrand restricted_to_units() const {
    Integrand out = *this;
    out.units_only = true;
    return out;
  }
};

enum class SumMethod { automatic, enumerate, power_sum };

/// Level sums with more terms than this use the power-sum closed form under SumMethod::automatic.
inline constexpr long kEnumerationLimit = 20000;

/// mu_{-q}(a + d p^N Z_p) = (-q)^a / [d p^N]_{-q}.
template <class S>
S mu_value(const Integer& a, long level, const MeasureContext<S>& ctx) {
  const Integer size = Integer(ctx.d) * ipow(ctx.p, static_cast<unsigned long>(level));
  if (a < 0 || a >= size) throw ParameterError("residue outside [0, d p^N)");
  const S minus_q = -ctx.q;
  return power(minus_q, a.get_ui(), ctx.dom) / q_bracket(size, ctx.q, BracketSign::minus, ctx.dom);
}

/// T_k = sum_{j<count} j^k w^j for k = 0..n, by the shift recurrence
/// (w - 1) T_k = -[k = 0] + count^k w^count - w sum_{i<k} C(k,i) T_i.
template <class S>
std::vector<S> geometric_power_sums(unsigned n, const Integer& count, const S& w, const Domain<S>& dom) {
  if (!count.fits_ulong_p()) throw ParameterError("level too large for the power-sum form");
  const S one = dom.from_integer(1);
  const S w_count = power(w, count.get_ui(), dom);
  const S count_s = dom.from_integer(count);
  const S inv = one / (w - one);
  std::vector<S> t;
  S count_pow = one;
  for (unsigned k = 0; k <= n; ++k) {
    S acc = count_pow * w_count;
    if (k == 0) acc = acc - one;
    for (unsigned i = 0; i < k; ++i) acc = acc - w * dom.from_integer(binomial(k, i)) * t[i];
    t.push_back(acc * inv);
    count_pow = count_pow * count_s;
  }
  return t;
}

/// (1/[d p^N]_{-q}) sum_{x < d p^N} f(x) (-q)^x.
template <class S>
S riemann_sum(const Integrand<S>& f, long level, const MeasureContext<S>& ctx, SumMethod method = SumMethod::automatic) {
  if (level < 0) throw ParameterError("level must be nonnegative");
  const auto& dom = ctx.dom;
  const Integer size = Integer(ctx.d) * ipow(ctx.p, static_cast<unsigned long>(level));
  const long period = f.units_only ? std::lcm(f.period, ctx.p) : f.period;
  const bool periodic = size % period == 0;
  if (method == SumMethod::automatic) method = (size <= kEnumerationLimit || !periodic) ? SumMethod::enumerate : SumMethod::power_sum;
  if (method == SumMethod::power_sum && !periodic) throw ParameterError("weight period must divide d p^N for the power-sum form");

  const S one = dom.from_integer(1);
  const S minus_q = -ctx.q;
  const S shift = f.shift ? *f.shift : dom.from_integer(0);
  auto weight_at = [&](long x) -> std::optional<S> {
    if (f.units_only && x % ctx.p == 0) return std::nullopt;
    if (!f.weight) return one;
    return f.weight(x);
  };

  S total = dom.from_integer(0);
  if (method == SumMethod::enumerate) {
    if (!size.fits_slong_p()) throw ParameterError("level too large to enumerate");
    const long count = size.get_si();
    std::vector<S> weights;
    if (f.weight) {
      for (long r = 0; r < f.period; ++r) {
        auto w = weight_at(r);
        weights.push_back(w ? *w : dom.from_integer(0));
      }
    }
    S sign_q = one;
    for (long x = 0; x < count; ++x) {
      const bool skip = f.units_only && x % ctx.p == 0;
      if (!skip) {
        S term = sign_q * power(S(dom.from_integer(x) + shift), f.exponent, dom);
        if (f.weight) term = weights[static_cast<std::size_t>(x % f.period)] * term;
        total = total + term;
      }
      sign_q = sign_q * minus_q;
    }
  } else {
    // x = a + period * j: (a + c + L j)^n = sum_k C(n,k) (a + c)^(n-k) L^k j^k.
    const Integer blocks = size / period;
    const S step_weight = power(minus_q, static_cast<unsigned long>(period), dom);
    const auto sums = geometric_power_sums(f.exponent, blocks, step_weight, dom);
    std::vector<S> inner(f.exponent + 1, dom.from_integer(0));
    S l_pow = one;
    for (unsigned k = 0; k <= f.exponent; ++k) {
      inner[k] = dom.from_integer(binomial(f.exponent, k)) * l_pow * sums[k];
      l_pow = l_pow * dom.from_integer(period);
    }
    S sign_q = one;
    for (long a = 0; a < period; ++a) {
      if (auto w = weight_at(a)) {
        const S base = dom.from_integer(a) + shift;
        S acc = dom.from_integer(0);
        S base_pow = one;  // (a + c)^(n-k), k from n downward
        for (unsigned k = f.exponent + 1; k-- > 0;) {
          acc = acc + base_pow * inner[k];
          base_pow = base_pow * base;
        }
        total = total + *w * sign_q * acc;
      }
      sign_q = sign_q * minus_q;
    }
  }
  return total / q_bracket(size, ctx.q, BracketSign::minus, dom);
}

/// Result of a stabilized p-adic limit.
struct WittResult {
  Padic value;
  long level;  // first level agreeing with its predecessor to the working precision
};

/// Raises the level until two consecutive sums agree mod p^M, M the context precision.
WittResult stabilized_sum(const Integrand<Padic>& f, const MeasureContext<Padic>& ctx, long max_level);

/// Integral of x^n: congruent to E_{n,q} mod p^M.
Padic witt_euler(unsigned n, const MeasureContext<Padic>& ctx, long max_level = 64);
/// Integral of (x + y)^n dmu(y): congruent to E_{n,q}(x).
Padic witt_euler_poly(unsigned n, const Rational& x, const MeasureContext<Padic>& ctx, long max_level = 64);
/// Integral over X_d of chi(x) x^n; d must be a multiple of chi's modulus.
Padic witt_gen_euler(unsigned n, const DirichletCharacter& chi, const MeasureContext<Padic>& ctx, long max_level = 64);
/// Integral over X_d^* of chi_n(x) x^n with chi_n = chi omega^(-n).
Padic witt_restricted_units(unsigned n, const OmegaTwist& chi_n, const MeasureContext<Padic>& ctx, long max_level = 64);

/// Defect q S_N(f_1) + S_N(f) - [2]_q f(0) of the translation equation at level N, f = x^k.
Padic translation_defect(unsigned k, long level, const MeasureContext<Padic>& ctx);

/// Dense integer polynomial in q, constant term first.
using IntPoly = std::vector<Integer>;

/// Cleared-denominator residual of
///   mu(a + d p^N) = sum_{i<p} mu(a + i d p^N + d p^(N+1))
/// as polynomials in q; identically zero.
IntPoly measure_additivity_residual(long p, long d, long level, long a);
/// Cleared-denominator residual of
///   mu_{-q}(p a + p^(N+1) Z_p) = ([2]_q / [2]_{q^p}) mu_{-q^p}(a + p^N Z_p)
/// as polynomials in q; identically zero.
IntPoly measure_scaling_residual(long p, long level, long a);
/// The same two relations evaluated at an exact q: LHS - RHS.
Rational measure_additivity_residual(long p, long d, long level, long a, const Rational& q);
Rational measure_scaling_residual(long p, long level, long a, const Rational& q);

bool is_zero_poly(const IntPoly& poly);

}  // namespace qeuler
