#pragma once

#include "qeuler/dirichlet.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/fermionic.hpp"

#include <optional>

namespace qeuler {

/// Inputs of the p-adic l_q-function. chi's order must divide p - 1 and F must
/// be an odd multiple of p and of chi's modulus. K terms of each k-series are
/// kept, K the least k with k (p-2)/(p-1) >= M.
struct PLContext {
  long p;
  Padic q;
  std::optional<Rational> exact_q;
  DirichletCharacter chi;
  long F;
  long precision;
  long truncation;
};

/// Least K with K (p-2) >= M (p-1).
long truncation_for(long p, long precision);

/// F = 0 picks lcm(modulus, p).
PLContext make_pl_context(const DirichletCharacter& chi, long p, const Rational& q, long precision, long F = 0);
/// Precision is taken from q.
PLContext make_pl_context(const DirichletCharacter& chi, const Padic& q, long F = 0);

/// A truncated-series value with its bookkeeping.
struct PLValue {
  Padic value;
  long slack = 0;                // digits short of the context precision
  long certified_valuation = 0;  // lower bound for the first dropped term
};

/// s in D, which inside Q_p means v_p(s) >= 0.
void require_in_disk(const Padic& s);

/// <a>^(-s) = sum_k C(-s,k) (<a> - 1)^k, p not dividing a.
Padic angle_power(long a, const Padic& s, const PLContext& ctx);

/// H_{p,q}(s, a | F) = (-1)^a q^a <a>^(-s) ([2]_q/[2]_{q^F}) sum_k C(-s,k) (F/a)^k E_{k,q^F}.
PLValue H_pq(const Padic& s, long a, const PLContext& ctx);

/// l_{p,q}(s, chi) = sum_{a <= F, p not dividing a} chi(a) H_{p,q}(s, a | F).
PLValue l_pq(const Padic& s, const PLContext& ctx);

/// E_{n,chi_n,q} - p^n chi_n(p) ([2]_q/[2]_{q^p}) E_{n,chi_n,q^p}, chi_n = chi omega^(-n) made primitive at p.
/// Uses exact cyclotomic arithmetic when the context has an exact q.
PLValue thm7b_rhs(unsigned n, const PLContext& ctx);

/// Integral over X^* of chi_n(x) x^n d mu_{-q}.
Padic thm7c_integral(unsigned n, const PLContext& ctx, long max_level = 64);

/// Same relation with chi_n kept at modulus lcm(d, p): the Euler factor vanishes and
/// E_{n,chi_n,q} (imprimitive) must equal thm7b_rhs. Returns the difference, exact.
Cyclotomic euler_factor_residual(unsigned n, const DirichletCharacter& chi, long p, const Rational& q);

/// l_p(s, chi) = sum_{a <= F, p not dividing a} (-1)^a chi(a) <a>^(-s) sum_k C(-s,k) (F/a)^k E_k
/// with classical E_k.
PLValue corollary8_lp(const Padic& s, const DirichletCharacter& chi, long p, long precision, long F = 0);

}  // namespace qeuler
