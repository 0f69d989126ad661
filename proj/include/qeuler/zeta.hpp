#pragma once

#include "qeuler/dirichlet.hpp"
#include "qeuler/euler.hpp"
#include "qeuler/scalar.hpp"

#include <stdexcept>

namespace qeuler {

/// Stopping rule for the alternating q-series. The tail after N terms of
/// c * sum_j w_j z^j (alpha + beta j)^(-s), |w_j| <= 1, is bounded by
///   |c| |z|^N (alpha + beta N)^sigma / (1 - rho),   sigma = -Re s,
/// with rho = |z| ((alpha + beta (N+1)) / (alpha + beta N))^max(sigma, 0).
/// For the plain zeta series this is [2]_q q^N (N + x)^max(0, -Re s) / (1 - q) up to the ratio factor.
struct SeriesBudget {
  double tolerance = 1e-13;
  long max_terms = 2'000'000;
  /// When positive, sum exactly this many terms and report the bound for the rest.
  long fixed_terms = 0;
};

struct SeriesResult {
  Complex value;
  double tail_bound = 0.0;
  long terms = 0;
};

/// max_terms was reached before the tail bound dropped below the tolerance.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(Complex partial, double tail_bound, long terms)
      : std::runtime_error("series budget exhausted"), partial_(partial), tail_bound_(tail_bound), terms_(terms) {}
  Complex partial_sum() const noexcept { return partial_; }
  double tail_bound() const noexcept { return tail_bound_; }
  long terms() const noexcept { return terms_; }

 private:
  Complex partial_;
  double tail_bound_;
  long terms_;
};

/// Complex embedding used for character values: zeta_m -> exp(2 pi i / m).
inline constexpr const char* kComplexEmbedding = "zeta_m -> exp(2*pi*i/m)";

/// zeta_{q,E}(s, x) = [2]_q sum_{n>=0} (-1)^n q^n (n + x)^(-s), x > 0, |q| < 1.
SeriesResult zeta_qE(Complex s, double x, Complex q, const SeriesBudget& budget = {});
/// zeta_{q,E}(s) = [2]_q sum_{n>=1} (-1)^n q^n n^(-s).
SeriesResult zeta_qE_at(Complex s, Complex q, const SeriesBudget& budget = {});
/// l_q(s, chi) = [2]_q sum_{n>=1} (-1)^n q^n chi(n) n^(-s).
SeriesResult l_q_series(Complex s, const DirichletCharacter& chi, Complex q, const SeriesBudget& budget = {});

enum class PartialZetaMode { closed, direct };

/// H_q(s, a | F) = [2]_q sum_{m = a mod F, m > 0} (-1)^m q^m m^(-s), 0 < a < F, F odd.
/// closed: ((-1)^a q^a / F^s) ([2]_q / [2]_{q^F}) zeta_{q^F,E}(s, a/F).
/// direct: the sum over m = a + jF.
SeriesResult partial_zeta_Hq(Complex s, long a, long F, Complex q, const SeriesBudget& budget = {},
                             PartialZetaMode mode = PartialZetaMode::closed);

/// l_q(0, chi) = ([2]_q / [2]_{q^F}) sum_{a=1}^F (-1)^a q^a chi(a).
Cyclotomic l_q_at_zero(const DirichletCharacter& chi, const Rational& q, long F);

enum class PartialForm {
  euler_poly,   // (-q)^a F^n ([2]_q/[2]_{q^F}) E_{n,q^F}(a/F)
  binomial_fa,  // (-q)^a a^n ([2]_q/[2]_{q^F}) sum_{k<=n} C(n,k) (F/a)^k E_{k,q^F}
};

/// H_q(-n, a | F) by one of the two finite forms; both hold exactly.
template <class S>
S partial_zeta_negative(unsigned n, long a, long F, const S& q, const Domain<S>& dom, PartialForm form) {
  if (F < 1 || F % 2 == 0) throw ParameterError("F must be an odd positive integer");
  if (a <= 0 || a >= F) throw ParameterError("need 0 < a < F");
  const S one = dom.from_integer(1);
  const S qF = power(q, static_cast<unsigned long>(F), dom);
  EulerTable<S> table(qF, dom);
  const S lead = power(S(-q), static_cast<unsigned long>(a), dom) * (one + q) / (one + qF);
  if (form == PartialForm::euler_poly)
    return lead * power(dom.from_integer(F), n, dom) * table.poly(n, dom.from_rational(Rational(a, F)));
  const S ratio = dom.from_rational(Rational(F, a));
  S acc = dom.from_integer(0);
  S ratio_pow = one;
  for (unsigned k = 0; k <= n; ++k) {
    acc = acc + dom.from_integer(binomial(n, k)) * ratio_pow * table[k];
    ratio_pow = ratio_pow * ratio;
  }
  return lead * power(dom.from_integer(a), n, dom) * acc;
}

}  // namespace qeuler
