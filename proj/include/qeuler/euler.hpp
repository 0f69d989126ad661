#pragma once

#include "qeuler/dirichlet.hpp"
#include "qeuler/qparameter.hpp"
#include "qeuler/scalar.hpp"

#include <optional>
#include <vector>

namespace qeuler {

/// Memoized E_{k,q}, k = 0, 1, ..., defined by the translation recurrence
///   q * sum_{k<=n} C(n,k) E_{k,q} + E_{n,q} = [2]_q [n = 0],
/// i.e. E_0 = 1 and E_n = -q/(1+q) * sum_{k<n} C(n,k) E_k.
///
/// Not synchronized: fill from one thread, then share read-only.
template <class S>
class EulerTable {
 public:
  EulerTable(S q, Domain<S> dom) : q_(std::move(q)), dom_(std::move(dom)), ratio_(-q_ / (dom_.from_integer(1) + q_)) {
    values_.push_back(dom_.from_integer(1));
  }
  explicit EulerTable(S q) : EulerTable(q, domain_of(q)) {}

  const S& q() const noexcept { return q_; }
  const Domain<S>& domain() const noexcept { return dom_; }

  const S& operator[](std::size_t n) {
    while (values_.size() <= n) {
      const std::size_t m = values_.size();
      S acc = dom_.from_integer(0);
      for (std::size_t k = 0; k < m; ++k) acc = acc + dom_.from_integer(binomial(m, k)) * values_[k];
      values_.push_back(ratio_ * acc);
    }
    return values_[n];
  }

  /// E_{n,q}(x) = sum_k C(n,k) x^(n-k) E_{k,q}.
  S poly(std::size_t n, const S& x) {
    S acc = dom_.from_integer(0);
    S xpow = dom_.from_integer(1);  // x^(n-k), built from k = n downward
    for (std::size_t k = n + 1; k-- > 0;) {
      acc = acc + dom_.from_integer(binomial(n, k)) * xpow * (*this)[k];
      xpow = xpow * x;
    }
    return acc;
  }

 private:
  S q_;
  Domain<S> dom_;
  S ratio_;
  std::vector<S> values_;
};

template <class S>
S euler_number_q(std::size_t n, const S& q) {
  return EulerTable<S>(q)[n];
}

template <class S>
S euler_poly_q(std::size_t n, const S& x, const S& q) {
  return EulerTable<S>(q).poly(n, x);
}

/// Dispatch on the q regime.
Value euler_number_q(std::size_t n, const QParameter& q);
/// x is converted into q's domain.
Value euler_poly_q(std::size_t n, const Rational& x, const QParameter& q);

/// Classical Euler numbers (q = 1): 1, -1/2, 0, 1/4, 0, -1/2, ...
Rational classical_euler(std::size_t n);

/// LHS - RHS of the n-step translation identity for f(x) = x^k:
///   q^n E_{k,q}(n) + (-1)^(n-1) E_{k,q} - [2]_q sum_{l<n} (-1)^(n-l-1) q^l l^k.
/// Exactly zero for every n >= 1.
Rational translation_residual(long n, long k, const Rational& q);

/// Same identity in its odd-n form q^n E_{k,q}(n) + E_{k,q} = [2]_q sum_{l<n} (-1)^l q^l l^k,
/// evaluated without the general sign bookkeeping. Requires n odd.
Rational odd_translation_residual(long n, long k, const Rational& q);

/// Checks that F is an odd multiple of the modulus.
void require_admissible_F(long F, long modulus);

/// Generalized q-Euler number by the finite distribution sum
///   E_{n,chi,q} = [2]_q F^n / [2]_{q^F} sum_{a=1}^{F} (-1)^a q^a chi(a) E_{n,q^F}(a/F).
/// `chi` maps an integer a to a value V that multiplies S (Cyclotomic * Rational,
/// or V = S for complex and p-adic evaluation).
template <class S, class ChiFn>
auto gen_euler_number(std::size_t n, const S& q, long F, long modulus, ChiFn&& chi, const Domain<S>& dom) {
  require_admissible_F(F, modulus);
  const S one = dom.from_integer(1);
  const S qF = power(q, static_cast<unsigned long>(F), dom);
  EulerTable<S> table(qF, dom);
  const S scale = (one + q) * power(dom.from_integer(F), n, dom) / (one + qF);
  const S step = dom.from_rational(Rational(1, F));
  using V = decltype(chi(1L) * scale);
  std::optional<V> acc;
  S signed_qa = one;
  S x = dom.from_integer(0);
  for (long a = 1; a <= F; ++a) {
    signed_qa = -(signed_qa * q);
    x = x + step;
    V term = chi(a) * (scale * signed_qa * table.poly(n, x));
    acc = acc ? V(*acc + term) : term;
  }
  return *acc;
}

/// Exact generalized number: E_{n,chi,q} in Q(zeta_ord(chi)).
Cyclotomic gen_euler_number(std::size_t n, const DirichletCharacter& chi, const Rational& q, long F);
/// Complex-embedded evaluation for float q.
Complex gen_euler_number(std::size_t n, const DirichletCharacter& chi, const Complex& q, long F);
/// p-adic evaluation; chi's order must divide p - 1.
Padic gen_euler_number(std::size_t n, const DirichletCharacter& chi, const Padic& q, long F);

}  // namespace qeuler
