#include "doctest.h"

#include "qeuler/padic_l.hpp"
#include "qeuler/zeta.hpp"

#include <random>

using namespace qeuler;

namespace {

std::vector<DirichletCharacter> admissible_characters(long p) {
  std::vector<DirichletCharacter> out = {DirichletCharacter::trivial(1)};
  for (long d : {3L, 5L, 15L})
    for (const auto& chi : enumerate_characters(d))
      if ((p - 1) % chi.order() == 0) out.push_back(chi);
  return out;
}

Padic integer_s(long s, long p, long m) { return Padic::from_integer(s, p, m); }

}  // namespace

TEST_CASE("truncation") {
  CHECK(truncation_for(3, 12) == 24);
  CHECK(truncation_for(5, 12) == 16);
  CHECK(truncation_for(7, 12) == 15);
  for (long p : {3L, 5L, 7L, 11L})
    for (long m = 1; m <= 20; ++m) {
      const long K = truncation_for(p, m);
      CHECK(K * (p - 2) >= m * (p - 1));
      CHECK((K - 1) * (p - 2) < m * (p - 1));
      // each dropped term C(-s,k) (F/a)^k has valuation >= k - v_p(k!)
      for (long k = K; k < K + 3 * p; ++k) CHECK(k - factorial_valuation(static_cast<unsigned long>(k), p) >= m);
    }
}

TEST_CASE("angle_power") {
  const auto ctx = make_pl_context(DirichletCharacter::trivial(1), 5, Rational(1), 10);
  CHECK(agreement(angle_power(2, Padic(5), ctx), Padic::one(5, 10)) >= 10);
  CHECK(agreement(angle_power(2, integer_s(-1, 5, 10), ctx), angle(2, 5, 10)) >= 10);
  CHECK(angle_power(2, integer_s(-2, 5, 10), ctx).residue(2) == 21);
  for (long a : {1L, 2L, 3L, 4L, 7L, 13L})
    for (long s = -6; s <= 6; ++s)
      CHECK(agreement(angle_power(a, integer_s(s, 5, 10), ctx), angle(a, 5, 10).pow(-s)) >= 10);
  // <a>^(-s-t) = <a>^(-s) <a>^(-t)
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> pick(0, 9765624);
  for (int trial = 0; trial < 5; ++trial) {
    const Padic s = integer_s(pick(rng), 5, 10), t = integer_s(pick(rng), 5, 10);
    CHECK(agreement(angle_power(3, s + t, ctx), angle_power(3, s, ctx) * angle_power(3, t, ctx)) >= 9);
  }
  CHECK_THROWS_AS(angle_power(5, Padic(5), ctx), DomainError);
  CHECK_THROWS_AS(angle_power(2, Padic::from_rational(Rational(1, 5), 5, 10), ctx), DomainError);
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(make_pl_context(DirichletCharacter(5, {1}), 7, Rational(1), 10), ParameterError);  // order 4
  CHECK_THROWS_AS(make_pl_context(DirichletCharacter(3, {1}), 5, Rational(1), 10, 5), ParameterError);
  CHECK_THROWS_AS(make_pl_context(DirichletCharacter(3, {1}), 5, Rational(1), 10, 30), ParameterError);
  CHECK_THROWS_AS(make_pl_context(DirichletCharacter::trivial(1), 5, Rational(2), 10), ParameterError);
  CHECK(make_pl_context(DirichletCharacter(3, {1}), 5, Rational(1), 10).F == 15);
}

TEST_CASE("H_pq at negative integers") {
  const long m = 12;
  for (long p : {3L, 5L}) {
    for (const Rational& q : {Rational(1), Rational(1 + p)}) {
      const auto ctx = make_pl_context(DirichletCharacter::trivial(1), p, q, m, 3 * p);
      for (unsigned n = 1; n <= 4; ++n)
        for (long a = 1; a < ctx.F; ++a) {
          if (a % p == 0) continue;
          const auto h = H_pq(integer_s(-static_cast<long>(n), p, m), a, ctx);
          const Rational hq = partial_zeta_negative(n, a, ctx.F, q, Domain<Rational>{}, PartialForm::euler_poly);
          const Padic expected = teichmuller(a, p, m).pow(-static_cast<long>(n)) * Padic::from_rational(hq, p, m);
          CHECK(agreement(h.value, expected) >= m - 2);
          CHECK(h.slack <= 2);
        }
      const long a = ctx.F - 1;
      const Padic qp = Padic::from_rational(q, p, m);
      const Padic expected = qp.pow(a) * (Padic::one(p, m) + qp) / (Padic::one(p, m) + qp.pow(ctx.F));
      CHECK(agreement(H_pq(Padic(p), a, ctx).value, expected) >= m);
    }
  }
}

TEST_CASE("l_pq interpolation: series, closed form, integral") {
  const long m = 8;
  for (long p : {3L, 5L, 7L})
    for (const auto& chi : admissible_characters(p))
      for (const Rational& q : {Rational(1), Rational(1 + p)}) {
        const auto ctx = make_pl_context(chi, p, q, m);
        for (unsigned n = 1; n <= 3; ++n) {
          const Padic s = integer_s(-static_cast<long>(n), p, m);
          const Padic series = l_pq(s, ctx).value;
          const Padic closed = thm7b_rhs(n, ctx).value;
          const Padic integral = thm7c_integral(n, ctx);
          CHECK(agreement(series, closed) >= m - 2);
          CHECK(agreement(series, integral) >= m - 2);
          CHECK(agreement(closed, integral) >= m - 2);
        }
      }
}

TEST_CASE("closed form through p-adic q agrees with exact q") {
  const long m = 10;
  for (long p : {5L, 7L})
    for (const auto& chi : admissible_characters(p)) {
      const Rational q(1 + p);
      const auto exact_ctx = make_pl_context(chi, p, q, m);
      const auto padic_ctx = make_pl_context(chi, Padic::from_rational(q, p, m));
      for (unsigned n = 1; n <= 4; ++n) CHECK(agreement(thm7b_rhs(n, exact_ctx).value, thm7b_rhs(n, padic_ctx).value) >= m - 2);
    }
}

TEST_CASE("Euler factor: imprimitive twist equals primitive twist minus the p-part") {
  for (long p : {3L, 5L, 7L})
    for (const auto& chi : admissible_characters(p))
      for (const Rational& q : {Rational(1), Rational(2, 5), Rational(-3, 4)})
        for (unsigned n = 0; n <= 5; ++n) CHECK(euler_factor_residual(n, chi, p, q).is_zero());
}

TEST_CASE("vanishing Euler factor") {
  // p = 3, trivial chi, n = 2: chi_2 = omega^(-2) = omega^0 induced to modulus 3, but primitive part is
  // trivial mod 1 (omega has order 2); n = 1 gives omega^(-1), conductor 3, so chi_1(3) = 0.
  const auto ctx = make_pl_context(DirichletCharacter::trivial(1), 3, Rational(1), 10);
  const DirichletCharacter chi1 = OmegaTwist(ctx.chi, 3, 1).exact().primitive_part();
  CHECK(chi1.modulus() == 3);
  const Padic e = embed_padic(gen_euler_number(1, chi1, Rational(1), 3), 3, 10);
  CHECK(agreement(thm7b_rhs(1, ctx).value, e) >= 10);
  CHECK(agreement(l_pq(integer_s(-1, 3, 10), ctx).value, e) >= 8);
}

TEST_CASE("l_pq at s = 1") {
  const long m = 10;
  for (long p : {3L, 5L}) {
    const Rational q(1 + p);
    const auto ctx = make_pl_context(DirichletCharacter::trivial(1), p, q, m);
    const Domain<Padic> dom{p, m};
    const Padic qp = dom.from_rational(q);
    const Padic qF = qp.pow(ctx.F);
    EulerTable<Padic> table(qF, dom);
    Padic acc(p);
    for (long a = 1; a <= ctx.F; ++a) {
      if (a % p == 0) continue;
      Padic inner = dom.from_integer(1);
      Padic ratio_pow = dom.from_integer(1);
      for (long k = 1; k < ctx.truncation; ++k) {
        ratio_pow *= dom.from_rational(Rational(ctx.F, a));
        inner += (k % 2 == 0 ? table[k] : -table[k]) * ratio_pow;
      }
      acc += (-qp).pow(a) * angle(a, p, m).inverse() * inner;
    }
    acc *= (dom.from_integer(1) + qp) / (dom.from_integer(1) + qF);
    CHECK(agreement(l_pq(dom.from_integer(1), ctx).value, acc) >= m - 1);
  }
}

TEST_CASE("classical q = 1 path matches the general series") {
  const long m = 10;
  std::mt19937_64 rng(8);
  for (long p : {3L, 5L, 7L})
    for (const auto& chi : admissible_characters(p)) {
      const auto ctx = make_pl_context(chi, p, Rational(1), m);
      std::uniform_int_distribution<long> pick(0, 100000);
      for (int trial = 0; trial < 3; ++trial) {
        const Padic s = integer_s(pick(rng), p, m);
        CHECK(agreement(corollary8_lp(s, chi, p, m).value, l_pq(s, ctx).value) >= m - 2);
      }
      for (unsigned n = 1; n <= 3; ++n) {
        const Padic s = integer_s(-static_cast<long>(n), p, m);
        CHECK(agreement(corollary8_lp(s, chi, p, m).value, thm7c_integral(n, ctx)) >= m - 2);
      }
    }
}

TEST_CASE("analyticity proxy") {
  const long m = 12;
  const auto ctx = make_pl_context(DirichletCharacter(3, {1}), 5, Rational(6), m);
  const Padic s = integer_s(7, 5, m);
  const Padic base = l_pq(s, ctx).value;
  for (long j = 3; j <= 6; ++j) {
    const Padic shifted = l_pq(s + Padic::from_integer(ipow(5, j) * 11, 5, m), ctx).value;
    CHECK(agreement(shifted, base) >= j);
  }
}
