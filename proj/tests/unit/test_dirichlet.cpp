#include "doctest.h"

#include "qeuler/dirichlet.hpp"
#include "qeuler/errors.hpp"
#include "qeuler/teichmuller.hpp"

#include <numeric>
#include <random>
#include <set>

using namespace qeuler;

namespace {

// Brute force: chi factors through modulus f iff chi(a) = 1 whenever a = 1 mod f.
long brute_force_conductor(const DirichletCharacter& chi) {
  const long d = chi.modulus();
  for (long f = 1; f <= d; ++f) {
    if (d % f != 0) continue;
    bool factors = true;
    for (long a = 1; a < d && factors; ++a)
      if (std::gcd(a, d) == 1 && a % f == 1 % f && chi.value_exponent(a) != 0) factors = false;
    if (factors) return f;
  }
  return d;
}

}  // namespace

TEST_CASE("enumerate_characters") {
  CHECK(enumerate_characters(1).size() == 1);
  const auto mod3 = enumerate_characters(3);
  REQUIRE(mod3.size() == 2);
  CHECK(mod3[0].is_trivial());
  CHECK(mod3[1](2) == Cyclotomic(1, Rational(-1)));
  const auto mod9 = enumerate_characters(9);
  std::multiset<long> orders;
  for (const auto& chi : mod9) orders.insert(chi.order());
  CHECK(orders == std::multiset<long>{1, 2, 3, 3, 6, 6});
  CHECK_THROWS_AS(enumerate_characters(4), ParameterError);
  CHECK_THROWS_AS(enumerate_characters(0), ParameterError);
}

TEST_CASE("character values") {
  const auto trivial = DirichletCharacter::trivial(15);
  CHECK(trivial(7) == Cyclotomic(1, Rational(1)));
  CHECK(trivial(5).is_zero());
  for (const auto& chi : enumerate_characters(9)) {
    if (chi.order() != 3) continue;
    const long g = chi.generators()[0];
    const Cyclotomic v = chi(g);
    CHECK(v.pow(3) == Cyclotomic(1, Rational(1)));
    CHECK(!(v == Cyclotomic(1, Rational(1))));
    CHECK(v.order() == 3);
  }
}

TEST_CASE("orthogonality, multiplicativity, distinctness") {
  std::mt19937_64 rng(99);
  for (long d : {1L, 3L, 5L, 7L, 9L, 15L, 21L, 25L, 27L, 45L}) {
    const auto chars = enumerate_characters(d);
    CHECK(static_cast<long>(chars.size()) == euler_phi(d));
    std::set<std::vector<long>> tables;
    for (const auto& chi : chars) {
      Cyclotomic sum(chi.order());
      std::vector<long> table;
      for (long a = 0; a < d; ++a) {
        sum += chi(a);
        table.push_back(chi.value_exponent(a) < 0 ? -1 : chi.value_exponent(a) * (12 * 27 * 5 * 7 / chi.order()));
      }
      tables.insert(table);
      CHECK(sum == Cyclotomic(1, chi.is_trivial() ? Rational(euler_phi(d)) : Rational(0)));
      CHECK(chi(1) == Cyclotomic(1, Rational(1)));
      std::uniform_int_distribution<long> pick(1, 10 * d);
      for (int trial = 0; trial < 200 / static_cast<int>(chars.size()) + 1; ++trial) {
        const long a = pick(rng), b = pick(rng);
        if (std::gcd(a, d) != 1 || std::gcd(b, d) != 1) continue;
        CHECK(chi(a * b) == chi(a) * chi(b));
      }
    }
    CHECK(tables.size() == chars.size());
  }
}

TEST_CASE("conductor and primitive part") {
  CHECK(DirichletCharacter::trivial(9).conductor() == 1);
  CHECK(DirichletCharacter(3, {1}).conductor() == 3);
  for (const auto& chi : enumerate_characters(9)) {
    if (chi.order() != 2) continue;
    CHECK(chi.conductor() == 3);
    CHECK(chi.primitive_part() == DirichletCharacter(3, {1}));
  }
  for (long d : {9L, 15L, 25L, 27L, 45L, 63L}) {
    for (const auto& chi : enumerate_characters(d)) {
      CHECK(chi.conductor() == brute_force_conductor(chi));
      const auto prim = chi.primitive_part();
      CHECK(prim.modulus() == chi.conductor());
      CHECK(prim.is_primitive());
      for (long a = 1; a < d; ++a)
        if (std::gcd(a, d) == 1) CHECK(prim(a) == chi(a));
    }
  }
}

TEST_CASE("primitive at p only") {
  // trivial mod 15 at p = 3 keeps the factor 5 and drops the factor 3
  const auto chi = DirichletCharacter::trivial(15).p_primitive_part(3);
  CHECK(chi.modulus() == 5);
  CHECK(chi(3) == Cyclotomic::root_power(1, 0));
  CHECK(chi(5).is_zero());
  for (long d : {15L, 45L, 75L})
    for (const auto& base : enumerate_characters(d))
      for (long p : {3L, 5L}) {
        const auto part = base.p_primitive_part(p);
        long away = d;
        while (away % p == 0) away /= p;
        CHECK(part.modulus() % away == 0);
        CHECK((part.modulus() % p != 0) == (base.conductor() % p != 0));
        for (long a = 1; a < d * p; ++a)
          if (std::gcd(a, d) == 1) CHECK(part(a) == base(a));
      }
}

TEST_CASE("teichmuller and angle") {
  CHECK(teichmuller(1, 5, 6).residue(6) == 1);
  CHECK(teichmuller(4, 5, 6).residue(6) == ipow(5, 6) - 1);
  CHECK(teichmuller(2, 5, 2).residue(2) == 7);
  CHECK(teichmuller(2, 5, 3).residue(3) == 57);
  CHECK(teichmuller(2, 3, 4).residue(4) == 80);
  CHECK(teichmuller(10, 5, 4).is_exact_zero());
  CHECK(angle(2, 5, 2).residue(2) == 11);
  CHECK(angle(1, 7, 5).residue(5) == 1);
  CHECK_THROWS_AS(angle(5, 5, 3), DomainError);
  for (long p : {3L, 5L, 7L, 11L}) {
    const long m = 8;
    for (long a = 1; a < 3 * p; ++a) {
      if (a % p == 0) continue;
      const Padic w = teichmuller(a, p, m);
      CHECK(agreement(w.pow(p - 1), Padic::one(p, m)) >= m);
      CHECK(w.residue(1) == a % p);
      CHECK(angle(a, p, m).residue(1) == 1);
      for (long b = 1; b < p; ++b) CHECK(agreement(teichmuller(a * b, p, m), w * teichmuller(b, p, m)) >= m);
    }
  }
}

TEST_CASE("omega twist") {
  const auto trivial = DirichletCharacter::trivial(1);
  const OmegaTwist chi1(trivial, 5, 1);
  CHECK(chi1(2, 2).residue(2) == 18);  // 7^-1 mod 25
  CHECK(chi1(5, 4).is_exact_zero());
  const OmegaTwist chi4(trivial, 5, 4);  // n = 0 mod p - 1
  CHECK(chi4(3, 6).residue(6) == 1);
  CHECK(chi4(10, 6).is_exact_zero());
  // the exact twist embeds to the p-adic twist
  for (long p : {3L, 5L, 7L}) {
    for (const auto& base : {DirichletCharacter::trivial(1), DirichletCharacter(3, {1}), DirichletCharacter(5, {2})}) {
      if (base.modulus() == p) continue;
      for (long n = -2; n <= 5; ++n) {
        const OmegaTwist twist(base, p, n);
        const auto exact = twist.exact();
        CHECK(exact.modulus() == std::lcm(base.modulus(), p));
        for (long a = 1; a < 2 * exact.modulus(); ++a) {
          const Padic lhs = twist(a, 10);
          const Padic rhs = embed_padic(exact(a), p, 10);
          CHECK(agreement(lhs, rhs) >= 10);
          for (long b = 1; b < 8; ++b) CHECK(agreement(twist(a * b, 10), lhs * twist(b, 10)) >= 10);
        }
      }
    }
  }
  CHECK_THROWS_AS(embed_padic(Cyclotomic::root_power(3, 1), 5, 4), ParameterError);
}
