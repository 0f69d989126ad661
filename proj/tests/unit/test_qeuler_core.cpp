#include "doctest.h"

#include "qeuler/euler.hpp"

#include <cmath>
#include <random>

using namespace qeuler;

namespace {

// Independent oracle: the alternating series [2]_q sum_m (-q)^m m^n, summed in
// quad precision (terms reach 1e15 at q = 0.9, n = 10) until the geometric
// tail bound drops below 1e-15.
double series_oracle(int n, double q_in) {
  const __float128 q = q_in;
  __float128 sum = 0, qm = 1;
  for (int m = 0;; ++m) {
    __float128 mn = 1, next = 1;
    for (int i = 0; i < n; ++i) {
      mn *= m;
      next *= m + 1;
    }
    sum += (m % 2 == 0 ? qm * mn : -qm * mn);
    qm *= q;
    const __float128 tail = qm * next / (1 - q) * 4;
    if (m > n && tail < 1e-15) break;
  }
  return static_cast<double>((1 + q) * sum);
}

// Classical Euler numbers from sum_k C(n,k) E_k + E_n = 2 [n = 0].
std::vector<Rational> classical_by_recurrence(std::size_t n_max) {
  std::vector<Rational> e;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Rational acc = n == 0 ? 2 : 0;
    for (std::size_t k = 0; k < n; ++k) acc -= Rational(binomial(n, k)) * e[k];
    e.push_back(acc / 2);
  }
  return e;
}

}  // namespace

TEST_CASE("euler_number_q anchors") {
  CHECK(euler_number_q(0, Rational(2, 7)) == 1);
  CHECK(euler_number_q(1, Rational(1)) == Rational(-1, 2));
  CHECK(euler_number_q(1, Rational(1, 2)) == Rational(-1, 3));
  CHECK(euler_number_q(2, Rational(1)) == 0);
  // frozen from Taylor coefficients of [2]_q/(q e^t + 1) (tests/oracles/oracles.py)
  const std::vector<Rational> half = {1, Rational(-1, 3), Rational(-1, 9), Rational(1, 9), Rational(5, 27)};
  for (std::size_t n = 0; n < half.size(); ++n) CHECK(euler_number_q(n, Rational(1, 2)) == half[n]);
  const std::vector<Rational> two_sevenths = {1, Rational(-2, 9), Rational(-10, 81), Rational(2, 243)};
  for (std::size_t n = 0; n < two_sevenths.size(); ++n) CHECK(euler_number_q(n, Rational(2, 7)) == two_sevenths[n]);
}

TEST_CASE("euler_number_q agrees with the alternating series") {
  for (double q : {0.1, 0.5, 0.9}) {
    for (int n = 0; n <= 10; ++n) {
      const Complex rec = euler_number_q(static_cast<std::size_t>(n), Complex(q, 0.0));
      const double ref = series_oracle(n, q);
      CHECK(std::abs(rec.real() - ref) < 1e-9);
    }
  }
}

TEST_CASE("classical_euler") {
  CHECK(classical_euler(0) == 1);
  CHECK(classical_euler(3) == Rational(1, 4));
  CHECK(classical_euler(4) == 0);
  const auto reference = classical_by_recurrence(20);
  for (std::size_t n = 0; n <= 20; ++n) CHECK(classical_euler(n) == reference[n]);
}

TEST_CASE("euler_poly_q") {
  const Rational q(3, 10);
  for (std::size_t n = 0; n < 6; ++n) CHECK(euler_poly_q(n, Rational(0), q) == euler_number_q(n, q));
  CHECK(euler_poly_q(0, Rational(5, 3), q) == 1);
  CHECK(euler_poly_q(1, Rational(1, 2), Rational(1)) == 0);
  CHECK(euler_poly_q(2, Rational(1, 4), q) == Rational(-479, 2704));
  CHECK(euler_poly_q(1, Rational(1), Rational(1, 2)) == Rational(2, 3));
  CHECK(euler_poly_q(3, Rational(1), Rational(1, 2)) == Rational(-2, 9));
}

TEST_CASE("degenerate q = 0") {
  for (std::size_t n = 0; n < 8; ++n) {
    CHECK(euler_number_q(n, Rational(0)) == (n == 0 ? 1 : 0));
    CHECK(euler_poly_q(n, Rational(2, 3), Rational(0)) == rpow(Rational(2, 3), static_cast<long>(n)));
  }
}

TEST_CASE("QParameter dispatch") {
  CHECK(std::get<Rational>(euler_number_q(1, QParameter::exact(Rational(1, 2)))) == Rational(-1, 3));
  const Complex z = std::get<Complex>(euler_number_q(1, QParameter::floating(Complex(0.5, 0.0))));
  CHECK(std::abs(z - Complex(-1.0 / 3.0, 0.0)) < 1e-15);
  const Padic v = std::get<Padic>(euler_number_q(1, QParameter::padic(Padic::from_integer(4, 3, 10))));
  CHECK(congruent(v, Rational(-4, 5), 10));
  CHECK(std::get<Rational>(euler_poly_q(1, Rational(1, 2), QParameter::exact(Rational(1)))) == 0);
}

TEST_CASE("translation identity residuals") {
  for (long k = 0; k < 6; ++k) CHECK(translation_residual(1, k, Rational(3, 4)) == 0);
  CHECK(translation_residual(3, 2, Rational(2, 5)) == 0);
  CHECK(translation_residual(2, 0, Rational(1, 3)) == 0);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
  for (int trial = 0; trial < 50; ++trial) {
    const Rational q = make_rational(num(rng), den(rng));
    if (q == -1) continue;
    for (long n = 1; n <= 6; ++n)
      for (long k = 0; k <= 8; ++k) {
        CHECK(translation_residual(n, k, q) == 0);
        if (n % 2 == 1) CHECK(odd_translation_residual(n, k, q) == 0);
      }
  }
  CHECK_THROWS_AS(odd_translation_residual(2, 1, Rational(1, 2)), ParameterError);
  CHECK_THROWS_AS(translation_residual(0, 1, Rational(1, 2)), ParameterError);
}

TEST_CASE("gen_euler_number examples") {
  const auto quad3 = DirichletCharacter(3, {1});
  // oracle: exact residue-class sums of [2]_q sum (-q)^m chi(m) m^k (tests/oracles/oracles.py)
  CHECK(gen_euler_number(1, quad3, Rational(1, 2), 3) == Cyclotomic(1, Rational(-1)));
  CHECK(gen_euler_number(0, quad3, Rational(1, 2), 3) == Cyclotomic(1, Rational(-1)));
  CHECK(gen_euler_number(2, quad3, Rational(2, 5), 3) == Cyclotomic(1, Rational(-4634, 6859)));
  const auto quad5 = DirichletCharacter(5, {2});
  CHECK(gen_euler_number(3, quad5, Rational(1, 3), 5) == Cyclotomic(1, Rational(16564376, 13845841)));
  // classical (q = 1) limits, Abel-summed in the oracle
  const std::vector<Rational> classical = {-2, 0, 4, 0};
  for (std::size_t n = 0; n < classical.size(); ++n) CHECK(gen_euler_number(n, quad3, Rational(1), 3) == Cyclotomic(1, classical[n]));

  const auto trivial = DirichletCharacter::trivial(1);
  const Rational q(2, 9);
  for (std::size_t k = 1; k < 7; ++k) {
    CHECK(gen_euler_number(k, trivial, q, 1) == Cyclotomic(1, euler_number_q(k, q)));
    CHECK(gen_euler_number(k, trivial, q, 1) == Cyclotomic(1, -q * euler_poly_q(k, Rational(1), q)));
  }
  CHECK(gen_euler_number(0, trivial, q, 1) == Cyclotomic(1, 1 - (1 + q)));

  CHECK_THROWS_AS(gen_euler_number(1, quad3, q, 6), ParameterError);
  CHECK_THROWS_AS(gen_euler_number(1, quad3, q, 5), ParameterError);
}

TEST_CASE("distribution relation: independence of F") {
  for (long d : {1L, 3L, 5L, 9L, 15L}) {
    for (const auto& chi : enumerate_characters(d)) {
      for (const Rational& q : {Rational(1, 2), Rational(-3, 7), Rational(1)}) {
        for (std::size_t n = 0; n <= 6; ++n) {
          const Cyclotomic base = gen_euler_number(n, chi, q, d);
          CHECK(gen_euler_number(n, chi, q, 3 * d) == base);
          if (d <= 5) CHECK(gen_euler_number(n, chi, q, 5 * d) == base);
        }
      }
    }
  }
}

TEST_CASE("gen_euler_number across domains") {
  const auto quad3 = DirichletCharacter(3, {1});
  const Complex z = gen_euler_number(2, quad3, Complex(0.4, 0.0), 3);
  CHECK(std::abs(z.real() - Rational(-4634, 6859).get_d()) < 1e-12);
  const Padic v = gen_euler_number(2, quad3, Padic::from_rational(Rational(2, 5), 11, 12), 3);
  CHECK(congruent(v, Rational(-4634, 6859), 12));
  // 1 + q = 7/5 is not a 7-adic unit: digits are lost, and the result says so.
  const Padic lossy = gen_euler_number(2, quad3, Padic::from_rational(Rational(2, 5), 7, 12), 3);
  CHECK(lossy.absolute_precision() < 12);
  CHECK(congruent(lossy, Rational(-4634, 6859), lossy.absolute_precision()));
}
