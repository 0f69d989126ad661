// Acceptance criteria runner: one PASS/FAIL line per criterion, exit 1 if any fails.
#include "qeuler/euler.hpp"
#include "qeuler/fermionic.hpp"
#include "qeuler/padic_l.hpp"
#include "qeuler/zeta.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#ifndef QEULER_CLI_PATH
#error "QEULER_CLI_PATH must name the qeuler executable"
#endif

using namespace qeuler;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::vector<DirichletCharacter> characters_mod_3_and_5() {
  auto out = enumerate_characters(3);
  for (auto& chi : enumerate_characters(5)) out.push_back(chi);
  return out;
}

std::vector<DirichletCharacter> admissible_characters(long p) {
  std::vector<DirichletCharacter> out = {DirichletCharacter::trivial(1)};
  for (auto& chi : characters_mod_3_and_5())
    if ((p - 1) % chi.order() == 0) out.push_back(chi);
  return out;
}

Rational random_q(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 40);
  for (;;) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (q != 0 && q != -1) return q;
  }
}

Rational ppow(const Rational& q, long e) { return rpow(q, e); }

Outcome classical_anchor() {
  const std::array<Rational, 6> expected = {Rational(1), Rational(-1, 2), Rational(0), Rational(1, 4), Rational(0), Rational(-1, 2)};
  Outcome out;
  for (std::size_t n = 0; n < expected.size(); ++n)
    if (euler_number_q(n, Rational(1)) != expected[n]) {
      out.pass = false;
      out.detail = "E_" + std::to_string(n) + " = " + euler_number_q(n, Rational(1)).get_str();
      return out;
    }
  out.detail = "E_0..E_5 = 1, -1/2, 0, 1/4, 0, -1/2";
  return out;
}

// q^n E_{k,q}(n) + (-1)^(n-1) E_{k,q} = [2]_q sum_{l<n} (-1)^(n-1-l) q^l l^k
Outcome functional_equation() {
  std::mt19937_64 rng(42);
  long checked = 0;
  for (int i = 0; i < 50; ++i) {
    const Rational q = random_q(rng);
    EulerTable<Rational> table(q);
    for (long n = 1; n <= 6; ++n)
      for (std::size_t k = 0; k <= 8; ++k) {
        const Rational lhs = ppow(q, n) * table.poly(k, Rational(n)) + (n % 2 == 1 ? 1 : -1) * table[k];
        Rational rhs = 0;
        for (long l = 0; l < n; ++l) {
          const Rational term = ppow(q, l) * Rational(ipow(l, k));
          rhs += (n - 1 - l) % 2 == 0 ? term : Rational(-term);
        }
        rhs *= 1 + q;
        ++checked;
        if (lhs != rhs) return {false, "nonzero residual at q=" + q.get_str() + " n=" + std::to_string(n) + " k=" + std::to_string(k)};
      }
  }
  return {true, std::to_string(checked) + " exact residuals, all 0"};
}

Outcome measure_laws() {
  long polys = 0;
  for (long p : {3L, 5L})
    for (long level = 0; level <= 4; ++level) {
      for (long d : {1L, 3L}) {
        long size = d;
        for (long i = 0; i < level; ++i) size *= p;
        for (long a = 0; a < size; ++a, ++polys)
          if (!is_zero_poly(measure_additivity_residual(p, d, level, a)))
            return {false, "additivity fails at p=" + std::to_string(p) + " N=" + std::to_string(level) + " a=" + std::to_string(a)};
      }
      const long size = static_cast<long>(ipow(p, static_cast<unsigned long>(level)).get_si());
      for (long a = 0; a < size; ++a, ++polys)
        if (!is_zero_poly(measure_scaling_residual(p, level, a)))
          return {false, "scaling fails at p=" + std::to_string(p) + " N=" + std::to_string(level) + " a=" + std::to_string(a)};
    }
  return {true, std::to_string(polys) + " residual polynomials identically 0"};
}

Outcome witt_convergence() {
  const long m = 12;
  long checked = 0;
  for (long p : {3L, 5L})
    for (const Rational& q : {Rational(1), Rational(1 + p)}) {
      const auto ctx = padic_measure(Padic::from_rational(q, p, m));
      for (unsigned n = 0; n <= 6; ++n) {
        const Padic exact = Padic::from_rational(euler_number_q(n, q), p, m);
        for (long level = 0; level <= 6; ++level, ++checked) {
          const long got = agreement(riemann_sum(Integrand<Padic>::monomial(n), level, ctx), exact);
          if (got < std::min(level - 2, m))
            return {false, "v_p = " + std::to_string(got) + " at p=" + std::to_string(p) + " q=" + q.get_str() +
                               " n=" + std::to_string(n) + " N=" + std::to_string(level)};
        }
      }
    }
  return {true, std::to_string(checked) + " level sums with v_p >= N-2"};
}

Outcome hurwitz_interpolation() {
  double worst = 0.0;
  long checked = 0;
  for (const Rational& q : {Rational(1, 10), Rational(1, 2), Rational(9, 10)}) {
    const Complex qf(q.get_d(), 0.0);
    for (const Rational& x : {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)})
      for (unsigned n = 0; n <= 8; ++n, ++checked) {
        const double err = std::abs(zeta_qE(-static_cast<double>(n), x.get_d(), qf).value - euler_poly_q(n, x, q).get_d());
        worst = std::max(worst, err);
        if (!(err < 1e-9)) return {false, "error " + std::to_string(err) + " at q=" + q.get_str() + " x=" + x.get_str() + " n=" + std::to_string(n)};
      }
    for (unsigned n = 0; n <= 8; ++n, ++checked) {
      Rational expected = euler_number_q(n, q);
      if (n == 0) expected -= 1 + q;  // the series over n >= 1 misses [2]_q at s = 0
      const double err = std::abs(zeta_qE_at(-static_cast<double>(n), qf).value - expected.get_d());
      worst = std::max(worst, err);
      if (!(err < 1e-9)) return {false, "n>=1 series error " + std::to_string(err) + " at q=" + q.get_str() + " n=" + std::to_string(n)};
    }
  }
  std::ostringstream s;
  s << checked << " points, max error " << worst << ", n=0 offset [2]_q confirmed";
  return {true, s.str()};
}

Outcome l_function_values() {
  double worst = 0.0;
  long checked = 0;
  for (const Rational& q : {Rational(1, 5), Rational(3, 5)}) {
    const Complex qf(q.get_d(), 0.0);
    for (const auto& chi : characters_mod_3_and_5())
      for (unsigned n = 0; n <= 6; ++n, checked += 2) {
        const Complex s(-static_cast<double>(n), 0.0);
        const Complex exact = gen_euler_number(n, chi, q, chi.modulus()).to_complex();
        const Complex series = l_q_series(s, chi, qf).value;
        Complex partial = 0.0;
        for (long a = 1; a < chi.modulus(); ++a) partial += chi(a).to_complex() * partial_zeta_Hq(s, a, chi.modulus(), qf).value;
        const double e1 = std::abs(series - exact), e2 = std::abs(partial - series);
        worst = std::max({worst, e1, e2});
        if (!(e1 < 1e-8) || !(e2 < 1e-8))
          return {false, "error at q=" + q.get_str() + " n=" + std::to_string(n) + " chi mod " + std::to_string(chi.modulus())};
      }
  }
  std::ostringstream s;
  s << checked << " comparisons, max error " << worst;
  return {true, s.str()};
}

Outcome distribution_relation() {
  std::mt19937_64 rng(7);
  std::vector<Rational> qs = {Rational(1), Rational(1, 2)};
  for (int i = 0; i < 3; ++i) qs.push_back(random_q(rng));
  long checked = 0;
  for (const Rational& q : qs)
    for (const auto& chi : characters_mod_3_and_5())
      for (unsigned n = 0; n <= 6; ++n, ++checked) {
        const long d = chi.modulus();
        if (!(gen_euler_number(n, chi, q, d) == gen_euler_number(n, chi, q, 3 * d)))
          return {false, "F=d and F=3d differ at q=" + q.get_str() + " n=" + std::to_string(n) + " d=" + std::to_string(d)};
      }
  return {true, std::to_string(checked) + " exact equalities"};
}

Outcome three_paths() {
  const long m = 12;
  long checked = 0;
  for (long p : {3L, 5L, 7L})
    for (const auto& chi : admissible_characters(p))
      for (const Rational& q : {Rational(1), Rational(1 + p)}) {
        const auto ctx = make_pl_context(chi, p, q, m);
        for (unsigned n = 1; n <= 5; ++n, ++checked) {
          const Padic series = l_pq(Padic::from_integer(-static_cast<long>(n), p, m), ctx).value;
          const Padic closed = thm7b_rhs(n, ctx).value;
          const Padic integral = thm7c_integral(n, ctx);
          const long worst = std::min({agreement(series, closed), agreement(series, integral), agreement(closed, integral)});
          if (worst < m - 2)
            return {false, "agreement " + std::to_string(worst) + " at p=" + std::to_string(p) + " q=" + q.get_str() + " n=" +
                               std::to_string(n) + " chi mod " + std::to_string(chi.modulus())};
        }
      }
  return {true, std::to_string(checked) + " triples pairwise congruent mod p^10"};
}

Outcome corollary8() {
  const long m = 12;
  gmp_randclass state(gmp_randinit_mt);
  state.seed(42);
  long checked = 0;
  for (long p : {3L, 5L, 7L}) {
    std::vector<Integer> points;
    for (int i = 0; i < 5; ++i) points.push_back(state.get_z_range(ipow(p, static_cast<unsigned long>(m))));
    for (const auto& chi : admissible_characters(p)) {
      const auto ctx = make_pl_context(chi, p, Rational(1), m);
      for (const Integer& s : points) {
        const Padic sp = Padic::from_integer(s, p, m);
        ++checked;
        if (agreement(corollary8_lp(sp, chi, p, m).value, l_pq(sp, ctx).value) < m - 2)
          return {false, "mismatch at p=" + std::to_string(p) + " s=" + s.get_str() + " chi mod " + std::to_string(chi.modulus())};
      }
    }
  }
  return {true, std::to_string(checked) + " points congruent mod p^10"};
}

std::pair<int, std::string> run_command(const std::string& command) {
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, output};
  std::array<char, 1 << 16> buffer{};
  std::size_t got;
  while ((got = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

Outcome determinism() {
  const std::string command = std::string("\"") + QEULER_CLI_PATH + "\" verify all --seed 42 2>/dev/null";
  const auto first = run_command(command);
  const auto second = run_command(command);
  if (first.first != 0 || second.first != 0)
    return {false, "exit codes " + std::to_string(first.first) + ", " + std::to_string(second.first)};
  if (first.second.empty()) return {false, "empty report"};
  if (first.second != second.second) return {false, "reports differ"};
  const auto lines = std::count(first.second.begin(), first.second.end(), '\n');
  return {true, std::to_string(lines) + " report lines, byte-identical, all passing"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "classical anchor", 1, classical_anchor},
      {2, "exact functional equation", 10, functional_equation},
      {3, "exact measure laws", 10, measure_laws},
      {4, "Witt convergence", 60, witt_convergence},
      {5, "Hurwitz-type zeta interpolation", 30, hurwitz_interpolation},
      {6, "l_q values and partial-zeta decomposition", 60, l_function_values},
      {7, "distribution relation", 30, distribution_relation},
      {8, "p-adic three-path agreement", 300, three_paths},
      {9, "q = 1 specialization", 60, corollary8},
      {10, "determinism of verify all --seed 42", 600, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.pass && seconds >= c.limit_seconds) {
      out.pass = false;
      out.detail += "; over the time limit";
    }
    failures += out.pass ? 0 : 1;
    std::printf("criterion %2d %s: %s (%s; %.2f s, limit %.0f s)\n", c.number, out.pass ? "PASS" : "FAIL", c.title.c_str(),
                out.detail.c_str(), seconds, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
