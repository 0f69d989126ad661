#include "qeuler/verify.hpp"

#include "qeuler/euler.hpp"
#include "qeuler/fermionic.hpp"
#include "qeuler/padic_l.hpp"
#include "qeuler/zeta.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <mutex>
#include <random>
#include <thread>

namespace qeuler {

namespace {

struct Entry {
  Identity id;
  std::string_view name;
  std::string_view formula;
};

constexpr Entry kEntries[] = {
    {Identity::thm1, "thm1", "(1/[p^N]_{-q}) sum_{x<p^N} x^n (-q)^x = E_{n,q} mod p^(N-2)"},
    {Identity::thm2, "thm2", "integral over X_d of chi(x) x^n dmu_{-q}(x) = E_{n,chi,q}"},
    {Identity::thm4, "thm4", "zeta_{q,E}(-n,x) = E_{n,q}(x); zeta_{q,E}(-n) = E_{n,q} (n >= 1), E_{0,q} - [2]_q (n = 0)"},
    {Identity::thm6, "thm6", "l_q(-n,chi) = E_{n,chi,q}"},
    {Identity::thm7b, "thm7b", "l_{p,q}(-n,chi) = E_{n,chi_n,q} - p^n chi_n(p) ([2]_q/[2]_{q^p}) E_{n,chi_n,q^p}"},
    {Identity::thm7c, "thm7c", "l_{p,q}(-n,chi) = integral over X^* of chi_n(x) x^n dmu_{-q}(x)"},
    {Identity::cor8, "cor8", "l_p(s,chi) with classical E_k = l_{p,q}(s,chi) at q = 1"},
    {Identity::eq9, "eq9", "q^n E_{k,q}(n) + (-1)^(n-1) E_{k,q} = [2]_q sum_{l<n} (-1)^(n-1-l) q^l l^k"},
    {Identity::eq21, "eq21", "l_q(s,chi) = sum_{a=1}^{F} chi(a) H_q(s,a|F)"},
    {Identity::eq22, "eq22", "H_q(-n,a|F) = (-1)^a q^a F^n ([2]_q/[2]_{q^F}) E_{n,q^F}(a/F)"},
    {Identity::eq24prime, "eq24prime",
     "(-1)^a q^a a^n ([2]_q/[2]_{q^F}) sum_{k<=n} C(n,k) (F/a)^k E_{k,q^F} = (-1)^a q^a F^n ([2]_q/[2]_{q^F}) E_{n,q^F}(a/F)"},
    {Identity::measure_additivity, "measure_additivity", "mu_{-q}(a + d p^N) = sum_{i<p} mu_{-q}(a + i d p^N + d p^(N+1))"},
    {Identity::measure_scaling, "measure_scaling", "mu_{-q}(p a + p^(N+1)) = ([2]_q/[2]_{q^p}) mu_{-q^p}(a + p^N)"},
    {Identity::distribution_relation, "distribution_relation", "E_{n,chi,q} by the distribution sum with F = d equals F = 3d"},
};

constexpr std::string_view kPadicEmbedding = "zeta_m -> teichmuller(g)^((p-1)/m), g least primitive root mod p^2";

const Entry& entry(Identity id) {
  for (const auto& e : kEntries)
    if (e.id == id) return e;
  throw ParameterError("unknown identity");
}

std::string_view check_name(CheckKind kind) {
  switch (kind) {
    case CheckKind::exact: return "exact";
    case CheckKind::tolerance: return "tolerance";
    case CheckKind::congruence: return "congruence";
  }
  return "";
}

void check_exact(VerificationReport& r, const Rational& lhs, const Rational& rhs) {
  r.domain = "rational";
  r.lhs = to_json(lhs);
  r.rhs = to_json(rhs);
  r.check = CheckKind::exact;
  r.residual = to_json(Rational(lhs - rhs));
  r.threshold = nullptr;
  r.pass = lhs == rhs;
}

void check_exact(VerificationReport& r, const Cyclotomic& lhs, const Cyclotomic& rhs) {
  r.domain = "cyclotomic";
  r.lhs = to_json(lhs);
  r.rhs = to_json(rhs);
  r.check = CheckKind::exact;
  r.residual = to_json(lhs - rhs);
  r.threshold = nullptr;
  r.pass = lhs == rhs;
}

void check_float(VerificationReport& r, Complex lhs, Complex rhs, double tol) {
  r.domain = "complex";
  r.lhs = to_json(lhs);
  r.rhs = to_json(rhs);
  r.check = CheckKind::tolerance;
  const double diff = std::abs(lhs - rhs);
  r.residual = diff;
  r.threshold = tol;
  r.pass = std::isfinite(diff) && diff < tol;
}

void check_congruence(VerificationReport& r, const Padic& lhs, const Padic& rhs, long required) {
  r.domain = "padic";
  r.lhs = to_json(lhs);
  r.rhs = to_json(rhs);
  r.check = CheckKind::congruence;
  const long depth = agreement(lhs, rhs);
  r.residual = depth;
  r.threshold = required;
  r.pass = depth >= required;
}

Json q_json(const Rational& q) { return q.get_str(); }
Json q_json(Complex q) {
  if (q.imag() == 0.0) return q.real();
  return Json::array({q.real(), q.imag()});
}

Rational exact_of(double x) { return Rational(x); }

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 30);
  for (;;) {
    const Rational q = make_rational(num(rng), den(rng));
    if (q != -1) return q;
  }
}

std::vector<DirichletCharacter> characters_mod_3_and_5() {
  auto out = enumerate_characters(3);
  for (auto& chi : enumerate_characters(5)) out.push_back(chi);
  return out;
}

std::vector<DirichletCharacter> padic_characters(long p) {
  std::vector<DirichletCharacter> out = {DirichletCharacter::trivial(1)};
  for (const auto& chi : characters_mod_3_and_5())
    if ((p - 1) % chi.order() == 0) out.push_back(chi);
  return out;
}

struct Task {
  Identity id;
  std::function<void(VerificationReport&)> run;
};

// Resolves sweep ranges against the configuration overrides.
class Planner {
 public:
  explicit Planner(const RunConfig& cfg) : cfg_(cfg) {
    if (cfg.prec < 3) throw ParameterError("precision must be at least 3");
    if (cfg.p && (*cfg.p < 3 || !is_prime(*cfg.p))) throw ParameterError("--p must be an odd prime");
    if (cfg.tol && !(*cfg.tol > 0)) throw ParameterError("tolerance must be positive");
    if (cfg.max_level < 2) throw ParameterError("max level must be at least 2");
    if (cfg.max_terms < 1) throw ParameterError("max terms must be positive");
  }

  std::vector<long> primes(std::vector<long> defaults) const {
    if (cfg_.p) return {*cfg_.p};
    return defaults;
  }

  std::optional<Rational> exact_q() const {
    if (!cfg_.q) return std::nullopt;
    const auto q = QParameter::parse(*cfg_.q);
    if (!q.is_exact()) throw ParameterError("this identity needs an exact rational q");
    return q.as_exact();
  }

  std::vector<Complex> float_qs(std::vector<Complex> defaults) const {
    if (!cfg_.q) return defaults;
    const auto q = QParameter::parse(*cfg_.q);
    Complex value;
    if (q.is_exact())
      value = Complex(q.as_exact().get_d(), 0.0);
    else if (q.is_float())
      value = q.as_float();
    else
      throw ParameterError("this identity needs a float q");
    if (!(std::abs(value) < 1.0)) throw ParameterError("this identity needs |q| < 1");
    return {value};
  }

  std::vector<Rational> padic_qs(long p, const std::vector<Rational>& defaults) const {
    const auto given = exact_q();
    if (!given) return defaults;
    if (*given != 1 && valuation(Rational(1 - *given), p) < 1) throw ParameterError("q must satisfy |1 - q|_p < 1");
    return {*given};
  }

  std::mt19937_64 rng(Identity id) const {
    std::seed_seq seq{static_cast<std::uint32_t>(cfg_.seed), static_cast<std::uint32_t>(cfg_.seed >> 32),
                      static_cast<std::uint32_t>(id)};
    return std::mt19937_64(seq);
  }

  double tol(double fallback) const { return cfg_.tol.value_or(fallback); }
  long prec() const { return cfg_.prec; }
  long max_level() const { return cfg_.max_level; }
  SeriesBudget budget() const {
    SeriesBudget b;
    b.max_terms = cfg_.max_terms;
    return b;
  }

 private:
  const RunConfig& cfg_;
};

void plan_thm1(const Planner& plan, std::vector<Task>& out) {
  const long m = plan.prec();
  for (long p : plan.primes({3, 5}))
    for (const Rational& q : plan.padic_qs(p, {Rational(1), Rational(1 + p)}))
      for (unsigned n = 0; n <= 6; ++n)
        for (long level = 1; level <= 6; ++level)
          out.push_back({Identity::thm1, [=](VerificationReport& r) {
                           r.params = {{"p", p}, {"q", q_json(q)}, {"n", n}, {"level", level}};
                           const auto ctx = padic_measure(Padic::from_rational(q, p, m));
                           const Padic lhs = riemann_sum(Integrand<Padic>::monomial(n), level, ctx);
                           const Padic rhs = Padic::from_rational(euler_number_q(n, q), p, m);
                           check_congruence(r, lhs, rhs, std::min(level - 2, m));
                         }});
}

void plan_thm2(const Planner& plan, std::vector<Task>& out) {
  const long m = plan.prec(), max_level = plan.max_level();
  for (long p : plan.primes({5, 7})) {
    std::vector<DirichletCharacter> chars = {DirichletCharacter::trivial(1)};
    for (const auto& chi : characters_mod_3_and_5())
      if ((p - 1) % chi.order() == 0) chars.push_back(chi);
    for (const auto& chi : chars)
      for (const Rational& q : plan.padic_qs(p, {Rational(1), Rational(1 + p)}))
        // the trivial character of modulus 1 is checked from n = 1: its distribution sum at n = 0 is -q
        for (unsigned n = chi.modulus() == 1 ? 1 : 0; n <= 5; ++n)
          out.push_back({Identity::thm2, [=](VerificationReport& r) {
                           r.params = {{"p", p}, {"q", q_json(q)}, {"n", n}, {"chi", to_json(chi)}};
                           const auto ctx = padic_measure(Padic::from_rational(q, p, m), chi.modulus());
                           const Padic lhs = witt_gen_euler(n, chi, ctx, max_level);
                           const Padic rhs = embed_padic(gen_euler_number(n, chi, q, chi.modulus()), p, m);
                           check_congruence(r, lhs, rhs, m - 2);
                         }});
  }
}

Complex euler_poly_value(unsigned n, const Rational& x, Complex q) {
  if (q.imag() == 0.0) return euler_poly_q(n, x, exact_of(q.real())).get_d();
  return euler_poly_q<Complex>(n, x.get_d(), q);
}

void plan_thm4(const Planner& plan, std::vector<Task>& out) {
  const double tol = plan.tol(1e-9);
  const auto budget = plan.budget();
  for (Complex q : plan.float_qs({0.1, 0.5, 0.9})) {
    for (const Rational& x : {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)})
      for (unsigned n = 0; n <= 8; ++n)
        out.push_back({Identity::thm4, [=](VerificationReport& r) {
                         r.params = {{"series", "hurwitz"}, {"q", q_json(q)}, {"x", x.get_str()}, {"n", n}};
                         const Complex lhs = zeta_qE(-static_cast<double>(n), x.get_d(), q, budget).value;
                         check_float(r, lhs, euler_poly_value(n, x, q), tol);
                       }});
    for (unsigned n = 0; n <= 8; ++n)
      out.push_back({Identity::thm4, [=](VerificationReport& r) {
                       r.params = {{"series", "n>=1"}, {"q", q_json(q)}, {"n", n}};
                       const Complex lhs = zeta_qE_at(-static_cast<double>(n), q, budget).value;
                       Complex rhs = euler_poly_value(n, Rational(0), q);
                       if (n == 0) {
                         rhs -= 1.0 + q;
                         r.params["shift"] = "[2]_q";
                       }
                       check_float(r, lhs, rhs, tol);
                     }});
  }
}

Complex gen_euler_value(unsigned n, const DirichletCharacter& chi, Complex q) {
  if (q.imag() == 0.0) return gen_euler_number(n, chi, exact_of(q.real()), chi.modulus()).to_complex();
  return gen_euler_number(n, chi, q, chi.modulus());
}

void plan_thm6(const Planner& plan, std::vector<Task>& out) {
  const double tol = plan.tol(1e-8);
  const auto budget = plan.budget();
  for (Complex q : plan.float_qs({0.2, 0.6}))
    for (const auto& chi : characters_mod_3_and_5())
      for (unsigned n = 0; n <= 6; ++n)
        out.push_back({Identity::thm6, [=](VerificationReport& r) {
                         r.params = {{"q", q_json(q)}, {"n", n}, {"chi", to_json(chi)}};
                         const Complex lhs = l_q_series(-static_cast<double>(n), chi, q, budget).value;
                         check_float(r, lhs, gen_euler_value(n, chi, q), tol);
                       }});
}

void plan_eq21(const Planner& plan, std::vector<Task>& out) {
  const double tol = plan.tol(1e-8);
  const auto budget = plan.budget();
  auto rng = plan.rng(Identity::eq21);
  std::uniform_real_distribution<double> unit(-3.0, 3.0);
  std::vector<Complex> points;
  while (points.size() < 10) {
    const Complex s(unit(rng), unit(rng));
    if (std::abs(s) <= 3.0) points.push_back(s);
  }
  for (Complex q : plan.float_qs({0.6}))
    for (Complex s : points)
      for (const auto& chi : characters_mod_3_and_5())
        out.push_back({Identity::eq21, [=](VerificationReport& r) {
                         const long F = chi.modulus();
                         r.params = {{"q", q_json(q)}, {"s", Json::array({s.real(), s.imag()})}, {"F", F}, {"chi", to_json(chi)}};
                         Complex lhs = 0.0;
                         for (long a = 1; a < F; ++a) lhs += chi(a).to_complex() * partial_zeta_Hq(s, a, F, q, budget).value;
                         check_float(r, lhs, l_q_series(s, chi, q, budget).value, tol);
                       }});
}

void plan_eq22(const Planner& plan, std::vector<Task>& out) {
  const double tol = plan.tol(1e-9);
  const auto budget = plan.budget();
  for (Complex q : plan.float_qs({0.4}))
    for (long F : {3L, 5L})
      for (long a = 1; a < F; ++a)
        for (unsigned n = 0; n <= 6; ++n)
          for (auto mode : {PartialZetaMode::closed, PartialZetaMode::direct})
            out.push_back({Identity::eq22, [=](VerificationReport& r) {
                             r.params = {{"q", q_json(q)}, {"F", F}, {"a", a}, {"n", n},
                                         {"mode", mode == PartialZetaMode::closed ? "closed" : "direct"}};
                             const Complex lhs = partial_zeta_Hq(-static_cast<double>(n), a, F, q, budget, mode).value;
                             Complex rhs;
                             if (q.imag() == 0.0)
                               rhs = partial_zeta_negative(n, a, F, exact_of(q.real()), Domain<Rational>{}, PartialForm::euler_poly).get_d();
                             else
                               rhs = partial_zeta_negative(n, a, F, q, Domain<Complex>{}, PartialForm::euler_poly);
                             check_float(r, lhs, rhs, tol);
                           }});
}

void plan_eq24prime(const Planner& plan, std::vector<Task>& out) {
  std::vector<Rational> qs;
  if (auto q = plan.exact_q()) {
    qs.push_back(*q);
  } else {
    auto rng = plan.rng(Identity::eq24prime);
    for (int i = 0; i < 3; ++i) qs.push_back(random_rational(rng));
  }
  for (const Rational& q : qs)
    for (long F : {3L, 5L, 15L})
      for (unsigned n = 0; n <= 6; ++n)
        out.push_back({Identity::eq24prime, [=](VerificationReport& r) {
                         r.params = {{"q", q_json(q)}, {"F", F}, {"n", n}, {"a", "1..F-1"}};
                         std::optional<std::pair<Rational, Rational>> shown;
                         for (long a = 1; a < F; ++a) {
                           const Rational lhs = partial_zeta_negative(n, a, F, q, Domain<Rational>{}, PartialForm::binomial_fa);
                           const Rational rhs = partial_zeta_negative(n, a, F, q, Domain<Rational>{}, PartialForm::euler_poly);
                           if (!shown || lhs != rhs) {
                             shown = {lhs, rhs};
                             r.params["shown_a"] = a;
                             if (lhs != rhs) break;
                           }
                         }
                         check_exact(r, shown->first, shown->second);
                       }});
}

void plan_eq9(const Planner& plan, std::vector<Task>& out) {
  std::vector<Rational> qs;
  if (auto q = plan.exact_q()) {
    if (*q == -1) throw ParameterError("q = -1 is not admissible");
    qs.push_back(*q);
  } else {
    auto rng = plan.rng(Identity::eq9);
    for (int i = 0; i < 50; ++i) qs.push_back(random_rational(rng));
  }
  for (const Rational& q : qs)
    out.push_back({Identity::eq9, [=](VerificationReport& r) {
                     r.params = {{"q", q_json(q)}, {"n", "1..6"}, {"k", "0..8"}};
                     long bad_n = 6, bad_k = 8;
                     for (long n = 1; n <= 6; ++n)
                       for (long k = 0; k <= 8; ++k)
                         if (translation_residual(n, k, q) != 0 && bad_n == 6 && bad_k == 8) {
                           bad_n = n;
                           bad_k = k;
                         }
                     EulerTable<Rational> table(q);
                     const auto k = static_cast<std::size_t>(bad_k);
                     const Rational lhs = rpow(q, bad_n) * table.poly(k, Rational(bad_n)) + (bad_n % 2 == 1 ? 1 : -1) * table[k];
                     Rational rhs = 0;
                     for (long l = 0; l < bad_n; ++l) {
                       const Rational term = rpow(q, l) * Rational(ipow(l, static_cast<unsigned long>(bad_k)));
                       rhs += (bad_n - 1 - l) % 2 == 0 ? term : Rational(-term);
                     }
                     rhs *= 1 + q;
                     r.params["shown"] = {{"n", bad_n}, {"k", bad_k}};
                     check_exact(r, lhs, rhs);
                   }});
}

long level_size(long d, long p, long level) {
  long out = d;
  for (long i = 0; i < level; ++i) out *= p;
  return out;
}

void plan_measure(const Planner& plan, Identity id, std::vector<Task>& out) {
  auto rng = plan.rng(id);
  const auto given = plan.exact_q();
  if (given && *given == -1) throw ParameterError("q = -1 is not admissible");
  const bool additive = id == Identity::measure_additivity;
  for (long p : plan.primes({3, 5}))
    for (long d : additive ? std::vector<long>{1, 3} : std::vector<long>{1})
      for (long level = 0; level <= 4; ++level) {
        const long size = level_size(d, p, level);
        std::uniform_int_distribution<long> pick(0, size - 1);
        const long a = pick(rng);
        const Rational q = given ? *given : random_rational(rng);
        out.push_back({id, [=](VerificationReport& r) {
                         r.params = {{"p", p}, {"d", d}, {"level", level}, {"q", q_json(q)}, {"a", a}};
                         long nonzero = 0;
                         for (long b = 0; b < size; ++b) {
                           const IntPoly poly = additive ? measure_additivity_residual(p, d, level, b) : measure_scaling_residual(p, level, b);
                           if (!is_zero_poly(poly)) ++nonzero;
                         }
                         Rational lhs, rhs;
                         const auto ctx = exact_measure(p, q, d);
                         if (additive) {
                           lhs = mu_value(Integer(a), level, ctx);
                           for (long i = 0; i < p; ++i) rhs += mu_value(Integer(a + i * size), level + 1, ctx);
                         } else {
                           const Rational qp = rpow(q, p);
                           lhs = mu_value(Integer(p * a), level + 1, ctx);
                           rhs = (1 + q) / (1 + qp) * mu_value(Integer(a), level, exact_measure(p, qp));
                         }
                         check_exact(r, lhs, rhs);
                         r.domain = "polynomial";
                         r.params["polynomials_checked"] = size;
                         r.params["nonzero_polynomials"] = nonzero;
                         r.pass = r.pass && nonzero == 0;
                       }});
      }
}

void plan_distribution(const Planner& plan, std::vector<Task>& out) {
  auto rng = plan.rng(Identity::distribution_relation);
  const auto given = plan.exact_q();
  for (const auto& chi : characters_mod_3_and_5())
    for (unsigned n = 0; n <= 6; ++n) {
      Rational q = given ? *given : random_rational(rng);
      if (q == -1) throw ParameterError("q = -1 is not admissible");
      out.push_back({Identity::distribution_relation, [=](VerificationReport& r) {
                       const long d = chi.modulus();
                       r.params = {{"q", q_json(q)}, {"n", n}, {"chi", to_json(chi)}, {"F", Json::array({d, 3 * d})}};
                       check_exact(r, gen_euler_number(n, chi, q, d), gen_euler_number(n, chi, q, 3 * d));
                     }});
    }
}

void plan_thm7(const Planner& plan, Identity id, std::vector<Task>& out) {
  const long m = plan.prec(), max_level = plan.max_level();
  for (long p : plan.primes({3, 5, 7}))
    for (const auto& chi : padic_characters(p))
      for (const Rational& q : plan.padic_qs(p, {Rational(1), Rational(1 + p)}))
        for (unsigned n = 1; n <= 5; ++n)
          out.push_back({id, [=](VerificationReport& r) {
                           const auto ctx = make_pl_context(chi, p, q, m);
                           r.params = {{"p", p}, {"q", q_json(q)}, {"n", n}, {"F", ctx.F}, {"K", ctx.truncation}, {"chi", to_json(chi)}};
                           const auto series = l_pq(Padic::from_integer(-static_cast<long>(n), p, m), ctx);
                           r.params["slack"] = series.slack;
                           const Padic rhs = id == Identity::thm7b ? thm7b_rhs(n, ctx).value : thm7c_integral(n, ctx, max_level);
                           check_congruence(r, series.value, rhs, m - 2);
                         }});
}

void plan_cor8(const Planner& plan, std::vector<Task>& out) {
  const long m = plan.prec();
  auto rng = plan.rng(Identity::cor8);
  for (long p : plan.primes({3, 5, 7})) {
    const Integer modulus = ipow(p, static_cast<unsigned long>(m));
    std::vector<Integer> points;
    gmp_randclass state(gmp_randinit_mt);
    state.seed(static_cast<unsigned long>(rng()));
    for (int i = 0; i < 5; ++i) points.push_back(state.get_z_range(modulus));
    for (const auto& chi : padic_characters(p))
      for (const Integer& s : points)
        out.push_back({Identity::cor8, [=](VerificationReport& r) {
                         r.params = {{"p", p}, {"s", s.get_str()}, {"chi", to_json(chi)}};
                         const Padic sp = Padic::from_integer(s, p, m);
                         const auto ctx = make_pl_context(chi, p, Rational(1), m);
                         check_congruence(r, corollary8_lp(sp, chi, p, m).value, l_pq(sp, ctx).value, m - 2);
                       }});
  }
}

std::vector<Task> plan_tasks(const std::vector<Identity>& identities, const RunConfig& config) {
  const Planner plan(config);
  std::vector<Task> out;
  for (Identity id : identities) {
    switch (id) {
      case Identity::thm1: plan_thm1(plan, out); break;
      case Identity::thm2: plan_thm2(plan, out); break;
      case Identity::thm4: plan_thm4(plan, out); break;
      case Identity::thm6: plan_thm6(plan, out); break;
      case Identity::thm7b:
      case Identity::thm7c: plan_thm7(plan, id, out); break;
      case Identity::cor8: plan_cor8(plan, out); break;
      case Identity::eq9: plan_eq9(plan, out); break;
      case Identity::eq21: plan_eq21(plan, out); break;
      case Identity::eq22: plan_eq22(plan, out); break;
      case Identity::eq24prime: plan_eq24prime(plan, out); break;
      case Identity::measure_additivity:
      case Identity::measure_scaling: plan_measure(plan, id, out); break;
      case Identity::distribution_relation: plan_distribution(plan, out); break;
    }
  }
  return out;
}

std::string csv_quote(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids = [] {
    std::vector<Identity> out;
    for (const auto& e : kEntries) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string_view identity_name(Identity id) { return entry(id).name; }
std::string_view identity_formula(Identity id) { return entry(id).formula; }

std::optional<Identity> parse_identity(std::string_view name) {
  for (const auto& e : kEntries)
    if (e.name == name) return e.id;
  return std::nullopt;
}

Json report_to_json(const VerificationReport& r, const RunConfig& config) {
  Json out;
  out["index"] = r.index;
  out["identity"] = identity_name(r.identity);
  out["formula"] = identity_formula(r.identity);
  out["domain"] = r.domain;
  out["params"] = r.params;
  out["lhs"] = r.lhs;
  out["rhs"] = r.rhs;
  out["check"] = check_name(r.check);
  out["residual"] = r.residual;
  out["threshold"] = r.threshold;
  out["status"] = r.pass ? "pass" : "fail";
  if (!r.error.empty()) out["error"] = r.error;
  if (r.domain == "padic") {
    out["precision"] = config.prec;
    out["embedding"] = kPadicEmbedding;
  } else if (r.domain == "complex") {
    out["embedding"] = kComplexEmbedding;
  }
  out["seed"] = config.seed;
  out["sum_convention"] = kSumConvention;
  if (config.timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

std::string report_csv_header() { return "index,identity,domain,check,residual,threshold,status,seed,params"; }

std::string report_to_csv(const VerificationReport& r, const RunConfig& config) {
  std::string row = std::to_string(r.index) + "," + std::string(identity_name(r.identity)) + "," + r.domain + "," +
                    std::string(check_name(r.check)) + "," + csv_quote(r.residual.dump()) + "," +
                    csv_quote(r.threshold.dump()) + "," + (r.pass ? "pass" : "fail") + "," + std::to_string(config.seed) +
                    "," + csv_quote(r.params.dump());
  if (config.timing) row += "," + std::to_string(r.elapsed_ms);
  return row;
}

VerificationSummary run_verification(const std::vector<Identity>& identities, const RunConfig& config,
                                     const std::function<void(const VerificationReport&)>& sink) {
  const auto tasks = plan_tasks(identities, config);
  std::vector<std::optional<VerificationReport>> done(tasks.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      VerificationReport report;
      report.index = i;
      report.identity = tasks[i].id;
      const auto start = std::chrono::steady_clock::now();
      try {
        tasks[i].run(report);
      } catch (const std::exception& e) {
        report.pass = false;
        report.error = e.what();
      }
      report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      {
        std::lock_guard lock(mutex);
        done[i] = std::move(report);
      }
      ready.notify_one();
    }
  };

  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);

  VerificationSummary summary;
  summary.total = tasks.size();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    VerificationReport report;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return done[i].has_value(); });
      report = std::move(*done[i]);
      done[i].reset();
    }
    if (report.pass) ++summary.passed;
    sink(report);
  }
  for (auto& t : pool) t.join();
  return summary;
}

}  // namespace qeuler
