#include "qeuler/zeta.hpp"

#include <quadmath.h>

#include <cmath>
#include <limits>
#include <vector>

namespace qeuler {

namespace {

struct Quad {
  __float128 re = 0, im = 0;
};

Quad operator+(Quad a, Quad b) { return {a.re + b.re, a.im + b.im}; }
Quad operator*(Quad a, Quad b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Quad to_quad(Complex z) { return {z.real(), z.imag()}; }

// c * sum_{j>=0} w[j mod P] z^j (alpha + beta j)^(-s)
struct SeriesSpec {
  Complex prefactor;
  Complex ratio;
  double alpha;
  double beta;
  std::vector<Complex> weights;  // empty: all ones
};

double tail_bound(const SeriesSpec& spec, double sigma, long n) {
  const double abs_c = std::abs(spec.prefactor);
  const double abs_z = std::abs(spec.ratio);
  if (abs_c == 0.0 || abs_z == 0.0) return 0.0;
  const double base = spec.alpha + spec.beta * static_cast<double>(n);
  const double grow = sigma > 0 ? std::pow((base + spec.beta) / base, sigma) : 1.0;
  const double rho = abs_z * grow;
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  const double log_bound = std::log(abs_c) + static_cast<double>(n) * std::log(abs_z) + sigma * std::log(base) - std::log1p(-rho);
  return std::exp(log_bound) * (1.0 + 1e-9);
}

SeriesResult sum_series(const SeriesSpec& spec, Complex s, const SeriesBudget& budget) {
  if (!(budget.tolerance > 0)) throw ParameterError("tolerance must be positive");
  if (budget.max_terms < 1) throw ParameterError("max_terms must be positive");
  if (!(std::abs(spec.ratio) < 1.0)) throw DomainError("series needs |q| < 1");
  const double sigma = -s.real();
  const bool integer_s = s.imag() == 0.0 && std::nearbyint(s.real()) == s.real() && std::abs(s.real()) <= 256;
  const long k = integer_s ? static_cast<long>(-s.real()) : 0;
  const __float128 sr = s.real(), si = s.imag();
  const Quad z = to_quad(spec.ratio);
  std::vector<Quad> weights;
  for (const auto& w : spec.weights) weights.push_back(to_quad(w));

  Quad total, z_pow{1, 0};
  const long limit = budget.fixed_terms > 0 ? budget.fixed_terms : budget.max_terms;
  long j = 0;
  double bound = std::numeric_limits<double>::infinity();
  while (j < limit) {
    const __float128 base = static_cast<__float128>(spec.alpha) + static_cast<__float128>(spec.beta) * j;
    Quad term;
    if (integer_s) {
      __float128 m = 1;
      for (long i = 0; i < std::labs(k); ++i) m *= base;
      if (k < 0) m = 1 / m;
      term = {m, 0};
    } else {
      const __float128 lg = logq(base);
      const __float128 mag = expq(-sr * lg);
      term = {mag * cosq(-si * lg), mag * sinq(-si * lg)};
    }
    term = term * z_pow;
    if (!weights.empty()) term = term * weights[static_cast<std::size_t>(j) % weights.size()];
    total = total + term;
    z_pow = z_pow * z;
    ++j;
    if (budget.fixed_terms == 0 && (j % 8 == 0 || std::abs(spec.ratio) == 0.0)) {
      bound = tail_bound(spec, sigma, j);
      if (bound < budget.tolerance) break;
    }
  }
  bound = tail_bound(spec, sigma, j);
  const Quad value = total * to_quad(spec.prefactor);
  const Complex out(static_cast<double>(value.re), static_cast<double>(value.im));
  if (budget.fixed_terms == 0 && !(bound < budget.tolerance)) throw BudgetExhausted(out, bound, j);
  return {out, bound, j};
}

Complex complex_pow(Complex z, long e) {
  Complex out(1.0, 0.0);
  for (long i = 0; i < e; ++i) out *= z;
  return out;
}

void require_q(Complex q) {
  if (!(std::abs(q) < 1.0)) throw DomainError("complex evaluation needs |q| < 1");
}

}  // namespace

SeriesResult zeta_qE(Complex s, double x, Complex q, const SeriesBudget& budget) {
  require_q(q);
  if (!(x > 0)) throw DomainError("zeta_qE needs x > 0");
  return sum_series({1.0 + q, -q, x, 1.0, {}}, s, budget);
}

SeriesResult zeta_qE_at(Complex s, Complex q, const SeriesBudget& budget) {
  require_q(q);
  return sum_series({(1.0 + q) * -q, -q, 1.0, 1.0, {}}, s, budget);
}

SeriesResult l_q_series(Complex s, const DirichletCharacter& chi, Complex q, const SeriesBudget& budget) {
  require_q(q);
  const long m = chi.modulus();
  std::vector<Complex> weights;
  for (long r = 0; r < m; ++r) weights.push_back(chi((r + 1) % m).to_complex());
  return sum_series({(1.0 + q) * -q, -q, 1.0, 1.0, std::move(weights)}, s, budget);
}

SeriesResult partial_zeta_Hq(Complex s, long a, long F, Complex q, const SeriesBudget& budget, PartialZetaMode mode) {
  require_q(q);
  if (F < 1 || F % 2 == 0) throw ParameterError("F must be an odd positive integer");
  if (a <= 0 || a >= F) throw ParameterError("need 0 < a < F");
  const Complex lead = complex_pow(-q, a) * (1.0 + q);
  const Complex qF = complex_pow(q, F);
  if (mode == PartialZetaMode::direct)
    return sum_series({lead, -qF, static_cast<double>(a), static_cast<double>(F), {}}, s, budget);
  const Complex scale = lead / (1.0 + qF) * std::exp(-s * std::log(static_cast<double>(F)));
  SeriesBudget inner = budget;
  if (std::abs(scale) > 0) inner.tolerance = budget.tolerance / std::abs(scale);
  const auto z = zeta_qE(s, static_cast<double>(a) / static_cast<double>(F), qF, inner);
  return {scale * z.value, z.tail_bound * std::abs(scale), z.terms};
}

Cyclotomic l_q_at_zero(const DirichletCharacter& chi, const Rational& q, long F) {
  require_admissible_F(F, chi.modulus());
  if (q == -1) throw ParameterError("q = -1 is not admissible");
  const Rational qF = rpow(q, F);
  if (qF == -1) throw ParameterError("[2]_{q^F} vanishes");
  Cyclotomic acc(chi.order());
  Rational signed_qa = 1;
  for (long a = 1; a <= F; ++a) {
    signed_qa *= -q;
    acc = acc + chi(a) * signed_qa;
  }
  return acc * Rational((1 + q) / (1 + qF));
}

}  // namespace qeuler
