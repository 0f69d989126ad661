#include "qeuler/cyclotomic.hpp"

#include "qeuler/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace qeuler {
namespace {

using Poly = std::vector<Rational>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Quotient and remainder of a divided by b.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= factor * b[j];
    a.pop_back();
    trim(a);
  }
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<long> compute_cyclotomic(long m) {
  // x^m - 1 divided by Phi_d for every proper divisor d of m.
  std::vector<long> num(static_cast<std::size_t>(m) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(m)] = 1;
  for (long d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    const auto& div = cyclotomic_polynomial(d);
    const std::size_t deg = div.size() - 1;
    std::vector<long> quot(num.size() - deg, 0);
    for (std::size_t i = num.size(); i-- > deg;) {
      const long c = num[i];
      quot[i - deg] = c;
      for (std::size_t j = 0; j <= deg; ++j) num[i - deg + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long m) {
  if (m < 1) throw ParameterError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<long, std::vector<long>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(m);  // recursion takes the lock for smaller orders
  std::lock_guard lock(mutex);
  return cache.emplace(m, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(long order) : order_(order) {
  if (order < 1) throw ParameterError("cyclotomic order must be positive");
  coeffs_.assign(cyclotomic_polynomial(order).size() - 1, Rational(0));
}

Cyclotomic::Cyclotomic(long order, const Rational& value) : Cyclotomic(order) { coeffs_[0] = value; }

Cyclotomic Cyclotomic::reduce(std::vector<Rational> raw, long order) {
  Cyclotomic out(order);
  // zeta^m = 1 first, then reduce modulo Phi_m.
  std::vector<Rational> folded(static_cast<std::size_t>(order), Rational(0));
  for (std::size_t i = 0; i < raw.size(); ++i) folded[i % static_cast<std::size_t>(order)] += raw[i];
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = folded.size(); i-- > deg;) {
    const Rational c = folded[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) folded[i - deg + j] -= c * phi[j];
  }
  for (std::size_t i = 0; i < deg; ++i) out.coeffs_[i] = folded[i];
  return out;
}

Cyclotomic Cyclotomic::root_power(long order, long e) {
  e %= order;
  if (e < 0) e += order;
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1, Rational(0));
  raw.back() = 1;
  return reduce(std::move(raw), order);
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::promote(long new_order) const {
  if (new_order == order_) return *this;
  if (new_order % order_ != 0) throw ParameterError("cyclotomic promotion to a non-multiple order");
  const std::size_t step = static_cast<std::size_t>(new_order / order_);
  std::vector<Rational> raw(coeffs_.size() * step, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return reduce(std::move(raw), new_order);
}

namespace {

long common_order(const Cyclotomic& a, const Cyclotomic& b) { return std::lcm(a.order(), b.order()); }

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    const long l = common_order(*this, rhs);
    *this = promote(l);
    return *this += rhs.promote(l);
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (rhs.order_ != order_) {
    const long l = common_order(*this, rhs);
    *this = promote(l);
    return *this *= rhs.promote(l);
  }
  if (rhs.is_rational()) return *this *= rhs.coeffs_[0];
  if (is_rational()) {
    const Rational c = coeffs_[0];
    *this = rhs;
    return *this *= c;
  }
  *this = reduce(poly_mul(coeffs_, rhs.coeffs_), order_);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in a cyclotomic field");
  if (is_rational()) return Cyclotomic(order_, 1 / coeffs_[0]);
  // Extended Euclid: find u with u*a = 1 mod Phi_m.
  Poly modulus;
  for (long c : cyclotomic_polynomial(order_)) modulus.emplace_back(c);
  Poly r0 = modulus, r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = poly_divmod(r0, r1);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw DomainError("cyclotomic element is not invertible");
  }
  const Rational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return reduce(poly_rem(s1, modulus), order_);
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(order_, Rational(1)), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const long l = common_order(a, b);
  return a.promote(l).coeffs_ == b.promote(l).coeffs_;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(order_);
    acc += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

std::string Cyclotomic::to_string() const {
  if (is_rational()) return coeffs_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i].get_str() << ")";
    if (i > 0) os << "*z" << order_ << "^" << i;
  }
  return os.str();
}

}  // namespace qeuler
