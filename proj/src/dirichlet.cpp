#include "qeuler/dirichlet.hpp"

#include "qeuler/errors.hpp"
#include "qeuler/integer.hpp"
#include "qeuler/teichmuller.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace qeuler {
namespace {

long ipow_long(long b, int e) {
  long out = 1;
  for (int i = 0; i < e; ++i) out *= b;
  return out;
}

bool is_primitive_root_mod_p(long g, long p) {
  for (auto [q, e] : factorize(p - 1))
    if (mod_pow(g, (p - 1) / q, p) == 1) return false;
  return true;
}

PrimePowerFactor make_factor(long p, int e, long modulus_d) {
  PrimePowerFactor f;
  f.prime = p;
  f.exponent = e;
  f.modulus = ipow_long(p, e);
  f.group_order = f.modulus / p * (p - 1);
  f.generator = standard_generator(p) % f.modulus;
  f.index.assign(static_cast<std::size_t>(f.modulus), -1);
  long x = 1;
  for (long k = 0; k < f.group_order; ++k) {
    f.index[static_cast<std::size_t>(x)] = k;
    x = x * f.generator % f.modulus;
  }
  // CRT: crt_generator = generator mod p^e, 1 mod the cofactor.
  const long cofactor = modulus_d / f.modulus;
  long y = 1;
  while (y % f.modulus != f.generator || (y - 1) % cofactor != 0) y += cofactor;
  f.crt_generator = y % modulus_d;
  return f;
}

void require_odd_modulus(long d) {
  if (d < 1) throw ParameterError("character modulus must be positive");
  if (d % 2 == 0) throw ParameterError("character modulus must be odd");
}

}  // namespace

long standard_generator(long p) {
  if (p < 3 || !is_prime(p)) throw ParameterError("standard generator needs an odd prime");
  for (long g = 2;; ++g) {
    if (!is_primitive_root_mod_p(g, p)) continue;
    if (mod_pow(g, p - 1, p * p) != 1) return g;
  }
}

std::shared_ptr<const UnitGroup> UnitGroup::get(long modulus) {
  require_odd_modulus(modulus);
  static std::mutex mutex;
  static std::map<long, std::shared_ptr<const UnitGroup>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(modulus); it != cache.end()) return it->second;
  auto group = std::make_shared<UnitGroup>();
  group->modulus = modulus;
  for (auto [p, e] : factorize(modulus)) group->factors.push_back(make_factor(p, e, modulus));
  cache.emplace(modulus, group);
  return group;
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<long> exponents)
    : group_(UnitGroup::get(modulus)), exponents_(std::move(exponents)) {
  const auto& factors = group_->factors;
  if (exponents_.size() != factors.size())
    throw ParameterError("one exponent per prime-power factor of the modulus is required");
  conductor_ = 1;
  order_ = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    long& x = exponents_[i];
    x %= f.group_order;
    if (x < 0) x += f.group_order;
    order_ = std::lcm(order_, f.group_order / std::gcd(x, f.group_order));
    if (x == 0) continue;
    // Trivial on {a = 1 mod p^j} exactly when p^(e-j) divides x.
    int j = 1;
    while (x % ipow_long(f.prime, f.exponent - j) != 0) ++j;
    conductor_ *= ipow_long(f.prime, j);
  }
}

DirichletCharacter DirichletCharacter::trivial(long modulus) {
  return DirichletCharacter(modulus, std::vector<long>(UnitGroup::get(modulus)->factors.size(), 0));
}

std::vector<long> DirichletCharacter::generators() const {
  std::vector<long> out;
  for (const auto& f : group_->factors) out.push_back(f.crt_generator);
  return out;
}

long DirichletCharacter::value_exponent(long a) const {
  const auto& factors = group_->factors;
  long big = 1;
  for (const auto& f : factors) big = std::lcm(big, f.group_order);
  long e_big = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    long r = a % f.modulus;
    if (r < 0) r += f.modulus;
    const long ind = f.index[static_cast<std::size_t>(r)];
    if (ind < 0) return -1;
    const __int128 term = static_cast<__int128>(exponents_[i]) * ind % f.group_order * (big / f.group_order);
    e_big = static_cast<long>((e_big + term) % big);
  }
  return e_big / (big / order_);
}

Cyclotomic DirichletCharacter::operator()(long a) const {
  const long e = value_exponent(a);
  if (e < 0) return Cyclotomic(order_);
  return Cyclotomic::root_power(order_, e);
}

DirichletCharacter DirichletCharacter::p_primitive_part(long p) const {
  const DirichletCharacter primitive = primitive_part();
  long away = modulus();
  while (away % p == 0) away /= p;
  return primitive.induced(std::lcm(primitive.modulus(), away));
}

DirichletCharacter DirichletCharacter::primitive_part() const {
  if (conductor_ == modulus()) return *this;
  auto prim_group = UnitGroup::get(conductor_);
  std::vector<long> prim_exponents;
  for (const auto& pf : prim_group->factors) {
    for (std::size_t i = 0; i < group_->factors.size(); ++i) {
      const auto& f = group_->factors[i];
      if (f.prime != pf.prime) continue;
      prim_exponents.push_back(exponents_[i] / ipow_long(f.prime, f.exponent - pf.exponent));
    }
  }
  return DirichletCharacter(conductor_, std::move(prim_exponents));
}

DirichletCharacter DirichletCharacter::induced(long new_modulus) const {
  if (new_modulus % modulus() != 0) throw ParameterError("induced modulus must be a multiple of the modulus");
  auto target = UnitGroup::get(new_modulus);
  std::vector<long> lifted;
  for (const auto& tf : target->factors) {
    long x = 0;
    for (std::size_t i = 0; i < group_->factors.size(); ++i) {
      const auto& f = group_->factors[i];
      if (f.prime == tf.prime) x = exponents_[i] * ipow_long(f.prime, tf.exponent - f.exponent);
    }
    lifted.push_back(x);
  }
  return DirichletCharacter(new_modulus, std::move(lifted));
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& other) const {
  const long m = std::lcm(modulus(), other.modulus());
  DirichletCharacter a = induced(m), b = other.induced(m);
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) a.exponents_[i] += b.exponents_[i];
  return DirichletCharacter(m, a.exponents_);
}

DirichletCharacter DirichletCharacter::pow(long e) const {
  std::vector<long> x = exponents_;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long n = group_->factors[i].group_order;
    x[i] = static_cast<long>(static_cast<__int128>(x[i]) * (((e % n) + n) % n) % n);
  }
  return DirichletCharacter(modulus(), std::move(x));
}

std::vector<DirichletCharacter> enumerate_characters(long d) {
  auto group = UnitGroup::get(d);
  const auto& factors = group->factors;
  std::vector<DirichletCharacter> out;
  std::vector<long> x(factors.size(), 0);
  while (true) {
    out.emplace_back(d, x);
    std::size_t i = x.size();
    while (i > 0) {
      --i;
      if (++x[i] < factors[i].group_order) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (x.empty()) return out;
  }
}

DirichletCharacter omega_character(long p) {
  if (p < 3 || !is_prime(p)) throw ParameterError("omega needs an odd prime");
  return DirichletCharacter(p, {1});
}

Padic embed_padic(const Cyclotomic& value, long p, long precision) {
  const long m = value.order();
  if ((p - 1) % m != 0)
    throw ParameterError("character values of order " + std::to_string(m) + " do not embed in Z_" + std::to_string(p));
  const Padic root = teichmuller(standard_generator(p), p, precision).pow((p - 1) / m);
  return value.evaluate_at(root, [&](const Rational& r) { return Padic::from_rational(r, p, precision); });
}

Padic char_value_padic(const DirichletCharacter& chi, long a, long p, long precision) {
  const long m = chi.order();
  if ((p - 1) % m != 0)
    throw ParameterError("character of order " + std::to_string(m) + " does not embed in Z_" + std::to_string(p));
  const long e = chi.value_exponent(a);
  if (e < 0) return Padic(p);
  return teichmuller(standard_generator(p), p, precision).pow((p - 1) / m * e);
}

OmegaTwist::OmegaTwist(DirichletCharacter base, long p, long n) : base_(std::move(base)), p_(p), n_(n) {
  if (p < 3 || !is_prime(p)) throw ParameterError("p must be an odd prime");
}

Padic OmegaTwist::operator()(long a, long precision) const {
  if (a % p_ == 0) return Padic(p_);
  const Padic chi = char_value_padic(base_, a, p_, precision);
  if (chi.is_exact_zero()) return chi;
  return chi * teichmuller(a, p_, precision).pow(-n_);
}

DirichletCharacter OmegaTwist::exact() const { return base_ * omega_character(p_).pow(-n_); }

}  // namespace qeuler
