#pragma once

#include "qeuler/cyclotomic.hpp"
#include "qeuler/padic.hpp"

#include <memory>
#include <vector>

namespace qeuler {

/// Cyclic factor (Z/p^e Z)^* of the unit group, with its fixed generator and
/// discrete-log table.
struct PrimePowerFactor {
  long prime = 0;
  int exponent = 0;
  long modulus = 1;      // p^e
  long group_order = 1;  // phi(p^e)
  long generator = 1;    // mod p^e
  long crt_generator = 1;  // mod d: generator on this factor, 1 on the others
  std::vector<long> index;  // discrete log mod p^e, -1 on non-units
};

/// Shared, immutable description of (Z/dZ)^* for one odd modulus d.
struct UnitGroup {
  long modulus = 1;
  std::vector<PrimePowerFactor> factors;

  static std::shared_ptr<const UnitGroup> get(long modulus);
};

/// Smallest g that generates (Z/p^e)^* for every e >= 1. This is the fixed
/// generator behind every character exponent and behind the correspondence
/// between exact roots of unity and p-adic Teichmuller values.
long standard_generator(long p);

/// A Dirichlet character mod an odd d, given by one exponent per prime-power
/// factor: chi(g_i) = exp(2 pi i x_i / phi(p_i^e_i)) on the fixed generator g_i.
class DirichletCharacter {
 public:
  DirichletCharacter(long modulus, std::vector<long> exponents);
  static DirichletCharacter trivial(long modulus);

  long modulus() const noexcept { return group_->modulus; }
  const std::vector<long>& exponents() const noexcept { return exponents_; }
  long order() const noexcept { return order_; }
  long conductor() const noexcept { return conductor_; }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_primitive() const noexcept { return conductor_ == modulus(); }
  const UnitGroup& group() const noexcept { return *group_; }

  /// CRT generators mod d, one per prime-power factor.
  std::vector<long> generators() const;

  /// e with chi(a) = zeta_order^e, or -1 when gcd(a, d) > 1.
  long value_exponent(long a) const;
  /// chi(a) in Q(zeta_order).
  Cyclotomic operator()(long a) const;

  DirichletCharacter primitive_part() const;
  /// Same character viewed modulo a multiple M of the modulus.
  DirichletCharacter induced(long new_modulus) const;
  /// Primitive at p, modulus unchanged away from p.
  DirichletCharacter p_primitive_part(long p) const;
  /// Product character with modulus lcm of the two moduli.
  DirichletCharacter operator*(const DirichletCharacter& other) const;
  DirichletCharacter pow(long e) const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus() == b.modulus() && a.exponents_ == b.exponents_;
  }

 private:
  std::shared_ptr<const UnitGroup> group_;
  std::vector<long> exponents_;
  long order_ = 1;
  long conductor_ = 1;
};

/// All phi(d) characters mod d, ordered by exponent tuple (last factor fastest).
std::vector<DirichletCharacter> enumerate_characters(long d);

/// The Teichmuller character mod p as an exact character: omega(g) = zeta_{p-1}
/// for the standard generator g of p.
DirichletCharacter omega_character(long p);

/// Image of a cyclotomic value in Z_p, sending zeta_m to
/// teichmuller(g)^((p-1)/m) for the standard generator g. Requires m | p - 1.
Padic embed_padic(const Cyclotomic& value, long p, long precision);

/// p-adic value of chi(a) through the same embedding.
Padic char_value_padic(const DirichletCharacter& chi, long a, long p, long precision);

/// chi_n = chi * omega^(-n), the twist interpolated at s = -n.
class OmegaTwist {
 public:
  OmegaTwist(DirichletCharacter base, long p, long n);

  const DirichletCharacter& base() const noexcept { return base_; }
  long prime() const noexcept { return p_; }
  long power() const noexcept { return n_; }

  /// chi(a) omega(a)^(-n) in Z_p; zero when p | a or gcd(a, d) > 1.
  Padic operator()(long a, long precision) const;
  /// The twist as an exact character mod lcm(d, p).
  DirichletCharacter exact() const;

 private:
  DirichletCharacter base_;
  long p_;
  long n_;
};

}  // namespace qeuler
