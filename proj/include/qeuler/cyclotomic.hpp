#pragma once

#include "qeuler/integer.hpp"

#include <complex>
#include <string>
#include <vector>

namespace qeuler {

/// Element of Q(zeta_m), stored as a polynomial in zeta_m of degree < phi(m)
/// reduced modulo the m-th cyclotomic polynomial. The representation is
/// canonical within a fixed order: equal values have equal coefficient vectors.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(long order);
  Cyclotomic(long order, const Rational& value);

  /// Reduces an arbitrary polynomial in zeta_m (coefficient i multiplies zeta_m^i).
  static Cyclotomic reduce(std::vector<Rational> raw, long order);
  /// zeta_m^e for any integer e.
  static Cyclotomic root_power(long order, long e);

  long order() const noexcept { return order_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  /// Same value viewed in Q(zeta_L); L must be a multiple of order().
  Cyclotomic promote(long new_order) const;

  Cyclotomic inverse() const;
  Cyclotomic pow(long e) const;

  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Rational& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }
  friend Cyclotomic operator*(const Rational& b, Cyclotomic a) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  /// Equality across orders compares in the common field.
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// Embedding zeta_m -> exp(2*pi*i/m).
  std::complex<double> to_complex() const;

  /// Ring embedding sending zeta_m to `root_image`; `convert` maps Rational -> T.
  template <class T, class Convert>
  T evaluate_at(const T& root_image, Convert&& convert) const {
    T acc = convert(coeffs_.back());
    for (auto i = coeffs_.size() - 1; i-- > 0;) acc = acc * root_image + convert(coeffs_[i]);
    return acc;
  }

  std::string to_string() const;

 private:
  long order_;
  std::vector<Rational> coeffs_;
};

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(long m);

}  // namespace qeuler
