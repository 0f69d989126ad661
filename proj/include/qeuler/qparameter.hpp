#pragma once

#include "qeuler/scalar.hpp"

#include <string>
#include <variant>

namespace qeuler {

/// q as an exact rational, a complex float with |q| < 1, or a p-adic number
/// with |1 - q|_p < 1. Construction validates the regime's constraint.
class QParameter {
 public:
  using Variant = std::variant<Rational, Complex, Padic>;

  static QParameter exact(const Rational& q);
  static QParameter floating(const Complex& q);
  static QParameter padic(const Padic& q);

  /// "a/b" (exact), "0.5" or "0.3+0.2i" (float), "padic:p:M:value" (value rational).
  static QParameter parse(const std::string& text);

  const Variant& value() const noexcept { return value_; }
  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
  bool is_float() const noexcept { return std::holds_alternative<Complex>(value_); }
  bool is_padic() const noexcept { return std::holds_alternative<Padic>(value_); }

  const Rational& as_exact() const { return std::get<Rational>(value_); }
  const Complex& as_float() const { return std::get<Complex>(value_); }
  const Padic& as_padic() const { return std::get<Padic>(value_); }

  std::string to_string() const;

 private:
  explicit QParameter(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

/// "1.5", "-3", "2/3", "0.5-2i", "3i".
Complex parse_complex(const std::string& text);

/// Scalar of any supported domain, as returned by the dispatching API.
using Value = std::variant<Rational, Cyclotomic, Complex, Padic>;

std::string to_string(const Value& v);

}  // namespace qeuler
