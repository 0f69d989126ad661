#include "qeuler/qparameter.hpp"

#include <cmath>
#include <regex>
#include <sstream>

namespace qeuler {

QParameter QParameter::exact(const Rational& q) {
  if (q == -1) throw ParameterError("q = -1 is not admissible: [2]_q = 1 + q vanishes");
  return QParameter(q);
}

QParameter QParameter::floating(const Complex& q) {
  if (!(std::abs(q) < 1.0)) throw ParameterError("complex q must satisfy |q| < 1");
  return QParameter(q);
}

QParameter QParameter::padic(const Padic& q) {
  const Padic diff = Padic::one(q.prime(), std::max(1L, q.absolute_precision())) - q;
  if (diff.valuation() < 1) throw ParameterError("p-adic q must satisfy |1 - q|_p < 1");
  return QParameter(q);
}

namespace {

double parse_double(const std::string& text) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ParameterError("not a number: '" + text + "'");
  return out;
}

long parse_long(const std::string& text) {
  std::size_t used = 0;
  long out = 0;
  try {
    out = std::stol(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw ParameterError("not an integer: '" + text + "'");
  return out;
}

}  // namespace

QParameter QParameter::parse(const std::string& text) {
  if (text.rfind("padic:", 0) == 0) {
    std::istringstream is(text.substr(6));
    std::string p_str, m_str, v_str;
    if (!std::getline(is, p_str, ':') || !std::getline(is, m_str, ':') || !std::getline(is, v_str))
      throw ParameterError("p-adic q must look like padic:p:M:value");
    const long p = parse_long(p_str);
    const long m = parse_long(m_str);
    return padic(Padic::from_rational(parse_rational(v_str), p, m));
  }
  static const std::regex rational_re(R"(^[+-]?\d+(/\d+)?$)");
  if (std::regex_match(text, rational_re)) return exact(parse_rational(text));
  return floating(parse_complex(text));
}

Complex parse_complex(const std::string& text) {
  if (!text.empty() && text.back() == 'i') {
    const std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
        split = i;
        break;
      }
    }
    const std::string re = split == std::string::npos ? "0" : body.substr(0, split);
    std::string im = split == std::string::npos ? body : body.substr(split);
    if (im.empty() || im == "+" || im == "-") im += "1";
    return Complex(parse_double(re), parse_double(im));
  }
  if (text.find('/') != std::string::npos) return Complex(parse_rational(text).get_d(), 0.0);
  return Complex(parse_double(text), 0.0);
}

namespace {

std::string complex_string(const Complex& z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
  return os.str();
}

}  // namespace

std::string QParameter::to_string() const {
  return std::visit(
      [](const auto& q) -> std::string {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, Rational>)
          return q.get_str();
        else if constexpr (std::is_same_v<T, Complex>)
          return complex_string(q);
        else
          return q.to_string();
      },
      value_);
}

std::string to_string(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>)
          return x.get_str();
        else if constexpr (std::is_same_v<T, Complex>)
          return complex_string(x);
        else
          return x.to_string();
      },
      v);
}

}  // namespace qeuler
