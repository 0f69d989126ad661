#include "qeuler/serialize.hpp"

#include "qeuler/zeta.hpp"

namespace qeuler {

Json to_json(const Rational& x) {
  return Json{{"type", "rational"}, {"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

Json to_json(const Complex& x) { return Json{{"type", "complex"}, {"re", x.real()}, {"im", x.imag()}}; }

Json to_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
  return Json{{"type", "cyclotomic"}, {"order", x.order()}, {"coeffs", coeffs}, {"embedding", kComplexEmbedding}};
}

Json to_json(const Padic& x) {
  Json out{{"type", "padic"}, {"p", x.prime()}};
  if (x.is_exact_zero()) {
    out["valuation"] = nullptr;
    out["unit_digits"] = Json::array();
    out["precision"] = nullptr;
    return out;
  }
  out["valuation"] = x.valuation();
  out["unit_digits"] = x.unit_digits();
  out["precision"] = x.absolute_precision();
  return out;
}

Json to_json(const Value& x) {
  return std::visit([](const auto& v) { return to_json(v); }, x);
}

Json to_json(const DirichletCharacter& chi) {
  return Json{{"modulus", chi.modulus()},
              {"generators", chi.generators()},
              {"exponents", chi.exponents()},
              {"order", chi.order()},
              {"conductor", chi.conductor()}};
}

std::string to_csv_cell(const Value& x) {
  std::string text = to_string(x);
  if (text.find_first_of(",\"") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace qeuler
