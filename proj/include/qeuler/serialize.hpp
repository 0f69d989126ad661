#pragma once

#include "qeuler/dirichlet.hpp"
#include "qeuler/qparameter.hpp"

#include <nlohmann/json.hpp>

namespace qeuler {

using Json = nlohmann::ordered_json;

/// {"type":"rational","num":"...","den":"..."}
Json to_json(const Rational& x);
/// {"type":"complex","re":...,"im":...}
Json to_json(const Complex& x);
/// {"type":"cyclotomic","order":m,"coeffs":["a/b",...],"embedding":...}; coefficient i multiplies zeta_m^i.
Json to_json(const Cyclotomic& x);
/// {"type":"padic","p":...,"valuation":...,"unit_digits":[least significant first],"precision":...}
/// precision is absolute (digits of p known); an exact zero has valuation and precision null.
Json to_json(const Padic& x);
Json to_json(const Value& x);
/// {"modulus":...,"generators":[...],"exponents":[...],"order":...,"conductor":...}
Json to_json(const DirichletCharacter& chi);

/// Single-cell CSV text of a scalar (quoted when it contains a comma).
std::string to_csv_cell(const Value& x);

}  // namespace qeuler
