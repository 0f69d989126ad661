#include "qeuler/euler.hpp"
#include "qeuler/padic_l.hpp"
#include "qeuler/serialize.hpp"
#include "qeuler/teichmuller.hpp"
#include "qeuler/verify.hpp"
#include "qeuler/zeta.hpp"

#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qeuler;

namespace {

py::object fraction(const Rational& r) { return py::module_::import("fractions").attr("Fraction")(r.get_str()); }

py::object to_python(const Value& v) {
  return std::visit(
      [](const auto& x) -> py::object {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Rational>)
          return fraction(x);
        else
          return py::cast(x);
      },
      v);
}

DirichletCharacter character(long modulus, const std::optional<std::vector<long>>& exponents) {
  return exponents ? DirichletCharacter(modulus, *exponents) : DirichletCharacter::trivial(modulus);
}

Complex float_q(const std::string& text) {
  const auto q = QParameter::parse(text);
  if (q.is_padic()) throw ParameterError("a float q with |q| < 1 is required");
  const Complex out = q.is_exact() ? Complex(q.as_exact().get_d(), 0.0) : q.as_float();
  if (!(std::abs(out) < 1.0)) throw ParameterError("a float q with |q| < 1 is required");
  return out;
}

SeriesBudget budget(double tol, long max_terms) {
  SeriesBudget b;
  b.tolerance = tol;
  b.max_terms = max_terms;
  return b;
}

}  // namespace

PYBIND11_MODULE(_qeuler, m) {
  m.doc() = "q-Euler numbers, q-zeta functions and p-adic l-functions";

  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PrecisionError>(m, "PrecisionError", PyExc_ArithmeticError);
  py::register_exception<BudgetExhausted>(m, "BudgetExhausted", PyExc_ArithmeticError);

  py::class_<Padic>(m, "Padic")
      .def_property_readonly("p", &Padic::prime)
      .def_property_readonly("valuation", &Padic::valuation)
      .def_property_readonly("precision", &Padic::absolute_precision)
      .def_property_readonly("unit_digits", &Padic::unit_digits)
      .def("residue", [](const Padic& x, long digits) { return x.residue(digits).get_str(); }, py::arg("digits"),
           "x mod p^digits as a decimal string")
      .def("agreement", [](const Padic& a, const Padic& b) { return agreement(a, b); })
      .def("to_json", [](const Padic& x) { return to_json(x).dump(); })
      .def("__str__", &Padic::to_string)
      .def("__repr__", [](const Padic& x) { return "Padic(" + x.to_string() + ")"; });

  py::class_<Cyclotomic>(m, "Cyclotomic")
      .def_property_readonly("order", &Cyclotomic::order)
      .def_property_readonly("coeffs", [](const Cyclotomic& c) {
        py::list out;
        for (const auto& r : c.coeffs()) out.append(fraction(r));
        return out;
      })
      .def("is_rational", &Cyclotomic::is_rational)
      .def("to_complex", &Cyclotomic::to_complex)
      .def("__eq__", [](const Cyclotomic& a, const Cyclotomic& b) { return a == b; })
      .def("__str__", &Cyclotomic::to_string)
      .def("__repr__", [](const Cyclotomic& c) { return "Cyclotomic(" + c.to_string() + ")"; });

  m.def("euler_number", [](unsigned n, const std::string& q) { return to_python(euler_number_q(n, QParameter::parse(q))); },
        py::arg("n"), py::arg("q") = "1", "E_{n,q}; q given as text (a/b, float, a+bi, padic:p:M:value)");
  m.def("euler_poly",
        [](unsigned n, const std::string& x, const std::string& q) {
          return to_python(euler_poly_q(n, parse_rational(x), QParameter::parse(q)));
        },
        py::arg("n"), py::arg("x"), py::arg("q") = "1");
  m.def("gen_euler",
        [](unsigned n, long modulus, std::optional<std::vector<long>> exponents, const std::string& q_text, long F) {
          const auto chi = character(modulus, exponents);
          const auto q = QParameter::parse(q_text);
          if (F == 0) F = modulus;
          if (q.is_exact()) return py::cast(gen_euler_number(n, chi, q.as_exact(), F));
          if (q.is_float()) return py::cast(gen_euler_number(n, chi, q.as_float(), F));
          return py::cast(gen_euler_number(n, chi, q.as_padic(), F));
        },
        py::arg("n"), py::arg("modulus") = 1, py::arg("exponents") = py::none(), py::arg("q") = "1", py::arg("F") = 0);
  m.def("zeta",
        [](Complex s, const std::string& q, std::optional<double> x, double tol, long max_terms) {
          const auto b = budget(tol, max_terms);
          return x ? zeta_qE(s, *x, float_q(q), b).value : zeta_qE_at(s, float_q(q), b).value;
        },
        py::arg("s"), py::arg("q"), py::arg("x") = py::none(), py::arg("tol") = 1e-13, py::arg("max_terms") = 2000000);
  m.def("lq",
        [](Complex s, long modulus, std::optional<std::vector<long>> exponents, const std::string& q, double tol,
           long max_terms) { return l_q_series(s, character(modulus, exponents), float_q(q), budget(tol, max_terms)).value; },
        py::arg("s"), py::arg("modulus") = 1, py::arg("exponents") = py::none(), py::arg("q") = "0.5",
        py::arg("tol") = 1e-13, py::arg("max_terms") = 2000000);
  m.def("partial_zeta",
        [](Complex s, long a, long F, const std::string& q, const std::string& mode) {
          if (mode != "closed" && mode != "direct") throw ParameterError("mode must be closed or direct");
          return partial_zeta_Hq(s, a, F, float_q(q), {}, mode == "closed" ? PartialZetaMode::closed : PartialZetaMode::direct)
              .value;
        },
        py::arg("s"), py::arg("a"), py::arg("F"), py::arg("q"), py::arg("mode") = "closed");
  m.def("padic_l",
        [](const std::string& s, long p, const std::string& q, long modulus, std::optional<std::vector<long>> exponents,
           long prec, long F, const std::string& method) {
          const auto ctx = make_pl_context(character(modulus, exponents), p, parse_rational(q), prec, F);
          const Rational sr = parse_rational(s);
          const Padic sp = Padic::from_rational(sr, p, prec);
          if (method == "series") return l_pq(sp, ctx).value;
          if (method == "cor8") return corollary8_lp(sp, ctx.chi, p, prec, ctx.F).value;
          if (sr.get_den() != 1 || sr >= 0) throw ParameterError("closed and integral need s = -n with n >= 1");
          const auto n = static_cast<unsigned>(Integer(-sr.get_num()).get_ui());
          if (method == "closed") return thm7b_rhs(n, ctx).value;
          if (method == "integral") return thm7c_integral(n, ctx);
          throw ParameterError("method must be series, closed, integral or cor8");
        },
        py::arg("s"), py::arg("p"), py::arg("q") = "1", py::arg("modulus") = 1, py::arg("exponents") = py::none(),
        py::arg("prec") = 12, py::arg("F") = 0, py::arg("method") = "series");
  m.def("teichmuller", &teichmuller, py::arg("a"), py::arg("p"), py::arg("prec") = 12);
  m.def("angle", &angle, py::arg("a"), py::arg("p"), py::arg("prec") = 12);
  m.def("characters",
        [](long d) {
          std::vector<std::string> out;
          for (const auto& chi : enumerate_characters(d)) out.push_back(to_json(chi).dump());
          return out;
        },
        py::arg("d"), "characters mod d as JSON strings");
  m.def("identities", [] {
    std::vector<std::string> out;
    for (Identity id : all_identities()) out.emplace_back(identity_name(id));
    return out;
  });
  m.def("verify",
        [](std::vector<std::string> names, std::uint64_t seed, long prec, std::optional<long> p, std::optional<std::string> q,
           unsigned jobs) {
          std::vector<Identity> ids;
          for (const auto& name : names) {
            const auto id = parse_identity(name);
            if (!id) throw ParameterError("unknown identity '" + name + "'");
            ids.push_back(*id);
          }
          RunConfig cfg;
          cfg.seed = seed;
          cfg.prec = prec;
          cfg.p = p;
          cfg.q = q;
          cfg.jobs = jobs;
          std::vector<std::string> lines;
          py::gil_scoped_release release;
          run_verification(ids, cfg, [&](const VerificationReport& r) { lines.push_back(report_to_json(r, cfg).dump()); });
          return lines;
        },
        py::arg("identities"), py::arg("seed") = 0, py::arg("prec") = 12, py::arg("p") = py::none(),
        py::arg("q") = py::none(), py::arg("jobs") = 1, "runs identity checks; returns NDJSON report lines");
}
