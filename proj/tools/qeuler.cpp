// qeuler: evaluate q-Euler numbers, q-zeta and p-adic l-functions, and run the identity checks.

#include "qeuler/euler.hpp"
#include "qeuler/fermionic.hpp"
#include "qeuler/padic_l.hpp"
#include "qeuler/serialize.hpp"
#include "qeuler/teichmuller.hpp"
#include "qeuler/verify.hpp"
#include "qeuler/zeta.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

using namespace qeuler;

namespace {

enum ExitCode { kOk = 0, kFailure = 1, kUsage = 2 };

struct Options {
  std::optional<std::string> format;
  std::optional<double> tol;
  std::optional<long> prec;
  std::optional<std::uint64_t> seed;
  std::optional<long> max_level;
  std::optional<long> max_terms;
  std::optional<unsigned> jobs;
  std::string config_file;
  bool timing = false;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream is(text);
  T out{};
  if (!(is >> out) || !is.eof()) throw ParameterError("bad value for " + key + ": '" + text + "'");
  return out;
}

// key=value lines; '#' starts a comment. Keys mirror the global flags.
void apply_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParameterError("config line without '=': " + line);
    std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    std::replace(key.begin(), key.end(), '-', '_');
    if (key == "tol") cfg.tol = parse_number<double>(key, value);
    else if (key == "prec") cfg.prec = parse_number<long>(key, value);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "max_level") cfg.max_level = parse_number<long>(key, value);
    else if (key == "max_terms") cfg.max_terms = parse_number<long>(key, value);
    else if (key == "jobs") cfg.jobs = parse_number<unsigned>(key, value);
    else if (key == "format") cfg.format = value;
    else throw ParameterError("unknown config key '" + key + "'");
  }
}

RunConfig resolve_config(const Options& opt) {
  RunConfig cfg;
  cfg.format = "text";
  if (!opt.config_file.empty()) apply_config_file(opt.config_file, cfg);
  if (const char* env = std::getenv("QEULER_SEED"); env && *env) cfg.seed = parse_number<std::uint64_t>("QEULER_SEED", env);
  if (opt.format) cfg.format = *opt.format;
  if (opt.tol) cfg.tol = opt.tol;
  if (opt.prec) cfg.prec = *opt.prec;
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.max_level) cfg.max_level = *opt.max_level;
  if (opt.max_terms) cfg.max_terms = *opt.max_terms;
  if (opt.jobs) cfg.jobs = *opt.jobs;
  cfg.timing = opt.timing;
  if (cfg.format != "text" && cfg.format != "json" && cfg.format != "csv") throw ParameterError("format must be text, json or csv");
  if (cfg.prec < 1) throw ParameterError("precision must be positive");
  if (cfg.tol && !(*cfg.tol > 0)) throw ParameterError("tolerance must be positive");
  return cfg;
}

SeriesBudget budget_of(const RunConfig& cfg) {
  SeriesBudget b;
  if (cfg.tol) b.tolerance = *cfg.tol;
  b.max_terms = cfg.max_terms;
  return b;
}

// "0..5", "3", "1,3,7" or a mix; integers.
std::vector<long> parse_int_range(const std::string& text) {
  std::vector<long> out;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    part = trim(part);
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_number<long>("range", part));
      continue;
    }
    const long lo = parse_number<long>("range", part.substr(0, dots));
    const long hi = parse_number<long>("range", part.substr(dots + 2));
    if (hi < lo || hi - lo > 100000) throw ParameterError("bad range '" + part + "'");
    for (long v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw ParameterError("empty range");
  return out;
}

std::vector<unsigned> parse_orders(const std::string& text) {
  std::vector<unsigned> out;
  for (long v : parse_int_range(text)) {
    if (v < 0) throw ParameterError("orders must be nonnegative");
    out.push_back(static_cast<unsigned>(v));
  }
  return out;
}

// Complex points: "a..b" over integers, otherwise a comma list.
std::vector<Complex> parse_points(const std::string& text) {
  if (text.find("..") != std::string::npos) {
    std::vector<Complex> out;
    for (long v : parse_int_range(text)) out.emplace_back(static_cast<double>(v), 0.0);
    return out;
  }
  std::vector<Complex> out;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) out.push_back(parse_complex(trim(part)));
  if (out.empty()) throw ParameterError("empty list of points");
  return out;
}

struct CharacterSpec {
  long modulus = 1;
  std::string exponents;

  DirichletCharacter build() const {
    if (exponents.empty()) return DirichletCharacter::trivial(modulus);
    std::vector<long> e;
    std::istringstream is(exponents);
    std::string part;
    while (std::getline(is, part, ',')) e.push_back(parse_number<long>("exponent", trim(part)));
    return DirichletCharacter(modulus, e);
  }
};

void add_character_options(CLI::App* cmd, CharacterSpec& spec) {
  cmd->add_option("--modulus,--d", spec.modulus, "character modulus (odd)");
  cmd->add_option("--exponents,--e", spec.exponents, "exponents on the standard generators, comma separated (default: trivial)");
}

class Printer {
 public:
  explicit Printer(const RunConfig& cfg) : cfg_(cfg) {}

  void scalar(const Value& v, Json extra = nullptr) const {
    if (cfg_.format == "json") {
      if (extra.is_null()) {
        std::cout << to_json(v).dump() << "\n";
      } else {
        Json out{{"value", to_json(v)}};
        out.update(extra);
        std::cout << out.dump() << "\n";
      }
    } else if (cfg_.format == "csv") {
      std::cout << to_csv_cell(v) << "\n";
    } else {
      std::cout << to_string(v) << "\n";
    }
  }

  // Rows share the header; cells are JSON values (scalars serialized).
  void table(const std::vector<std::string>& header, const std::vector<std::vector<Json>>& rows,
             const std::vector<std::vector<std::string>>& text_rows) const {
    if (cfg_.format == "json") {
      Json out = Json::array();
      for (const auto& row : rows) {
        Json obj;
        for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
        out.push_back(obj);
      }
      std::cout << out.dump() << "\n";
      return;
    }
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (const auto& row : text_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << row[i];
      std::cout << "\n";
    }
  }

 private:
  const RunConfig& cfg_;
};

Value gen_euler_value(unsigned n, const DirichletCharacter& chi, const QParameter& q, long F) {
  if (q.is_exact()) return gen_euler_number(n, chi, q.as_exact(), F);
  if (q.is_float()) return gen_euler_number(n, chi, q.as_float(), F);
  return gen_euler_number(n, chi, q.as_padic(), F);
}

Complex float_q(const std::string& text) {
  const auto q = QParameter::parse(text);
  if (q.is_padic()) throw ParameterError("this command needs a float q with |q| < 1");
  const Complex out = q.is_exact() ? Complex(q.as_exact().get_d(), 0.0) : q.as_float();
  if (!(std::abs(out) < 1.0)) throw ParameterError("this command needs |q| < 1");
  return out;
}

Json series_extra(const SeriesResult& r) {
  return Json{{"tail_bound", r.tail_bound}, {"terms", r.terms}, {"embedding", kComplexEmbedding}};
}

struct PadicLArgs {
  std::string s = "0";
  std::string q = "1";
  long p = 0;
  long F = 0;
  std::string method = "series";
  CharacterSpec chi;
};

PLContext padic_context(const PadicLArgs& a, const RunConfig& cfg) {
  const auto q = QParameter::parse(a.q);
  const auto chi = a.chi.build();
  if (q.is_padic()) {
    if (a.p && a.p != q.as_padic().prime()) throw ParameterError("--p differs from the prime of q");
    return make_pl_context(chi, q.as_padic(), a.F);
  }
  if (!q.is_exact()) throw ParameterError("p-adic l-function needs a rational or p-adic q");
  if (a.p == 0) throw ParameterError("--p is required with a rational q");
  return make_pl_context(chi, a.p, q.as_exact(), cfg.prec, a.F);
}

unsigned negative_integer_order(const Rational& s) {
  if (s.get_den() != 1 || s >= 0) throw ParameterError("this method needs s = -n with n >= 1");
  return static_cast<unsigned>(Integer(-s.get_num()).get_ui());
}

Padic eval_padic_l(const PLContext& ctx, const Rational& s, const std::string& method, long max_level, Json& extra) {
  const Padic sp = Padic::from_rational(s, ctx.p, ctx.precision);
  extra = Json{{"p", ctx.p}, {"F", ctx.F}, {"K", ctx.truncation}, {"method", method}};
  if (method == "series") {
    const auto r = l_pq(sp, ctx);
    extra["slack"] = r.slack;
    extra["certified_valuation"] = r.certified_valuation;
    return r.value;
  }
  if (method == "closed") {
    const auto r = thm7b_rhs(negative_integer_order(s), ctx);
    extra["slack"] = r.slack;
    return r.value;
  }
  if (method == "integral") return thm7c_integral(negative_integer_order(s), ctx, max_level);
  if (method == "cor8") {
    if (!ctx.exact_q || *ctx.exact_q != 1) throw ParameterError("cor8 is the q = 1 function");
    const auto r = corollary8_lp(sp, ctx.chi, ctx.p, ctx.precision, ctx.F);
    extra["slack"] = r.slack;
    return r.value;
  }
  throw ParameterError("method must be series, closed, integral or cor8");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Euler numbers, q-zeta functions and p-adic l-functions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "output format: text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--tol", opt.tol, "float tolerance");
  app.add_option("--prec", opt.prec, "p-adic precision M");
  app.add_option("--seed", opt.seed, "seed for randomized sweeps (fallback: QEULER_SEED)");
  app.add_option("--max-level", opt.max_level, "level cap for p-adic limits");
  app.add_option("--max-terms", opt.max_terms, "term cap for complex series");
  app.add_option("--jobs", opt.jobs, "worker threads for verify (0: all cores)");
  app.add_option("--config", opt.config_file, "key=value file with defaults for the flags above");
  app.add_flag("--timing", opt.timing, "include elapsed times in verify reports");

  unsigned n = 0;
  std::string q_text = "1", x_text, s_text = "0", range_text, kind;
  std::optional<std::string> x_opt;
  long F = 0, a = 0, p = 0;
  CharacterSpec chi_spec;
  std::string mode = "closed";
  bool show_angle = false;
  PadicLArgs pl;
  std::vector<std::string> identity_names;
  std::optional<long> verify_p;
  std::optional<std::string> verify_q;

  auto* euler = app.add_subcommand("euler", "E_{n,q}, or E_{n,q}(x) with --x");
  euler->add_option("n", n)->required();
  euler->add_option("--q", q_text, "q: a/b, float, a+bi, or padic:p:M:value");
  euler->add_option("--x", x_opt, "evaluate the polynomial at x (rational)");

  auto* euler_poly = app.add_subcommand("euler-poly", "E_{n,q}(x)");
  euler_poly->add_option("n", n)->required();
  euler_poly->add_option("--x", x_text)->required();
  euler_poly->add_option("--q", q_text);

  auto* gen = app.add_subcommand("gen-euler", "E_{n,chi,q}");
  gen->add_option("n", n)->required();
  gen->add_option("--q", q_text);
  gen->add_option("--F", F, "odd multiple of the modulus (default: the modulus)");
  add_character_options(gen, chi_spec);

  auto* zeta = app.add_subcommand("zeta", "zeta_{q,E}(s,x), or the n >= 1 series without --x");
  zeta->add_option("--s", s_text)->required();
  zeta->add_option("--x", x_opt);
  zeta->add_option("--q", q_text)->required();

  auto* lq = app.add_subcommand("lq", "l_q(s,chi)");
  lq->add_option("--s", s_text)->required();
  lq->add_option("--q", q_text)->required();
  add_character_options(lq, chi_spec);

  auto* partial = app.add_subcommand("partial-zeta", "H_q(s,a|F)");
  partial->add_option("--s", s_text)->required();
  partial->add_option("--a", a)->required();
  partial->add_option("--F", F)->required();
  partial->add_option("--q", q_text)->required();
  partial->add_option("--mode", mode)->check(CLI::IsMember({"closed", "direct"}));

  auto* padic_l = app.add_subcommand("padic-l", "l_{p,q}(s,chi)");
  padic_l->add_option("--s", pl.s, "s in Z_p (rational with p-free denominator)");
  padic_l->add_option("--q", pl.q, "rational q with |1 - q|_p < 1, or padic:p:M:value");
  padic_l->add_option("--p", pl.p);
  padic_l->add_option("--F", pl.F, "odd multiple of p and the modulus (default: lcm)");
  padic_l->add_option("--method", pl.method, "series, closed, integral or cor8")
      ->check(CLI::IsMember({"series", "closed", "integral", "cor8"}));
  add_character_options(padic_l, pl.chi);

  auto* teich = app.add_subcommand("teichmuller", "omega(a) in Z_p");
  teich->add_option("a", a)->required();
  teich->add_option("--p", p)->required();
  teich->add_flag("--angle", show_angle, "print <a> = a / omega(a) instead");

  auto* table = app.add_subcommand("table", "tables: euler, gen-euler, zeta, lq, padic-l, characters");
  table->add_option("kind", kind)->required()->check(CLI::IsMember({"euler", "gen-euler", "zeta", "lq", "padic-l", "characters"}));
  table->add_option("--n", range_text, "orders, e.g. 0..5");
  table->add_option("--s", s_text, "points, e.g. -3..0 or 0.5,1+2i");
  table->add_option("--x", x_opt);
  table->add_option("--q", q_text);
  table->add_option("--p", pl.p);
  table->add_option("--F", F);
  add_character_options(table, chi_spec);

  auto* verify = app.add_subcommand("verify", "run identity checks; 'all' or names");
  verify->add_option("identities", identity_names, "identity names (default: all)");
  verify->add_option("--p", verify_p);
  verify->add_option("--q", verify_q);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    RunConfig cfg = resolve_config(opt);
    const Printer out(cfg);

    if (euler->parsed() || euler_poly->parsed()) {
      const auto q = QParameter::parse(q_text);
      if (euler_poly->parsed()) x_opt = x_text;
      if (x_opt)
        out.scalar(euler_poly_q(n, parse_rational(*x_opt), q));
      else
        out.scalar(euler_number_q(n, q));
    } else if (gen->parsed()) {
      const auto chi = chi_spec.build();
      out.scalar(gen_euler_value(n, chi, QParameter::parse(q_text), F ? F : chi.modulus()));
    } else if (zeta->parsed()) {
      const Complex s = parse_complex(s_text);
      const auto r = x_opt ? zeta_qE(s, parse_rational(*x_opt).get_d(), float_q(q_text), budget_of(cfg))
                           : zeta_qE_at(s, float_q(q_text), budget_of(cfg));
      out.scalar(r.value, series_extra(r));
    } else if (lq->parsed()) {
      const auto r = l_q_series(parse_complex(s_text), chi_spec.build(), float_q(q_text), budget_of(cfg));
      out.scalar(r.value, series_extra(r));
    } else if (partial->parsed()) {
      const auto r = partial_zeta_Hq(parse_complex(s_text), a, F, float_q(q_text), budget_of(cfg),
                                     mode == "closed" ? PartialZetaMode::closed : PartialZetaMode::direct);
      out.scalar(r.value, series_extra(r));
    } else if (padic_l->parsed()) {
      const auto ctx = padic_context(pl, cfg);
      Json extra;
      const Padic v = eval_padic_l(ctx, parse_rational(pl.s), pl.method, cfg.max_level, extra);
      out.scalar(v, extra);
    } else if (teich->parsed()) {
      out.scalar(show_angle ? angle(a, p, cfg.prec) : teichmuller(a, p, cfg.prec));
    } else if (table->parsed()) {
      std::vector<std::string> header;
      std::vector<std::vector<Json>> rows;
      std::vector<std::vector<std::string>> text;
      if (kind == "characters") {
        header = {"index", "modulus", "exponents", "order", "conductor", "primitive"};
        long index = 0;
        for (const auto& chi : enumerate_characters(chi_spec.modulus)) {
          std::string exps;
          for (std::size_t i = 0; i < chi.exponents().size(); ++i) exps += (i ? ";" : "") + std::to_string(chi.exponents()[i]);
          rows.push_back({index, chi.modulus(), chi.exponents(), chi.order(), chi.conductor(), chi.is_primitive()});
          text.push_back({std::to_string(index), std::to_string(chi.modulus()), exps, std::to_string(chi.order()),
                          std::to_string(chi.conductor()), chi.is_primitive() ? "true" : "false"});
          ++index;
        }
      } else if (kind == "euler" || kind == "gen-euler") {
        if (range_text.empty()) throw ParameterError("--n is required");
        const auto q = QParameter::parse(q_text);
        const auto chi = chi_spec.build();
        header = {"n", "value"};
        for (unsigned k : parse_orders(range_text)) {
          Value v = kind == "gen-euler" ? gen_euler_value(k, chi, q, F ? F : chi.modulus())
                                        : (x_opt ? euler_poly_q(k, parse_rational(*x_opt), q) : euler_number_q(k, q));
          rows.push_back({k, to_json(v)});
          text.push_back({std::to_string(k), to_csv_cell(v)});
        }
      } else if (kind == "zeta" || kind == "lq") {
        const Complex qv = float_q(q_text);
        const auto chi = chi_spec.build();
        header = {"s", "value", "tail_bound"};
        for (Complex s : parse_points(s_text)) {
          const auto r = kind == "lq" ? l_q_series(s, chi, qv, budget_of(cfg))
                                      : (x_opt ? zeta_qE(s, parse_rational(*x_opt).get_d(), qv, budget_of(cfg))
                                               : zeta_qE_at(s, qv, budget_of(cfg)));
          rows.push_back({to_json(s), to_json(r.value), r.tail_bound});
          text.push_back({to_csv_cell(Value(s)), to_csv_cell(Value(r.value)), Json(r.tail_bound).dump()});
        }
      } else {  // padic-l
        if (range_text.empty()) throw ParameterError("--n is required");
        pl.q = q_text;
        pl.F = F;
        pl.chi = chi_spec;
        const auto ctx = padic_context(pl, cfg);
        header = {"n", "series", "closed"};
        for (unsigned k : parse_orders(range_text)) {
          if (k == 0) throw ParameterError("padic-l table needs n >= 1");
          const Padic series = l_pq(Padic::from_integer(-static_cast<long>(k), ctx.p, ctx.precision), ctx).value;
          const Padic closed = thm7b_rhs(k, ctx).value;
          rows.push_back({k, to_json(series), to_json(closed)});
          text.push_back({std::to_string(k), to_csv_cell(Value(series)), to_csv_cell(Value(closed))});
        }
      }
      out.table(header, rows, text);
    } else if (verify->parsed()) {
      std::vector<Identity> ids;
      if (identity_names.empty()) identity_names.push_back("all");
      for (const auto& name : identity_names) {
        if (name == "all") {
          for (Identity id : all_identities())
            if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
          continue;
        }
        const auto id = parse_identity(name);
        if (!id) throw ParameterError("unknown identity '" + name + "'");
        if (std::find(ids.begin(), ids.end(), *id) == ids.end()) ids.push_back(*id);
      }
      cfg.p = verify_p;
      cfg.q = verify_q;
      if (cfg.format == "csv") std::cout << report_csv_header() << (cfg.timing ? ",elapsed_ms" : "") << "\n";
      const auto summary = run_verification(ids, cfg, [&](const VerificationReport& r) {
        if (cfg.format == "csv")
          std::cout << report_to_csv(r, cfg) << "\n";
        else
          std::cout << report_to_json(r, cfg).dump() << "\n";
      });
      std::cout.flush();
      std::cerr << summary.passed << "/" << summary.total << " checks passed\n";
      return summary.passed == summary.total ? kOk : kFailure;
    }
    return kOk;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhausted& e) {
    std::cerr << "error: " << e.what() << " after " << e.terms() << " terms; partial sum " << to_string(Value(e.partial_sum()))
              << ", tail bound " << e.tail_bound() << "\n";
    return kFailure;
  } catch (const PrecisionError& e) {
    std::cerr << "error: " << e.what() << " (reached " << e.achieved_depth() << " digits)\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
