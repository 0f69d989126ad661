#pragma once

#include "qeuler/serialize.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qeuler {

enum class Identity {
  thm1,
  thm2,
  thm4,
  thm6,
  thm7b,
  thm7c,
  cor8,
  eq9,
  eq21,
  eq22,
  eq24prime,
  measure_additivity,
  measure_scaling,
  distribution_relation,
};

const std::vector<Identity>& all_identities();
std::string_view identity_name(Identity id);
/// The relation an identity checks, as a formula.
std::string_view identity_formula(Identity id);
std::optional<Identity> parse_identity(std::string_view name);

struct RunConfig {
  std::optional<double> tol;  // unset: each identity's declared tolerance
  long prec = 12;             // p-adic working precision M; congruences are checked mod p^(M-2)
  std::uint64_t seed = 0;
  long max_level = 64;
  long max_terms = 2'000'000;
  std::string format = "json";
  unsigned jobs = 0;  // 0: hardware concurrency
  std::optional<long> p;
  std::optional<std::string> q;
  bool timing = false;
};

enum class CheckKind { exact, tolerance, congruence };

struct VerificationReport {
  std::size_t index = 0;
  Identity identity = Identity::thm1;
  std::string domain;
  Json params;
  Json lhs;
  Json rhs;
  CheckKind check = CheckKind::exact;
  Json residual;        // exact: serialized LHS - RHS; tolerance: |LHS - RHS|; congruence: digits of agreement
  Json threshold;       // tolerance or required digits; null for exact checks
  bool pass = false;
  std::string error;    // set when evaluation threw
  double elapsed_ms = 0.0;
};

Json report_to_json(const VerificationReport& report, const RunConfig& config);
std::string report_csv_header();
std::string report_to_csv(const VerificationReport& report, const RunConfig& config);

struct VerificationSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
};

/// Runs every instance of the requested identities on a worker pool. The sink
/// receives reports in instance order from the calling thread. Throws
/// ParameterError when the configuration does not apply to a requested identity.
VerificationSummary run_verification(const std::vector<Identity>& identities, const RunConfig& config,
                                     const std::function<void(const VerificationReport&)>& sink);

}  // namespace qeuler
