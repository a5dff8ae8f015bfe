#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tropcore/classify.hpp"

// Differential checks: each one recomputes a known identity of the analytic
// layer with an independent method and reports pass, fail or inconclusive.
namespace tropcore {

enum class Status : std::uint8_t { Pass, Fail, Inconclusive, Skipped };

std::string_view status_name(Status s);

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  nlohmann::json detail;
};

struct VerifyConfig {
  std::optional<std::size_t> horizon;
  std::size_t samples = 8;   // random vectors per orbit experiment
  std::size_t probes = 32;   // injectivity probes on the core
  std::size_t max_power = 8;
  std::size_t brute_limit = 7;  // largest n for cycle enumeration
  std::uint64_t seed = 1;
  bool mutate = false;  // fault injection for self-tests
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::Fail) == 0; }
  const CheckResult* find(std::string_view name) const;
};

/// Shared analysis of one max-plus matrix, computed once per suite.
struct Analysis {
  Matrix a;
  FrobeniusForm fnf;
  Spectrum spec;
  CoreDescription core;
  std::size_t horizon = 0;

  static Analysis of(const Matrix& a, std::optional<std::size_t> horizon = std::nullopt);
};

CheckResult check_power_associativity(const Matrix& a, std::size_t t_max = 12);
CheckResult check_star_fixed_point(const Matrix& a);
CheckResult check_kernels_agree(const Matrix& a);
CheckResult check_span_nesting(const Matrix& a, std::size_t t_max);
CheckResult check_extremal_reduction(const Matrix& a);
CheckResult check_cycle_mean_brute(const Matrix& a, bool mutate = false);
CheckResult check_critical_brute(const Matrix& a);
CheckResult check_cyclicity_brute(const Matrix& a);
CheckResult check_eigencones(const Analysis& x);
CheckResult check_reconstruction(const Analysis& x);
CheckResult check_power_spectrum(const Matrix& a, std::size_t t_max);
CheckResult check_core_forms(const Analysis& x);
CheckResult check_core_in_powers(const Analysis& x);
CheckResult check_core_action(const Analysis& x);
CheckResult check_eigencone_periodicity(const Analysis& x);
CheckResult check_sum_periodicity(const Analysis& x);
CheckResult check_finite_stabilization(const Analysis& x);
CheckResult check_column_law(const Analysis& x);
CheckResult check_support_profiles(const Analysis& x, std::size_t samples, std::uint64_t seed);
CheckResult check_implications(const ClassificationReport& r);
CheckResult check_robust_oracle(const Analysis& x, const ClassificationReport& r, std::size_t samples,
                                std::uint64_t seed);
CheckResult check_bijectivity(const Analysis& x, std::size_t probes, std::uint64_t seed, std::size_t t_max = 6);
CheckResult check_integer_theorem(const Analysis& x);
CheckResult check_power_periodicity(const Analysis& x);
CheckResult check_column_periodicity(const Analysis& x);
CheckResult check_maxmin_core(const Matrix& a);

/// Runs every check that applies to the matrix's semiring.
VerifyReport verify_suite(const Matrix& a, const VerifyConfig& config = {});

nlohmann::json verify_report_json(const VerifyReport& r);

}  // namespace tropcore
