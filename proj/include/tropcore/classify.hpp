#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include <json.hpp>

#include "tropcore/oracle.hpp"

namespace tropcore {

std::string_view truth_name(Truth t);

struct Verdict {
  Truth value = Truth::NotApplicable;
  nlohmann::json witness;  // null when there is nothing to show
  bool empirical = false;

  bool is_true() const noexcept { return value == Truth::True; }
  bool is_false() const noexcept { return value == Truth::False; }
};

struct ClassificationReport {
  Verdict irreducible;
  Verdict ultimately_periodic;
  Verdict robust;
  Verdict orbit_periodic;
  Verdict column_periodic;
  Verdict core_robust;
  Verdict core_periodic;
  Verdict weakly_stable;
  Verdict core_weakly_stable;
  Verdict bijective_on_core;
  Verdict finite_stabilization;
  std::optional<Verdict> integer_generators;
};

struct ClassifyOptions {
  std::optional<std::size_t> horizon;  // default_horizon when unset
  bool column_periodicity = true;
};

Verdict is_irreducible(const FrobeniusForm& fnf);
Verdict is_ultimately_periodic(const FrobeniusForm& fnf);
Verdict is_robust(const Matrix& a, const FrobeniusForm& fnf, const Spectrum& spec);
Verdict is_core_robust(const Matrix& a, const Spectrum& spec, const CoreDescription& core);
Verdict is_core_periodic(const CoreDescription& core);
Verdict is_orbit_periodic(const Matrix& a, const FrobeniusForm& fnf, const Spectrum& spec,
                          const CoreDescription& core);
Verdict is_weakly_stable(const Matrix& a, const FrobeniusForm& fnf, const Spectrum& spec);
Verdict is_bijective_on_core(const FrobeniusForm& fnf, const Spectrum& spec);
Verdict is_bijective_on_core(const Matrix& a);
Verdict finite_stabilization_verdict(const FrobeniusForm& fnf, const Spectrum& spec);
/// Oracle-only: every column sequence A^t e_j repeats up to scaling.
Verdict column_periodic_verdict(const Matrix& a, std::size_t horizon);
/// NotApplicable unless every finite entry is an integer.
Verdict integer_generator_check(const Matrix& a, const CoreDescription& core);

ClassificationReport classify(const Matrix& a, const ClassifyOptions& options = {});

}  // namespace tropcore
