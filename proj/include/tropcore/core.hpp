#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcore/spectral.hpp"

namespace tropcore {

struct CoreDescription {
  std::size_t sigma_lambda = 1;
  std::vector<Scalar> lambda;  // spectrum of A, ascending
  /// Eigencones of A^sigma_lambda, one per entry of `lambda` (their `rho`
  /// field holds sigma_lambda * rho).
  std::vector<Eigencone> per_eigenvalue;
  GeneratingSet extremals;
  /// Position in `lambda` of the eigenvalue each extremal belongs to.
  std::vector<std::size_t> extremal_eigenvalue;
  /// A (x) extremals[k] is proportional to extremals[action[k]] with factor growth[k].
  std::vector<std::size_t> action;
  std::vector<Scalar> growth;
};

CoreDescription core_basis(const Matrix& a);
CoreDescription core_basis(const Matrix& a, const Spectrum& spec);

bool core_membership(const Vector& v, const CoreDescription& core);

struct ActionCycle {
  std::vector<std::size_t> members;
  Scalar growth;  // product of the growth factors along the cycle
};

std::vector<ActionCycle> core_action_cycles(const CoreDescription& core);
bool action_is_identity(const CoreDescription& core);

/// All nontrivial classes are spectral.
bool finite_stabilization(const FrobeniusForm& fnf, const Spectrum& spec);
bool finite_stabilization(const Matrix& a);

enum class ClassSupport { Full, Empty, Partial };

struct SupportProfile {
  std::vector<ClassSupport> per_class;
  bool final_classes_spectral = true;

  bool has_partial() const;
};

/// Support of z against the classes of the matrix `fnf` and `spec` describe.
SupportProfile support_profile(const Vector& z, const FrobeniusForm& fnf, const Spectrum& spec);

/// V(A^t, rho^t) for t = 1..t_max.
std::vector<Eigencone> eigencone_sequence(const Matrix& a, const Scalar& rho, std::size_t t_max);

/// Sum of all eigencones of A: V^Sigma(A).
GeneratingSet eigencone_sum(const Matrix& a);
GeneratingSet eigencone_sum(const Matrix& a, const Spectrum& spec);

/// Sum over rho of V(A^sigma_rho, rho^sigma_rho).
GeneratingSet eigencone_sum_per_sigma(const Matrix& a, const Spectrum& spec);

}  // namespace tropcore
