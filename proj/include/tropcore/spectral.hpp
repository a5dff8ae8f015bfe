#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tropcore/graph.hpp"
#include "tropcore/matrix.hpp"

// Spectral theory of reducible max-plus matrices. Everything here requires
// the max-plus semiring and throws NotSupported otherwise.
namespace tropcore {

struct FrobeniusForm {
  SccPartition partition;
  ReducedGraph reduced;
  /// Nodes listed class by class; relabelling A by it gives a block lower
  /// triangular matrix with irreducible diagonal blocks.
  std::vector<std::size_t> permutation;
  std::vector<Scalar> class_rho;  // bottom for trivial classes
  std::vector<std::size_t> class_cyclicity;

  std::size_t class_count() const noexcept { return partition.classes.size(); }
  const std::vector<std::size_t>& nodes(std::size_t mu) const { return partition.classes[mu]; }
  bool is_trivial(std::size_t mu) const { return reduced.trivial[mu]; }
  bool accesses(std::size_t mu, std::size_t nu) const { return reduced.accesses(mu, nu); }
  Matrix permuted(const Matrix& a) const;
};

FrobeniusForm frobenius_normal_form(const Matrix& a);

/// Maximum cycle mean; bottom when the graph is acyclic.
Scalar max_cycle_mean(const Matrix& a);

struct CriticalGraph {
  Scalar rho;
  std::vector<std::size_t> nodes;
  Digraph edges;
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_cyclicity;
  std::size_t cyclicity = 1;

  bool contains(std::size_t i) const;
};

/// Throws AcyclicGraph when A has no cycle.
CriticalGraph critical_graph(const Matrix& a);

/// One on critical edges, bottom elsewhere (all bottom for acyclic A).
Matrix critical_matrix(const Matrix& a);

struct SpectralValue {
  Scalar rho;
  std::vector<std::size_t> spectral_classes;
  std::vector<std::size_t> m_nodes;  // M_rho: nodes accessing an (A,rho)-spectral class
  CriticalGraph critical;            // of A_rho
  std::size_t sigma = 1;
};

struct Spectrum {
  std::vector<bool> spectral;         // per class
  std::vector<SpectralValue> values;  // ascending rho
  std::size_t sigma_lambda = 1;

  bool empty() const noexcept { return values.empty(); }
  std::vector<Scalar> lambda() const;
  const SpectralValue* find(const Scalar& rho) const;
  const SpectralValue& at(const Scalar& rho) const;
};

Spectrum spectrum(const Matrix& a, const FrobeniusForm& fnf);
Spectrum spectrum(const Matrix& a);

/// (A - rho) on M_rho x M_rho, bottom elsewhere. Throws Error if rho is not in
/// the spectrum.
Matrix spectral_subproblem(const Matrix& a, const Spectrum& spec, const Scalar& rho);
Matrix spectral_subproblem(const Matrix& a, const Scalar& rho);

struct Eigencone {
  Scalar rho;
  GeneratingSet generators;
  /// Node whose star column produced each generator.
  std::vector<std::size_t> representatives;
};

Eigencone eigencone_basis(const Matrix& a, const Spectrum& spec, const Scalar& rho);
Eigencone eigencone_basis(const Matrix& a, const Scalar& rho);

/// Entries of x at the critical nodes of A_rho, in increasing node order.
Vector critical_restriction(const Vector& x, const CriticalGraph& crit);

/// Rebuilds an eigenvector of A for rho from its critical entries through
/// x_N = (B_NN)* B_NC x_C, B = A_rho.
Vector reconstruct_from_critical(const Matrix& a, const Spectrum& spec, const Scalar& rho, const Vector& x_c);

struct PowerSpectrumReport {
  std::size_t t = 1;
  bool lambda_ok = true;
  bool critical_ok = true;
  bool splitting_ok = true;
  std::vector<Scalar> expected_lambda;
  std::vector<Scalar> actual_lambda;

  bool ok() const noexcept { return lambda_ok && critical_ok && splitting_ok; }
};

PowerSpectrumReport power_spectrum_check(const Matrix& a, std::size_t t);

}  // namespace tropcore
