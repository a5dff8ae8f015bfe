#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "tropcore/core.hpp"

// Brute-force ground truth used to cross-check the analytic layers.
namespace tropcore {

struct PeriodicityInfo {
  std::size_t period = 1;
  Scalar growth;  // factor gained over one period
  std::size_t defect = 0;
  bool horizon_exceeded = false;
};

struct OrbitTrace {
  Vector start;
  /// states[t] is A^t x scaled; A^t x = scales[t] (x) states[t]. Empty
  /// states mark a zero vector.
  std::vector<Vector> states;
  std::vector<Scalar> scales;
  std::optional<PeriodicityInfo> periodicity;
  std::optional<std::size_t> first_eigenvector_hit;
  bool horizon_exceeded = false;
  bool reached_zero = false;
};

/// Iterates x, A x, A^2 x, ... until a scaled state repeats or `horizon`
/// steps have been taken. Throws ZeroOrbit if the orbit reaches zero unless
/// `allow_zero` is set, in which case zero counts as a fixed state.
OrbitTrace orbit_simulate(const Matrix& a, const Vector& x, std::size_t horizon, bool allow_zero = false);

/// Period of the whole power sequence: smallest p with A^{t+p} = c (x) A^t
/// from some t on. nullopt when nothing repeats within the horizon.
std::optional<PeriodicityInfo> matrix_power_periodicity(const Matrix& a, std::size_t horizon);

/// Periodicity of the column sequence A^t e_j (zero columns count as periodic).
std::optional<PeriodicityInfo> column_periodicity(const Matrix& a, std::size_t j, std::size_t horizon);

struct SpanChain {
  std::vector<GeneratingSet> spans;  // spans[k] = span(A^{k+1})
  /// First t with span(A^t) = span(A^{t+1}); every later span coincides.
  std::optional<std::size_t> stabilization;
  bool nested = true;
};

SpanChain span_chain(const Matrix& a, std::size_t horizon);

/// Rigorous proof that the orbit of x is never ultimately periodic: two
/// entries that are finite infinitely often but grow at different rates.
struct DriftCertificate {
  std::size_t fast = 0;
  std::size_t slow = 0;
  Scalar fast_rate;
  Scalar slow_rate;
};

std::optional<DriftCertificate> drift_certificate(const Matrix& a, const Vector& x);

enum class Truth : std::uint8_t { True, False, NotApplicable, Inconclusive };

struct BruteRobustResult {
  Truth robust = Truth::NotApplicable;
  Truth orbit_periodic = Truth::NotApplicable;
  std::size_t vectors_tried = 0;
  std::size_t inconclusive = 0;
  std::optional<Vector> robust_counterexample;
  std::optional<Vector> periodic_counterexample;
};

inline constexpr std::size_t kSupportEnumerationLimit = 6;

/// Simulates orbits of all unit vectors, one random vector for every support
/// pattern when n <= kSupportEnumerationLimit, `samples` random finite
/// vectors and `samples` random vectors with random support.
BruteRobustResult brute_force_robust(const Matrix& a, std::size_t samples, std::size_t horizon, std::uint64_t seed);

struct Collision {
  Vector y;
  Vector y_prime;
  std::size_t t = 1;
};

struct CollisionResult {
  std::optional<Collision> collision;
  std::size_t probes = 0;
  bool constructed = false;  // built from offending spectral classes
};

/// Spectral classes mu -> nu with different Perron roots, if any.
std::optional<std::pair<std::size_t, std::size_t>> offending_spectral_pair(const FrobeniusForm& fnf,
                                                                           const Spectrum& spec);

CollisionResult collision_search(const Matrix& a, const FrobeniusForm& fnf, const Spectrum& spec,
                                 const CoreDescription& core, std::size_t probes, std::uint64_t seed);

/// Every elementary cycle, as a node list starting at its smallest node.
std::vector<std::vector<std::size_t>> elementary_cycles(const Digraph& g);

Scalar brute_max_cycle_mean(const Matrix& a);

struct BruteCritical {
  std::set<std::size_t> nodes;
  std::set<std::pair<std::size_t, std::size_t>> edges;
};

BruteCritical brute_critical(const Matrix& a);

/// gcd of the lengths of elementary cycles inside `component`.
std::size_t brute_cyclicity(const Digraph& g, const std::vector<std::size_t>& component);

/// Horizon used when none is given: n^2 + 3 n sigma + 16, overridable
/// through the TROPCORE_HORIZON environment variable.
std::size_t default_horizon(std::size_t n, std::size_t sigma_lambda);

}  // namespace tropcore
