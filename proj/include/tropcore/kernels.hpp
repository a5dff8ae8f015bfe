#pragma once

#include <cstddef>
#include <span>

#include "tropcore/semiring.hpp"

// Dense inner loops. Every kernel has a serial reference and an OpenMP
// variant producing identical results; `tropcore::multiply` and friends pick
// the OpenMP path for n >= kParallelThreshold.
namespace tropcore::kernels {

inline constexpr std::size_t kParallelThreshold = 48;

bool parallel_available() noexcept;
int max_threads() noexcept;

namespace serial {

/// out = a (x) b for n x n row-major operands; out must not alias.
void multiply(Semiring s, std::size_t n, std::span<const Scalar> a, std::span<const Scalar> b,
              std::span<Scalar> out);
/// out = a (x) x.
void apply(Semiring s, std::size_t n, std::span<const Scalar> a, std::span<const Scalar> x,
           std::span<Scalar> out);
/// In-place Floyd-Warshall closure: m becomes A+ = A (+) A^2 (+) ... Returns
/// false when some diagonal entry exceeds one (a cycle heavier than one).
bool closure(Semiring s, std::size_t n, std::span<Scalar> m);

}  // namespace serial

namespace parallel {

void multiply(Semiring s, std::size_t n, std::span<const Scalar> a, std::span<const Scalar> b,
              std::span<Scalar> out);
void apply(Semiring s, std::size_t n, std::span<const Scalar> a, std::span<const Scalar> x,
           std::span<Scalar> out);
bool closure(Semiring s, std::size_t n, std::span<Scalar> m);

}  // namespace parallel

}  // namespace tropcore::kernels
