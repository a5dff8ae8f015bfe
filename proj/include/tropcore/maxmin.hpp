#pragma once

#include <cstddef>

#include "tropcore/matrix.hpp"

namespace tropcore {

/// Core of a max-min matrix: A^{T+p} = A^T and core(A) = span(A^T).
struct MaxMinCore {
  std::size_t threshold = 1;
  std::size_t period = 1;
  GeneratingSet extremals;
};

MaxMinCore maxmin_core(const Matrix& a);

/// Every extremal z satisfies A^p z = z.
bool maxmin_fixed_point_check(const MaxMinCore& core, const Matrix& a);

/// A^p z = z for a single vector.
bool maxmin_fixed_point(const Matrix& a, std::size_t period, const Vector& z);

}  // namespace tropcore
