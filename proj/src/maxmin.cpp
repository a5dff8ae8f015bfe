#include "tropcore/maxmin.hpp"

#include <algorithm>
#include <map>

#include "tropcore/errors.hpp"

namespace tropcore {

MaxMinCore maxmin_core(const Matrix& a) {
  if (a.semiring().kind() != SemiringKind::MaxMin) throw NotSupported("maxmin_core needs a max-min matrix");
  auto less = [](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  };
  std::map<std::vector<Scalar>, std::size_t, decltype(less)> seen(less);
  std::vector<Matrix> powers;
  Matrix at = a;
  // Entries stay inside the finite set of entries of A and one, so this ends.
  for (std::size_t t = 1;; ++t) {
    if (t > 1) at = multiply(at, a);
    auto [it, fresh] = seen.emplace(std::vector<Scalar>(at.data().begin(), at.data().end()), t);
    if (!fresh) {
      MaxMinCore core;
      core.threshold = it->second;
      core.period = t - it->second;
      core.extremals = extremal_reduction(column_set(powers[core.threshold - 1]));
      return core;
    }
    powers.push_back(at);
  }
}

bool maxmin_fixed_point(const Matrix& a, std::size_t period, const Vector& z) {
  if (z.is_zero()) return true;
  return apply(power(a, period), z) == z;
}

bool maxmin_fixed_point_check(const MaxMinCore& core, const Matrix& a) {
  const Matrix ap = power(a, core.period);
  return std::all_of(core.extremals.vectors().begin(), core.extremals.vectors().end(),
                     [&](const Vector& z) { return apply(ap, z) == z; });
}

}  // namespace tropcore
