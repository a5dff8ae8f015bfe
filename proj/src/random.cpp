#include "tropcore/random.hpp"

#include <algorithm>
#include <numeric>

#include "tropcore/graph.hpp"

namespace tropcore {

namespace {

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

Scalar random_entry(Rng& rng, const EntryDistribution& dist) {
  const long den = std::uniform_int_distribution<long>(1, std::max(1L, dist.max_denominator))(rng);
  const long num = std::uniform_int_distribution<long>(-dist.range * den, dist.range * den)(rng);
  return Scalar(mpq_class(num, den));
}

Matrix random_matrix(Rng& rng, std::size_t n, double density, const EntryDistribution& dist) {
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng, density)) a(i, j) = random_entry(rng, dist);
  return a;
}

Matrix random_irreducible(Rng& rng, std::size_t n, double density, const EntryDistribution& dist,
                          std::size_t cyclic_blocks) {
  const std::size_t b = std::clamp<std::size_t>(cyclic_blocks, 1, n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::size_t> block(n);
  for (std::size_t k = 0; k < n; ++k) block[perm[k]] = k % b;
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((block[i] + 1) % b == block[j] && coin(rng, density)) a(i, j) = random_entry(rng, dist);
  auto link = [&](std::size_t u, std::size_t v) {
    if (a(u, v).is_bottom()) a(u, v) = random_entry(rng, dist);
  };
  // Path through perm, then close it while respecting the block order.
  for (std::size_t k = 0; k + 1 < n; ++k) link(perm[k], perm[k + 1]);
  if (b == 1) {
    link(perm[n - 1], perm[0]);
  } else {
    link(perm[b - 1], perm[0]);
    link(perm[n - 1], perm[n % b]);
  }
  return a;
}

Matrix random_no_bottom_column(Rng& rng, std::size_t n, double density, const EntryDistribution& dist) {
  Matrix a = random_matrix(rng, n, density, dist);
  for (std::size_t j = 0; j < n; ++j) {
    bool empty = true;
    for (std::size_t i = 0; i < n && empty; ++i) empty = a(i, j).is_bottom();
    if (empty) a(pick(rng, n), j) = random_entry(rng, dist);
  }
  return a;
}

Matrix random_integer_matrix(Rng& rng, std::size_t n, double density, long lo, long hi) {
  Matrix a(n);
  std::uniform_int_distribution<long> value(lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng, density)) a(i, j) = Scalar(value(rng));
  return a;
}

Matrix random_maxmin(Rng& rng, std::size_t n, const std::vector<Scalar>& values) {
  Matrix a(n, kMaxMin);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = values[pick(rng, values.size())];
  return a;
}

std::vector<Scalar> maxmin_value_set() {
  std::vector<Scalar> v{Scalar::bottom()};
  for (long k = 1; k <= 5; ++k) v.push_back(Scalar::ratio(k, 5));
  return v;
}

Vector random_vector(Rng& rng, std::size_t n, const EntryDistribution& dist, bool full_support) {
  Vector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (full_support || coin(rng, 0.5)) v[i] = random_entry(rng, dist);
  if (v.is_zero() && n > 0) v[pick(rng, n)] = random_entry(rng, dist);
  return v;
}

}  // namespace tropcore
