#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "tropcore/matrix.hpp"

namespace tropcore {

using Rng = std::mt19937_64;

/// Finite entries p/q with q uniform in [1, max_denominator] and value
/// uniform on the grid of [-range, range].
struct EntryDistribution {
  long range = 3;
  long max_denominator = 1;
};

Scalar random_entry(Rng& rng, const EntryDistribution& dist);

/// Each entry finite with probability `density`.
Matrix random_matrix(Rng& rng, std::size_t n, double density, const EntryDistribution& dist);

/// Irreducible matrix. With `cyclic_blocks` > 1 the nodes are split into that
/// many groups and arcs only go from one group to the next, so the graph has
/// cyclicity divisible by the block count.
Matrix random_irreducible(Rng& rng, std::size_t n, double density, const EntryDistribution& dist,
                          std::size_t cyclic_blocks = 1);

/// Random matrix whose every column has a finite entry.
Matrix random_no_bottom_column(Rng& rng, std::size_t n, double density, const EntryDistribution& dist);

/// Integer entries in [lo, hi], bottom with probability 1 - density.
Matrix random_integer_matrix(Rng& rng, std::size_t n, double density, long lo, long hi);

/// Max-min matrix with entries drawn uniformly from `values`.
Matrix random_maxmin(Rng& rng, std::size_t n, const std::vector<Scalar>& values);

/// Six-element value set {0, 1/5, 2/5, 3/5, 4/5, 1}.
std::vector<Scalar> maxmin_value_set();

/// Random vector; with `full_support` every entry is finite, otherwise each
/// entry is finite with probability 1/2 and at least one is.
Vector random_vector(Rng& rng, std::size_t n, const EntryDistribution& dist, bool full_support);

}  // namespace tropcore
