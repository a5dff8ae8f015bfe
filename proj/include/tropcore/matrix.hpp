#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tropcore/semiring.hpp"

namespace tropcore {

class Vector {
 public:
  Vector() = default;
  /// Zero vector (all bottom).
  explicit Vector(std::size_t n, Semiring s = kMaxPlus) : semiring_(s), entries_(n) {}
  Vector(Semiring s, std::vector<Scalar> entries) : semiring_(s), entries_(std::move(entries)) {}
  Vector(Semiring s, std::initializer_list<Scalar> entries) : semiring_(s), entries_(entries) {}

  static Vector unit(std::size_t n, std::size_t i, Semiring s = kMaxPlus);

  std::size_t size() const noexcept { return entries_.size(); }
  Semiring semiring() const noexcept { return semiring_; }

  const Scalar& operator[](std::size_t i) const { return entries_[i]; }
  Scalar& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Scalar> entries() const noexcept { return entries_; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }

  std::vector<std::size_t> support() const;
  bool is_zero() const;
  /// Max entry (bottom for the zero vector).
  Scalar norm() const;

  std::string to_string() const;

  friend bool operator==(const Vector& a, const Vector& b) {
    return a.semiring_ == b.semiring_ && a.entries_ == b.entries_;
  }

 private:
  Semiring semiring_ = kMaxPlus;
  std::vector<Scalar> entries_;
};

/// Square matrix over one of the exact semirings, stored row-major.
class Matrix {
 public:
  Matrix() = default;
  /// All-bottom n x n matrix.
  explicit Matrix(std::size_t n, Semiring s = kMaxPlus) : n_(n), semiring_(s), data_(n * n) {}

  static Matrix identity(std::size_t n, Semiring s = kMaxPlus);
  static Matrix from_rows(Semiring s, const std::vector<std::vector<Scalar>>& rows);
  static Matrix from_rows(Semiring s, std::initializer_list<std::initializer_list<Scalar>> rows);

  std::size_t size() const noexcept { return n_; }
  Semiring semiring() const noexcept { return semiring_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

  std::span<const Scalar> data() const noexcept { return data_; }
  std::span<Scalar> data() noexcept { return data_; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  Vector column(std::size_t j) const;
  std::vector<Vector> columns() const;

  bool has_bottom_column() const;
  /// True when every finite entry is an integer.
  bool is_integer() const;

  std::string to_string() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.n_ == b.n_ && a.semiring_ == b.semiring_ && a.data_ == b.data_;
  }

 private:
  std::size_t n_ = 0;
  Semiring semiring_ = kMaxPlus;
  std::vector<Scalar> data_;
};

/// Finite set of nonzero, pairwise non-proportional, scaled vectors.
/// Vectors are scaled and deduplicated on insertion.
class GeneratingSet {
 public:
  GeneratingSet() = default;
  GeneratingSet(std::size_t dim, Semiring s) : dim_(dim), semiring_(s) {}
  GeneratingSet(std::size_t dim, Semiring s, std::span<const Vector> vectors);

  /// Adds v unless it is zero or proportional to a member. Returns whether it was added.
  bool add(const Vector& v);

  std::size_t dim() const noexcept { return dim_; }
  Semiring semiring() const noexcept { return semiring_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  bool empty() const noexcept { return vectors_.empty(); }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  const Vector& operator[](std::size_t i) const { return vectors_[i]; }

 private:
  std::size_t dim_ = 0;
  Semiring semiring_ = kMaxPlus;
  std::vector<Vector> vectors_;
};

Matrix multiply(const Matrix& a, const Matrix& b);
Vector apply(const Matrix& a, const Vector& x);
Matrix oplus(const Matrix& a, const Matrix& b);
Vector oplus(const Vector& a, const Vector& b);
Vector scale_by(const Scalar& lambda, const Vector& v);

/// A^t by repeated squaring.
Matrix power(const Matrix& a, std::size_t t);
/// A^t by t-1 successive products; reference path for `power`.
Matrix power_iterated(const Matrix& a, std::size_t t);

/// A* = I (+) A (+) A^2 (+) ...; throws Divergent when the series does not converge.
Matrix kleene_star(const Matrix& a);

/// A (x) lambda^{-1} entrywise (lambda finite).
Matrix normalized(const Matrix& a, const Scalar& lambda);

/// Principal solution of M (x) x <= b where M has the given columns:
/// x_j = min_i residual(m_ij, b_i). Columns with no constraint get bottom.
Vector principal_solution(std::span<const Vector> columns, const Vector& b);
Vector principal_solution(const Matrix& m, const Vector& b);
/// M (x) x for a column set.
Vector combine(std::span<const Vector> columns, const Vector& coefficients);

bool in_span(const Vector& v, std::span<const Vector> generators);
bool in_span(const Vector& v, const GeneratingSet& g);
/// span(inner) is a subset of span(outer).
bool span_includes(const GeneratingSet& outer, const GeneratingSet& inner);
bool span_equal(const GeneratingSet& a, const GeneratingSet& b);

/// Indices of a minimal generating subset, found by dropping members in input
/// order while the remaining ones generate them. Zero and repeated rays are
/// skipped first.
std::vector<std::size_t> extremal_indices(std::span<const Vector> vectors);
GeneratingSet extremal_reduction(const GeneratingSet& g);

/// Divides by the max entry (max-plus: subtracts it). Identity in max-min.
/// Throws Error for the zero vector.
Vector scaled(const Vector& v);
bool proportional(const Vector& a, const Vector& b);

GeneratingSet column_set(const Matrix& a);

}  // namespace tropcore
