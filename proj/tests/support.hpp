#pragma once

#include <doctest.h>

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tropcore/io.hpp"
#include "tropcore/matrix.hpp"
#include "tropcore/semiring.hpp"

namespace doctest {
template <>
struct StringMaker<tropcore::Scalar> {
  static String convert(const tropcore::Scalar& a) { return tropcore::format_scalar(a, tropcore::kMaxPlus).c_str(); }
};
template <>
struct StringMaker<tropcore::Vector> {
  static String convert(const tropcore::Vector& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<tropcore::Matrix> {
  static String convert(const tropcore::Matrix& a) { return a.to_string().c_str(); }
};
}  // namespace doctest

namespace testing {

using tropcore::Matrix;
using tropcore::Scalar;
using tropcore::Semiring;
using tropcore::Vector;

inline Scalar sc(const char* text, Semiring s = tropcore::kMaxPlus) { return tropcore::parse_scalar(text, s); }

inline Matrix mat(std::initializer_list<std::initializer_list<const char*>> rows, Semiring s = tropcore::kMaxPlus) {
  std::vector<std::vector<Scalar>> out;
  for (auto r : rows) {
    out.emplace_back();
    for (const char* e : r) out.back().push_back(sc(e, s));
  }
  return Matrix::from_rows(s, out);
}

inline Vector vec(std::initializer_list<const char*> entries, Semiring s = tropcore::kMaxPlus) {
  std::vector<Scalar> out;
  for (const char* e : entries) out.push_back(sc(e, s));
  return Vector(s, std::move(out));
}

// Naive max-plus arithmetic on plain optionals, kept apart from the library.
using Q = std::optional<mpq_class>;

inline Q q(const Scalar& a) { return a.is_bottom() ? Q{} : Q{a.value()}; }
inline Scalar back(const Q& a) { return a ? Scalar(*a) : Scalar::bottom(); }
inline Q qmax(const Q& a, const Q& b) {
  if (!a) return b;
  if (!b) return a;
  return *a < *b ? b : a;
}
inline Q qsum(const Q& a, const Q& b) {
  if (!a || !b) return {};
  return Q{*a + *b};
}

using QMatrix = std::vector<std::vector<Q>>;

inline QMatrix qm(const Matrix& a) {
  QMatrix m(a.size(), std::vector<Q>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = q(a(i, j));
  return m;
}

inline QMatrix qmul(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size();
  QMatrix c(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] = qmax(c[i][j], qsum(a[i][k], b[k][j]));
  return c;
}

inline Matrix from_q(const QMatrix& m) {
  Matrix a(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) a(i, j) = back(m[i][j]);
  return a;
}

inline std::vector<Q> qapply(const QMatrix& a, const std::vector<Q>& x) {
  std::vector<Q> y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < a.size(); ++k) y[i] = qmax(y[i], qsum(a[i][k], x[k]));
  return y;
}

inline std::vector<Q> qv(const Vector& v) {
  std::vector<Q> out;
  for (const auto& x : v) out.push_back(q(x));
  return out;
}

/// Largest weight over closed walks of length k through i, for all k <= n,
/// divided by k: the maximum cycle mean.
inline Scalar naive_cycle_mean(const Matrix& a) {
  const QMatrix base = qm(a);
  QMatrix p = base;
  Q best;
  for (std::size_t k = 1; k <= a.size(); ++k) {
    if (k > 1) p = qmul(p, base);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (p[i][i]) best = qmax(best, Q{*p[i][i] / mpq_class(static_cast<long>(k))});
  }
  return back(best);
}

/// I (+) A (+) ... (+) A^{n-1}; valid when no cycle is positive.
inline Matrix naive_star(const Matrix& a) {
  const std::size_t n = a.size();
  const QMatrix base = qm(a);
  QMatrix acc(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i) acc[i][i] = Q{mpq_class(0)};
  QMatrix p = acc;
  for (std::size_t k = 1; k < std::max<std::size_t>(n, 1); ++k) {
    p = qmul(p, base);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc[i][j] = qmax(acc[i][j], p[i][j]);
  }
  return from_q(acc);
}

/// gcd of the lengths k <= n of closed walks inside `nodes` (0 if none).
inline std::size_t naive_cyclicity(const Matrix& a, const std::vector<std::size_t>& nodes) {
  const std::size_t m = nodes.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m)), p;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) adj[i][j] = a(nodes[i], nodes[j]).is_finite();
  p = adj;
  std::size_t g = 0;
  for (std::size_t k = 1; k <= m; ++k) {
    if (k > 1) {
      std::vector<std::vector<bool>> next(m, std::vector<bool>(m));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < m; ++l)
          if (p[i][l])
            for (std::size_t j = 0; j < m; ++j) next[i][j] = next[i][j] || adj[l][j];
      p = std::move(next);
    }
    for (std::size_t i = 0; i < m; ++i)
      if (p[i][i]) {
        g = std::gcd(g, k);
        break;
      }
  }
  return g;
}

/// Hand-rolled generator for property tests: entries p/q with |p/q| <= range.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

  Scalar rational(long range = 4, long max_den = 3) {
    const long den = integer(1, max_den);
    return Scalar(mpq_class(integer(-range * den, range * den), den));
  }
  Scalar entry(double density, long range = 4, long max_den = 3) {
    return coin(density) ? rational(range, max_den) : Scalar::bottom();
  }
  Matrix matrix(std::size_t n, double density, long range = 4, long max_den = 3) {
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(density, range, max_den);
    return a;
  }
  Vector vector(std::size_t n, double density) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = entry(density);
    if (v.is_zero()) v[integer(0, static_cast<long>(n) - 1)] = rational();
    return v;
  }
  /// Strongly connected: nodes are dealt into `blocks` groups visited in a
  /// ring, and arcs only go from one group to the next. `blocks` must divide n.
  Matrix irreducible(std::size_t n, double density, std::size_t blocks = 1) {
    if (n % blocks != 0) blocks = 1;
    std::vector<std::size_t> group(n);
    for (std::size_t i = 0; i < n; ++i) group[i] = i % blocks;
    Matrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, (i + 1) % n) = rational();
      for (std::size_t j = 0; j < n; ++j)
        if (group[j] == (group[i] + 1) % blocks && coin(density)) a(i, j) = rational();
    }
    return a;
  }
  Matrix maxmin(std::size_t n) {
    Matrix a(n, tropcore::kMaxMin);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a(i, j) = tropcore::kMaxMin.from_rational(mpq_class(integer(0, 5), 5));
    return a;
  }
};

}  // namespace testing
