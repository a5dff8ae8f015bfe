#include "tropcore/kernels.hpp"

#include <vector>

#ifdef TROPCORE_HAVE_OPENMP
#include <omp.h>
#endif

namespace tropcore::kernels {

bool parallel_available() noexcept {
#ifdef TROPCORE_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() noexcept {
#ifdef TROPCORE_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

// Inner product a_row (x) b_col with stride; max-plus avoids temporaries by
// reusing one mpq_class.
Scalar dot(Semiring s, std::size_t n, const Scalar* a, std::size_t a_stride, const Scalar* b,
           std::size_t b_stride) {
  if (s.kind() == SemiringKind::MaxPlus) {
    mpq_class best, tmp;
    bool found = false;
    for (std::size_t k = 0; k < n; ++k) {
      const Scalar& x = a[k * a_stride];
      const Scalar& y = b[k * b_stride];
      if (x.is_bottom() || y.is_bottom()) continue;
      mpq_add(tmp.get_mpq_t(), x.value().get_mpq_t(), y.value().get_mpq_t());
      if (!found || tmp > best) {
        best = tmp;
        found = true;
      }
    }
    return found ? Scalar(best) : Scalar::bottom();
  }
  Scalar best;
  for (std::size_t k = 0; k < n; ++k) {
    Scalar p = s.mul(a[k * a_stride], b[k * b_stride]);
    if (best < p) best = std::move(p);
  }
  return best;
}

void relax_row(Semiring s, std::size_t n, std::span<Scalar> m, std::size_t i, const Scalar& cik,
               const std::vector<Scalar>& row_k) {
  if (cik.is_bottom()) return;
  for (std::size_t j = 0; j < n; ++j) {
    if (row_k[j].is_bottom()) continue;
    Scalar p = s.mul(cik, row_k[j]);
    Scalar& cell = m[i * n + j];
    if (cell < p) cell = std::move(p);
  }
}

bool diagonal_bounded(Semiring s, std::size_t n, std::span<const Scalar> m) {
  const Scalar one = s.one();
  for (std::size_t i = 0; i < n; ++i)
    if (m[i * n + i] > one) return false;
  return true;
}

}  // namespace

namespace serial {

void multiply(Semiring s, std::size_t n, std::span<const Scalar> a, std::span<const Scalar> b,
              std::span<Scalar> out) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = dot(s, n, &a[i * n], 1, &b[j], n);
}

void apply(Semiring s, std::size_t n, std::span<const Scalar> a, std::span<const Scalar> x,
           std::span<Scalar> out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = dot(s, n, &a[i * n], 1, x.data(), 1);
}

bool closure(Semiring s, std::size_t n, std::span<Scalar> m) {
  std::vector<Scalar> row_k(n), col_k(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      row_k[j] = m[k * n + j];
      col_k[j] = m[j * n + k];
    }
    for (std::size_t i = 0; i < n; ++i) relax_row(s, n, m, i, col_k[i], row_k);
  }
  return diagonal_bounded(s, n, m);
}

}  // namespace serial

namespace parallel {

void multiply(Semiring s, std::size_t n, std::span<const Scalar> a, std::span<const Scalar> b,
              std::span<Scalar> out) {
  const long nn = static_cast<long>(n * n);
#pragma omp parallel for schedule(static)
  for (long ij = 0; ij < nn; ++ij) {
    const std::size_t i = static_cast<std::size_t>(ij) / n;
    const std::size_t j = static_cast<std::size_t>(ij) % n;
    out[i * n + j] = dot(s, n, &a[i * n], 1, &b[j], n);
  }
}

void apply(Semiring s, std::size_t n, std::span<const Scalar> a, std::span<const Scalar> x,
           std::span<Scalar> out) {
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < rows; ++i)
    out[i] = dot(s, n, &a[static_cast<std::size_t>(i) * n], 1, x.data(), 1);
}

bool closure(Semiring s, std::size_t n, std::span<Scalar> m) {
  std::vector<Scalar> row_k(n), col_k(n);
  const long rows = static_cast<long>(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < n; ++j) {
      row_k[j] = m[k * n + j];
      col_k[j] = m[j * n + k];
    }
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i)
      relax_row(s, n, m, static_cast<std::size_t>(i), col_k[static_cast<std::size_t>(i)], row_k);
  }
  return diagonal_bounded(s, n, m);
}

}  // namespace parallel

}  // namespace tropcore::kernels
