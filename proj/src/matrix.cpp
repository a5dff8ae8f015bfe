#include "tropcore/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "tropcore/errors.hpp"
#include "tropcore/kernels.hpp"

namespace tropcore {

namespace {

void require_same(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) throw DimensionMismatch("matrix dimensions differ");
  if (a.semiring() != b.semiring()) throw DimensionMismatch("matrix semirings differ");
}

void require_same(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector dimensions differ");
  if (a.semiring() != b.semiring()) throw DimensionMismatch("vector semirings differ");
}

}  // namespace

Vector Vector::unit(std::size_t n, std::size_t i, Semiring s) {
  Vector v(n, s);
  v[i] = s.one();
  return v;
}

std::vector<std::size_t> Vector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].is_finite()) out.push_back(i);
  return out;
}

bool Vector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& a) { return a.is_bottom(); });
}

Scalar Vector::norm() const {
  Scalar best;
  for (const auto& a : entries_)
    if (best < a) best = a;
  return best;
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ", ";
    out += format_scalar(entries_[i], semiring_);
  }
  return out + ")";
}

Matrix Matrix::identity(std::size_t n, Semiring s) {
  Matrix m(n, s);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s.one();
  return m;
}

Matrix Matrix::from_rows(Semiring s, const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(rows.size(), s);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw DimensionMismatch("matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!s.in_carrier(rows[i][j])) throw Error("entry outside the " + std::string(s.name()) + " carrier");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_rows(Semiring s, std::initializer_list<std::initializer_list<Scalar>> rows) {
  std::vector<std::vector<Scalar>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(s, v);
}

Vector Matrix::column(std::size_t j) const {
  std::vector<Scalar> col(n_);
  for (std::size_t i = 0; i < n_; ++i) col[i] = (*this)(i, j);
  return Vector(semiring_, std::move(col));
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(n_);
  for (std::size_t j = 0; j < n_; ++j) out.push_back(column(j));
  return out;
}

bool Matrix::has_bottom_column() const {
  for (std::size_t j = 0; j < n_; ++j) {
    bool all_bottom = true;
    for (std::size_t i = 0; i < n_ && all_bottom; ++i) all_bottom = (*this)(i, j).is_bottom();
    if (all_bottom) return true;
  }
  return false;
}

bool Matrix::is_integer() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& a) { return a.is_bottom() || a.is_integer(); });
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < n_; ++i) {
    out << '[';
    for (std::size_t j = 0; j < n_; ++j) out << (j ? " " : "") << format_scalar((*this)(i, j), semiring_);
    out << "]\n";
  }
  return out.str();
}

GeneratingSet::GeneratingSet(std::size_t dim, Semiring s, std::span<const Vector> vectors)
    : dim_(dim), semiring_(s) {
  for (const auto& v : vectors) add(v);
}

bool GeneratingSet::add(const Vector& v) {
  if (v.size() != dim_ || v.semiring() != semiring_) throw DimensionMismatch("generator does not fit the set");
  if (v.is_zero()) return false;
  Vector w = scaled(v);
  if (std::find(vectors_.begin(), vectors_.end(), w) != vectors_.end()) return false;
  vectors_.push_back(std::move(w));
  return true;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  Matrix out(a.size(), a.semiring());
  if (a.size() >= kernels::kParallelThreshold && kernels::parallel_available())
    kernels::parallel::multiply(a.semiring(), a.size(), a.data(), b.data(), out.data());
  else
    kernels::serial::multiply(a.semiring(), a.size(), a.data(), b.data(), out.data());
  return out;
}

Vector apply(const Matrix& a, const Vector& x) {
  if (a.size() != x.size()) throw DimensionMismatch("vector length does not match matrix");
  if (a.semiring() != x.semiring()) throw DimensionMismatch("vector semiring does not match matrix");
  std::vector<Scalar> out(a.size());
  if (a.size() >= kernels::kParallelThreshold && kernels::parallel_available())
    kernels::parallel::apply(a.semiring(), a.size(), a.data(), x.entries(), out);
  else
    kernels::serial::apply(a.semiring(), a.size(), a.data(), x.entries(), out);
  return Vector(a.semiring(), std::move(out));
}

Matrix oplus(const Matrix& a, const Matrix& b) {
  require_same(a, b);
  Matrix out = a;
  for (std::size_t k = 0; k < out.data().size(); ++k)
    if (out.data()[k] < b.data()[k]) out.data()[k] = b.data()[k];
  return out;
}

Vector oplus(const Vector& a, const Vector& b) {
  require_same(a, b);
  Vector out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (out[i] < b[i]) out[i] = b[i];
  return out;
}

Vector scale_by(const Scalar& lambda, const Vector& v) {
  Vector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = v.semiring().mul(lambda, v[i]);
  return out;
}

Matrix power(const Matrix& a, std::size_t t) {
  if (t == 0) throw Error("matrix power exponent must be positive");
  Matrix result;
  Matrix base = a;
  bool have = false;
  while (t > 0) {
    if (t & 1U) {
      result = have ? multiply(result, base) : base;
      have = true;
    }
    t >>= 1U;
    if (t > 0) base = multiply(base, base);
  }
  return result;
}

Matrix power_iterated(const Matrix& a, std::size_t t) {
  if (t == 0) throw Error("matrix power exponent must be positive");
  Matrix result = a;
  for (std::size_t k = 1; k < t; ++k) result = multiply(result, a);
  return result;
}

Matrix kleene_star(const Matrix& a) {
  Matrix plus = a;
  const bool ok = a.size() >= kernels::kParallelThreshold && kernels::parallel_available()
                      ? kernels::parallel::closure(a.semiring(), a.size(), plus.data())
                      : kernels::serial::closure(a.semiring(), a.size(), plus.data());
  if (!ok) throw Divergent("Kleene star diverges: a cycle has weight above one");
  return oplus(Matrix::identity(a.size(), a.semiring()), plus);
}

Matrix normalized(const Matrix& a, const Scalar& lambda) {
  Matrix out = a;
  for (auto& x : out.data()) x = a.semiring().divide(x, lambda);
  return out;
}

Vector principal_solution(std::span<const Vector> columns, const Vector& b) {
  std::vector<Scalar> x(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    require_same(columns[j], b);
    std::optional<Scalar> best;
    for (std::size_t i = 0; i < b.size(); ++i) {
      auto r = b.semiring().residual(columns[j][i], b[i]);
      if (r && (!best || *r < *best)) best = std::move(r);
    }
    x[j] = best ? *best : Scalar::bottom();
  }
  return Vector(b.semiring(), std::move(x));
}

Vector principal_solution(const Matrix& m, const Vector& b) {
  const auto cols = m.columns();
  return principal_solution(cols, b);
}

Vector combine(std::span<const Vector> columns, const Vector& coefficients) {
  if (columns.size() != coefficients.size()) throw DimensionMismatch("coefficient count differs from column count");
  if (columns.empty()) throw DimensionMismatch("empty column set has no dimension");
  Vector out(columns.front().size(), columns.front().semiring());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (coefficients[j].is_bottom()) continue;
    out = oplus(out, scale_by(coefficients[j], columns[j]));
  }
  return out;
}

bool in_span(const Vector& v, std::span<const Vector> generators) {
  if (generators.empty()) return v.is_zero();
  return combine(generators, principal_solution(generators, v)) == v;
}

bool in_span(const Vector& v, const GeneratingSet& g) {
  if (g.empty()) return v.is_zero();
  return in_span(v, std::span<const Vector>(g.vectors()));
}

bool span_includes(const GeneratingSet& outer, const GeneratingSet& inner) {
  return std::all_of(inner.vectors().begin(), inner.vectors().end(),
                     [&](const Vector& v) { return in_span(v, outer); });
}

bool span_equal(const GeneratingSet& a, const GeneratingSet& b) {
  return span_includes(a, b) && span_includes(b, a);
}

std::vector<std::size_t> extremal_indices(std::span<const Vector> vectors) {
  std::vector<std::size_t> candidates;
  std::vector<Vector> reps;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].is_zero()) continue;
    Vector w = scaled(vectors[i]);
    if (std::find(reps.begin(), reps.end(), w) != reps.end()) continue;
    candidates.push_back(i);
    reps.push_back(std::move(w));
  }
  std::vector<bool> alive(candidates.size(), true);
  std::vector<Vector> others;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    others.clear();
    for (std::size_t d = 0; d < candidates.size(); ++d)
      if (d != c && alive[d]) others.push_back(reps[d]);
    if (in_span(reps[c], others)) alive[c] = false;
  }
  std::vector<std::size_t> kept;
  for (std::size_t c = 0; c < candidates.size(); ++c)
    if (alive[c]) kept.push_back(candidates[c]);
  return kept;
}

GeneratingSet extremal_reduction(const GeneratingSet& g) {
  GeneratingSet out(g.dim(), g.semiring());
  for (std::size_t i : extremal_indices(g.vectors())) out.add(g[i]);
  return out;
}

Vector scaled(const Vector& v) {
  if (v.is_zero()) throw Error("cannot scale the zero vector");
  if (!v.semiring().has_division()) return v;
  const Scalar m = v.norm();
  Vector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = v.semiring().divide(v[i], m);
  return out;
}

bool proportional(const Vector& a, const Vector& b) {
  require_same(a, b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return scaled(a) == scaled(b);
}

GeneratingSet column_set(const Matrix& a) {
  const auto cols = a.columns();
  return GeneratingSet(a.size(), a.semiring(), cols);
}

}  // namespace tropcore
