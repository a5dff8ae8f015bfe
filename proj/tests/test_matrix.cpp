#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "tropcore/errors.hpp"
#include "tropcore/kernels.hpp"

using namespace tropcore;
using testing::Gen;
using testing::mat;
using testing::vec;

namespace {

GeneratingSet gen(std::initializer_list<Vector> vs) {
  const std::vector<Vector> v(vs);
  return GeneratingSet(v.front().size(), v.front().semiring(), v);
}

}  // namespace

TEST_CASE("products") {
  const Matrix a = mat({{"1/2", "-inf", "3"}, {"0", "2", "-inf"}, {"-inf", "-1", "-inf"}});
  CHECK(multiply(Matrix::identity(3), a) == a);
  CHECK(multiply(a, Matrix::identity(3)) == a);

  const Matrix swap = mat({{"-inf", "0"}, {"0", "-inf"}});
  CHECK(multiply(swap, swap) == Matrix::identity(2));
  const Matrix lower = mat({{"0", "-inf"}, {"0", "0"}});
  CHECK(multiply(lower, lower) == lower);
}

TEST_CASE("powers") {
  const Matrix swap = mat({{"-inf", "0"}, {"0", "-inf"}});
  CHECK(power(swap, 1) == swap);
  CHECK(power(swap, 2) == Matrix::identity(2));
  CHECK(power(mat({{"-inf", "2"}, {"4", "-inf"}}), 2) == mat({{"6", "-inf"}, {"-inf", "6"}}));
  CHECK_THROWS_AS(power(swap, 0), Error);
}

TEST_CASE("Kleene star") {
  CHECK(kleene_star(Matrix(3)) == Matrix::identity(3));
  CHECK(kleene_star(mat({{"-inf", "0"}, {"0", "-inf"}})) == mat({{"0", "0"}, {"0", "0"}}));
  CHECK_THROWS_AS(kleene_star(mat({{"1", "-inf"}, {"0", "0"}})), Divergent);
  const Matrix chain = mat({{"-inf", "-1", "-inf"}, {"-inf", "-inf", "2"}, {"-inf", "-inf", "-inf"}});
  CHECK(kleene_star(chain) == mat({{"0", "-1", "1"}, {"-inf", "0", "2"}, {"-inf", "-inf", "0"}}));
}

TEST_CASE("principal solution") {
  const Vector b = vec({"2", "-inf", "-1/3"});
  CHECK(principal_solution(Matrix::identity(3), b) == b);
  CHECK(principal_solution(mat({{"0", "0"}, {"-inf", "0"}}), vec({"0", "0"})) == vec({"0", "0"}));
  const std::vector<Vector> one_column{vec({"0", "1"})};
  CHECK(principal_solution(one_column, vec({"0", "0"})) == vec({"-1"}));
  const std::vector<Vector> unconstrained{vec({"-inf", "-inf"})};
  CHECK(principal_solution(unconstrained, vec({"0", "0"})) == vec({"-inf"}));
}

TEST_CASE("span membership") {
  const GeneratingSet g = gen({vec({"1", "0"}), vec({"-inf", "0"})});
  CHECK(in_span(vec({"1", "0"}), g));
  CHECK(in_span(vec({"1", "1"}), g));
  CHECK_FALSE(in_span(vec({"0", "1"}), gen({vec({"0", "0"})})));
  CHECK(in_span(Vector(2), g));
}

TEST_CASE("span equality") {
  const GeneratingSet g = gen({vec({"1", "0"}), vec({"-inf", "0"})});
  CHECK(span_equal(g, g));
  const std::vector<Vector> pair{vec({"0", "0"}), vec({"-1", "-1"})};
  CHECK(span_equal(gen({vec({"0", "0"})}), GeneratingSet(2, kMaxPlus, pair)));
  CHECK_FALSE(span_equal(gen({vec({"0", "-inf"})}), gen({vec({"-inf", "0"})})));
}

TEST_CASE("extremal reduction") {
  const std::vector<Vector> prop{vec({"0", "0"}), vec({"-1", "-1"})};
  CHECK(extremal_indices(prop) == std::vector<std::size_t>{0});

  const std::vector<Vector> three{vec({"0", "-inf"}), vec({"-inf", "0"}), vec({"0", "0"})};
  const GeneratingSet reduced = extremal_reduction(GeneratingSet(2, kMaxPlus, three));
  REQUIRE(reduced.size() == 2);
  CHECK(reduced[0] == vec({"0", "-inf"}));
  CHECK(reduced[1] == vec({"-inf", "0"}));

  const GeneratingSet disjoint = gen({vec({"0", "-inf"}), vec({"-inf", "0"})});
  CHECK(extremal_reduction(disjoint).vectors() == disjoint.vectors());
}

TEST_CASE("max-min extremal reduction keeps the span") {
  const std::vector<Vector> vs{vec({"1", "4/5", "1/5"}, kMaxMin), vec({"1/5", "1/5", "1"}, kMaxMin),
                               vec({"1", "4/5", "1"}, kMaxMin)};
  const GeneratingSet g(3, kMaxMin, vs);
  const GeneratingSet r = extremal_reduction(g);
  CHECK(r.size() < g.size());
  CHECK(span_equal(g, r));
}

TEST_CASE("scaling") {
  CHECK(scaled(vec({"3", "1"})) == vec({"0", "-2"}));
  CHECK(scaled(vec({"0", "0"})) == vec({"0", "0"}));
  CHECK(scaled(vec({"-inf", "5"})) == vec({"-inf", "0"}));
  CHECK_THROWS_AS(scaled(Vector(2)), Error);
  CHECK(proportional(vec({"3", "1"}), vec({"2", "0"})));
  CHECK_FALSE(proportional(vec({"3", "1"}), vec({"2", "1"})));
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(multiply(Matrix(2), Matrix(3)), DimensionMismatch);
  CHECK_THROWS_AS(apply(Matrix(2), Vector(3)), DimensionMismatch);
  CHECK_THROWS_AS(multiply(Matrix(2), Matrix(2, kMaxMin)), Error);
}

TEST_CASE("matrix predicates") {
  CHECK(mat({{"0", "-inf"}, {"1", "-inf"}}).has_bottom_column());
  CHECK_FALSE(mat({{"0", "-inf"}, {"1", "2"}}).has_bottom_column());
  CHECK(mat({{"0", "-inf"}, {"1", "2"}}).is_integer());
  CHECK_FALSE(mat({{"1/2"}}).is_integer());
}

TEST_CASE("product agrees with the naive triple loop") {
  Gen g(5);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 6));
    const Matrix a = g.matrix(n, 0.6), b = g.matrix(n, 0.6);
    CHECK(multiply(a, b) == testing::from_q(testing::qmul(testing::qm(a), testing::qm(b))));
    const Vector x = g.vector(n, 0.7);
    CHECK(apply(a, x).entries().size() == n);
    const auto y = testing::qapply(testing::qm(a), testing::qv(x));
    for (std::size_t i = 0; i < n; ++i) CHECK(apply(a, x)[i] == testing::back(y[i]));
  }
}

TEST_CASE("squaring agrees with iterated products") {
  Gen g(6);
  for (int k = 0; k < 40; ++k) {
    const Matrix a = g.matrix(static_cast<std::size_t>(g.integer(1, 5)), 0.6);
    for (std::size_t t = 1; t <= 12; ++t) CHECK(power(a, t) == power_iterated(a, t));
  }
}

TEST_CASE("star is a fixed point and matches the finite series") {
  Gen g(7);
  int convergent = 0;
  for (int k = 0; k < 200; ++k) {
    const Matrix a = g.matrix(static_cast<std::size_t>(g.integer(1, 5)), 0.5, 3, 2);
    const Scalar rho = testing::naive_cycle_mean(a);
    if (rho.is_finite() && rho.value() > 0) {
      CHECK_THROWS_AS(kleene_star(a), Divergent);
      continue;
    }
    ++convergent;
    const Matrix s = kleene_star(a);
    CHECK(oplus(multiply(a, s), Matrix::identity(a.size())) == s);
    CHECK(s == testing::naive_star(a));
  }
  CHECK(convergent > 50);
}

TEST_CASE("principal solution is the greatest subsolution") {
  Gen g(8);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    const Matrix m = g.matrix(n, 0.6);
    const Vector b = g.vector(n, 0.8);
    const Vector x = principal_solution(m, b);
    const Vector mx = apply(m, x);
    for (std::size_t i = 0; i < n; ++i) CHECK(mx[i] <= b[i]);
    // Any subsolution lies below x.
    for (int trial = 0; trial < 5; ++trial) {
      const Vector y = g.vector(n, 0.8);
      const Vector my = apply(m, y);
      bool sub = true;
      for (std::size_t i = 0; i < n; ++i) sub = sub && my[i] <= b[i];
      if (!sub) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!m.column(j).is_zero()) CHECK(y[j] <= x[j]);
    }
  }
}

TEST_CASE("membership certificate reproduces the vector") {
  Gen g(9);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    const Matrix m = g.matrix(n, 0.6);
    const std::vector<Vector> cols = m.columns();
    Vector coeff(n);
    for (std::size_t j = 0; j < n; ++j) coeff[j] = g.entry(0.6);
    const Vector inside = combine(cols, coeff);
    CHECK(in_span(inside, cols));
    CHECK(combine(cols, principal_solution(cols, inside)) == inside);
    const Vector other = g.vector(n, 0.8);
    CHECK(in_span(other, cols) == (combine(cols, principal_solution(cols, other)) == other));
  }
}

TEST_CASE("extremal reduction is idempotent and keeps the span") {
  Gen g(10);
  for (Semiring s : {kMaxPlus, kMaxMin}) {
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
      const Matrix m = s == kMaxMin ? g.maxmin(n) : g.matrix(n, 0.6, 2, 1);
      std::vector<Vector> vs = m.columns();
      const std::vector<Vector> cols = vs;
      for (int extra = 0; extra < 3; ++extra) {
        Vector c(n, s);
        for (std::size_t j = 0; j < n; ++j)
          c[j] = s == kMaxMin ? s.from_rational(mpq_class(g.integer(0, 5), 5)) : g.entry(0.5, 2, 1);
        vs.push_back(combine(cols, c));
      }
      const GeneratingSet all(n, s, vs);
      const GeneratingSet r = extremal_reduction(all);
      CHECK(span_equal(all, r));
      CHECK(extremal_reduction(r).vectors() == r.vectors());
    }
  }
}

TEST_CASE("column spans of powers are nested") {
  Gen g(11);
  for (int k = 0; k < 60; ++k) {
    const Matrix a = g.matrix(static_cast<std::size_t>(g.integer(1, 5)), 0.5);
    Matrix p = a;
    for (std::size_t t = 1; t <= 8; ++t) {
      const Matrix next = multiply(p, a);
      CHECK(span_includes(column_set(p), column_set(next)));
      p = next;
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  Gen g(12);
  for (std::size_t n : {1u, 7u, 33u, 48u, 80u}) {
    for (Semiring s : {kMaxPlus, kMaxMin}) {
      Matrix a = s == kMaxMin ? g.maxmin(n) : g.matrix(n, 0.4);
      Matrix b = s == kMaxMin ? g.maxmin(n) : g.matrix(n, 0.4);
      std::vector<Scalar> x1(n * n), x2(n * n);
      kernels::serial::multiply(s, n, a.data(), b.data(), x1);
      kernels::parallel::multiply(s, n, a.data(), b.data(), x2);
      CHECK(x1 == x2);

      std::vector<Scalar> v1(n), v2(n);
      const std::vector<Scalar> x(b.data().begin(), b.data().begin() + static_cast<std::ptrdiff_t>(n));
      kernels::serial::apply(s, n, a.data(), x, v1);
      kernels::parallel::apply(s, n, a.data(), x, v2);
      CHECK(v1 == v2);

      if (s == kMaxPlus)
        for (auto& e : a.data())
          if (e.is_finite()) e = Scalar(mpq_class(e.value() - 5));
      std::vector<Scalar> c1(a.data().begin(), a.data().end()), c2 = c1;
      const bool ok1 = kernels::serial::closure(s, n, c1);
      const bool ok2 = kernels::parallel::closure(s, n, c2);
      CHECK(ok1 == ok2);
      if (ok1) CHECK(c1 == c2);
    }
  }
}
