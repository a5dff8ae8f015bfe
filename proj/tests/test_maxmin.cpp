#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tropcore/maxmin.hpp"
#include "tropcore/oracle.hpp"

using namespace tropcore;
using testing::Gen;
using testing::mat;
using testing::vec;

namespace {

// Max-min product on plain rationals, bottom read as 0.
Matrix naive_maxmin_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  auto val = [](const Scalar& x) { return x.is_bottom() ? mpq_class(0) : x.value(); };
  Matrix c(n, kMaxMin);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class best = 0;
      for (std::size_t k = 0; k < n; ++k) best = std::max(best, std::min(val(a(i, k)), val(b(k, j))));
      c(i, j) = kMaxMin.from_rational(best);
    }
  return c;
}

Matrix naive_power(const Matrix& a, std::size_t t) {
  Matrix p = a;
  for (std::size_t k = 1; k < t; ++k) p = naive_maxmin_mul(p, a);
  return p;
}

}  // namespace

TEST_CASE("max-min core of the identity") {
  const MaxMinCore c = maxmin_core(Matrix::identity(3, kMaxMin));
  CHECK(c.threshold == 1);
  CHECK(c.period == 1);
  CHECK(c.extremals.size() == 3);
}

TEST_CASE("max-min permutation") {
  const Matrix a = mat({{"0", "1"}, {"1", "0"}}, kMaxMin);
  CHECK(multiply(a, a) == Matrix::identity(2, kMaxMin));
  const MaxMinCore c = maxmin_core(a);
  CHECK(c.threshold == 1);
  CHECK(c.period == 2);
  CHECK(c.extremals.size() == 2);
  CHECK(maxmin_fixed_point_check(c, a));
}

TEST_CASE("constant max-min matrix") {
  const Matrix a = mat({{"1/2", "1/2", "1/2"}, {"1/2", "1/2", "1/2"}, {"1/2", "1/2", "1/2"}}, kMaxMin);
  CHECK(multiply(a, a) == a);
  const MaxMinCore c = maxmin_core(a);
  CHECK(c.period == 1);
  REQUIRE(c.extremals.size() == 1);
  CHECK(c.extremals[0] == vec({"1/2", "1/2", "1/2"}, kMaxMin));
}

TEST_CASE("fixed points") {
  const Matrix a = mat({{"0", "1"}, {"1", "0"}}, kMaxMin);
  CHECK(maxmin_fixed_point(a, 2, Vector(2, kMaxMin)));
  CHECK(maxmin_fixed_point(a, 2, vec({"1/3", "1"}, kMaxMin)));
  const Matrix b = mat({{"1/2", "0"}, {"0", "1"}}, kMaxMin);
  const MaxMinCore c = maxmin_core(b);
  CHECK(maxmin_fixed_point_check(c, b));
  CHECK_FALSE(maxmin_fixed_point(b, c.period, vec({"1", "1"}, kMaxMin)));
}

TEST_CASE("max-min cores of random matrices") {
  Gen g(71);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    const Matrix a = g.maxmin(n);
    CAPTURE(a.to_string());
    const MaxMinCore c = maxmin_core(a);
    const Matrix at = naive_power(a, c.threshold);
    CHECK(naive_power(a, c.threshold + c.period) == at);
    CHECK(span_equal(c.extremals, column_set(at)));
    for (const Vector& z : c.extremals.vectors()) {
      Vector w = z;
      for (std::size_t t = 0; t < c.period; ++t) w = apply(a, w);
      CHECK(w == z);
    }
    const SpanChain chain = span_chain(a, c.threshold + c.period + 1);
    REQUIRE(chain.stabilization);
    CHECK(*chain.stabilization <= c.threshold);
    for (std::size_t t = c.threshold; t <= c.threshold + c.period; ++t)
      CHECK(span_equal(column_set(naive_power(a, t)), c.extremals));
  }
}
