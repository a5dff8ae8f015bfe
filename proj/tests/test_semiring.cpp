#include <doctest.h>

#include "support.hpp"
#include "tropcore/errors.hpp"

using namespace tropcore;
using testing::Gen;
using testing::sc;

TEST_CASE("max-plus addition") {
  CHECK(kMaxPlus.add(Scalar(3), Scalar::bottom()) == Scalar(3));
  CHECK(kMaxPlus.add(Scalar::ratio(1, 2), Scalar::ratio(2, 3)) == Scalar::ratio(2, 3));
  CHECK(kMaxPlus.add(Scalar::bottom(), Scalar::bottom()).is_bottom());
}

TEST_CASE("max-min addition") { CHECK(kMaxMin.add(Scalar(1), Scalar::ratio(1, 4)) == Scalar(1)); }

TEST_CASE("multiplication") {
  CHECK(kMaxPlus.mul(Scalar(3), Scalar::bottom()).is_bottom());
  CHECK(kMaxPlus.mul(Scalar::ratio(1, 2), Scalar::ratio(2, 3)) == Scalar::ratio(7, 6));
  CHECK(kMaxMin.mul(Scalar::ratio(1, 2), Scalar::ratio(2, 3)) == Scalar::ratio(1, 2));
  CHECK(kMaxTimes.mul(Scalar::ratio(1, 2), Scalar::ratio(2, 3)) == Scalar::ratio(1, 3));
}

TEST_CASE("residual") {
  CHECK(kMaxPlus.residual(Scalar(2), Scalar(5)) == Scalar(3));
  CHECK_FALSE(kMaxPlus.residual(Scalar::bottom(), Scalar(5)).has_value());
  CHECK(kMaxMin.residual(Scalar::ratio(1, 4), Scalar::ratio(1, 2)) == Scalar(1));
  CHECK(kMaxMin.residual(Scalar::ratio(3, 4), Scalar::ratio(1, 2)) == Scalar::ratio(1, 2));
  CHECK(kMaxPlus.residual(Scalar(2), Scalar::bottom())->is_bottom());
}

TEST_CASE("root") {
  CHECK(kMaxPlus.root(Scalar(6), 2) == Scalar(3));
  CHECK(kMaxPlus.root(Scalar(-5), 5) == Scalar(-1));
  CHECK(kMaxPlus.root(Scalar(7), 3) == Scalar::ratio(7, 3));
  CHECK_THROWS_AS(kMaxPlus.root(Scalar::bottom(), 3), Error);
  CHECK_THROWS_AS(kMaxTimes.root(Scalar(4), 2), NotSupported);
}

TEST_CASE("bottom is a tag, not a number") {
  CHECK(Scalar::bottom() < Scalar(-1000000));
  CHECK(Scalar::bottom() != Scalar(0));
  CHECK_THROWS_AS((void)Scalar::bottom().value(), Error);
  CHECK(kMaxMin.from_rational(0).is_bottom());
  CHECK(kMaxTimes.from_rational(0).is_bottom());
  CHECK(kMaxPlus.from_rational(0) == Scalar(0));
  CHECK_THROWS_AS(kMaxMin.from_rational(2), Error);
  CHECK_THROWS_AS(kMaxTimes.from_rational(-1), Error);
}

TEST_CASE("scalar text round trip") {
  CHECK(format_scalar(Scalar::bottom(), kMaxPlus) == "-inf");
  CHECK(format_scalar(Scalar::bottom(), kMaxMin) == "0");
  CHECK(format_scalar(Scalar::ratio(-6, 4), kMaxPlus) == "-3/2");
  CHECK(sc("-3/2") == Scalar::ratio(-3, 2));
  CHECK(sc("-inf").is_bottom());
  CHECK(sc("0", kMaxMin).is_bottom());
  CHECK_THROWS_AS(sc("1/0"), Error);
  CHECK_THROWS_AS(sc("abc"), Error);
  CHECK_THROWS_AS(sc(""), Error);
}

TEST_CASE("semiring names") {
  CHECK(parse_semiring_name("maxmin") == SemiringKind::MaxMin);
  CHECK(semiring_name(SemiringKind::MaxTimes) == "maxtimes");
  CHECK_THROWS_AS(parse_semiring_name("minplus"), Error);
}

namespace {

Scalar draw(Gen& g, Semiring s) {
  if (g.coin(0.15)) return Scalar::bottom();
  switch (s.kind()) {
    case SemiringKind::MaxPlus:
      return g.rational(5, 4);
    case SemiringKind::MaxTimes:
      return Scalar(mpq_class(g.integer(1, 12), g.integer(1, 4)));
    case SemiringKind::MaxMin:
      return Scalar(mpq_class(g.integer(1, 6), 6));
  }
  return Scalar::bottom();
}

}  // namespace

TEST_CASE("semiring laws on random triples") {
  for (Semiring s : {kMaxPlus, kMaxTimes, kMaxMin}) {
    Gen g(17);
    for (int k = 0; k < 500; ++k) {
      const Scalar a = draw(g, s), b = draw(g, s), c = draw(g, s);
      CAPTURE(s.name());
      CHECK(s.add(a, a) == a);
      CHECK(s.add(a, b) == s.add(b, a));
      CHECK(s.mul(a, s.add(b, c)) == s.add(s.mul(a, b), s.mul(a, c)));
      CHECK(s.mul(a, s.mul(b, c)) == s.mul(s.mul(a, b), c));
      CHECK(s.mul(a, s.one()) == a);
      CHECK(s.mul(a, s.bottom()).is_bottom());
    }
  }
}

TEST_CASE("residuation is a Galois connection") {
  for (Semiring s : {kMaxPlus, kMaxTimes, kMaxMin}) {
    Gen g(29);
    for (int k = 0; k < 500; ++k) {
      const Scalar a = draw(g, s), b = draw(g, s);
      CAPTURE(s.name());
      const auto r = s.residual(a, b);
      if (!r) {
        CHECK(a.is_bottom());
        continue;
      }
      CHECK(s.mul(a, *r) <= b);
      if (s.kind() == SemiringKind::MaxMin && *r == Scalar(1)) continue;
      // Anything strictly above the residual overshoots b.
      const Scalar bigger = r->is_bottom() ? (s.kind() == SemiringKind::MaxPlus ? Scalar(-100) : Scalar::ratio(1, 12))
                                           : Scalar(mpq_class(r->value() + mpq_class(1, 12)));
      CHECK(s.mul(a, bigger) > b);
    }
  }
}
