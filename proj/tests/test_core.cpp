#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tropcore/core.hpp"
#include "tropcore/oracle.hpp"

using namespace tropcore;
using testing::Gen;
using testing::mat;
using testing::vec;

namespace {

const Matrix kLoop = mat({{"1", "-inf"}, {"0", "0"}});
const Matrix kSwap = mat({{"-inf", "0"}, {"0", "-inf"}});
const Matrix kSlowToFast = mat({{"0", "-inf"}, {"0", "1"}});
const Matrix kEqualRoots = mat({{"0", "-inf"}, {"0", "0"}});

bool contains(const GeneratingSet& g, const Vector& v) {
  return std::find(g.vectors().begin(), g.vectors().end(), v) != g.vectors().end();
}

}  // namespace

TEST_CASE("core of a matrix with two eigenvalues") {
  const CoreDescription c = core_basis(kLoop);
  CHECK(c.sigma_lambda == 1);
  REQUIRE(c.extremals.size() == 2);
  CHECK(contains(c.extremals, vec({"0", "-1"})));
  CHECK(contains(c.extremals, vec({"-inf", "0"})));
  CHECK(core_membership(vec({"1", "1"}), c));
  for (const Vector& v : c.extremals.vectors()) CHECK(core_membership(v, c));
}

TEST_CASE("core membership") {
  const CoreDescription c = core_basis(kEqualRoots);
  CHECK(core_membership(vec({"-inf", "0"}), c));
  CHECK_FALSE(core_membership(vec({"0", "-inf"}), c));
}

TEST_CASE("action on extremals") {
  const auto swap = core_action_cycles(core_basis(kSwap));
  REQUIRE(swap.size() == 1);
  CHECK(swap[0].members.size() == 2);
  CHECK_FALSE(action_is_identity(core_basis(kSwap)));

  const auto loop = core_action_cycles(core_basis(kLoop));
  CHECK(loop.size() == 2);
  CHECK(action_is_identity(core_basis(kLoop)));

  const CoreDescription id = core_basis(Matrix::identity(3));
  CHECK(id.extremals.size() == 3);
  CHECK(action_is_identity(id));
}

TEST_CASE("finite stabilization criterion") {
  CHECK(finite_stabilization(mat({{"-inf", "2"}, {"4", "-inf"}})));
  CHECK_FALSE(finite_stabilization(kSlowToFast));
  CHECK(finite_stabilization(kLoop));
}

TEST_CASE("core of a matrix with a non-spectral class") {
  const CoreDescription c = core_basis(kSlowToFast);
  REQUIRE(c.extremals.size() == 1);
  CHECK(c.extremals[0] == vec({"-inf", "0"}));
}

TEST_CASE("support profiles") {
  {
    const FrobeniusForm f = frobenius_normal_form(kLoop);
    const Spectrum s = spectrum(kLoop, f);
    const CoreDescription c = core_basis(kLoop);
    for (const Vector& z : c.extremals.vectors()) {
      const SupportProfile p = support_profile(z, f, s);
      CHECK_FALSE(p.has_partial());
      CHECK(p.final_classes_spectral);
    }
  }
  {
    const FrobeniusForm f = frobenius_normal_form(kSlowToFast);
    const Spectrum s = spectrum(kSlowToFast, f);
    const Vector z = vec({"-inf", "0"});
    const SupportProfile p = support_profile(z, f, s);
    CHECK(p.per_class[f.partition.class_of[1]] == ClassSupport::Full);
    CHECK(p.per_class[f.partition.class_of[0]] == ClassSupport::Empty);
    CHECK(p.final_classes_spectral);
    CHECK(core_membership(z, core_basis(kSlowToFast)));
    CHECK_FALSE(core_membership(vec({"0", "0"}), core_basis(kSlowToFast)));
    CHECK_FALSE(support_profile(vec({"0", "0"}), f, s).final_classes_spectral);
  }
  {
    const FrobeniusForm f = frobenius_normal_form(kSwap);
    const Spectrum s = spectrum(kSwap, f);
    CHECK(support_profile(vec({"0", "-inf"}), f, s).has_partial());
  }
}

TEST_CASE("eigencone sequence of a permutation") {
  const auto seq = eigencone_sequence(kSwap, Scalar(0), 4);
  REQUIRE(seq.size() == 4);
  const std::vector<Vector> units{Vector::unit(2, 0), Vector::unit(2, 1)};
  const GeneratingSet full(2, kMaxPlus, units);
  const std::vector<Vector> diag{vec({"0", "0"})};
  const GeneratingSet line(2, kMaxPlus, diag);
  CHECK(span_equal(seq[0].generators, line));
  CHECK(span_equal(seq[1].generators, full));
  CHECK(span_equal(seq[2].generators, line));
  CHECK(span_equal(seq[3].generators, full));
}

TEST_CASE("eigencone sequence of a primitive matrix is constant") {
  const Matrix a = mat({{"0", "1"}, {"-1", "-inf"}});
  const auto seq = eigencone_sequence(a, Scalar(0), 5);
  for (const auto& e : seq) CHECK(span_equal(e.generators, seq[0].generators));
}

TEST_CASE("core properties on random matrices") {
  Gen g(41);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    const Matrix a = g.matrix(n, k % 3 == 0 ? 0.8 : 0.4, 3, 2);
    const Spectrum s = spectrum(a);
    const CoreDescription c = core_basis(a, s);
    CAPTURE(a.to_string());
    CHECK(c.extremals.size() <= n);

    // Both formulas for the core give the same cone.
    CHECK(span_equal(eigencone_sum_per_sigma(a, s), c.extremals));
    CHECK(span_equal(eigencone_sum(power(a, c.sigma_lambda)), c.extremals));

    // Extremals sit in every column span of a power.
    Matrix p = a;
    for (std::size_t t = 1; t <= n * n + 3 * n * c.sigma_lambda; ++t) {
      const GeneratingSet cols = column_set(p);
      for (const Vector& v : c.extremals.vectors()) CHECK(in_span(v, cols));
      p = multiply(p, a);
    }

    // A permutes the extremal rays.
    std::vector<std::size_t> image = c.action;
    std::sort(image.begin(), image.end());
    for (std::size_t i = 0; i < image.size(); ++i) CHECK(image[i] == i);
    for (std::size_t i = 0; i < c.extremals.size(); ++i) {
      const auto ax = testing::qapply(testing::qm(a), testing::qv(c.extremals[i]));
      const Vector& target = c.extremals[c.action[i]];
      for (std::size_t r = 0; r < n; ++r) CHECK(testing::back(ax[r]) == kMaxPlus.mul(c.growth[i], target[r]));
    }
    for (const auto& cycle : core_action_cycles(c)) {
      const std::size_t len = cycle.members.size();
      for (std::size_t m : cycle.members) {
        const Vector back = apply(power(a, len), c.extremals[m]);
        CHECK(proportional(back, c.extremals[m]));
      }
    }

    // Periodicity of eigencones and the inclusion chain.
    for (const auto& value : s.values) {
      const auto seq = eigencone_sequence(a, value.rho, 3 * value.sigma);
      const auto& top = seq[value.sigma - 1].generators;
      for (std::size_t t = 1; t <= 2 * value.sigma; ++t) CHECK(span_equal(seq[t - 1].generators, seq[t - 1 + value.sigma].generators));
      for (const auto& e : seq) CHECK(span_includes(top, e.generators));
    }
  }
}
