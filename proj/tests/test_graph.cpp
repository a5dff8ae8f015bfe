#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "tropcore/graph.hpp"
#include "tropcore/oracle.hpp"

using namespace tropcore;
using testing::Gen;
using testing::mat;

TEST_CASE("digraph of a matrix") {
  CHECK(build_digraph(Matrix(3)).edge_count() == 0);
  const Digraph swap = build_digraph(mat({{"-inf", "0"}, {"0", "-inf"}}));
  CHECK(swap.edge_count() == 2);
  CHECK(swap.has_edge(0, 1));
  CHECK(swap.has_edge(1, 0));
  const Digraph g = build_digraph(mat({{"1", "-inf"}, {"0", "0"}}));
  CHECK(g.has_edge(0, 0));
  CHECK(g.has_edge(1, 1));
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("strongly connected classes") {
  {
    const auto [p, r] = scc_condense(build_digraph(mat({{"-inf", "0"}, {"0", "-inf"}})));
    REQUIRE(p.classes.size() == 1);
    CHECK(p.classes[0] == std::vector<std::size_t>{0, 1});
    CHECK_FALSE(r.trivial[0]);
  }
  {
    const auto [p, r] = scc_condense(build_digraph(mat({{"1", "-inf"}, {"0", "0"}})));
    REQUIRE(p.classes.size() == 2);
    CHECK(p.classes[0] == std::vector<std::size_t>{0});
    CHECK(p.classes[1] == std::vector<std::size_t>{1});
    CHECK(r.edges[1] == std::vector<std::size_t>{0});
    CHECK(r.accesses(1, 0));
    CHECK_FALSE(r.accesses(0, 1));
    CHECK(r.is_final(0));
    CHECK(r.is_initial(1));
  }
  {
    const auto [p, r] = scc_condense(Digraph(3));
    REQUIRE(p.classes.size() == 3);
    for (std::size_t mu = 0; mu < 3; ++mu) {
      CHECK(r.trivial[mu]);
      CHECK(r.edges[mu].empty());
    }
  }
}

TEST_CASE("component cyclicity") {
  const std::vector<std::size_t> both{0, 1};
  CHECK(component_cyclicity(build_digraph(mat({{"-inf", "0"}, {"0", "-inf"}})), both) == 2);
  const std::vector<std::size_t> one{0};
  CHECK(component_cyclicity(build_digraph(mat({{"0"}})), one) == 1);
  Digraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  g.add_edge(1, 0);
  const std::vector<std::size_t> all{0, 1, 2};
  CHECK(component_cyclicity(g, all) == 1);
}

TEST_CASE("graph cyclicity is the lcm") {
  const std::vector<std::size_t> a{2, 3}, b{1}, c{2, 2};
  CHECK(graph_cyclicity(a).overall == 6);
  CHECK(graph_cyclicity(b).overall == 1);
  CHECK(graph_cyclicity(c).overall == 2);
  CHECK(is_primitive(graph_cyclicity(b)));
  CHECK_FALSE(is_primitive(graph_cyclicity(c)));
  CHECK_FALSE(is_primitive(graph_cyclicity(a)));
}

TEST_CASE("classes come in block lower triangular order") {
  Gen g(21);
  for (int k = 0; k < 200; ++k) {
    const Matrix a = g.matrix(static_cast<std::size_t>(g.integer(1, 7)), 0.3);
    const Digraph d = build_digraph(a);
    const auto [p, r] = scc_condense(d);
    for (auto [i, j] : d.edges()) CHECK(p.class_of[i] >= p.class_of[j]);
    std::size_t total = 0;
    for (const auto& c : p.classes) total += c.size();
    CHECK(total == a.size());
  }
}

TEST_CASE("cyclicity agrees with closed-walk lengths") {
  Gen g(22);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 7));
    const Matrix a = g.matrix(n, 0.35);
    const Digraph d = build_digraph(a);
    const auto [p, r] = scc_condense(d);
    for (std::size_t mu = 0; mu < p.classes.size(); ++mu) {
      if (r.trivial[mu]) continue;
      CHECK(component_cyclicity(d, p.classes[mu]) == testing::naive_cyclicity(a, p.classes[mu]));
      CHECK(component_cyclicity(d, p.classes[mu]) == brute_cyclicity(d, p.classes[mu]));
    }
  }
}

TEST_CASE("powers of an irreducible graph split into gcd(t, sigma) blocks") {
  Gen g(23);
  for (int k = 0; k < 120; ++k) {
    const std::size_t blocks = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t n = blocks * static_cast<std::size_t>(g.integer(1, 2));
    const Matrix a = g.irreducible(n, 0.5, blocks);
    const std::vector<std::size_t> all = [&] {
      std::vector<std::size_t> v(n);
      std::iota(v.begin(), v.end(), 0);
      return v;
    }();
    const std::size_t sigma = testing::naive_cyclicity(a, all);
    REQUIRE(sigma % blocks == 0);
    for (std::size_t t = 1; t <= 6; ++t) {
      const Digraph d = build_digraph(power(a, t));
      const auto comps = strong_components(d, all);
      const std::size_t expect = std::gcd(t, sigma);
      CHECK(comps.size() == expect);
      for (const auto& c : comps) CHECK(component_cyclicity(d, c) == sigma / expect);
    }
  }
}
