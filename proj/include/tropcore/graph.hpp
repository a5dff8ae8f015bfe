#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tropcore/matrix.hpp"

namespace tropcore {

/// Edge i -> j for every a_ij above bottom.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n) : out_(n) {}

  void add_edge(std::size_t from, std::size_t to);

  std::size_t size() const noexcept { return out_.size(); }
  const std::vector<std::size_t>& successors(std::size_t i) const { return out_[i]; }
  bool has_edge(std::size_t from, std::size_t to) const;
  std::size_t edge_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::vector<std::vector<std::size_t>> out_;
};

Digraph build_digraph(const Matrix& a);

struct SccPartition {
  /// Node sets, each sorted. Arcs only lead from a class to a class of lower
  /// or equal index, so class 0 accesses nothing else.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
};

struct ReducedGraph {
  std::vector<std::vector<std::size_t>> edges;  // distinct classes, sorted
  std::vector<bool> trivial;
  std::vector<std::vector<bool>> access;  // reflexive-transitive closure

  std::size_t size() const noexcept { return edges.size(); }
  bool accesses(std::size_t mu, std::size_t nu) const { return access[mu][nu]; }
  /// No other class accesses mu.
  bool is_initial(std::size_t mu) const;
  /// mu accesses no other class.
  bool is_final(std::size_t mu) const;
};

/// Tarjan SCCs, ordered for a block lower triangular form. Ties between
/// independent classes go to the class holding the smaller node index.
std::pair<SccPartition, ReducedGraph> scc_condense(const Digraph& g);

/// Strongly connected components of the subgraph induced by `nodes`, each
/// sorted, listed by smallest member.
std::vector<std::vector<std::size_t>> strong_components(const Digraph& g, std::span<const std::size_t> nodes);

/// gcd of the cycle lengths of a strongly connected node set; 1 for a single
/// node without a loop.
std::size_t component_cyclicity(const Digraph& g, std::span<const std::size_t> component);

struct CyclicityInfo {
  std::vector<std::size_t> per_component;
  std::size_t overall = 1;
};

CyclicityInfo graph_cyclicity(std::span<const std::size_t> per_component);
inline bool is_primitive(const CyclicityInfo& c) { return c.overall == 1; }

/// Nodes i with a path (possibly empty) from i into `targets`.
std::vector<bool> reaching(const Digraph& g, std::span<const std::size_t> targets);

}  // namespace tropcore
