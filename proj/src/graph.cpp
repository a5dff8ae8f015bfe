#include "tropcore/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace tropcore {

void Digraph::add_edge(std::size_t from, std::size_t to) {
  auto& succ = out_[from];
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it == succ.end() || *it != to) succ.insert(it, to);
}

bool Digraph::has_edge(std::size_t from, std::size_t to) const {
  return std::binary_search(out_[from].begin(), out_[from].end(), to);
}

std::size_t Digraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& s : out_) m += s.size();
  return m;
}

std::vector<std::pair<std::size_t, std::size_t>> Digraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < out_.size(); ++i)
    for (std::size_t j : out_[i]) out.emplace_back(i, j);
  return out;
}

Digraph build_digraph(const Matrix& a) {
  Digraph g(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a(i, j).is_finite()) g.add_edge(i, j);
  return g;
}

bool ReducedGraph::is_initial(std::size_t mu) const {
  for (std::size_t nu = 0; nu < size(); ++nu)
    if (nu != mu && access[nu][mu]) return false;
  return true;
}

bool ReducedGraph::is_final(std::size_t mu) const {
  for (std::size_t nu = 0; nu < size(); ++nu)
    if (nu != mu && access[mu][nu]) return false;
  return true;
}

namespace {

// Iterative Tarjan restricted to nodes with allowed[v].
std::vector<std::vector<std::size_t>> tarjan(const Digraph& g, const std::vector<bool>& allowed) {
  const std::size_t n = g.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> comps;
  std::size_t counter = 0;

  struct Frame {
    std::size_t v;
    std::size_t next;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (!allowed[root] || index[root] != kUnvisited) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = g.successors(f.v);
      if (f.next < succ.size()) {
        const std::size_t w = succ[f.next++];
        if (!allowed[w]) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const std::size_t v = f.v;
      call.pop_back();
      if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }
  return comps;
}

}  // namespace

std::vector<std::vector<std::size_t>> strong_components(const Digraph& g, std::span<const std::size_t> nodes) {
  std::vector<bool> allowed(g.size(), false);
  for (std::size_t v : nodes) allowed[v] = true;
  auto comps = tarjan(g, allowed);
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return comps;
}

std::pair<SccPartition, ReducedGraph> scc_condense(const Digraph& g) {
  const std::size_t n = g.size();
  auto comps = tarjan(g, std::vector<bool>(n, true));
  const std::size_t r = comps.size();
  std::vector<std::size_t> raw_of(n);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t v : comps[c]) raw_of[v] = c;

  std::vector<std::vector<std::size_t>> succ(r), pred(r);
  for (auto [u, v] : g.edges()) {
    const std::size_t cu = raw_of[u], cv = raw_of[v];
    if (cu == cv) continue;
    succ[cu].push_back(cv);
    pred[cv].push_back(cu);
  }

  // Sinks first; among ready classes the one with the smallest node wins.
  std::vector<std::size_t> pending(r);
  for (std::size_t c = 0; c < r; ++c) {
    std::sort(succ[c].begin(), succ[c].end());
    succ[c].erase(std::unique(succ[c].begin(), succ[c].end()), succ[c].end());
    std::sort(pred[c].begin(), pred[c].end());
    pred[c].erase(std::unique(pred[c].begin(), pred[c].end()), pred[c].end());
    pending[c] = succ[c].size();
  }
  using Item = std::pair<std::size_t, std::size_t>;  // (smallest node, raw class)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> ready;
  for (std::size_t c = 0; c < r; ++c)
    if (pending[c] == 0) ready.emplace(comps[c].front(), c);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    order.push_back(c);
    for (std::size_t p : pred[c])
      if (--pending[p] == 0) ready.emplace(comps[p].front(), p);
  }

  std::vector<std::size_t> position(r);
  for (std::size_t k = 0; k < r; ++k) position[order[k]] = k;

  SccPartition part;
  part.classes.resize(r);
  part.class_of.resize(n);
  ReducedGraph red;
  red.edges.resize(r);
  red.trivial.resize(r);
  red.access.assign(r, std::vector<bool>(r, false));
  for (std::size_t c = 0; c < r; ++c) {
    const std::size_t k = position[c];
    part.classes[k] = comps[c];
    for (std::size_t v : comps[c]) part.class_of[v] = k;
    for (std::size_t s : succ[c]) red.edges[k].push_back(position[s]);
    std::sort(red.edges[k].begin(), red.edges[k].end());
    red.trivial[k] = comps[c].size() == 1 && !g.has_edge(comps[c].front(), comps[c].front());
  }
  // Successors have lower indices, so one ascending sweep closes access.
  for (std::size_t k = 0; k < r; ++k) {
    red.access[k][k] = true;
    for (std::size_t s : red.edges[k])
      for (std::size_t t = 0; t < r; ++t)
        if (red.access[s][t]) red.access[k][t] = true;
  }
  return {std::move(part), std::move(red)};
}

std::size_t component_cyclicity(const Digraph& g, std::span<const std::size_t> component) {
  if (component.empty()) return 1;
  std::vector<bool> inside(g.size(), false);
  for (std::size_t v : component) inside[v] = true;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> level(g.size(), kUnset);
  std::queue<std::size_t> q;
  level[component.front()] = 0;
  q.push(component.front());
  std::size_t d = 0;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    for (std::size_t v : g.successors(u)) {
      if (!inside[v]) continue;
      if (level[v] == kUnset) {
        level[v] = level[u] + 1;
        q.push(v);
      } else {
        const long diff = static_cast<long>(level[u]) + 1 - static_cast<long>(level[v]);
        d = std::gcd(d, static_cast<std::size_t>(diff < 0 ? -diff : diff));
      }
    }
  }
  return d == 0 ? 1 : d;
}

CyclicityInfo graph_cyclicity(std::span<const std::size_t> per_component) {
  CyclicityInfo info;
  info.per_component.assign(per_component.begin(), per_component.end());
  for (std::size_t c : per_component) info.overall = std::lcm(info.overall, c);
  return info;
}

std::vector<bool> reaching(const Digraph& g, std::span<const std::size_t> targets) {
  std::vector<std::vector<std::size_t>> pred(g.size());
  for (auto [u, v] : g.edges()) pred[v].push_back(u);
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack;
  for (std::size_t t : targets)
    if (!seen[t]) {
      seen[t] = true;
      stack.push_back(t);
    }
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : pred[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  return seen;
}

}  // namespace tropcore
