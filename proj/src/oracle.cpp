#include "tropcore/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

#include "tropcore/errors.hpp"
#include "tropcore/random.hpp"

namespace tropcore {

namespace {

struct LexLess {
  bool operator()(std::span<const Scalar> a, std::span<const Scalar> b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
  bool operator()(const Vector& a, const Vector& b) const { return (*this)(a.entries(), b.entries()); }
  bool operator()(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    return (*this)(std::span<const Scalar>(a), std::span<const Scalar>(b));
  }
};

Scalar quotient(Semiring s, const Scalar& a, const Scalar& b) {
  if (!s.has_division()) return s.one();
  return s.divide(a, b);
}

std::string flat(const Matrix& a) {
  std::string s = a.to_string();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

}  // namespace

OrbitTrace orbit_simulate(const Matrix& a, const Vector& x, std::size_t horizon, bool allow_zero) {
  if (x.size() != a.size()) throw DimensionMismatch("vector length does not match matrix");
  if (x.is_zero()) throw Error("orbit of the zero vector");
  const Semiring s = a.semiring();
  OrbitTrace tr;
  tr.start = x;
  tr.states.push_back(scaled(x));
  tr.scales.push_back(s.has_division() ? x.norm() : s.one());
  std::map<Vector, std::size_t, LexLess> seen{{tr.states.back(), 0}};
  for (std::size_t t = 0; t < horizon; ++t) {
    const Vector w = apply(a, tr.states[t]);
    if (w.is_zero()) {
      if (!allow_zero) throw ZeroOrbit("orbit reaches the zero vector at step " + std::to_string(t + 1));
      tr.reached_zero = true;
      tr.states.push_back(w);
      tr.scales.push_back(Scalar::bottom());
      tr.periodicity = PeriodicityInfo{1, Scalar::bottom(), t + 1, false};
      return tr;
    }
    tr.scales.push_back(s.has_division() ? s.mul(tr.scales[t], w.norm()) : s.one());
    tr.states.push_back(scaled(w));
    auto [it, fresh] = seen.emplace(tr.states.back(), t + 1);
    if (!fresh) {
      const std::size_t first = it->second;
      PeriodicityInfo p;
      p.period = t + 1 - first;
      p.defect = first;
      p.growth = quotient(s, tr.scales[t + 1], tr.scales[first]);
      tr.periodicity = p;
      if (p.period == 1) tr.first_eigenvector_hit = first;
      return tr;
    }
  }
  tr.horizon_exceeded = true;
  return tr;
}

std::optional<PeriodicityInfo> matrix_power_periodicity(const Matrix& a, std::size_t horizon) {
  const Semiring s = a.semiring();
  std::map<std::vector<Scalar>, std::size_t, LexLess> seen;
  std::vector<Scalar> tops;
  Matrix at = a;
  for (std::size_t t = 1; t <= horizon; ++t) {
    if (t > 1) at = multiply(at, a);
    Scalar top;
    for (const Scalar& x : at.data())
      if (top < x) top = x;
    if (top.is_bottom()) return PeriodicityInfo{1, Scalar::bottom(), t, false};
    std::vector<Scalar> state(at.data().begin(), at.data().end());
    if (s.has_division())
      for (auto& x : state) x = s.divide(x, top);
    tops.push_back(top);
    auto [it, fresh] = seen.emplace(std::move(state), t);
    if (!fresh) {
      PeriodicityInfo p;
      p.period = t - it->second;
      p.defect = it->second;
      p.growth = quotient(s, top, tops[it->second - 1]);
      return p;
    }
  }
  return std::nullopt;
}

std::optional<PeriodicityInfo> column_periodicity(const Matrix& a, std::size_t j, std::size_t horizon) {
  const OrbitTrace tr = orbit_simulate(a, Vector::unit(a.size(), j, a.semiring()), horizon, true);
  return tr.periodicity;
}

SpanChain span_chain(const Matrix& a, std::size_t horizon) {
  SpanChain chain;
  Matrix at = a;
  for (std::size_t t = 1; t <= horizon + 1; ++t) {
    if (t > 1) at = multiply(at, a);
    chain.spans.push_back(extremal_reduction(column_set(at)));
    if (t == 1) continue;
    const GeneratingSet& prev = chain.spans[t - 2];
    const GeneratingSet& cur = chain.spans[t - 1];
    if (!span_includes(prev, cur)) chain.nested = false;
    if (span_includes(cur, prev)) {
      chain.stabilization = t - 1;
      break;
    }
  }
  return chain;
}

std::optional<DriftCertificate> drift_certificate(const Matrix& a, const Vector& x) {
  const FrobeniusForm fnf = frobenius_normal_form(a);
  const std::size_t r = fnf.class_count();
  std::vector<bool> target(r, false);
  for (std::size_t i : x.support()) target[fnf.partition.class_of[i]] = true;
  // rate[c]: best Perron root met on a class path from c into the support.
  std::vector<Scalar> rate(r);
  for (std::size_t c = 0; c < r; ++c)
    for (std::size_t k = 0; k < r; ++k) {
      if (fnf.is_trivial(k) || !fnf.accesses(c, k)) continue;
      bool into = false;
      for (std::size_t d = 0; d < r && !into; ++d) into = target[d] && fnf.accesses(k, d);
      if (into && rate[c] < fnf.class_rho[k]) rate[c] = fnf.class_rho[k];
    }
  std::optional<std::size_t> fast, slow;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Scalar& ri = rate[fnf.partition.class_of[i]];
    if (ri.is_bottom()) continue;
    if (!fast || ri > rate[fnf.partition.class_of[*fast]]) fast = i;
    if (!slow || ri < rate[fnf.partition.class_of[*slow]]) slow = i;
  }
  if (!fast) return std::nullopt;
  const Scalar& rf = rate[fnf.partition.class_of[*fast]];
  const Scalar& rs = rate[fnf.partition.class_of[*slow]];
  if (rf == rs) return std::nullopt;
  return DriftCertificate{*fast, *slow, rf, rs};
}

BruteRobustResult brute_force_robust(const Matrix& a, std::size_t samples, std::size_t horizon, std::uint64_t seed) {
  BruteRobustResult res;
  if (a.has_bottom_column()) return res;
  const std::size_t n = a.size();
  const Matrix b = power(a, spectrum(a).sigma_lambda);
  Rng rng(seed);
  const EntryDistribution dist{4, 2};
  std::vector<Vector> vectors;
  for (std::size_t i = 0; i < n; ++i) vectors.push_back(Vector::unit(n, i));
  if (n <= kSupportEnumerationLimit)
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      if (std::popcount(mask) < 2) continue;
      Vector x(n);
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1U) x[i] = random_entry(rng, dist);
      vectors.push_back(std::move(x));
    }
  for (std::size_t k = 0; k < samples; ++k) vectors.push_back(random_vector(rng, n, dist, true));
  for (std::size_t k = 0; k < samples; ++k) vectors.push_back(random_vector(rng, n, dist, false));

  bool robust_fail = false, periodic_fail = false;
  std::size_t robust_unknown = 0, periodic_unknown = 0;
  for (const Vector& x : vectors) {
    ++res.vectors_tried;
    const OrbitTrace tr = orbit_simulate(a, x, horizon);
    if (tr.periodicity) {
      if (tr.periodicity->period != 1 && !robust_fail) {
        robust_fail = true;
        res.robust_counterexample = x;
      }
      const Vector& last = tr.states.back();
      if (!proportional(apply(b, last), last) && !periodic_fail) {
        periodic_fail = true;
        res.periodic_counterexample = x;
      }
      continue;
    }
    if (drift_certificate(a, x)) {
      if (!robust_fail) res.robust_counterexample = x;
      if (!periodic_fail) res.periodic_counterexample = x;
      robust_fail = periodic_fail = true;
      continue;
    }
    ++res.inconclusive;
    ++robust_unknown;
    ++periodic_unknown;
  }
  res.robust = robust_fail ? Truth::False : robust_unknown ? Truth::Inconclusive : Truth::True;
  res.orbit_periodic = periodic_fail ? Truth::False : periodic_unknown ? Truth::Inconclusive : Truth::True;
  return res;
}

std::optional<std::pair<std::size_t, std::size_t>> offending_spectral_pair(const FrobeniusForm& fnf,
                                                                           const Spectrum& spec) {
  for (std::size_t mu = 0; mu < fnf.class_count(); ++mu)
    for (std::size_t nu = 0; nu < fnf.class_count(); ++nu)
      if (mu != nu && spec.spectral[mu] && spec.spectral[nu] && fnf.accesses(mu, nu) &&
          fnf.class_rho[mu] != fnf.class_rho[nu])
        return std::make_pair(mu, nu);
  return std::nullopt;
}

namespace {

Vector generator_in_class(const Matrix& a, const FrobeniusForm& fnf, const Spectrum& spec, std::size_t cls) {
  const Eigencone e = eigencone_basis(a, spec, fnf.class_rho[cls]);
  for (std::size_t k = 0; k < e.representatives.size(); ++k)
    if (fnf.partition.class_of[e.representatives[k]] == cls) return e.generators[k];
  throw TheoremViolation("spectral class carries no critical component", "{\"matrix\":\"" + flat(a) + "\"}");
}

}  // namespace

CollisionResult collision_search(const Matrix& a, const FrobeniusForm& fnf, const Spectrum& spec,
                                 const CoreDescription& core, std::size_t probes, std::uint64_t seed) {
  CollisionResult res;
  const Semiring s = a.semiring();
  if (auto pair = offending_spectral_pair(fnf, spec)) {
    const auto [mu, nu] = *pair;
    const Scalar& rho_mu = fnf.class_rho[mu];
    const Scalar& rho_nu = fnf.class_rho[nu];
    const Vector x_mu = generator_in_class(a, fnf, spec, mu);
    const Vector x_nu = generator_in_class(a, fnf, spec, nu);
    std::optional<mpq_class> a0;
    for (std::size_t i : x_mu.support()) {
      if (x_nu[i].is_bottom())
        throw TheoremViolation("eigenvector supports are not nested", "{\"matrix\":\"" + flat(a) + "\"}");
      mpq_class d = x_nu[i].value() - x_mu[i].value();
      if (!a0 || d < *a0) a0 = d;
    }
    const Vector y_prime = scale_by(rho_nu, x_nu);
    const Scalar alpha(mpq_class(2 * rho_nu.value() - rho_mu.value() + *a0));
    const Vector y = oplus(y_prime, scale_by(alpha, x_mu));
    if (y == y_prime || apply(a, y) != apply(a, y_prime))
      throw TheoremViolation("constructed collision pair does not collide", "{\"matrix\":\"" + flat(a) + "\"}");
    res.collision = Collision{y, y_prime, 1};
    res.constructed = true;
    return res;
  }
  const auto& ext = core.extremals.vectors();
  if (ext.empty()) return res;
  std::vector<Vector> images;
  for (const Vector& v : ext) images.push_back(apply(a, v));
  Rng rng(seed);
  const EntryDistribution dist{4, 2};
  std::bernoulli_distribution use(0.7);
  for (std::size_t p = 0; p < probes; ++p) {
    ++res.probes;
    Vector lambda(ext.size(), s);
    for (std::size_t k = 0; k < ext.size(); ++k)
      if (use(rng)) lambda[k] = random_entry(rng, dist);
    if (lambda.is_zero()) lambda[std::uniform_int_distribution<std::size_t>(0, ext.size() - 1)(rng)] = Scalar(0);
    const Vector z = combine(ext, lambda);
    const Vector w = apply(a, z);
    const Vector y = combine(ext, principal_solution(images, w));
    if (y != z) {
      std::ostringstream out;
      out << "{\"matrix\":\"" << flat(a) << "\",\"y\":\"" << y.to_string() << "\",\"y_prime\":\"" << z.to_string()
          << "\"}";
      throw TheoremViolation("A is not injective on its core although no spectral classes with different "
                             "Perron roots access each other",
                             out.str());
    }
  }
  return res;
}

std::vector<std::vector<std::size_t>> elementary_cycles(const Digraph& g) {
  std::vector<std::vector<std::size_t>> cycles;
  const std::size_t n = g.size();
  std::vector<std::size_t> path;
  std::vector<bool> on(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    // Depth-first search over nodes above s; a return edge to s closes a cycle.
    struct Frame {
      std::size_t v;
      std::size_t next;
    };
    std::vector<Frame> stack{{s, 0}};
    path.assign(1, s);
    on[s] = true;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& succ = g.successors(f.v);
      if (f.next < succ.size()) {
        const std::size_t w = succ[f.next++];
        if (w == s) {
          cycles.push_back(path);
        } else if (w > s && !on[w]) {
          on[w] = true;
          path.push_back(w);
          stack.push_back({w, 0});
        }
        continue;
      }
      on[f.v] = false;
      path.pop_back();
      stack.pop_back();
    }
  }
  return cycles;
}

namespace {

mpq_class cycle_weight(const Matrix& a, const std::vector<std::size_t>& c) {
  mpq_class w = 0;
  for (std::size_t k = 0; k < c.size(); ++k) w += a(c[k], c[(k + 1) % c.size()]).value();
  return w;
}

}  // namespace

Scalar brute_max_cycle_mean(const Matrix& a) {
  Scalar best;
  for (const auto& c : elementary_cycles(build_digraph(a))) {
    Scalar m(mpq_class(cycle_weight(a, c) / static_cast<long>(c.size())));
    if (best < m) best = std::move(m);
  }
  return best;
}

BruteCritical brute_critical(const Matrix& a) {
  BruteCritical out;
  const Scalar rho = brute_max_cycle_mean(a);
  if (rho.is_bottom()) return out;
  for (const auto& c : elementary_cycles(build_digraph(a))) {
    if (cycle_weight(a, c) != rho.value() * static_cast<long>(c.size())) continue;
    for (std::size_t k = 0; k < c.size(); ++k) {
      out.nodes.insert(c[k]);
      out.edges.emplace(c[k], c[(k + 1) % c.size()]);
    }
  }
  return out;
}

std::size_t brute_cyclicity(const Digraph& g, const std::vector<std::size_t>& component) {
  std::vector<bool> inside(g.size(), false);
  for (std::size_t v : component) inside[v] = true;
  Digraph sub(g.size());
  for (auto [u, v] : g.edges())
    if (inside[u] && inside[v]) sub.add_edge(u, v);
  std::size_t d = 0;
  for (const auto& c : elementary_cycles(sub)) d = std::gcd(d, c.size());
  return d == 0 ? 1 : d;
}

std::size_t default_horizon(std::size_t n, std::size_t sigma_lambda) {
  if (const char* env = std::getenv("TROPCORE_HORIZON")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return n * n + 3 * n * sigma_lambda + 16;
}

}  // namespace tropcore
