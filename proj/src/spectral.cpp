#include "tropcore/spectral.hpp"

#include <algorithm>
#include <numeric>

#include "tropcore/errors.hpp"

namespace tropcore {

namespace {

void require_maxplus(const Matrix& a) {
  if (a.semiring().kind() != SemiringKind::MaxPlus)
    throw NotSupported("spectral analysis is implemented for max-plus matrices only");
}

// Karp's theorem on one strongly connected node set.
Scalar karp(const Matrix& a, const std::vector<std::size_t>& comp) {
  const std::size_t m = comp.size();
  std::vector<std::vector<Scalar>> d(m + 1, std::vector<Scalar>(m));
  d[0][0] = Scalar(0);
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t v = 0; v < m; ++v) {
      Scalar best;
      for (std::size_t u = 0; u < m; ++u) {
        const Scalar& w = a(comp[u], comp[v]);
        if (w.is_bottom() || d[k - 1][u].is_bottom()) continue;
        Scalar cand(mpq_class(d[k - 1][u].value() + w.value()));
        if (best < cand) best = std::move(cand);
      }
      d[k][v] = std::move(best);
    }
  Scalar rho;
  for (std::size_t v = 0; v < m; ++v) {
    if (d[m][v].is_bottom()) continue;
    std::optional<mpq_class> worst;
    for (std::size_t k = 0; k < m; ++k) {
      if (d[k][v].is_bottom()) continue;
      mpq_class q = (d[m][v].value() - d[k][v].value()) / static_cast<long>(m - k);
      if (!worst || q < *worst) worst = q;
    }
    if (worst) {
      Scalar cand(*worst);
      if (rho < cand) rho = std::move(cand);
    }
  }
  return rho;
}

bool self_loop(const Matrix& a, const std::vector<std::size_t>& comp) {
  return comp.size() > 1 || a(comp.front(), comp.front()).is_finite();
}

Matrix restricted(const Matrix& a, const std::vector<bool>& keep) {
  Matrix out(a.size(), a.semiring());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (keep[i] && keep[j]) out(i, j) = a(i, j);
  return out;
}

}  // namespace

Matrix FrobeniusForm::permuted(const Matrix& a) const {
  Matrix out(a.size(), a.semiring());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out(i, j) = a(permutation[i], permutation[j]);
  return out;
}

FrobeniusForm frobenius_normal_form(const Matrix& a) {
  require_maxplus(a);
  const Digraph g = build_digraph(a);
  auto [part, red] = scc_condense(g);
  FrobeniusForm f;
  f.partition = std::move(part);
  f.reduced = std::move(red);
  for (const auto& cls : f.partition.classes) {
    f.permutation.insert(f.permutation.end(), cls.begin(), cls.end());
    if (!self_loop(a, cls)) {
      f.class_rho.push_back(Scalar::bottom());
      f.class_cyclicity.push_back(1);
    } else {
      f.class_rho.push_back(karp(a, cls));
      f.class_cyclicity.push_back(component_cyclicity(g, cls));
    }
  }
  return f;
}

Scalar max_cycle_mean(const Matrix& a) {
  require_maxplus(a);
  const Digraph g = build_digraph(a);
  std::vector<std::size_t> all(a.size());
  std::iota(all.begin(), all.end(), 0);
  Scalar rho;
  for (const auto& comp : strong_components(g, all)) {
    if (!self_loop(a, comp)) continue;
    Scalar r = karp(a, comp);
    if (rho < r) rho = std::move(r);
  }
  return rho;
}

bool CriticalGraph::contains(std::size_t i) const { return std::binary_search(nodes.begin(), nodes.end(), i); }

CriticalGraph critical_graph(const Matrix& a) {
  require_maxplus(a);
  CriticalGraph c;
  c.rho = max_cycle_mean(a);
  if (c.rho.is_bottom()) throw AcyclicGraph("critical graph of an acyclic matrix");
  const Matrix hat = normalized(a, c.rho);
  const Matrix star = kleene_star(hat);
  const std::size_t n = a.size();
  c.edges = Digraph(n);
  std::vector<bool> on(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (hat(i, j).is_bottom() || star(j, i).is_bottom()) continue;
      if (hat(i, j).value() + star(j, i).value() == 0) {
        c.edges.add_edge(i, j);
        on[i] = on[j] = true;
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    if (on[i]) c.nodes.push_back(i);
  c.components = strong_components(c.edges, c.nodes);
  for (const auto& comp : c.components) c.component_cyclicity.push_back(component_cyclicity(c.edges, comp));
  c.cyclicity = graph_cyclicity(c.component_cyclicity).overall;
  return c;
}

Matrix critical_matrix(const Matrix& a) {
  require_maxplus(a);
  Matrix out(a.size(), a.semiring());
  if (max_cycle_mean(a).is_bottom()) return out;
  const CriticalGraph c = critical_graph(a);
  for (auto [i, j] : c.edges.edges()) out(i, j) = Scalar(0);
  return out;
}

std::vector<Scalar> Spectrum::lambda() const {
  std::vector<Scalar> out;
  for (const auto& v : values) out.push_back(v.rho);
  return out;
}

const SpectralValue* Spectrum::find(const Scalar& rho) const {
  for (const auto& v : values)
    if (v.rho == rho) return &v;
  return nullptr;
}

const SpectralValue& Spectrum::at(const Scalar& rho) const {
  const SpectralValue* v = find(rho);
  if (!v) throw Error("value is not an eigenvalue of the matrix");
  return *v;
}

namespace {

Matrix subproblem(const Matrix& a, const SpectralValue& v) {
  std::vector<bool> keep(a.size(), false);
  for (std::size_t i : v.m_nodes) keep[i] = true;
  return normalized(restricted(a, keep), v.rho);
}

}  // namespace

Spectrum spectrum(const Matrix& a, const FrobeniusForm& fnf) {
  require_maxplus(a);
  const std::size_t r = fnf.class_count();
  Spectrum s;
  s.spectral.assign(r, false);
  for (std::size_t nu = 0; nu < r; ++nu) {
    if (fnf.is_trivial(nu)) continue;
    bool ok = true;
    for (std::size_t mu = 0; mu < r && ok; ++mu)
      if (fnf.accesses(mu, nu) && fnf.class_rho[mu] > fnf.class_rho[nu]) ok = false;
    s.spectral[nu] = ok;
  }
  std::vector<Scalar> rhos;
  for (std::size_t nu = 0; nu < r; ++nu)
    if (s.spectral[nu]) rhos.push_back(fnf.class_rho[nu]);
  std::sort(rhos.begin(), rhos.end());
  rhos.erase(std::unique(rhos.begin(), rhos.end()), rhos.end());

  const Digraph g = build_digraph(a);
  for (const Scalar& rho : rhos) {
    SpectralValue v;
    v.rho = rho;
    std::vector<std::size_t> targets;
    for (std::size_t nu = 0; nu < r; ++nu)
      if (s.spectral[nu] && fnf.class_rho[nu] == rho) {
        v.spectral_classes.push_back(nu);
        targets.insert(targets.end(), fnf.nodes(nu).begin(), fnf.nodes(nu).end());
      }
    const auto reach = reaching(g, targets);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (reach[i]) v.m_nodes.push_back(i);
    v.critical = critical_graph(subproblem(a, v));
    if (v.critical.rho != Scalar(0))
      throw TheoremViolation("principal eigenvalue of the reduced problem is not one",
                             "{\"matrix\":\"" + a.to_string() + "\"}");
    v.sigma = v.critical.cyclicity;
    s.sigma_lambda = std::lcm(s.sigma_lambda, v.sigma);
    s.values.push_back(std::move(v));
  }
  return s;
}

Spectrum spectrum(const Matrix& a) { return spectrum(a, frobenius_normal_form(a)); }

Matrix spectral_subproblem(const Matrix& a, const Spectrum& spec, const Scalar& rho) {
  return subproblem(a, spec.at(rho));
}

Matrix spectral_subproblem(const Matrix& a, const Scalar& rho) { return spectral_subproblem(a, spectrum(a), rho); }

Eigencone eigencone_basis(const Matrix& a, const Spectrum& spec, const Scalar& rho) {
  const SpectralValue& v = spec.at(rho);
  const Matrix b = subproblem(a, v);
  const Matrix star = kleene_star(b);
  Eigencone e{rho, GeneratingSet(a.size(), a.semiring()), {}};
  for (const auto& comp : v.critical.components) {
    const Vector x = star.column(comp.front());
    for (std::size_t i : comp)
      if (!proportional(x, star.column(i)))
        throw TheoremViolation("star columns of one critical component are not proportional",
                               "{\"column\":" + std::to_string(i) + "}");
    if (!e.generators.add(x))
      throw TheoremViolation("two critical components give proportional eigenvectors",
                             "{\"column\":" + std::to_string(comp.front()) + "}");
    e.representatives.push_back(comp.front());
  }
  return e;
}

Eigencone eigencone_basis(const Matrix& a, const Scalar& rho) { return eigencone_basis(a, spectrum(a), rho); }

Vector critical_restriction(const Vector& x, const CriticalGraph& crit) {
  std::vector<Scalar> out;
  for (std::size_t i : crit.nodes) out.push_back(x[i]);
  return Vector(x.semiring(), std::move(out));
}

Vector reconstruct_from_critical(const Matrix& a, const Spectrum& spec, const Scalar& rho, const Vector& x_c) {
  const SpectralValue& v = spec.at(rho);
  if (x_c.size() != v.critical.nodes.size()) throw DimensionMismatch("critical vector has the wrong length");
  const Matrix b = subproblem(a, v);
  const std::size_t n = a.size();
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!v.critical.contains(i)) rest.push_back(i);

  Vector x(n, a.semiring());
  for (std::size_t k = 0; k < v.critical.nodes.size(); ++k) x[v.critical.nodes[k]] = x_c[k];

  const std::size_t m = rest.size();
  Matrix b_nn(m, a.semiring());
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) b_nn(p, q) = b(rest[p], rest[q]);
  Vector y(m, a.semiring());  // B_NC x_C
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t k = 0; k < v.critical.nodes.size(); ++k)
      y[p] = a.semiring().add(y[p], a.semiring().mul(b(rest[p], v.critical.nodes[k]), x_c[k]));
  const Vector x_n = apply(kleene_star(b_nn), y);
  for (std::size_t p = 0; p < m; ++p) x[rest[p]] = x_n[p];
  return x;
}

PowerSpectrumReport power_spectrum_check(const Matrix& a, std::size_t t) {
  PowerSpectrumReport rep;
  rep.t = t;
  const FrobeniusForm fnf = frobenius_normal_form(a);
  const Spectrum spec = spectrum(a, fnf);
  const Matrix at = power(a, t);
  const FrobeniusForm fnf_t = frobenius_normal_form(at);
  const Spectrum spec_t = spectrum(at, fnf_t);

  for (const Scalar& rho : spec.lambda()) rep.expected_lambda.emplace_back(mpq_class(rho.value() * static_cast<long>(t)));
  rep.actual_lambda = spec_t.lambda();
  rep.lambda_ok = rep.expected_lambda == rep.actual_lambda;

  rep.critical_ok = power(critical_matrix(a), t) == critical_matrix(at);

  // Spectral classes of A^t derived from spectral class mu: gcd(t, sigma_mu).
  for (std::size_t mu = 0; mu < fnf.class_count(); ++mu) {
    if (!spec.spectral[mu]) continue;
    const std::size_t owner = fnf.partition.class_of[fnf.nodes(mu).front()];
    std::size_t derived = 0;
    for (std::size_t k = 0; k < fnf_t.class_count(); ++k)
      if (spec_t.spectral[k] && fnf.partition.class_of[fnf_t.nodes(k).front()] == owner) ++derived;
    if (derived != std::gcd(t, fnf.class_cyclicity[mu])) rep.splitting_ok = false;
  }
  for (std::size_t k = 0; k < fnf_t.class_count(); ++k) {
    if (!spec_t.spectral[k]) continue;
    const std::size_t mu = fnf.partition.class_of[fnf_t.nodes(k).front()];
    for (std::size_t i : fnf_t.nodes(k))
      if (fnf.partition.class_of[i] != mu) rep.splitting_ok = false;
    if (!spec.spectral[mu]) rep.splitting_ok = false;
  }
  return rep;
}

}  // namespace tropcore
