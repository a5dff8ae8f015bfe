#include "tropcore/core.hpp"

#include <algorithm>
#include <sstream>

#include "tropcore/errors.hpp"

namespace tropcore {

namespace {

Scalar times(const Scalar& rho, std::size_t k) { return Scalar(mpq_class(rho.value() * static_cast<long>(k))); }

std::string witness(const Matrix& a, const Vector& v) {
  std::ostringstream out;
  out << "{\"matrix\":\"" << a.to_string() << "\",\"vector\":\"" << v.to_string() << "\"}";
  std::string s = out.str();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

}  // namespace

CoreDescription core_basis(const Matrix& a) { return core_basis(a, spectrum(a)); }

CoreDescription core_basis(const Matrix& a, const Spectrum& spec) {
  CoreDescription core;
  core.sigma_lambda = spec.sigma_lambda;
  core.lambda = spec.lambda();
  core.extremals = GeneratingSet(a.size(), a.semiring());
  if (spec.empty()) return core;

  const Matrix b = power(a, core.sigma_lambda);
  const Spectrum spec_b = spectrum(b);
  std::vector<Vector> all;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < core.lambda.size(); ++k) {
    core.per_eigenvalue.push_back(eigencone_basis(b, spec_b, times(core.lambda[k], core.sigma_lambda)));
    for (const Vector& v : core.per_eigenvalue.back().generators.vectors()) {
      all.push_back(v);
      owner.push_back(k);
    }
  }
  for (std::size_t i : extremal_indices(all)) {
    core.extremals.add(all[i]);
    core.extremal_eigenvalue.push_back(owner[i]);
  }

  for (const Vector& v : core.extremals.vectors()) {
    const Vector w = apply(a, v);
    if (w.is_zero()) throw TheoremViolation("A maps a core extremal to zero", witness(a, v));
    const Vector s = scaled(w);
    const auto& ext = core.extremals.vectors();
    auto it = std::find(ext.begin(), ext.end(), s);
    if (it == ext.end()) throw TheoremViolation("A does not permute the core extremals", witness(a, v));
    core.action.push_back(static_cast<std::size_t>(it - ext.begin()));
    core.growth.push_back(w.norm());
  }
  std::vector<std::size_t> sorted = core.action;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw TheoremViolation("action of A on the core extremals is not injective", witness(a, Vector(a.size())));
  return core;
}

bool core_membership(const Vector& v, const CoreDescription& core) { return in_span(v, core.extremals); }

std::vector<ActionCycle> core_action_cycles(const CoreDescription& core) {
  std::vector<ActionCycle> cycles;
  std::vector<bool> seen(core.action.size(), false);
  for (std::size_t start = 0; start < core.action.size(); ++start) {
    if (seen[start]) continue;
    ActionCycle c;
    c.growth = Scalar(0);
    for (std::size_t k = start; !seen[k]; k = core.action[k]) {
      seen[k] = true;
      c.members.push_back(k);
      c.growth = kMaxPlus.mul(c.growth, core.growth[k]);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

bool action_is_identity(const CoreDescription& core) {
  for (std::size_t k = 0; k < core.action.size(); ++k)
    if (core.action[k] != k) return false;
  return true;
}

bool finite_stabilization(const FrobeniusForm& fnf, const Spectrum& spec) {
  for (std::size_t mu = 0; mu < fnf.class_count(); ++mu)
    if (!fnf.is_trivial(mu) && !spec.spectral[mu]) return false;
  return true;
}

bool finite_stabilization(const Matrix& a) {
  const FrobeniusForm fnf = frobenius_normal_form(a);
  return finite_stabilization(fnf, spectrum(a, fnf));
}

bool SupportProfile::has_partial() const {
  return std::find(per_class.begin(), per_class.end(), ClassSupport::Partial) != per_class.end();
}

SupportProfile support_profile(const Vector& z, const FrobeniusForm& fnf, const Spectrum& spec) {
  if (z.is_zero()) throw Error("support profile of the zero vector");
  SupportProfile p;
  const std::size_t r = fnf.class_count();
  for (std::size_t mu = 0; mu < r; ++mu) {
    std::size_t hits = 0;
    for (std::size_t i : fnf.nodes(mu))
      if (z[i].is_finite()) ++hits;
    p.per_class.push_back(hits == 0 ? ClassSupport::Empty
                          : hits == fnf.nodes(mu).size() ? ClassSupport::Full
                                                         : ClassSupport::Partial);
  }
  for (std::size_t mu = 0; mu < r; ++mu) {
    if (p.per_class[mu] != ClassSupport::Full) continue;
    const bool is_final = std::none_of(fnf.reduced.edges[mu].begin(), fnf.reduced.edges[mu].end(),
                                       [&](std::size_t nu) { return p.per_class[nu] == ClassSupport::Full; });
    if (is_final && !spec.spectral[mu]) p.final_classes_spectral = false;
  }
  return p;
}

std::vector<Eigencone> eigencone_sequence(const Matrix& a, const Scalar& rho, std::size_t t_max) {
  std::vector<Eigencone> out;
  Matrix at = a;
  for (std::size_t t = 1; t <= t_max; ++t) {
    if (t > 1) at = multiply(at, a);
    out.push_back(eigencone_basis(at, times(rho, t)));
  }
  return out;
}

GeneratingSet eigencone_sum(const Matrix& a) { return eigencone_sum(a, spectrum(a)); }

GeneratingSet eigencone_sum(const Matrix& a, const Spectrum& spec) {
  GeneratingSet g(a.size(), a.semiring());
  for (const Scalar& rho : spec.lambda()) {
    const Eigencone e = eigencone_basis(a, spec, rho);
    for (const Vector& v : e.generators.vectors()) g.add(v);
  }
  return g;
}

GeneratingSet eigencone_sum_per_sigma(const Matrix& a, const Spectrum& spec) {
  GeneratingSet g(a.size(), a.semiring());
  for (const SpectralValue& v : spec.values) {
    const Matrix p = power(a, v.sigma);
    const Eigencone e = eigencone_basis(p, times(v.rho, v.sigma));
    for (const Vector& x : e.generators.vectors()) g.add(x);
  }
  return g;
}

}  // namespace tropcore
