#include "tropcore/classify.hpp"

#include <algorithm>

#include "tropcore/io.hpp"

namespace tropcore {

namespace {

using nlohmann::json;

Verdict yes(json witness = nullptr) { return {Truth::True, std::move(witness), false}; }
Verdict no(json witness) { return {Truth::False, std::move(witness), false}; }
Verdict not_applicable(json witness) { return {Truth::NotApplicable, std::move(witness), false}; }

json rho_json(const Scalar& rho) { return format_scalar(rho, kMaxPlus); }

json class_json(const FrobeniusForm& fnf, std::size_t mu) {
  return json{{"nodes", nodes_json(fnf.nodes(mu))}, {"rho", rho_json(fnf.class_rho[mu])}};
}

std::optional<std::size_t> bottom_column(const Matrix& a) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    bool empty = true;
    for (std::size_t i = 0; i < a.size() && empty; ++i) empty = a(i, j).is_bottom();
    if (empty) return j;
  }
  return std::nullopt;
}

std::vector<std::size_t> union_support(const GeneratingSet& g) {
  std::vector<bool> in(g.dim(), false);
  for (const Vector& v : g.vectors())
    for (std::size_t i : v.support()) in[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> common_support(const GeneratingSet& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (std::all_of(g.vectors().begin(), g.vectors().end(), [&](const Vector& v) { return v[i].is_finite(); }))
      out.push_back(i);
  return out;
}

// Support nesting over all pairs rho1 < rho2 of the given eigencones.
Verdict support_nesting(const std::vector<Scalar>& lambda, const std::vector<GeneratingSet>& cones) {
  for (std::size_t p = 0; p < cones.size(); ++p)
    for (std::size_t q = p + 1; q < cones.size(); ++q) {
      const auto low = union_support(cones[p]);
      const auto high = common_support(cones[q]);
      if (!std::includes(high.begin(), high.end(), low.begin(), low.end()))
        return no(json{{"condition", "support nesting"},
                       {"rho_low", rho_json(lambda[p])},
                       {"rho_high", rho_json(lambda[q])},
                       {"support_low", nodes_json(low)},
                       {"support_high", nodes_json(high)}});
    }
  return yes();
}

}  // namespace

std::string_view truth_name(Truth t) {
  switch (t) {
    case Truth::True:
      return "true";
    case Truth::False:
      return "false";
    case Truth::NotApplicable:
      return "not_applicable";
    case Truth::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict is_irreducible(const FrobeniusForm& fnf) {
  if (fnf.class_count() == 1 && !fnf.is_trivial(0)) return yes();
  return no(json{{"classes", fnf.class_count()}, {"trivial", fnf.class_count() == 1}});
}

Verdict is_ultimately_periodic(const FrobeniusForm& fnf) {
  Scalar rho;
  for (const Scalar& r : fnf.class_rho)
    if (rho < r) rho = r;
  for (std::size_t mu = 0; mu < fnf.class_count(); ++mu)
    if (!fnf.is_trivial(mu) && fnf.class_rho[mu] != rho)
      return no(json{{"class", class_json(fnf, mu)}, {"rho_A", rho_json(rho)}});
  return yes();
}

Verdict is_robust(const Matrix& a, const FrobeniusForm& fnf, const Spectrum& spec) {
  if (auto j = bottom_column(a)) return not_applicable(json{{"bottom_column", *j + 1}});
  for (std::size_t mu = 0; mu < fnf.class_count(); ++mu)
    if (!fnf.is_trivial(mu) && !spec.spectral[mu])
      return no(json{{"condition", "non-spectral class"}, {"class", class_json(fnf, mu)}});
  for (const auto& v : spec.values)
    if (v.sigma != 1)
      return no(json{{"condition", "imprimitive critical graph"}, {"rho", rho_json(v.rho)}, {"sigma", v.sigma}});
  for (std::size_t mu = 0; mu < fnf.class_count(); ++mu)
    for (std::size_t nu = mu + 1; nu < fnf.class_count(); ++nu) {
      if (fnf.is_trivial(mu) || fnf.is_trivial(nu)) continue;
      if (!fnf.accesses(mu, nu) && !fnf.accesses(nu, mu) && fnf.class_rho[mu] != fnf.class_rho[nu])
        return no(json{{"condition", "incomparable classes with different Perron roots"},
                       {"classes", json::array({class_json(fnf, mu), class_json(fnf, nu)})}});
    }
  return yes();
}

Verdict is_core_robust(const Matrix& a, const Spectrum& spec, const CoreDescription& core) {
  for (const auto& cycle : core_action_cycles(core))
    if (cycle.members.size() > 1) {
      json members = json::array();
      for (std::size_t k : cycle.members) members.push_back(vector_json(core.extremals[k]));
      return no(json{{"condition", "action is not the identity"}, {"cycle", members}});
    }
  std::vector<GeneratingSet> cones;
  for (const Scalar& rho : spec.lambda()) cones.push_back(eigencone_basis(a, spec, rho).generators);
  return support_nesting(spec.lambda(), cones);
}

Verdict is_core_periodic(const CoreDescription& core) {
  std::vector<GeneratingSet> cones;
  for (const auto& e : core.per_eigenvalue) cones.push_back(e.generators);
  return support_nesting(core.lambda, cones);
}

Verdict finite_stabilization_verdict(const FrobeniusForm& fnf, const Spectrum& spec) {
  for (std::size_t mu = 0; mu < fnf.class_count(); ++mu)
    if (!fnf.is_trivial(mu) && !spec.spectral[mu])
      return no(json{{"non_spectral_class", class_json(fnf, mu)}});
  return yes();
}

Verdict is_orbit_periodic(const Matrix& a, const FrobeniusForm& fnf, const Spectrum& spec,
                          const CoreDescription& core) {
  if (auto j = bottom_column(a)) return not_applicable(json{{"bottom_column", *j + 1}});
  Verdict periodic = is_core_periodic(core);
  if (!periodic.is_true()) return no(json{{"core_periodic", periodic.witness}});
  Verdict fin = finite_stabilization_verdict(fnf, spec);
  if (!fin.is_true()) return no(json{{"finite_stabilization", fin.witness}});
  return yes();
}

Verdict is_weakly_stable(const Matrix& a, const FrobeniusForm& fnf, const Spectrum& spec) {
  for (const auto& v : spec.values)
    for (std::size_t nu : v.spectral_classes) {
      if (!fnf.reduced.is_initial(nu))
        return no(json{{"condition", "spectral class is not initial"}, {"class", class_json(fnf, nu)}});
      const auto& nodes = fnf.nodes(nu);
      std::vector<bool> inside(a.size(), false);
      for (std::size_t i : nodes) inside[i] = true;
      bool hamiltonian = true;
      for (std::size_t i : nodes) {
        std::size_t out = 0;
        for (std::size_t j : v.critical.edges.successors(i)) out += inside[j] ? 1 : 0;
        if (out != 1) hamiltonian = false;
      }
      if (hamiltonian) {
        // Follow the unique critical successor; it must tour the whole class.
        std::size_t cur = nodes.front(), steps = 0;
        do {
          for (std::size_t j : v.critical.edges.successors(cur))
            if (inside[j]) {
              cur = j;
              break;
            }
          ++steps;
        } while (cur != nodes.front() && steps <= nodes.size());
        hamiltonian = cur == nodes.front() && steps == nodes.size();
      }
      if (!hamiltonian)
        return no(json{{"condition", "critical graph is not a Hamiltonian cycle"}, {"class", class_json(fnf, nu)}});
    }
  return yes();
}

Verdict is_bijective_on_core(const FrobeniusForm& fnf, const Spectrum& spec) {
  if (auto pair = offending_spectral_pair(fnf, spec))
    return no(json{{"accessing", class_json(fnf, pair->first)}, {"accessed", class_json(fnf, pair->second)}});
  return yes();
}

Verdict is_bijective_on_core(const Matrix& a) {
  const FrobeniusForm fnf = frobenius_normal_form(a);
  return is_bijective_on_core(fnf, spectrum(a, fnf));
}

Verdict column_periodic_verdict(const Matrix& a, std::size_t horizon) {
  Verdict v;
  v.empirical = true;
  v.value = Truth::True;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (column_periodicity(a, j, horizon)) continue;
    if (auto cert = drift_certificate(a, Vector::unit(a.size(), j))) {
      v.value = Truth::False;
      v.witness = json{{"column", j + 1},
                       {"fast_entry", cert->fast + 1},
                       {"slow_entry", cert->slow + 1},
                       {"fast_rate", rho_json(cert->fast_rate)},
                       {"slow_rate", rho_json(cert->slow_rate)}};
      return v;
    }
    v.value = Truth::Inconclusive;
    v.witness = json{{"column", j + 1}, {"horizon", horizon}};
  }
  return v;
}

Verdict integer_generator_check(const Matrix& a, const CoreDescription& core) {
  if (!a.is_integer()) return not_applicable(json{{"reason", "matrix has non-integer entries"}});
  for (std::size_t k = 0; k < core.per_eigenvalue.size(); ++k)
    if (!core.per_eigenvalue[k].rho.is_integer())
      return no(json{{"eigenvalue_of_power", rho_json(core.per_eigenvalue[k].rho)}});
  for (const Vector& v : core.extremals.vectors())
    for (const Scalar& x : v)
      if (x.is_finite() && !x.is_integer()) return no(json{{"extremal", vector_json(v)}});
  return yes();
}

ClassificationReport classify(const Matrix& a, const ClassifyOptions& options) {
  const FrobeniusForm fnf = frobenius_normal_form(a);
  const Spectrum spec = spectrum(a, fnf);
  const CoreDescription core = core_basis(a, spec);
  const std::size_t horizon = options.horizon.value_or(default_horizon(a.size(), spec.sigma_lambda));

  ClassificationReport r;
  r.irreducible = is_irreducible(fnf);
  r.ultimately_periodic = is_ultimately_periodic(fnf);
  r.robust = is_robust(a, fnf, spec);
  r.core_robust = is_core_robust(a, spec, core);
  r.core_periodic = is_core_periodic(core);
  r.orbit_periodic = is_orbit_periodic(a, fnf, spec, core);
  r.finite_stabilization = finite_stabilization_verdict(fnf, spec);
  r.weakly_stable = is_weakly_stable(a, fnf, spec);
  r.bijective_on_core = is_bijective_on_core(fnf, spec);
  if (r.bijective_on_core.is_false()) {
    const CollisionResult c = collision_search(a, fnf, spec, core, 0, 0);
    if (c.collision)
      r.bijective_on_core.witness["collision"] = json{{"y", vector_json(c.collision->y)},
                                                      {"y_prime", vector_json(c.collision->y_prime)},
                                                      {"t", c.collision->t}};
  }
  r.core_weakly_stable = r.bijective_on_core;
  if (options.column_periodicity)
    r.column_periodic = column_periodic_verdict(a, horizon);
  else
    r.column_periodic = Verdict{Truth::Inconclusive, json{{"reason", "not evaluated"}}, true};
  if (a.is_integer()) r.integer_generators = integer_generator_check(a, core);
  return r;
}

}  // namespace tropcore
