#include "tropcore/checks.hpp"

#include <algorithm>
#include <numeric>

#include "tropcore/errors.hpp"
#include "tropcore/io.hpp"
#include "tropcore/kernels.hpp"
#include "tropcore/maxmin.hpp"
#include "tropcore/random.hpp"

namespace tropcore {

namespace {

using nlohmann::json;

CheckResult pass(std::string name, json detail = nullptr) { return {std::move(name), Status::Pass, std::move(detail)}; }
CheckResult fail(std::string name, json detail) { return {std::move(name), Status::Fail, std::move(detail)}; }
CheckResult unknown(std::string name, json detail) {
  return {std::move(name), Status::Inconclusive, std::move(detail)};
}
CheckResult skip(std::string name, json detail = nullptr) {
  return {std::move(name), Status::Skipped, std::move(detail)};
}

json rho_json(const Scalar& r) { return format_scalar(r, kMaxPlus); }

Scalar times(const Scalar& rho, std::size_t k) { return Scalar(mpq_class(rho.value() * static_cast<long>(k))); }

json matrix_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.size(); ++j) row.push_back(format_scalar(a(i, j), a.semiring()));
    rows.push_back(row);
  }
  return rows;
}

template <class F>
CheckResult guarded(const std::string& name, F&& body) {
  try {
    return body();
  } catch (const TheoremViolation& e) {
    return fail(name, json{{"exception", e.what()}, {"witness", e.witness()}});
  } catch (const std::exception& e) {
    return fail(name, json{{"exception", e.what()}});
  }
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
    case Status::Skipped:
      return "skipped";
  }
  return "fail";
}

std::size_t VerifyReport::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

const CheckResult* VerifyReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Analysis Analysis::of(const Matrix& a, std::optional<std::size_t> horizon) {
  Analysis x;
  x.a = a;
  x.fnf = frobenius_normal_form(a);
  x.spec = spectrum(a, x.fnf);
  x.core = core_basis(a, x.spec);
  x.horizon = horizon.value_or(default_horizon(a.size(), x.spec.sigma_lambda));
  return x;
}

CheckResult check_power_associativity(const Matrix& a, std::size_t t_max) {
  return guarded("power_associativity", [&] {
    for (std::size_t t = 1; t <= t_max; ++t)
      if (power(a, t) != power_iterated(a, t)) return fail("power_associativity", json{{"t", t}});
    return pass("power_associativity");
  });
}

CheckResult check_star_fixed_point(const Matrix& a) {
  return guarded("star_fixed_point", [&] {
    Matrix hat = a;
    if (a.semiring().kind() == SemiringKind::MaxPlus) {
      const Scalar rho = max_cycle_mean(a);
      if (rho.is_finite()) hat = normalized(a, rho);
    } else if (a.semiring().kind() == SemiringKind::MaxTimes) {
      return skip("star_fixed_point", json{{"reason", "max-times normalisation needs roots"}});
    }
    const Matrix star = kleene_star(hat);
    if (oplus(multiply(hat, star), Matrix::identity(a.size(), a.semiring())) != star)
      return fail("star_fixed_point", json{{"star", matrix_json(star)}});
    return pass("star_fixed_point");
  });
}

CheckResult check_kernels_agree(const Matrix& a) {
  return guarded("kernels_agree", [&] {
    const std::size_t n = a.size();
    const Semiring s = a.semiring();
    std::vector<Scalar> p1(n * n), p2(n * n);
    kernels::serial::multiply(s, n, a.data(), a.data(), p1);
    kernels::parallel::multiply(s, n, a.data(), a.data(), p2);
    if (p1 != p2) return fail("kernels_agree", json{{"kernel", "multiply"}});
    const Vector x = a.column(0);
    std::vector<Scalar> v1(n), v2(n);
    kernels::serial::apply(s, n, a.data(), x.entries(), v1);
    kernels::parallel::apply(s, n, a.data(), x.entries(), v2);
    if (v1 != v2) return fail("kernels_agree", json{{"kernel", "apply"}});
    std::vector<Scalar> c1(a.data().begin(), a.data().end()), c2 = c1;
    const bool ok1 = kernels::serial::closure(s, n, c1);
    const bool ok2 = kernels::parallel::closure(s, n, c2);
    if (ok1 != ok2 || c1 != c2) return fail("kernels_agree", json{{"kernel", "closure"}});
    return pass("kernels_agree");
  });
}

CheckResult check_span_nesting(const Matrix& a, std::size_t t_max) {
  return guarded("span_nesting", [&] {
    Matrix at = a;
    GeneratingSet prev = column_set(at);
    for (std::size_t t = 1; t < t_max; ++t) {
      at = multiply(at, a);
      GeneratingSet cur = column_set(at);
      if (!span_includes(prev, cur)) return fail("span_nesting", json{{"t", t}});
      prev = std::move(cur);
    }
    return pass("span_nesting");
  });
}

CheckResult check_extremal_reduction(const Matrix& a) {
  return guarded("extremal_reduction", [&] {
    const GeneratingSet g = column_set(a);
    const GeneratingSet r = extremal_reduction(g);
    if (!span_equal(g, r)) return fail("extremal_reduction", json{{"reason", "span changed"}});
    if (extremal_reduction(r).vectors() != r.vectors()) return fail("extremal_reduction", json{{"reason", "not idempotent"}});
    return pass("extremal_reduction");
  });
}

CheckResult check_cycle_mean_brute(const Matrix& a, bool mutate) {
  return guarded("cycle_mean_brute", [&] {
    Scalar rho = max_cycle_mean(a);
    if (mutate) rho = rho.is_bottom() ? Scalar(0) : Scalar(mpq_class(rho.value() + 1));
    const Scalar brute = brute_max_cycle_mean(a);
    if (rho != brute) return fail("cycle_mean_brute", json{{"karp", rho_json(rho)}, {"enumeration", rho_json(brute)}});
    return pass("cycle_mean_brute", json{{"rho", rho_json(rho)}});
  });
}

CheckResult check_critical_brute(const Matrix& a) {
  return guarded("critical_brute", [&] {
    const BruteCritical brute = brute_critical(a);
    if (max_cycle_mean(a).is_bottom())
      return brute.nodes.empty() ? pass("critical_brute") : fail("critical_brute", json{{"reason", "acyclic"}});
    const CriticalGraph c = critical_graph(a);
    const std::set<std::size_t> nodes(c.nodes.begin(), c.nodes.end());
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (auto e : c.edges.edges()) edges.insert(e);
    if (nodes != brute.nodes || edges != brute.edges)
      return fail("critical_brute", json{{"nodes", nodes_json(c.nodes)}});
    return pass("critical_brute");
  });
}

CheckResult check_cyclicity_brute(const Matrix& a) {
  return guarded("cyclicity_brute", [&] {
    const Digraph g = build_digraph(a);
    std::vector<std::size_t> all(a.size());
    std::iota(all.begin(), all.end(), 0);
    for (const auto& comp : strong_components(g, all))
      if (component_cyclicity(g, comp) != brute_cyclicity(g, comp))
        return fail("cyclicity_brute", json{{"component", nodes_json(comp)}});
    if (max_cycle_mean(a).is_finite()) {
      const CriticalGraph c = critical_graph(a);
      for (const auto& comp : c.components)
        if (component_cyclicity(c.edges, comp) != brute_cyclicity(c.edges, comp))
          return fail("cyclicity_brute", json{{"critical_component", nodes_json(comp)}});
    }
    return pass("cyclicity_brute");
  });
}

CheckResult check_eigencones(const Analysis& x) {
  return guarded("eigencones", [&] {
    for (const Scalar& rho : x.spec.lambda()) {
      const Eigencone e = eigencone_basis(x.a, x.spec, rho);
      for (std::size_t k = 0; k < e.generators.size(); ++k) {
        const Vector& v = e.generators[k];
        if (apply(x.a, v) != scale_by(rho, v))
          return fail("eigencones", json{{"rho", rho_json(rho)}, {"vector", vector_json(v)}, {"reason", "A x != rho x"}});
        const std::size_t cls = x.fnf.partition.class_of[e.representatives[k]];
        std::vector<std::size_t> expected;
        for (std::size_t i = 0; i < x.a.size(); ++i)
          if (x.fnf.accesses(x.fnf.partition.class_of[i], cls)) expected.push_back(i);
        if (v.support() != expected)
          return fail("eigencones", json{{"rho", rho_json(rho)}, {"vector", vector_json(v)}, {"reason", "support law"}});
      }
      if (extremal_reduction(e.generators).size() != e.generators.size())
        return fail("eigencones", json{{"rho", rho_json(rho)}, {"reason", "generators not extremal"}});
    }
    return pass("eigencones");
  });
}

CheckResult check_reconstruction(const Analysis& x) {
  return guarded("reconstruction", [&] {
    std::size_t count = 0;
    for (const auto& v : x.spec.values) {
      const Eigencone e = eigencone_basis(x.a, x.spec, v.rho);
      for (const Vector& g : e.generators.vectors()) {
        ++count;
        const Vector back = reconstruct_from_critical(x.a, x.spec, v.rho, critical_restriction(g, v.critical));
        if (back != g)
          return fail("reconstruction", json{{"rho", rho_json(v.rho)}, {"generator", vector_json(g)},
                                             {"reconstructed", vector_json(back)}});
      }
    }
    return pass("reconstruction", json{{"generators", count}});
  });
}

CheckResult check_power_spectrum(const Matrix& a, std::size_t t_max) {
  return guarded("power_spectrum", [&] {
    for (std::size_t t = 1; t <= t_max; ++t) {
      const PowerSpectrumReport r = power_spectrum_check(a, t);
      if (!r.ok())
        return fail("power_spectrum", json{{"t", t}, {"lambda", r.lambda_ok}, {"critical", r.critical_ok},
                                           {"splitting", r.splitting_ok}});
    }
    return pass("power_spectrum");
  });
}

CheckResult check_core_forms(const Analysis& x) {
  return guarded("core_forms", [&] {
    const GeneratingSet per_sigma = eigencone_sum_per_sigma(x.a, x.spec);
    if (!span_equal(per_sigma, x.core.extremals)) return fail("core_forms", json{{"reason", "the two sums differ"}});
    return pass("core_forms", json{{"extremals", x.core.extremals.size()}});
  });
}

CheckResult check_core_in_powers(const Analysis& x) {
  return guarded("core_in_powers", [&] {
    Matrix at = x.a;
    for (std::size_t t = 1; t <= x.horizon; ++t) {
      if (t > 1) at = multiply(at, x.a);
      const auto cols = at.columns();
      for (const Vector& v : x.core.extremals.vectors())
        if (!in_span(v, cols)) return fail("core_in_powers", json{{"t", t}, {"extremal", vector_json(v)}});
    }
    return pass("core_in_powers", json{{"horizon", x.horizon}});
  });
}

CheckResult check_core_action(const Analysis& x) {
  return guarded("core_action", [&] {
    const auto& ext = x.core.extremals;
    if (ext.size() > x.a.size()) return fail("core_action", json{{"extremals", ext.size()}});
    for (const auto& cycle : core_action_cycles(x.core))
      for (std::size_t k : cycle.members) {
        Vector v = ext[k];
        for (std::size_t step = 0; step < cycle.members.size(); ++step) v = apply(x.a, v);
        if (scaled(v) != ext[k] || v.norm() != cycle.growth)
          return fail("core_action", json{{"extremal", vector_json(ext[k])}, {"cycle_length", cycle.members.size()}});
        const OrbitTrace tr = orbit_simulate(x.a, ext[k], cycle.members.size() + 1);
        if (!tr.periodicity || cycle.members.size() % tr.periodicity->period != 0)
          return fail("core_action", json{{"extremal", vector_json(ext[k])}, {"reason", "orbit period"}});
      }
    return pass("core_action");
  });
}

CheckResult check_eigencone_periodicity(const Analysis& x) {
  return guarded("eigencone_periodicity", [&] {
    for (const auto& v : x.spec.values) {
      const std::size_t s = v.sigma;
      const auto seq = eigencone_sequence(x.a, v.rho, 3 * s);
      const GeneratingSet& top = seq[s - 1].generators;
      for (std::size_t t = 1; t <= 2 * s; ++t)
        if (!span_equal(seq[t - 1].generators, seq[t + s - 1].generators))
          return fail("eigencone_periodicity", json{{"rho", rho_json(v.rho)}, {"t", t}, {"sigma", s}});
      for (std::size_t t = 1; t <= 3 * s; ++t)
        if (!span_includes(top, seq[t - 1].generators))
          return fail("eigencone_periodicity",
                      json{{"rho", rho_json(v.rho)}, {"t", t}, {"sigma", s}, {"reason", "inclusion"}});
    }
    return pass("eigencone_periodicity");
  });
}

CheckResult check_sum_periodicity(const Analysis& x) {
  return guarded("sum_periodicity", [&] {
    const std::size_t s = x.spec.sigma_lambda;
    if (x.spec.empty()) return pass("sum_periodicity");
    std::vector<GeneratingSet> sums;
    Matrix at = x.a;
    for (std::size_t t = 1; t <= 3 * s; ++t) {
      if (t > 1) at = multiply(at, x.a);
      sums.push_back(eigencone_sum(at));
    }
    for (std::size_t t = 1; t <= 2 * s; ++t)
      if (!span_equal(sums[t - 1], sums[t + s - 1])) return fail("sum_periodicity", json{{"t", t}, {"sigma", s}});
    for (std::size_t t = 1; t <= 3 * s; ++t)
      if (!span_includes(sums[s - 1], sums[t - 1]))
        return fail("sum_periodicity", json{{"t", t}, {"sigma", s}, {"reason", "inclusion"}});
    if (!span_equal(sums[s - 1], x.core.extremals)) return fail("sum_periodicity", json{{"reason", "core"}});
    return pass("sum_periodicity");
  });
}

CheckResult check_finite_stabilization(const Analysis& x) {
  return guarded("finite_stabilization", [&] {
    const bool criterion = finite_stabilization(x.fnf, x.spec);
    const SpanChain chain = span_chain(x.a, x.horizon);
    if (!chain.nested) return fail("finite_stabilization", json{{"reason", "span chain not nested"}});
    json detail{{"criterion", criterion}, {"horizon", x.horizon}};
    if (chain.stabilization) detail["t"] = *chain.stabilization;
    if (!criterion) {
      if (chain.stabilization) return fail("finite_stabilization", detail);
      return pass("finite_stabilization", detail);
    }
    if (!chain.stabilization) return unknown("finite_stabilization", detail);
    if (!span_equal(chain.spans[*chain.stabilization - 1], x.core.extremals)) {
      detail["reason"] = "stable span differs from the core";
      return fail("finite_stabilization", detail);
    }
    return pass("finite_stabilization", detail);
  });
}

CheckResult check_column_law(const Analysis& x) {
  return guarded("column_law", [&] {
    const std::size_t n = x.a.size();
    const bool finite = finite_stabilization(x.fnf, x.spec);
    std::vector<std::optional<std::size_t>> entered(n);
    std::vector<bool> left(n, false);
    // Columns that must end up in the core: spectral ones, and all of them
    // when the core stabilizes finitely.
    std::vector<bool> bound(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t mu = x.fnf.partition.class_of[i];
      bound[i] = x.spec.spectral[mu] || (finite && x.fnf.is_trivial(mu));
    }
    Matrix at = x.a;
    for (std::size_t t = 1; t <= x.horizon; ++t) {
      if (t > 1) at = multiply(at, x.a);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t mu = x.fnf.partition.class_of[i];
        const bool in = core_membership(at.column(i), x.core);
        if (!bound[i]) {
          if (in && !x.fnf.is_trivial(mu))
            return fail("column_law", json{{"column", i + 1}, {"t", t}, {"reason", "non-spectral column in core"}});
          continue;
        }
        if (in && !entered[i]) entered[i] = t;
        if (!in && entered[i]) left[i] = true;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!bound[i]) continue;
      if (left[i]) return fail("column_law", json{{"column", i + 1}, {"reason", "column left the core"}});
      if (!entered[i]) return unknown("column_law", json{{"column", i + 1}, {"horizon", x.horizon}});
    }
    return pass("column_law");
  });
}

CheckResult check_support_profiles(const Analysis& x, std::size_t samples, std::uint64_t seed) {
  return guarded("support_profiles", [&] {
    const auto& ext = x.core.extremals.vectors();
    if (ext.empty()) return pass("support_profiles");
    const Matrix b = power(x.a, x.spec.sigma_lambda);
    const FrobeniusForm fnf_b = frobenius_normal_form(b);
    const Spectrum spec_b = spectrum(b, fnf_b);
    std::vector<Vector> zs(ext.begin(), ext.end());
    Rng rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
      const Vector lambda = random_vector(rng, ext.size(), EntryDistribution{4, 2}, false);
      zs.push_back(combine(ext, lambda));
    }
    for (const Vector& z : zs) {
      const SupportProfile p = support_profile(z, fnf_b, spec_b);
      if (p.has_partial() || !p.final_classes_spectral)
        return fail("support_profiles", json{{"vector", vector_json(z)}, {"partial", p.has_partial()}});
    }
    return pass("support_profiles");
  });
}

CheckResult check_implications(const ClassificationReport& r) {
  auto t = [](const Verdict& v) { return v.value == Truth::True; };
  auto f = [](const Verdict& v) { return v.value == Truth::False; };
  auto applicable = [](const Verdict& v) { return v.value == Truth::True || v.value == Truth::False; };
  json broken = json::array();
  if (t(r.irreducible) && !t(r.ultimately_periodic)) broken.push_back("C1 => C2");
  if (t(r.ultimately_periodic) && f(r.orbit_periodic)) broken.push_back("C2 => C4");
  if (t(r.robust) && f(r.orbit_periodic)) broken.push_back("C3 => C4");
  if (t(r.orbit_periodic) && f(r.column_periodic)) broken.push_back("C4 => C5");
  if (applicable(r.robust) && t(r.robust) != (t(r.core_robust) && t(r.finite_stabilization)))
    broken.push_back("robust <=> core robust and finite stabilization");
  if (applicable(r.orbit_periodic) && t(r.orbit_periodic) != (t(r.core_periodic) && t(r.finite_stabilization)))
    broken.push_back("orbit periodic <=> core periodic and finite stabilization");
  if (r.core_weakly_stable.value != r.bijective_on_core.value) broken.push_back("core weakly stable <=> bijective");
  if (!broken.empty()) return fail("implications", json{{"broken", broken}});
  if (t(r.orbit_periodic) && r.column_periodic.value == Truth::Inconclusive)
    return unknown("implications", json{{"pending", "C4 => C5"}});
  return pass("implications");
}

CheckResult check_robust_oracle(const Analysis& x, const ClassificationReport& r, std::size_t samples,
                                std::uint64_t seed) {
  return guarded("robust_oracle", [&] {
    if (r.robust.value == Truth::NotApplicable) return skip("robust_oracle", json{{"reason", "bottom column"}});
    const BruteRobustResult b = brute_force_robust(x.a, samples, x.horizon, seed);
    json detail{{"analytic_robust", truth_name(r.robust.value)},
                {"brute_robust", truth_name(b.robust)},
                {"analytic_orbit_periodic", truth_name(r.orbit_periodic.value)},
                {"brute_orbit_periodic", truth_name(b.orbit_periodic)},
                {"vectors", b.vectors_tried}};
    const bool robust_known = b.robust == Truth::True || b.robust == Truth::False;
    const bool periodic_known = b.orbit_periodic == Truth::True || b.orbit_periodic == Truth::False;
    if ((robust_known && b.robust != r.robust.value) || (periodic_known && b.orbit_periodic != r.orbit_periodic.value))
      return fail("robust_oracle", detail);
    if (!robust_known || !periodic_known) return unknown("robust_oracle", detail);
    return pass("robust_oracle", detail);
  });
}

CheckResult check_bijectivity(const Analysis& x, std::size_t probes, std::uint64_t seed, std::size_t t_max) {
  return guarded("bijectivity", [&] {
    const Verdict v = is_bijective_on_core(x.fnf, x.spec);
    const CollisionResult c = collision_search(x.a, x.fnf, x.spec, x.core, probes, seed);
    if (v.is_false() != c.collision.has_value())
      return fail("bijectivity", json{{"condition", truth_name(v.value)}, {"collision", c.collision.has_value()}});
    if (c.collision) {
      const Matrix at = power(x.a, c.collision->t);
      if (c.collision->y == c.collision->y_prime || apply(at, c.collision->y) != apply(at, c.collision->y_prime) ||
          !core_membership(c.collision->y, x.core) || !core_membership(c.collision->y_prime, x.core))
        return fail("bijectivity", json{{"reason", "collision pair invalid"}});
    }
    for (std::size_t t = 2; t <= t_max; ++t)
      if (is_bijective_on_core(power(x.a, t)).value != v.value)
        return fail("bijectivity", json{{"reason", "power invariance"}, {"t", t}});
    return pass("bijectivity", json{{"bijective", v.is_true()}, {"probes", c.probes}});
  });
}

CheckResult check_integer_theorem(const Analysis& x) {
  return guarded("integer_theorem", [&] {
    if (!x.a.is_integer()) return skip("integer_theorem");
    const Verdict v = integer_generator_check(x.a, x.core);
    if (!v.is_true()) return fail("integer_theorem", v.witness);
    return pass("integer_theorem");
  });
}

CheckResult check_power_periodicity(const Analysis& x) {
  return guarded("power_periodicity", [&] {
    if (!is_irreducible(x.fnf).is_true()) return skip("power_periodicity");
    const CriticalGraph c = critical_graph(x.a);
    const auto p = matrix_power_periodicity(x.a, x.horizon);
    json detail{{"cyclicity", c.cyclicity}, {"horizon", x.horizon}};
    if (!p) return unknown("power_periodicity", detail);
    detail["period"] = p->period;
    detail["defect"] = p->defect;
    detail["growth"] = rho_json(p->growth);
    if (p->period != c.cyclicity || p->growth != times(c.rho, p->period)) return fail("power_periodicity", detail);
    return pass("power_periodicity", detail);
  });
}

CheckResult check_column_periodicity(const Analysis& x) {
  return guarded("column_periodicity", [&] {
    std::size_t periodic = 0;
    std::size_t drifting = 0;
    for (std::size_t j = 0; j < x.a.size(); ++j) {
      const bool spectral = x.spec.spectral[x.fnf.partition.class_of[j]];
      if (column_periodicity(x.a, j, x.horizon)) {
        ++periodic;
        continue;
      }
      if (spectral) return unknown("column_periodicity", json{{"column", j + 1}, {"horizon", x.horizon}});
      if (drift_certificate(x.a, Vector::unit(x.a.size(), j, x.a.semiring()))) ++drifting;
    }
    return pass("column_periodicity", json{{"periodic", periodic}, {"certified_aperiodic", drifting}});
  });
}

CheckResult check_maxmin_core(const Matrix& a) {
  return guarded("maxmin_core", [&] {
    const MaxMinCore core = maxmin_core(a);
    json detail{{"threshold", core.threshold}, {"period", core.period}, {"extremals", core.extremals.size()}};
    if (power(a, core.threshold + core.period) != power(a, core.threshold)) return fail("maxmin_core", detail);
    const SpanChain chain = span_chain(a, core.threshold + core.period + 1);
    if (!chain.nested || !chain.stabilization || *chain.stabilization > core.threshold) return fail("maxmin_core", detail);
    for (std::size_t t = core.threshold; t <= core.threshold + core.period; ++t)
      if (!span_equal(column_set(power(a, t)), core.extremals)) {
        detail["t"] = t;
        return fail("maxmin_core", detail);
      }
    if (!maxmin_fixed_point_check(core, a)) return fail("maxmin_core", detail);
    return pass("maxmin_core", detail);
  });
}

VerifyReport verify_suite(const Matrix& a, const VerifyConfig& config) {
  VerifyReport r;
  auto& c = r.checks;
  const bool small = a.size() <= config.brute_limit;
  c.push_back(check_power_associativity(a));
  c.push_back(check_kernels_agree(a));
  c.push_back(check_span_nesting(a, config.max_power));
  c.push_back(check_extremal_reduction(a));
  if (a.semiring().kind() == SemiringKind::MaxMin) {
    c.push_back(check_star_fixed_point(a));
    c.push_back(check_maxmin_core(a));
    return r;
  }
  if (a.semiring().kind() != SemiringKind::MaxPlus) return r;
  c.push_back(check_star_fixed_point(a));
  if (small) {
    c.push_back(check_cycle_mean_brute(a, config.mutate));
    c.push_back(check_critical_brute(a));
    c.push_back(check_cyclicity_brute(a));
  }
  c.push_back(check_power_spectrum(a, config.max_power));

  Analysis x;
  try {
    x = Analysis::of(a, config.horizon);
  } catch (const TheoremViolation& e) {
    c.push_back(fail("analysis", json{{"exception", e.what()}, {"witness", e.witness()}}));
    return r;
  } catch (const std::exception& e) {
    c.push_back(fail("analysis", json{{"exception", e.what()}}));
    return r;
  }
  if (config.mutate && !x.core.extremals.empty()) {
    std::vector<Vector> vs = x.core.extremals.vectors();
    for (std::size_t i = 0; i < vs[0].size(); ++i)
      if (vs[0][i].is_finite()) {
        vs[0][i] = Scalar(mpq_class(vs[0][i].value() - 1));
        break;
      }
    x.core.extremals = GeneratingSet(a.size(), a.semiring(), vs);
  }
  c.push_back(check_eigencones(x));
  c.push_back(check_reconstruction(x));
  c.push_back(check_core_forms(x));
  c.push_back(check_core_in_powers(x));
  c.push_back(check_core_action(x));
  c.push_back(check_eigencone_periodicity(x));
  c.push_back(check_sum_periodicity(x));
  c.push_back(check_finite_stabilization(x));
  c.push_back(check_column_law(x));
  c.push_back(check_support_profiles(x, config.samples, config.seed));
  c.push_back(check_power_periodicity(x));
  c.push_back(check_column_periodicity(x));
  c.push_back(check_integer_theorem(x));
  c.push_back(check_bijectivity(x, config.probes, config.seed));
  c.push_back(guarded("classification", [&] {
    const ClassificationReport rep = classify(a, ClassifyOptions{x.horizon, true});
    r.checks.push_back(check_implications(rep));
    r.checks.push_back(check_robust_oracle(x, rep, config.samples, config.seed));
    return pass("classification");
  }));
  return r;
}

nlohmann::json verify_report_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.detail.is_null()) j["detail"] = c.detail;
    checks.push_back(j);
  }
  return json{{"passed", r.count(Status::Pass)},
              {"failed", r.count(Status::Fail)},
              {"inconclusive", r.count(Status::Inconclusive)},
              {"skipped", r.count(Status::Skipped)},
              {"checks", checks}};
}

}  // namespace tropcore
