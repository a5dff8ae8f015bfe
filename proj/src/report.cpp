#include "tropcore/report.hpp"

#include <sstream>

#include "tropcore/io.hpp"
#include "tropcore/maxmin.hpp"

namespace tropcore {

using nlohmann::json;

nlohmann::json ScalarFormatter::operator()(const Scalar& a) {
  if (a.is_finite() && a.value() != 0) representable_ = false;
  if (display_ == Display::MaxTimes) return a.is_bottom() ? "0" : "1";
  return format_scalar(a, semiring_);
}

nlohmann::json ScalarFormatter::operator()(const Vector& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back((*this)(x));
  return j;
}

nlohmann::json ScalarFormatter::operator()(const std::vector<Scalar>& xs) {
  json j = json::array();
  for (const auto& x : xs) j.push_back((*this)(x));
  return j;
}

const char* ScalarFormatter::display_name() const {
  if (display_ == Display::MaxTimes) return "maxtimes";
  return semiring_name(semiring_.kind()).data();
}

namespace {

json components_json(const std::vector<std::vector<std::size_t>>& comps, const std::vector<std::size_t>& cyc) {
  json out = json::array();
  for (std::size_t k = 0; k < comps.size(); ++k) out.push_back({{"nodes", nodes_json(comps[k])}, {"cyclicity", cyc[k]}});
  return out;
}

json edges_json(const Digraph& g) {
  json out = json::array();
  for (auto [i, j] : g.edges()) out.push_back({i + 1, j + 1});
  return out;
}

json verdict_json(const Verdict& v) {
  json j{{"value", truth_name(v.value)}, {"empirical", v.empirical}};
  if (!v.witness.is_null()) j["witness"] = v.witness;
  return j;
}

void render(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar_text = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto inline_value = [&](const json& v) {
    if (!v.is_array()) return scalar_text(v);
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) s += ", ";
      s += v[k].is_array() ? v[k].dump() : scalar_text(v[k]);
    }
    return s + "]";
  };
  auto is_flat = [](const json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_object() || (x.is_array() && !x.empty() && x.front().is_structured())) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, v] : j.items()) {
      if (v.is_primitive() || is_flat(v)) {
        out << pad << key << ": " << inline_value(v) << '\n';
      } else {
        out << pad << key << ":\n";
        render(out, v, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || is_flat(v)) {
        out << pad << "- " << inline_value(v) << '\n';
      } else {
        out << pad << "-\n";
        render(out, v, indent + 1);
      }
    }
  } else {
    out << pad << inline_value(j) << '\n';
  }
}

}  // namespace

nlohmann::json spectra_body(const Matrix& a, ScalarFormatter& fmt) {
  const FrobeniusForm fnf = frobenius_normal_form(a);
  const Spectrum spec = spectrum(a, fnf);
  json classes = json::array();
  for (std::size_t mu = 0; mu < fnf.class_count(); ++mu) {
    json c{{"index", mu + 1},
           {"nodes", nodes_json(fnf.nodes(mu))},
           {"trivial", fnf.is_trivial(mu)},
           {"rho", fmt(fnf.class_rho[mu])},
           {"cyclicity", fnf.class_cyclicity[mu]},
           {"spectral", static_cast<bool>(spec.spectral[mu])}};
    json to = json::array();
    for (std::size_t nu : fnf.reduced.edges[mu]) to.push_back(nu + 1);
    c["edges_to"] = to;
    classes.push_back(c);
  }
  json values = json::array();
  for (const auto& v : spec.values) {
    json sc = json::array();
    for (std::size_t mu : v.spectral_classes) sc.push_back(mu + 1);
    values.push_back({{"rho", fmt(v.rho)},
                      {"spectral_classes", sc},
                      {"m_nodes", nodes_json(v.m_nodes)},
                      {"critical_nodes", nodes_json(v.critical.nodes)},
                      {"critical_edges", edges_json(v.critical.edges)},
                      {"critical_components", components_json(v.critical.components, v.critical.component_cyclicity)},
                      {"sigma", v.sigma}});
  }
  return json{{"permutation", nodes_json(fnf.permutation)},
              {"classes", classes},
              {"lambda", fmt(spec.lambda())},
              {"eigenvalues", values},
              {"sigma_lambda", spec.sigma_lambda}};
}

nlohmann::json core_body(const Matrix& a, std::size_t horizon, ScalarFormatter& fmt) {
  const FrobeniusForm fnf = frobenius_normal_form(a);
  const Spectrum spec = spectrum(a, fnf);
  const CoreDescription core = core_basis(a, spec);
  json extremals = json::array();
  for (std::size_t k = 0; k < core.extremals.size(); ++k)
    extremals.push_back({{"vector", fmt(core.extremals[k])},
                         {"eigenvalue", fmt(core.lambda[core.extremal_eigenvalue[k]])},
                         {"image", core.action[k] + 1},
                         {"growth", fmt(core.growth[k])}});
  json cycles = json::array();
  for (const auto& c : core_action_cycles(core)) {
    json members = json::array();
    for (std::size_t k : c.members) members.push_back(k + 1);
    cycles.push_back({{"members", members}, {"growth", fmt(c.growth)}});
  }
  const bool criterion = finite_stabilization(fnf, spec);
  const SpanChain chain = span_chain(a, horizon);
  json stab{{"criterion", criterion}, {"horizon", horizon}};
  stab["t"] = chain.stabilization ? json(*chain.stabilization) : json(nullptr);
  return json{{"sigma_lambda", core.sigma_lambda},
              {"lambda", fmt(core.lambda)},
              {"extremals", extremals},
              {"action_cycles", cycles},
              {"identity_action", action_is_identity(core)},
              {"finite_stabilization", stab}};
}

nlohmann::json maxmin_core_body(const Matrix& a, ScalarFormatter& fmt) {
  const MaxMinCore core = maxmin_core(a);
  json extremals = json::array();
  for (const Vector& v : core.extremals.vectors()) extremals.push_back({{"vector", fmt(v)}});
  return json{{"threshold", core.threshold},
              {"period", core.period},
              {"extremals", extremals},
              {"fixed_points", maxmin_fixed_point_check(core, a)}};
}

nlohmann::json classify_body(const ClassificationReport& r) {
  json j{{"irreducible", verdict_json(r.irreducible)},
         {"ultimately_periodic", verdict_json(r.ultimately_periodic)},
         {"robust", verdict_json(r.robust)},
         {"orbit_periodic", verdict_json(r.orbit_periodic)},
         {"column_periodic", verdict_json(r.column_periodic)},
         {"core_robust", verdict_json(r.core_robust)},
         {"core_periodic", verdict_json(r.core_periodic)},
         {"weakly_stable", verdict_json(r.weakly_stable)},
         {"core_weakly_stable", verdict_json(r.core_weakly_stable)},
         {"bijective_on_core", verdict_json(r.bijective_on_core)},
         {"finite_stabilization", verdict_json(r.finite_stabilization)}};
  if (r.integer_generators) j["integer_generators"] = verdict_json(*r.integer_generators);
  return j;
}

nlohmann::json orbit_body(const OrbitTrace& trace, ScalarFormatter& fmt) {
  json states = json::array();
  for (std::size_t t = 0; t < trace.states.size(); ++t) {
    if (trace.states[t].size() == 0) {
      states.push_back({{"t", t}, {"zero", true}});
      continue;
    }
    states.push_back({{"t", t}, {"scale", fmt(trace.scales[t])}, {"state", fmt(trace.states[t])}});
  }
  json j{{"start", fmt(trace.start)},
         {"states", states},
         {"horizon_exceeded", trace.horizon_exceeded},
         {"reached_zero", trace.reached_zero}};
  j["first_eigenvector_hit"] = trace.first_eigenvector_hit ? json(*trace.first_eigenvector_hit) : json(nullptr);
  if (trace.periodicity)
    j["periodicity"] = {{"period", trace.periodicity->period},
                        {"growth", fmt(trace.periodicity->growth)},
                        {"defect", trace.periodicity->defect}};
  else
    j["periodicity"] = nullptr;
  return j;
}

nlohmann::json envelope(const ReportHeader& header, const Matrix& a, const char* display, nlohmann::json body) {
  json r{{"schema", kReportSchema},
         {"command", header.command},
         {"semiring", semiring_name(a.semiring().kind())},
         {"n", a.size()},
         {"display", display}};
  if (header.label) r["label"] = *header.label;
  if (header.horizon) r["horizon"] = *header.horizon;
  r["result"] = std::move(body);
  return r;
}

std::string render_text(const nlohmann::json& report) {
  std::ostringstream out;
  render(out, report, 0);
  return out.str();
}

}  // namespace tropcore
