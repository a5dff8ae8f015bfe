#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "tropcore/errors.hpp"
#include "tropcore/io.hpp"
#include "tropcore/report.hpp"

namespace fs = std::filesystem;
using namespace tropcore;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kChecksFailed = 1, kUsage = 2, kViolation = 3 };

struct Options {
  std::string input;
  std::optional<std::size_t> horizon;
  bool json_out = false;
  std::string display = "native";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t n = 4;
  double density = 0.7;
  std::string semiring = "maxplus";
  std::string kind;
  long range = 3;
  long denominator = 1;
  bool random = false;
  bool mutate = false;
  bool strict = false;
  bool serial = false;
  std::size_t samples = 8;
  std::size_t probes = 32;
  std::string vector;
};

void emit(const json& report, const Options& o) {
  if (o.json_out)
    std::cout << report.dump(2) << '\n';
  else
    std::cout << render_text(report);
}

Display display_of(const Options& o) {
  if (o.display == "maxtimes") return Display::MaxTimes;
  return Display::Native;
}

MatrixDocument load(const Options& o) {
  if (o.input.empty()) throw Error("an input file is required");
  if (o.input == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_matrix_document(text);
  }
  return read_matrix_file(o.input);
}

void require_maxplus(const Matrix& a, const char* command) {
  if (a.semiring().kind() != SemiringKind::MaxPlus)
    throw NotSupported(std::string(command) + " needs a max-plus matrix");
}

std::size_t horizon_for(const Options& o, const Matrix& a) {
  if (o.horizon) return *o.horizon;
  if (a.semiring().kind() != SemiringKind::MaxPlus) return default_horizon(a.size(), 1);
  return default_horizon(a.size(), spectrum(a).sigma_lambda);
}

int cmd_spectra(const Options& o) {
  const MatrixDocument doc = load(o);
  const Matrix a = doc.matrix();
  require_maxplus(a, "spectra");
  emit(make_report({"spectra", doc.label, std::nullopt}, a, display_of(o),
                   [&](ScalarFormatter& f) { return spectra_body(a, f); }),
       o);
  return kOk;
}

int cmd_core(const Options& o) {
  const MatrixDocument doc = load(o);
  const Matrix a = doc.matrix();
  if (a.semiring().kind() == SemiringKind::MaxMin) {
    emit(make_report({"core", doc.label, std::nullopt}, a, Display::Native,
                     [&](ScalarFormatter& f) { return maxmin_core_body(a, f); }),
         o);
    return kOk;
  }
  require_maxplus(a, "core");
  const std::size_t h = horizon_for(o, a);
  emit(make_report({"core", doc.label, h}, a, display_of(o), [&](ScalarFormatter& f) { return core_body(a, h, f); }),
       o);
  return kOk;
}

int cmd_classify(const Options& o) {
  const MatrixDocument doc = load(o);
  const Matrix a = doc.matrix();
  require_maxplus(a, "classify");
  const std::size_t h = horizon_for(o, a);
  const ClassificationReport r = classify(a, ClassifyOptions{h, true});
  emit(make_report({"classify", doc.label, h}, a, Display::Native, [&](ScalarFormatter&) { return classify_body(r); }),
       o);
  return kOk;
}

int cmd_orbit(const Options& o) {
  const MatrixDocument doc = load(o);
  const Matrix a = doc.matrix();
  if (o.vector.empty()) throw Error("--vector is required");
  const Vector x = parse_vector(o.vector, a.semiring());
  if (x.size() != a.size())
    throw DimensionMismatch("vector has " + std::to_string(x.size()) + " entries, matrix is " +
                            std::to_string(a.size()) + "x" + std::to_string(a.size()));
  const std::size_t h = horizon_for(o, a);
  const OrbitTrace trace = orbit_simulate(a, x, h, true);
  emit(make_report({"orbit", doc.label, h}, a, display_of(o),
                   [&](ScalarFormatter& f) { return orbit_body(trace, f); }),
       o);
  return kOk;
}

VerifyConfig verify_config(const Options& o) {
  VerifyConfig c;
  c.horizon = o.horizon;
  c.samples = o.samples;
  c.probes = o.probes;
  c.seed = o.seed;
  c.mutate = o.mutate;
  return c;
}

int verdict_exit(std::size_t failed, std::size_t inconclusive, const Options& o) {
  if (failed > 0) return kChecksFailed;
  if (o.strict && inconclusive > 0) return kChecksFailed;
  return kOk;
}

int verify_corpus_report(const CorpusReport& r, json config, const Options& o) {
  json report{{"schema", kReportSchema}, {"command", "verify"}, {"mode", "corpus"}, {"config", std::move(config)}};
  report["result"] = corpus_report_json(r);
  emit(report, o);
  return verdict_exit(r.failed(), r.inconclusive(), o);
}

int cmd_verify(const Options& o) {
  const VerifyConfig vc = verify_config(o);
  if (o.random) {
    CorpusConfig c;
    c.seed = o.seed;
    c.count = o.count;
    c.n = o.n;
    c.density = o.density;
    c.dist = EntryDistribution{o.range, o.denominator};
    c.verify = vc;
    c.parallel = !o.serial;
    std::string kind = o.kind;
    if (kind.empty()) kind = o.semiring == "maxmin" ? "maxmin" : "general";
    const auto k = parse_corpus_kind(kind);
    if (!k) throw Error("unknown corpus kind '" + kind + "'");
    if (o.semiring != "maxplus" && o.semiring != "maxmin") throw NotSupported("random corpora are max-plus or max-min");
    if (o.semiring == "maxmin" && *k != CorpusKind::MaxMin) throw Error("max-min corpora use kind 'maxmin'");
    c.kind = *k;
    json config{{"seed", c.seed},       {"count", c.count},     {"n", c.n},
                {"density", c.density}, {"range", c.dist.range}, {"max_denominator", c.dist.max_denominator},
                {"kind", kind},         {"mutate", o.mutate}};
    return verify_corpus_report(corpus_run(c), config, o);
  }
  if (!o.input.empty() && o.input != "-" && fs::is_directory(o.input)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(o.input))
      if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<Matrix> matrices;
    json names = json::array();
    for (const auto& f : files) {
      matrices.push_back(read_matrix_file(f.string()).matrix());
      names.push_back(f.filename().string());
    }
    return verify_corpus_report(run_matrices(matrices, vc, !o.serial, true),
                                json{{"directory", o.input}, {"files", names}, {"mutate", o.mutate}}, o);
  }
  const MatrixDocument doc = load(o);
  const Matrix a = doc.matrix();
  const VerifyReport r = verify_suite(a, vc);
  json report = envelope({"verify", doc.label, o.horizon}, a, semiring_name(a.semiring().kind()).data(),
                         verify_report_json(r));
  report["mode"] = "single";
  emit(report, o);
  return verdict_exit(r.count(Status::Fail), r.count(Status::Inconclusive), o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropcore: spectral and core analysis of max-plus matrices"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool input_required) {
    auto* in = sub->add_option("input", o.input, "matrix file (text or JSON), '-' for stdin");
    if (input_required) in->required();
    sub->add_option("--horizon", o.horizon, "simulation horizon (default n^2 + 3n*sigma + 16)");
    sub->add_flag("--json", o.json_out, "emit a report-v1 JSON document");
    sub->add_option("--display", o.display, "scalar display: native or maxtimes")
        ->check(CLI::IsMember({"native", "maxtimes"}));
  };

  auto* spectra = app.add_subcommand("spectra", "Frobenius form, spectrum, critical graphs");
  add_common(spectra, true);
  auto* core = app.add_subcommand("core", "core extremals, action and stabilization");
  add_common(core, true);
  auto* cls = app.add_subcommand("classify", "robustness, periodicity and bijectivity verdicts");
  add_common(cls, true);
  auto* orbit = app.add_subcommand("orbit", "simulate the orbit of a vector");
  add_common(orbit, true);
  orbit->add_option("--vector", o.vector, "start vector, e.g. \"0,-inf\"")->required();
  auto* verify = app.add_subcommand("verify", "differential checks on a file, a directory or a random corpus");
  add_common(verify, false);
  verify->add_flag("--random", o.random, "verify a random corpus");
  verify->add_option("--seed", o.seed, "corpus and sampling seed");
  verify->add_option("--count", o.count, "corpus size");
  verify->add_option("--n", o.n, "largest dimension")->check(CLI::Range(1, 64));
  verify->add_option("--density", o.density, "probability of a finite entry")->check(CLI::Range(0.0, 1.0));
  verify->add_option("--semiring", o.semiring, "maxplus or maxmin")->check(CLI::IsMember({"maxplus", "maxmin"}));
  verify->add_option("--kind", o.kind, "general, no-bottom-column, irreducible, integer or maxmin");
  verify->add_option("--range", o.range, "entries drawn from [-range, range]")->check(CLI::PositiveNumber);
  verify->add_option("--denominator", o.denominator, "largest entry denominator")->check(CLI::PositiveNumber);
  verify->add_option("--samples", o.samples, "random vectors per orbit experiment");
  verify->add_option("--probes", o.probes, "injectivity probes on the core");
  verify->add_flag("--mutate", o.mutate, "inject a fault; the run must fail");
  verify->add_flag("--strict", o.strict, "treat inconclusive checks as failures");
  verify->add_flag("--serial", o.serial, "verify corpus matrices one at a time");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*spectra) return cmd_spectra(o);
    if (*core) return cmd_core(o);
    if (*cls) return cmd_classify(o);
    if (*orbit) return cmd_orbit(o);
    if (*verify) return cmd_verify(o);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\nwitness: " << e.witness() << '\n';
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
