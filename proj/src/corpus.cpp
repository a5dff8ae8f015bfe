#include "tropcore/corpus.hpp"

#include <array>

#include "tropcore/io.hpp"

#ifdef TROPCORE_HAVE_OPENMP
#include <omp.h>
#endif

namespace tropcore {

namespace {

constexpr std::array<std::string_view, 5> kKindNames{"general", "no-bottom-column", "irreducible", "integer",
                                                     "maxmin"};

Rng matrix_rng(std::uint64_t seed, std::size_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

bool fails(const Matrix& a, const VerifyConfig& verify) { return !verify_suite(a, verify).ok(); }

Matrix submatrix_without(const Matrix& a, std::size_t k) {
  Matrix b(a.size() - 1, a.semiring());
  for (std::size_t i = 0, bi = 0; i < a.size(); ++i) {
    if (i == k) continue;
    for (std::size_t j = 0, bj = 0; j < a.size(); ++j) {
      if (j == k) continue;
      b(bi, bj++) = a(i, j);
    }
    ++bi;
  }
  return b;
}

}  // namespace

std::string_view corpus_kind_name(CorpusKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<CorpusKind> parse_corpus_kind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i)
    if (kKindNames[i] == name) return static_cast<CorpusKind>(i);
  return std::nullopt;
}

Matrix corpus_matrix(const CorpusConfig& config, std::size_t index) {
  Rng rng = matrix_rng(config.seed, index);
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(config.n, 1))(rng);
  switch (config.kind) {
    case CorpusKind::General:
      return random_matrix(rng, n, config.density, config.dist);
    case CorpusKind::NoBottomColumn:
      return random_no_bottom_column(rng, n, config.density, config.dist);
    case CorpusKind::Irreducible: {
      const std::size_t blocks = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(n, 3))(rng);
      return random_irreducible(rng, n, config.density, config.dist, blocks);
    }
    case CorpusKind::Integer:
      return random_integer_matrix(rng, n, config.density, -config.dist.range, config.dist.range);
    case CorpusKind::MaxMin:
      return random_maxmin(rng, n, maxmin_value_set());
  }
  return Matrix(n);
}

std::vector<Matrix> generate_corpus(const CorpusConfig& config) {
  std::vector<Matrix> out;
  out.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i) out.push_back(corpus_matrix(config, i));
  return out;
}

std::size_t CorpusReport::failed() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.report.ok() ? 0 : 1;
  return k;
}

std::size_t CorpusReport::inconclusive() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.report.count(Status::Inconclusive) > 0 ? 1 : 0;
  return k;
}

Matrix shrink_failure(const Matrix& a, const VerifyConfig& verify) {
  Matrix cur = a;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t k = 0; cur.size() > 1 && k < cur.size(); ++k) {
      Matrix b = submatrix_without(cur, k);
      if (fails(b, verify)) {
        cur = std::move(b);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (std::size_t i = 0; i < cur.size() && !progress; ++i)
      for (std::size_t j = 0; j < cur.size() && !progress; ++j) {
        const Scalar e = cur(i, j);
        if (e.is_bottom()) continue;
        std::vector<Scalar> candidates{Scalar::bottom()};
        if (e.value().get_den() != 1) candidates.push_back(cur.semiring().from_rational(mpq_class(mpz_class(e.value().get_num() / e.value().get_den()))));
        if (e != cur.semiring().one()) candidates.push_back(cur.semiring().one());
        for (const Scalar& c : candidates) {
          Matrix b = cur;
          b(i, j) = c;
          if (fails(b, verify)) {
            cur = std::move(b);
            progress = true;
            break;
          }
        }
      }
  }
  return cur;
}

CorpusReport run_matrices(const std::vector<Matrix>& matrices, const VerifyConfig& verify, bool parallel,
                          bool shrink) {
  CorpusReport r;
  r.entries.resize(matrices.size());
  const auto work = [&](std::size_t i) {
    CorpusEntry& e = r.entries[i];
    e.index = i;
    e.matrix = matrices[i];
    e.report = verify_suite(matrices[i], verify);
    if (shrink && !e.report.ok()) e.shrunk = shrink_failure(matrices[i], verify);
  };
  const auto count = static_cast<std::ptrdiff_t>(matrices.size());
#ifdef TROPCORE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) work(static_cast<std::size_t>(i));
#else
  (void)parallel;
  for (std::ptrdiff_t i = 0; i < count; ++i) work(static_cast<std::size_t>(i));
#endif
  return r;
}

CorpusReport corpus_run(const CorpusConfig& config) {
  return run_matrices(generate_corpus(config), config.verify, config.parallel, config.shrink);
}

nlohmann::json corpus_report_json(const CorpusReport& r, bool include_passing) {
  using nlohmann::json;
  json failures = json::array();
  json matrices = json::array();
  std::size_t checks = 0;
  std::size_t inconclusive_checks = 0;
  for (const auto& e : r.entries) {
    checks += e.report.checks.size();
    inconclusive_checks += e.report.count(Status::Inconclusive);
    const bool interesting = !e.report.ok() || e.report.count(Status::Inconclusive) > 0;
    if (!interesting && !include_passing) continue;
    json item{{"index", e.index},
              {"matrix", json::parse(serialize_json(MatrixDocument::from_matrix(e.matrix)))},
              {"report", verify_report_json(e.report)}};
    if (e.shrunk) item["shrunk"] = json::parse(serialize_json(MatrixDocument::from_matrix(*e.shrunk)));
    (e.report.ok() ? matrices : failures).push_back(item);
  }
  return json{{"matrices", r.entries.size()},
              {"failed", r.failed()},
              {"inconclusive", r.inconclusive()},
              {"checks", checks},
              {"inconclusive_checks", inconclusive_checks},
              {"failures", failures},
              {"entries", matrices}};
}

}  // namespace tropcore
