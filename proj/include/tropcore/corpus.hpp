#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tropcore/checks.hpp"
#include "tropcore/random.hpp"

namespace tropcore {

enum class CorpusKind : std::uint8_t { General, NoBottomColumn, Irreducible, Integer, MaxMin };

std::string_view corpus_kind_name(CorpusKind k);
std::optional<CorpusKind> parse_corpus_kind(std::string_view name);

struct CorpusConfig {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t n = 4;  // largest dimension; sizes are drawn from [1, n]
  double density = 0.7;
  EntryDistribution dist{};
  CorpusKind kind = CorpusKind::General;
  VerifyConfig verify{};
  bool parallel = true;
  bool shrink = true;
};

/// Matrix number `index` of the corpus; depends only on (config, index).
Matrix corpus_matrix(const CorpusConfig& config, std::size_t index);
std::vector<Matrix> generate_corpus(const CorpusConfig& config);

struct CorpusEntry {
  std::size_t index = 0;
  Matrix matrix;
  VerifyReport report;
  std::optional<Matrix> shrunk;
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;

  std::size_t failed() const;
  std::size_t inconclusive() const;
  bool ok() const { return failed() == 0; }
};

/// Verifies a fixed list of matrices; per-matrix work runs concurrently.
CorpusReport run_matrices(const std::vector<Matrix>& matrices, const VerifyConfig& verify, bool parallel,
                          bool shrink);
CorpusReport corpus_run(const CorpusConfig& config);

/// Greedy reduction of a failing matrix: deletes nodes and blanks or rounds
/// entries while `verify_suite` keeps failing.
Matrix shrink_failure(const Matrix& a, const VerifyConfig& verify);

nlohmann::json corpus_report_json(const CorpusReport& r, bool include_passing = false);

}  // namespace tropcore
