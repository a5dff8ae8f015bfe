#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "tropcore/classify.hpp"
#include "tropcore/corpus.hpp"

// Versioned "report-v1" documents shared by the command-line front end.
namespace tropcore {

inline constexpr const char* kReportSchema = "report-v1";

enum class Display { Native, MaxTimes };

/// Formats every scalar that goes into a report and remembers whether all of
/// them have an exact max-times spelling (only 0 and bottom do).
class ScalarFormatter {
 public:
  ScalarFormatter(Semiring s, Display display) : semiring_(s), display_(display) {}

  nlohmann::json operator()(const Scalar& a);
  nlohmann::json operator()(const Vector& v);
  nlohmann::json operator()(const std::vector<Scalar>& xs);

  bool representable() const noexcept { return representable_; }
  const char* display_name() const;

 private:
  Semiring semiring_;
  Display display_;
  bool representable_ = true;
};

struct ReportHeader {
  std::string command;
  std::optional<std::string> label;
  std::optional<std::size_t> horizon;
};

nlohmann::json spectra_body(const Matrix& a, ScalarFormatter& fmt);
nlohmann::json core_body(const Matrix& a, std::size_t horizon, ScalarFormatter& fmt);
nlohmann::json maxmin_core_body(const Matrix& a, ScalarFormatter& fmt);
nlohmann::json classify_body(const ClassificationReport& r);
nlohmann::json orbit_body(const OrbitTrace& trace, ScalarFormatter& fmt);

/// Builds the body with `build`, then wraps it in the common envelope. With
/// max-times display the body is rebuilt multiplicatively when every scalar
/// allows it; otherwise it stays native and the fallback is tagged.
template <class Build>
nlohmann::json make_report(const ReportHeader& header, const Matrix& a, Display display, Build&& build);

nlohmann::json envelope(const ReportHeader& header, const Matrix& a, const char* display, nlohmann::json body);

/// Human-readable rendering of any report document.
std::string render_text(const nlohmann::json& report);

template <class Build>
nlohmann::json make_report(const ReportHeader& header, const Matrix& a, Display display, Build&& build) {
  ScalarFormatter native(a.semiring(), Display::Native);
  nlohmann::json body = build(native);
  if (display == Display::MaxTimes && a.semiring().kind() == SemiringKind::MaxPlus) {
    if (native.representable()) {
      ScalarFormatter mt(a.semiring(), Display::MaxTimes);
      return envelope(header, a, mt.display_name(), build(mt));
    }
    nlohmann::json r = envelope(header, a, native.display_name(), std::move(body));
    r["display_fallback"] = "values have no exact max-times form";
    return r;
  }
  return envelope(header, a, native.display_name(), std::move(body));
}

}  // namespace tropcore
