#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tropcore {

/// Extended rational: an exact rational number or the bottom element.
///
/// Bottom is a tag, never a sentinel value. It is the least element of every
/// carrier the library uses (-inf in max-plus, 0 in max-times and max-min).
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : finite_(true), value_(value) {}
  Scalar(long value) : finite_(true), value_(value) {}
  explicit Scalar(mpq_class value) : finite_(true), value_(std::move(value)) { value_.canonicalize(); }

  static Scalar bottom() { return Scalar{}; }
  static Scalar ratio(long numerator, long denominator);

  bool is_bottom() const noexcept { return !finite_; }
  bool is_finite() const noexcept { return finite_; }
  bool is_integer() const;

  /// Rational value; throws Error when called on bottom.
  const mpq_class& value() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

 private:
  bool finite_ = false;
  mpq_class value_;
};

enum class SemiringKind : std::uint8_t { MaxPlus, MaxTimes, MaxMin };

std::string_view semiring_name(SemiringKind kind);
SemiringKind parse_semiring_name(std::string_view name);

/// Operations of one of the three idempotent semirings. All arithmetic is exact.
class Semiring {
 public:
  constexpr Semiring() = default;
  constexpr Semiring(SemiringKind kind) : kind_(kind) {}

  constexpr SemiringKind kind() const noexcept { return kind_; }
  std::string_view name() const { return semiring_name(kind_); }

  Scalar bottom() const { return Scalar::bottom(); }
  Scalar one() const { return kind_ == SemiringKind::MaxPlus ? Scalar(0) : Scalar(1); }
  bool is_one(const Scalar& a) const { return a == one(); }

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;

  /// Largest x with a (x) x <= b. std::nullopt means "unconstrained" (a is
  /// bottom, so every x qualifies).
  std::optional<Scalar> residual(const Scalar& a, const Scalar& b) const;

  /// k-th tropical root (max-plus only): a / k.
  Scalar root(const Scalar& a, long k) const;

  /// a^k for k >= 1.
  Scalar power(const Scalar& a, long k) const;

  /// a (x) b^{-1}; b must be finite. Not defined in max-min.
  Scalar divide(const Scalar& a, const Scalar& b) const;

  /// Whether vectors can be normalised to max entry one by division.
  bool has_division() const noexcept { return kind_ != SemiringKind::MaxMin; }

  bool in_carrier(const Scalar& a) const;

  /// Maps a rational into the carrier representation (0 becomes bottom for
  /// max-times and max-min). Throws Error when outside the carrier.
  Scalar from_rational(const mpq_class& q) const;

  friend constexpr bool operator==(Semiring, Semiring) = default;

 private:
  SemiringKind kind_ = SemiringKind::MaxPlus;
};

inline constexpr Semiring kMaxPlus{SemiringKind::MaxPlus};
inline constexpr Semiring kMaxTimes{SemiringKind::MaxTimes};
inline constexpr Semiring kMaxMin{SemiringKind::MaxMin};

// Free-function spellings of the semiring operations.
inline Scalar add(const Scalar& a, const Scalar& b, Semiring s) { return s.add(a, b); }
inline Scalar mul(const Scalar& a, const Scalar& b, Semiring s) { return s.mul(a, b); }
inline std::optional<Scalar> residual(const Scalar& a, const Scalar& b, Semiring s) {
  return s.residual(a, b);
}
inline Scalar root(const Scalar& a, long k, Semiring s) { return s.root(a, k); }

/// "p/q", "p", or the bottom token ("-inf" in max-plus, "0" otherwise).
std::string format_scalar(const Scalar& a, Semiring s);

/// Parses a rational literal or "-inf". Throws Error on malformed input.
Scalar parse_scalar(std::string_view text, Semiring s);

}  // namespace tropcore
