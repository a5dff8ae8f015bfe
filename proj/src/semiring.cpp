#include "tropcore/semiring.hpp"

#include <algorithm>
#include <cctype>

#include "tropcore/errors.hpp"

namespace tropcore {

Scalar Scalar::ratio(long numerator, long denominator) {
  if (denominator == 0) throw Error("zero denominator");
  return Scalar(mpq_class(numerator, denominator));
}

bool Scalar::is_integer() const { return finite_ && value_.get_den() == 1; }

const mpq_class& Scalar::value() const {
  if (!finite_) throw Error("value() of bottom element");
  return value_;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.finite_ != b.finite_) return false;
  return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (!a.finite_ || !b.finite_) return a.finite_ <=> b.finite_;
  const int c = cmp(a.value_, b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string_view semiring_name(SemiringKind kind) {
  switch (kind) {
    case SemiringKind::MaxPlus:
      return "maxplus";
    case SemiringKind::MaxTimes:
      return "maxtimes";
    case SemiringKind::MaxMin:
      return "maxmin";
  }
  return "maxplus";
}

SemiringKind parse_semiring_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "maxplus" || lower == "max-plus") return SemiringKind::MaxPlus;
  if (lower == "maxtimes" || lower == "max-times") return SemiringKind::MaxTimes;
  if (lower == "maxmin" || lower == "max-min") return SemiringKind::MaxMin;
  throw Error("unknown semiring '" + std::string(name) + "'");
}

Scalar Semiring::add(const Scalar& a, const Scalar& b) const { return a < b ? b : a; }

Scalar Semiring::mul(const Scalar& a, const Scalar& b) const {
  if (a.is_bottom() || b.is_bottom()) return Scalar::bottom();
  switch (kind_) {
    case SemiringKind::MaxPlus:
      return Scalar(mpq_class(a.value() + b.value()));
    case SemiringKind::MaxTimes:
      return Scalar(mpq_class(a.value() * b.value()));
    case SemiringKind::MaxMin:
      return a < b ? a : b;
  }
  return Scalar::bottom();
}

std::optional<Scalar> Semiring::residual(const Scalar& a, const Scalar& b) const {
  if (a.is_bottom()) return std::nullopt;
  switch (kind_) {
    case SemiringKind::MaxPlus:
      if (b.is_bottom()) return Scalar::bottom();
      return Scalar(mpq_class(b.value() - a.value()));
    case SemiringKind::MaxTimes:
      if (b.is_bottom()) return Scalar::bottom();
      return Scalar(mpq_class(b.value() / a.value()));
    case SemiringKind::MaxMin:
      return a <= b ? one() : b;
  }
  return std::nullopt;
}

Scalar Semiring::root(const Scalar& a, long k) const {
  if (kind_ != SemiringKind::MaxPlus) throw NotSupported("tropical roots are only exact in max-plus");
  if (k <= 0) throw Error("root order must be positive");
  if (a.is_bottom()) throw Error("root of bottom");
  return Scalar(mpq_class(a.value() / k));
}

Scalar Semiring::power(const Scalar& a, long k) const {
  if (k <= 0) throw Error("power exponent must be positive");
  if (a.is_bottom()) return a;
  switch (kind_) {
    case SemiringKind::MaxPlus:
      return Scalar(mpq_class(a.value() * k));
    case SemiringKind::MaxTimes: {
      mpq_class r = 1;
      for (long i = 0; i < k; ++i) r *= a.value();
      return Scalar(r);
    }
    case SemiringKind::MaxMin:
      return a;
  }
  return a;
}

Scalar Semiring::divide(const Scalar& a, const Scalar& b) const {
  if (b.is_bottom()) throw Error("division by bottom");
  if (a.is_bottom()) return a;
  switch (kind_) {
    case SemiringKind::MaxPlus:
      return Scalar(mpq_class(a.value() - b.value()));
    case SemiringKind::MaxTimes:
      return Scalar(mpq_class(a.value() / b.value()));
    case SemiringKind::MaxMin:
      break;
  }
  throw NotSupported("max-min has no multiplicative inverses");
}

bool Semiring::in_carrier(const Scalar& a) const {
  if (a.is_bottom()) return true;
  switch (kind_) {
    case SemiringKind::MaxPlus:
      return true;
    case SemiringKind::MaxTimes:
      return sgn(a.value()) > 0;
    case SemiringKind::MaxMin:
      return sgn(a.value()) > 0 && a.value() <= 1;
  }
  return false;
}

Scalar Semiring::from_rational(const mpq_class& q) const {
  if (kind_ != SemiringKind::MaxPlus) {
    if (sgn(q) < 0) throw Error("negative value outside the " + std::string(name()) + " carrier");
    if (sgn(q) == 0) return Scalar::bottom();
    if (kind_ == SemiringKind::MaxMin && q > 1) throw Error("max-min values must lie in [0,1]");
  }
  return Scalar(q);
}

std::string format_scalar(const Scalar& a, Semiring s) {
  if (a.is_bottom()) return s.kind() == SemiringKind::MaxPlus ? "-inf" : "0";
  return a.value().get_str();
}

namespace {

bool all_digits(std::string_view t) {
  return !t.empty() && std::all_of(t.begin(), t.end(), [](unsigned char c) { return std::isdigit(c); });
}

mpq_class parse_integer(std::string_view t) {
  bool negative = false;
  if (!t.empty() && (t.front() == '-' || t.front() == '+')) {
    negative = t.front() == '-';
    t.remove_prefix(1);
  }
  if (!all_digits(t)) throw Error("malformed number");
  mpz_class z(std::string(t), 10);
  return mpq_class(negative ? mpz_class(-z) : z);
}

}  // namespace

Scalar parse_scalar(std::string_view text, Semiring s) {
  if (text == "-inf" || text == "eps" || text == "ε") {
    if (s.kind() != SemiringKind::MaxPlus) throw Error("'-inf' is only valid in max-plus");
    return Scalar::bottom();
  }
  if (text.empty()) throw Error("empty scalar");
  mpq_class q;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpq_class num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw Error("malformed denominator in '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    q = num / mpq_class(den);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (!all_digits(frac)) throw Error("malformed decimal '" + std::string(text) + "'");
    bool negative = !whole.empty() && whole.front() == '-';
    std::string_view digits = whole;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (!digits.empty() && !all_digits(digits)) throw Error("malformed decimal '" + std::string(text) + "'");
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    mpz_class mag(std::string(digits.empty() ? "0" : digits) + std::string(frac), 10);
    q = mpq_class(mag, scale);
    if (negative) q = -q;
  } else {
    try {
      q = parse_integer(text);
    } catch (const Error&) {
      throw Error("malformed scalar '" + std::string(text) + "'");
    }
  }
  q.canonicalize();
  return s.from_rational(q);
}

}  // namespace tropcore
