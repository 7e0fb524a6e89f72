#include "pfrac/rational.hpp"

#include <ostream>

#include "pfrac/error.hpp"

namespace pfrac {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::ZeroVectorForm: return "ZeroVectorForm";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SubsetExplosion: return "SubsetExplosion";
    case ErrorCode::NuZero: return "NuZero";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
    case ErrorCode::SamplingExhausted: return "SamplingExhausted";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t value) {
  // mpz_class has no portable int64_t constructor; go through the string form.
  value_ = mpq_class(mpz_class(std::to_string(value)));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw Error(ErrorCode::Parse, "malformed rational \"" + std::string(text) + "\"");
  }
  std::string num_str(num);
  if (num_str[0] == '+') num_str.erase(0, 1);
  mpz_class n(num_str);
  mpz_class d(1);
  if (slash != std::string_view::npos) {
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_literal(den, false)) {
      throw Error(ErrorCode::Parse, "malformed rational \"" + std::string(text) + "\"");
    }
    d = mpz_class(std::string(den));
    if (d == 0) {
      throw Error(ErrorCode::Parse, "zero denominator in \"" + std::string(text) + "\"");
    }
  }
  return Rational(mpq_class(n, d));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "reciprocal of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace pfrac
