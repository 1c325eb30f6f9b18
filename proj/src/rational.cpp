#include "mgreen/rational.hpp"

#include <cctype>

#include "mgreen/error.hpp"

namespace mgreen {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::GraphDisconnected: return "GraphDisconnected";
    case ErrorKind::NonpositiveLength: return "NonpositiveLength";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotABridge: return "NotABridge";
    case ErrorKind::NotAdequate: return "NotAdequate";
    case ErrorKind::SingularShift: return "SingularShift";
    case ErrorKind::BadDegree: return "BadDegree";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

bool is_integer_token(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t start = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  // mpz does not accept a leading '+'.
  const std::string num_str(num[0] == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::string to_decimal(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = value < 0;
  const Rational scaled = abs(value) * scale;
  // round half away from zero: floor(2*num/den + 1) / 2
  mpz_class twice = 2 * scaled.get_num();
  mpz_class rounded = (twice + scaled.get_den()) / (2 * scaled.get_den());
  std::string digits_str = rounded.get_str(10);
  if (digits > 0) {
    if (digits_str.size() <= static_cast<std::size_t>(digits)) {
      digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
    }
    digits_str.insert(digits_str.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && rounded != 0) digits_str.insert(0, "-");
  return digits_str;
}

}  // namespace mgreen
