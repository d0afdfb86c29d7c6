#include <chebwaring/error.hpp>
#include <chebwaring/numeric.hpp>

#include <cctype>

namespace chebwaring {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::domain: return "domain error";
    case ErrorCode::pole: return "pole";
    case ErrorCode::integrality: return "integrality failure";
    case ErrorCode::parse: return "parse error";
    case ErrorCode::internal: return "internal invariant violated";
  }
  return "unknown error";
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::pole, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

bool is_integer(const BigRational& q) { return q.get_den() == 1; }

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRational& q) { return q.get_str(); }

namespace {

bool is_decimal(const std::string& s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

BigInt parse_int(const std::string& s) { return BigInt(s[0] == '+' ? s.substr(1) : s); }

}  // namespace

BigRational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_decimal(num, true) || !is_decimal(den, false))
    fail(ErrorCode::parse, "not a rational number: '" + text + "'");
  return make_rational(parse_int(num), parse_int(den));
}

}  // namespace chebwaring
