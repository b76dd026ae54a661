#include "tropical/scalar.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

#include "tropical/error.hpp"

namespace tropical {

std::string to_token(const Value& v) {
  switch (v.tag()) {
    case Value::Tag::NegInf: return "-inf";
    case Value::Tag::PosInf: return "inf";
    case Value::Tag::Bool: return v.truth() ? "true" : "false";
    case Value::Tag::Finite: break;
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v.number());
  return std::string(buf, end);
}

Value parse_token(const std::string& token) {
  if (token == "-inf") return Value::neg_inf();
  if (token == "inf" || token == "+inf") return Value::pos_inf();
  if (token == "true") return Value::boolean(true);
  if (token == "false") return Value::boolean(false);
  double x = 0.0;
  const char* first = token.data();
  const char* last = first + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (token.empty() || ec != std::errc{} || ptr != last || !std::isfinite(x)) {
    throw Error(ErrorCode::ParseError, "malformed scalar token '" + token + "'");
  }
  return Value::finite(x);
}

std::ostream& operator<<(std::ostream& os, const Value& v) { return os << to_token(v); }

}  // namespace tropical
