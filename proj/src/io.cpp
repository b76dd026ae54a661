#include "tropical/io.hpp"

namespace tropical {

void parse_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

Json scalar_to_json(const Value& v) {
  switch (v.tag()) {
    case Value::Tag::Finite: return v.number();
    case Value::Tag::Bool: return v.truth();
    default: return to_token(v);
  }
}

Json scalar_to_json(const Interval& x) {
  return Json::array({scalar_to_json(x.lo), scalar_to_json(x.hi)});
}

Value scalar_from_json(const Json& j, const Semiring& s, const std::string& where) {
  Value v;
  if (j.is_boolean()) {
    v = Value::boolean(j.get<bool>());
  } else if (j.is_number()) {
    v = Value::finite(j.get<double>());
  } else if (j.is_string()) {
    try {
      v = parse_token(j.get<std::string>());
    } catch (const Error& e) {
      parse_error(where, e.what());
    }
  } else {
    parse_error(where, "expected a number, \"-inf\", \"inf\" or a Boolean");
  }
  if (!s.is_legal(v)) parse_error(where, "'" + to_token(v) + "' is not an element of " + s.name());
  return v;
}

Interval scalar_from_json(const Json& j, const IntervalSemiring& s, const std::string& where) {
  if (!j.is_array() || j.size() != 2) parse_error(where, "expected an interval [lo, hi]");
  const Value lo = scalar_from_json(j[0], s.base(), where + "[0]");
  const Value hi = scalar_from_json(j[1], s.base(), where + "[1]");
  try {
    return make_interval(s.base(), lo, hi);
  } catch (const Error& e) {
    parse_error(where, e.what());
  }
}

std::string scalar_to_text(const Value& v, const Semiring& s) {
  return v == s.zero() ? "." : to_token(v);
}

std::string scalar_to_text(const Interval& x, const IntervalSemiring& s) {
  if (x == s.zero()) return ".";
  return "[" + to_token(x.lo) + "," + to_token(x.hi) + "]";
}

Json op_counter_to_json(const OpCounter& c) {
  return Json{{"adds", c.adds}, {"muls", c.muls}, {"stars", c.stars}};
}

}  // namespace tropical
