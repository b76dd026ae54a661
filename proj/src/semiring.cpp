#include "tropical/semiring.hpp"

#include <array>
#include <vector>

namespace tropical {

namespace {

struct NamedKind {
  std::string_view name;
  Semiring::Kind kind;
};

constexpr std::array<NamedKind, 8> kNames{{
    {"rplus", Semiring::Kind::RPlus},
    {"rplus_complete", Semiring::Kind::RPlusComplete},
    {"maxplus", Semiring::Kind::MaxPlus},
    {"maxplus_complete", Semiring::Kind::MaxPlusComplete},
    {"minplus", Semiring::Kind::MinPlus},
    {"maxmin", Semiring::Kind::MaxMin},
    {"boolean", Semiring::Kind::Boolean},
    {"real_field", Semiring::Kind::RealField},
}};

bool is_real_point(const Value& v) { return !v.is_bool(); }

}  // namespace

Semiring::Semiring(Kind kind, Value lo, Value hi) : kind_(kind), lo_(lo), hi_(hi) {
  if (kind != Kind::MaxMin) {
    throw Error(ErrorCode::InvalidBounds, "bounds only apply to maxmin");
  }
  if (!is_real_point(lo) || !is_real_point(hi) || !numeric_less(lo, hi)) {
    throw Error(ErrorCode::InvalidBounds,
                "maxmin bounds need a < b, got [" + to_token(lo) + ", " + to_token(hi) + "]");
  }
}

std::string Semiring::name() const {
  for (const auto& n : kNames) {
    if (n.kind != kind_) continue;
    if (kind_ == Kind::MaxMin) {
      return std::string(n.name) + "," + to_token(lo_) + "," + to_token(hi_);
    }
    return std::string(n.name);
  }
  return "?";
}

Flags Semiring::flags() const {
  switch (kind_) {
    case Kind::RPlus: return {.idempotent = false, .complete = false, .commutative_mul = true, .positive = true};
    case Kind::RPlusComplete: return {.idempotent = false, .complete = true, .commutative_mul = true, .positive = true};
    case Kind::MaxPlus: return {.idempotent = true, .complete = false, .commutative_mul = true, .positive = true};
    case Kind::MaxPlusComplete: return {.idempotent = true, .complete = true, .commutative_mul = true, .positive = true};
    case Kind::MinPlus: return {.idempotent = true, .complete = false, .commutative_mul = true, .positive = true};
    case Kind::MaxMin: return {.idempotent = true, .complete = true, .commutative_mul = true, .positive = true};
    case Kind::Boolean: return {.idempotent = true, .complete = true, .commutative_mul = true, .positive = true};
    case Kind::RealField: return {.idempotent = false, .complete = false, .commutative_mul = true, .positive = false};
  }
  return {};
}

bool Semiring::is_legal(const Value& x) const {
  if (x.is_finite() && !std::isfinite(x.number())) return false;
  switch (kind_) {
    case Kind::RPlus: return x.is_finite() && x.number() >= 0.0;
    case Kind::RPlusComplete: return (x.is_finite() && x.number() >= 0.0) || x.is_pos_inf();
    case Kind::MaxPlus: return x.is_finite() || x.is_neg_inf();
    case Kind::MaxPlusComplete: return !x.is_bool();
    case Kind::MinPlus: return x.is_finite() || x.is_pos_inf();
    case Kind::MaxMin: return !x.is_bool() && !numeric_less(x, lo_) && !numeric_less(hi_, x);
    case Kind::Boolean: return x.is_bool();
    case Kind::RealField: return x.is_finite();
  }
  return false;
}

Semiring make_semiring(std::string_view name, std::optional<std::pair<Value, Value>> bounds) {
  for (const auto& n : kNames) {
    if (n.name != name) continue;
    if (n.kind == Semiring::Kind::MaxMin) {
      if (!bounds) throw Error(ErrorCode::InvalidBounds, "maxmin requires bounds [a, b]");
      return Semiring(n.kind, bounds->first, bounds->second);
    }
    if (bounds) throw Error(ErrorCode::InvalidBounds, "bounds only apply to maxmin");
    return Semiring(n.kind);
  }
  throw Error(ErrorCode::UnknownSemiring, "unknown semiring '" + std::string(name) + "'");
}

Semiring parse_semiring(std::string_view spec) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = spec.find(',', start);
    parts.emplace_back(spec.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() == 1) return make_semiring(parts[0]);
  if (parts.size() != 3) {
    throw Error(ErrorCode::InvalidBounds, "expected NAME or NAME,a,b, got '" + std::string(spec) + "'");
  }
  Value lo, hi;
  try {
    lo = parse_token(parts[1]);
    hi = parse_token(parts[2]);
  } catch (const Error&) {
    throw Error(ErrorCode::InvalidBounds, "malformed bounds in '" + std::string(spec) + "'");
  }
  return make_semiring(parts[0], std::make_pair(lo, hi));
}

}  // namespace tropical
