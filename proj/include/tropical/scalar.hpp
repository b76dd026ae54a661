#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

namespace tropical {

/// Element of an extended-real carrier: a finite double, one of the two
/// infinities, or a truth value. Infinities are tags; their payload is the
/// matching IEEE infinity and serves only as an ordering key, so ordering
/// is one double comparison. Operations test tags before any arithmetic, so
/// no semiring operation can produce a NaN.
class Value {
 public:
  enum class Tag : std::uint8_t { Finite, NegInf, PosInf, Bool };

  constexpr Value() = default;

  static constexpr Value finite(double x) { return Value(Tag::Finite, x); }
  static constexpr Value neg_inf() { return Value(Tag::NegInf, -std::numeric_limits<double>::infinity()); }
  static constexpr Value pos_inf() { return Value(Tag::PosInf, std::numeric_limits<double>::infinity()); }
  static constexpr Value boolean(bool b) { return Value(Tag::Bool, b ? 1.0 : 0.0); }

  constexpr Tag tag() const { return tag_; }
  constexpr bool is_finite() const { return tag_ == Tag::Finite; }
  constexpr bool is_neg_inf() const { return tag_ == Tag::NegInf; }
  constexpr bool is_pos_inf() const { return tag_ == Tag::PosInf; }
  constexpr bool is_bool() const { return tag_ == Tag::Bool; }

  /// Finite payload; meaningless for the other tags.
  constexpr double number() const { return x_; }
  constexpr bool truth() const { return x_ != 0.0; }

  /// Tag and payload equality. For finite values this is exact `==` on the
  /// doubles, so +0.0 and -0.0 compare equal.
  friend constexpr bool operator==(const Value& a, const Value& b) {
    if (a.tag_ != b.tag_) return false;
    if (a.tag_ == Tag::NegInf || a.tag_ == Tag::PosInf) return true;
    return a.x_ == b.x_;
  }

  /// Position on the extended real line (-inf < finite < +inf). Booleans
  /// order false < true. Mixed Bool/non-Bool comparisons are unspecified.
  friend constexpr bool numeric_less(const Value& a, const Value& b) {
    // rank only breaks ties between an infinity and an overflowed finite value
    return (a.x_ < b.x_) | ((a.x_ == b.x_) & (a.rank() < b.rank()));
  }

 private:
  constexpr Value(Tag t, double x) : tag_(t), x_(x) {}
  constexpr int rank() const {
    constexpr int by_tag[] = {1, 0, 2, 1};
    return by_tag[static_cast<int>(tag_)];
  }

  Tag tag_ = Tag::Finite;
  double x_ = 0.0;
};

/// Additive inverse on the extended reals; maps -inf <-> +inf.
constexpr Value negate(const Value& v) {
  switch (v.tag()) {
    case Value::Tag::Finite: return Value::finite(-v.number());
    case Value::Tag::NegInf: return Value::pos_inf();
    case Value::Tag::PosInf: return Value::neg_inf();
    case Value::Tag::Bool: return v;
  }
  return v;
}

/// Serialization token: "-inf", "inf", "true", "false" or a shortest
/// round-trip decimal literal.
std::string to_token(const Value& v);

/// Inverse of to_token. Throws Error(ParseError) on malformed input.
Value parse_token(const std::string& token);

std::ostream& operator<<(std::ostream& os, const Value& v);

}  // namespace tropical
