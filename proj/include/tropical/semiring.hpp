#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "tropical/error.hpp"
#include "tropical/scalar.hpp"

namespace tropical {

struct Flags {
  bool idempotent = false;
  bool complete = false;
  bool commutative_mul = false;
  bool positive = false;

  friend bool operator==(const Flags&, const Flags&) = default;
};

/// Operation family every algorithm in this library is parameterized over.
///
/// A model provides the carrier type `Scalar`, the neutral elements, the two
/// binary operations, a partial closure, an order, and an equality that may
/// be tolerance-based for rounding carriers. The binary operations assume
/// legal operands; validation happens at the boundaries (matrix
/// construction, parsing, the checked `s_*` free functions).
template <class S>
concept SemiringType =
    std::copy_constructible<S> &&
    requires(const S& s, const typename S::Scalar& x) {
      typename S::Scalar;
      { s.zero() } -> std::same_as<typename S::Scalar>;
      { s.one() } -> std::same_as<typename S::Scalar>;
      { s.add(x, x) } -> std::same_as<typename S::Scalar>;
      { s.mul(x, x) } -> std::same_as<typename S::Scalar>;
      { s.try_star(x) } -> std::same_as<std::optional<typename S::Scalar>>;
      { s.star(x) } -> std::same_as<typename S::Scalar>;
      { s.leq(x, x) } -> std::same_as<bool>;
      { s.equal(x, x) } -> std::same_as<bool>;
      { s.is_legal(x) } -> std::same_as<bool>;
      { s.flags() } -> std::same_as<Flags>;
      { s.name() } -> std::convertible_to<std::string>;
      { s == s } -> std::same_as<bool>;
    };

/// Statically typed (+) and (x) of each numerical kind. Semiring::add and
/// Semiring::mul forward here; kernels resolve the kind once through
/// Semiring::dispatch and then run on these directly.
namespace ops {

struct RPlus {
  static Value add(const Value& x, const Value& y) {
    if (x.is_pos_inf() || y.is_pos_inf()) return Value::pos_inf();
    return Value::finite(x.number() + y.number());
  }
  static Value mul(const Value& x, const Value& y) {
    return Value::finite(x.number() * y.number());
  }
};

struct RPlusComplete {
  static Value add(const Value& x, const Value& y) { return RPlus::add(x, y); }
  static Value mul(const Value& x, const Value& y) {
    // zero absorbs infinity
    if ((x.is_finite() && x.number() == 0.0) || (y.is_finite() && y.number() == 0.0)) {
      return Value::finite(0.0);
    }
    if (x.is_pos_inf() || y.is_pos_inf()) return Value::pos_inf();
    return Value::finite(x.number() * y.number());
  }
};

struct RealField {
  static Value add(const Value& x, const Value& y) {
    return Value::finite(x.number() + y.number());
  }
  static Value mul(const Value& x, const Value& y) {
    return Value::finite(x.number() * y.number());
  }
};

struct MaxPlus {
  static Value add(const Value& x, const Value& y) { return numeric_less(x, y) ? y : x; }
  static Value mul(const Value& x, const Value& y) {
    if (x.is_neg_inf() || y.is_neg_inf()) return Value::neg_inf();
    if (x.is_pos_inf() || y.is_pos_inf()) return Value::pos_inf();
    return Value::finite(x.number() + y.number());
  }
};

struct MinPlus {
  static Value add(const Value& x, const Value& y) { return numeric_less(y, x) ? y : x; }
  static Value mul(const Value& x, const Value& y) {
    if (x.is_pos_inf() || y.is_pos_inf()) return Value::pos_inf();
    return Value::finite(x.number() + y.number());
  }
};

struct MaxMin {
  static Value add(const Value& x, const Value& y) { return numeric_less(x, y) ? y : x; }
  static Value mul(const Value& x, const Value& y) { return numeric_less(x, y) ? x : y; }
};

struct Boolean {
  static Value add(const Value& x, const Value& y) {
    return Value::boolean(x.truth() || y.truth());
  }
  static Value mul(const Value& x, const Value& y) {
    return Value::boolean(x.truth() && y.truth());
  }
};

}  // namespace ops

/// Numerical semirings over extended reals plus the Boolean semiring and
/// the real field.
class Semiring {
 public:
  using Scalar = Value;

  enum class Kind {
    RPlus,
    RPlusComplete,
    MaxPlus,
    MaxPlusComplete,
    MinPlus,
    MaxMin,
    Boolean,
    RealField,
  };

  /// Relative tolerance used by `equal` on rounding carriers.
  static constexpr double kTolerance = 1e-9;

  explicit Semiring(Kind kind) : kind_(kind) {
    if (kind == Kind::MaxMin) {
      throw Error(ErrorCode::InvalidBounds, "maxmin requires bounds [a, b]");
    }
  }
  /// Max-min semiring on [lo, hi]; requires lo < hi.
  Semiring(Kind kind, Value lo, Value hi);

  Kind kind() const { return kind_; }
  std::string name() const;
  Flags flags() const;
  /// Bounds of the max-min carrier; both -inf/+inf for other kinds.
  Value lower_bound() const { return lo_; }
  Value upper_bound() const { return hi_; }

  Value zero() const {
    switch (kind_) {
      case Kind::RPlus:
      case Kind::RPlusComplete:
      case Kind::RealField: return Value::finite(0.0);
      case Kind::MaxPlus:
      case Kind::MaxPlusComplete: return Value::neg_inf();
      case Kind::MinPlus: return Value::pos_inf();
      case Kind::MaxMin: return lo_;
      case Kind::Boolean: return Value::boolean(false);
    }
    return Value{};
  }

  Value one() const {
    switch (kind_) {
      case Kind::RPlus:
      case Kind::RPlusComplete:
      case Kind::RealField: return Value::finite(1.0);
      case Kind::MaxPlus:
      case Kind::MaxPlusComplete:
      case Kind::MinPlus: return Value::finite(0.0);
      case Kind::MaxMin: return hi_;
      case Kind::Boolean: return Value::boolean(true);
    }
    return Value{};
  }

  /// Calls f with the ops:: struct of this kind and returns its result.
  template <class F>
  decltype(auto) dispatch(F&& f) const {
    switch (kind_) {
      case Kind::RPlus: return f(ops::RPlus{});
      case Kind::RPlusComplete: return f(ops::RPlusComplete{});
      case Kind::RealField: return f(ops::RealField{});
      case Kind::MaxPlus:
      case Kind::MaxPlusComplete: return f(ops::MaxPlus{});
      case Kind::MinPlus: return f(ops::MinPlus{});
      case Kind::MaxMin: return f(ops::MaxMin{});
      case Kind::Boolean: break;
    }
    return f(ops::Boolean{});
  }

  Value add(const Value& x, const Value& y) const {
    return dispatch([&](auto o) { return o.add(x, y); });
  }

  Value mul(const Value& x, const Value& y) const {
    return dispatch([&](auto o) { return o.mul(x, y); });
  }

  std::optional<Value> try_star(const Value& x) const {
    switch (kind_) {
      case Kind::RPlus:
        if (x.is_finite() && x.number() < 1.0) return Value::finite(1.0 / (1.0 - x.number()));
        return std::nullopt;
      case Kind::RPlusComplete:
        if (x.is_finite() && x.number() < 1.0) return Value::finite(1.0 / (1.0 - x.number()));
        return Value::pos_inf();
      case Kind::MaxPlus:
        if (x.is_neg_inf() || (x.is_finite() && x.number() <= 0.0)) return one();
        return std::nullopt;
      case Kind::MaxPlusComplete:
        if (x.is_neg_inf() || (x.is_finite() && x.number() <= 0.0)) return one();
        return Value::pos_inf();
      case Kind::MinPlus:
        if (x.is_pos_inf() || (x.is_finite() && x.number() >= 0.0)) return one();
        return std::nullopt;
      case Kind::MaxMin:
      case Kind::Boolean: return one();
      case Kind::RealField:
        if (x.number() != 1.0) return Value::finite(1.0 / (1.0 - x.number()));
        return std::nullopt;
    }
    return std::nullopt;
  }

  /// Throws StarUndefinedError outside the star's domain.
  Value star(const Value& x) const {
    if (auto s = try_star(x)) return *s;
    throw StarUndefinedError("star undefined for " + to_token(x) + " in " + name());
  }

  /// Semiring order. Min-plus uses its canonical order, which reverses the
  /// numeric one; every other numerical kind uses the usual order.
  bool leq(const Value& x, const Value& y) const {
    switch (kind_) {
      case Kind::MinPlus: return !numeric_less(x, y);
      case Kind::Boolean: return !x.truth() || y.truth();
      default: return !numeric_less(y, x);
    }
  }

  bool equal(const Value& x, const Value& y) const {
    if (!rounds() || !x.is_finite() || !y.is_finite()) return x == y;
    const double a = x.number();
    const double b = y.number();
    return std::abs(a - b) <= kTolerance * std::max({1.0, std::abs(a), std::abs(b)});
  }

  bool is_legal(const Value& x) const;

  /// True for carriers whose operations round (+ and * on doubles).
  bool rounds() const {
    return kind_ == Kind::RPlus || kind_ == Kind::RPlusComplete || kind_ == Kind::RealField;
  }

  friend bool operator==(const Semiring& a, const Semiring& b) {
    return a.kind_ == b.kind_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Kind kind_;
  Value lo_ = Value::neg_inf();
  Value hi_ = Value::pos_inf();
};

static_assert(SemiringType<Semiring>);

/// Calls f with statically typed operations for s: the ops:: struct of its
/// kind when s can dispatch, s itself otherwise.
template <class S, class F>
decltype(auto) with_ops(const S& s, F&& f) {
  if constexpr (requires { s.dispatch(f); }) {
    return s.dispatch(f);
  } else {
    return f(s);
  }
}

/// Builds a descriptor by name: rplus, rplus_complete, maxplus,
/// maxplus_complete, minplus, maxmin (needs bounds), boolean, real_field.
Semiring make_semiring(std::string_view name,
                       std::optional<std::pair<Value, Value>> bounds = std::nullopt);

/// Parses "NAME" or "NAME,a,b" (as accepted by the CLI).
Semiring parse_semiring(std::string_view spec);

/// Throws Error(IllegalElement) unless `x` belongs to the carrier of `s`.
template <SemiringType S>
void require_legal(const S& s, const typename S::Scalar& x) {
  if (!s.is_legal(x)) {
    throw Error(ErrorCode::IllegalElement, "element is not legal in " + std::string(s.name()));
  }
}

// Checked scalar operations. Unlike the descriptor members these validate
// their operands first.

template <SemiringType S>
typename S::Scalar s_add(const S& s, const typename S::Scalar& x, const typename S::Scalar& y) {
  require_legal(s, x);
  require_legal(s, y);
  return s.add(x, y);
}

template <SemiringType S>
typename S::Scalar s_mul(const S& s, const typename S::Scalar& x, const typename S::Scalar& y) {
  require_legal(s, x);
  require_legal(s, y);
  return s.mul(x, y);
}

template <SemiringType S>
typename S::Scalar s_star(const S& s, const typename S::Scalar& x) {
  require_legal(s, x);
  return s.star(x);
}

template <SemiringType S>
bool s_leq(const S& s, const typename S::Scalar& x, const typename S::Scalar& y) {
  return s.leq(x, y);
}

}  // namespace tropical
