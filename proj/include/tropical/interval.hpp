#pragma once

#include <optional>
#include <string>
#include <utility>

#include "tropical/matrix.hpp"
#include "tropical/semiring.hpp"

namespace tropical {

/// Closed order interval [lo, hi] = { x : lo <= x <= hi } of a positive
/// semiring.
struct Interval {
  Value lo;
  Value hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Weak interval extension of a positive semiring: every operation, the
/// star included, acts on the two endpoints independently.
class IntervalSemiring {
 public:
  using Scalar = Interval;

  /// Throws NotPositive unless `base` is a positive semiring.
  explicit IntervalSemiring(Semiring base) : base_(std::move(base)) {
    if (!base_.flags().positive) {
      throw Error(ErrorCode::NotPositive,
                  "interval extension needs a positive semiring, got " + base_.name());
    }
  }

  const Semiring& base() const { return base_; }
  std::string name() const { return "interval(" + base_.name() + ")"; }

  Flags flags() const {
    const Flags b = base_.flags();
    return {.idempotent = b.idempotent,
            .complete = b.complete,
            .commutative_mul = b.commutative_mul,
            .positive = true};
  }

  Interval zero() const { return {base_.zero(), base_.zero()}; }
  Interval one() const { return {base_.one(), base_.one()}; }

  Interval add(const Interval& x, const Interval& y) const {
    return {base_.add(x.lo, y.lo), base_.add(x.hi, y.hi)};
  }
  Interval mul(const Interval& x, const Interval& y) const {
    return {base_.mul(x.lo, y.lo), base_.mul(x.hi, y.hi)};
  }

  std::optional<Interval> try_star(const Interval& x) const {
    auto lo = base_.try_star(x.lo);
    auto hi = base_.try_star(x.hi);
    if (!lo || !hi) return std::nullopt;
    return Interval{*lo, *hi};
  }

  Interval star(const Interval& x) const {
    if (auto s = try_star(x)) return *s;
    throw StarUndefinedError("star undefined for [" + to_token(x.lo) + ", " + to_token(x.hi) +
                             "] in " + name());
  }

  bool leq(const Interval& x, const Interval& y) const {
    return base_.leq(x.lo, y.lo) && base_.leq(x.hi, y.hi);
  }
  bool equal(const Interval& x, const Interval& y) const {
    return base_.equal(x.lo, y.lo) && base_.equal(x.hi, y.hi);
  }
  bool is_legal(const Interval& x) const {
    return base_.is_legal(x.lo) && base_.is_legal(x.hi) && base_.leq(x.lo, x.hi);
  }

  /// lo <= v <= hi in the base order.
  bool contains(const Interval& x, const Value& v) const {
    return base_.leq(x.lo, v) && base_.leq(v, x.hi);
  }

  friend bool operator==(const IntervalSemiring& a, const IntervalSemiring& b) {
    return a.base_ == b.base_;
  }

 private:
  Semiring base_;
};

static_assert(SemiringType<IntervalSemiring>);
// keeps the per-endpoint multiply kernel in use
static_assert(detail::EndpointWise<IntervalSemiring>);

inline const Semiring& base_semiring(const IntervalSemiring& s) { return s.base(); }

inline IntervalSemiring lift_semiring(const Semiring& base) { return IntervalSemiring(base); }

/// Validated interval; EmptyInterval unless lo <= hi in the base order.
inline Interval make_interval(const Semiring& base, const Value& lo, const Value& hi) {
  require_legal(base, lo);
  require_legal(base, hi);
  if (!base.leq(lo, hi)) {
    throw Error(ErrorCode::EmptyInterval,
                "empty interval [" + to_token(lo) + ", " + to_token(hi) + "] in " + base.name());
  }
  return {lo, hi};
}

inline bool contains(const IntervalSemiring& s, const Interval& x, const Value& v) {
  return s.contains(x, v);
}

/// Matrix of lower endpoints.
inline Matrix<Semiring> lower(const Matrix<IntervalSemiring>& x) {
  Dense<Value> out(x.rows(), x.cols());
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j) out(i, j) = x(i, j).lo;
  return Matrix<Semiring>::adopt(x.semiring().base(), std::move(out));
}

/// Matrix of upper endpoints.
inline Matrix<Semiring> upper(const Matrix<IntervalSemiring>& x) {
  Dense<Value> out(x.rows(), x.cols());
  for (Index i = 0; i < x.rows(); ++i)
    for (Index j = 0; j < x.cols(); ++j) out(i, j) = x(i, j).hi;
  return Matrix<Semiring>::adopt(x.semiring().base(), std::move(out));
}

/// Interval matrix with entries [lo_ij, hi_ij]; EmptyInterval if some
/// lo_ij <= hi_ij fails.
inline Matrix<IntervalSemiring> pair_endpoints(const Matrix<Semiring>& lo,
                                               const Matrix<Semiring>& hi) {
  detail::require_same_semiring(lo.semiring(), hi.semiring());
  detail::require(lo.rows() == hi.rows() && lo.cols() == hi.cols(), ErrorCode::DimensionMismatch,
                  "endpoint matrices differ in shape");
  Dense<Interval> out(lo.rows(), lo.cols());
  for (Index i = 0; i < lo.rows(); ++i)
    for (Index j = 0; j < lo.cols(); ++j)
      out(i, j) = make_interval(lo.semiring(), lo(i, j), hi(i, j));
  return Matrix<IntervalSemiring>::adopt(IntervalSemiring(lo.semiring()), std::move(out));
}

}  // namespace tropical
