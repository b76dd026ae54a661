#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "tropical/closure.hpp"
#include "tropical/matrix.hpp"

namespace tropical {

/// Number of semiring operations performed on carrier elements.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t stars = 0;

  void reset() { *this = {}; }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

/// Strictly lower L, diagonal D and strictly upper M with A* = M* D* L*.
template <SemiringType S>
class LdmTriple {
 public:
  using Scalar = typename S::Scalar;

  LdmTriple(Matrix<S> lower, DenseVector<Scalar> diagonal, Matrix<S> upper)
      : lower_(std::move(lower)), diagonal_(std::move(diagonal)), upper_(std::move(upper)) {
    detail::require_same_semiring(lower_.semiring(), upper_.semiring());
    const Index n = lower_.rows();
    detail::require(lower_.is_square() && upper_.is_square() && upper_.rows() == n &&
                        diagonal_.size() == n,
                    ErrorCode::DimensionMismatch, "LDM factors must share one dimension");
    const auto& s = lower_.semiring();
    for (Index i = 0; i < n; ++i) {
      require_legal(s, diagonal_(i));
      for (Index j = 0; j < n; ++j) {
        if (i <= j && !(lower_(i, j) == s.zero()))
          throw Error(ErrorCode::ShapeViolation, "L is not strictly lower triangular");
        if (i >= j && !(upper_(i, j) == s.zero()))
          throw Error(ErrorCode::ShapeViolation, "M is not strictly upper triangular");
      }
    }
  }

  const S& semiring() const { return lower_.semiring(); }
  Index size() const { return lower_.rows(); }
  const Matrix<S>& lower() const { return lower_; }
  const DenseVector<Scalar>& diagonal() const { return diagonal_; }
  const Matrix<S>& upper() const { return upper_; }

  Matrix<S> diagonal_matrix() const {
    auto d = Dense<Scalar>::Constant(size(), size(), semiring().zero()).eval();
    for (Index i = 0; i < size(); ++i) d(i, i) = diagonal_(i);
    return Matrix<S>::adopt(semiring(), std::move(d));
  }

  friend bool operator==(const LdmTriple& a, const LdmTriple& b) {
    return a.lower_ == b.lower_ && a.diagonal_ == b.diagonal_ && a.upper_ == b.upper_;
  }

 private:
  Matrix<S> lower_;
  DenseVector<Scalar> diagonal_;
  Matrix<S> upper_;
};

namespace detail {

template <SemiringType S>
class CountingOps {
 public:
  using Scalar = typename S::Scalar;

  CountingOps(const S& s, OpCounter* counter) : s_(s), counter_(counter) {}

  Scalar add(const Scalar& x, const Scalar& y) const {
    if (counter_) ++counter_->adds;
    return s_.add(x, y);
  }
  Scalar mul(const Scalar& x, const Scalar& y) const {
    if (counter_) ++counter_->muls;
    return s_.mul(x, y);
  }
  Scalar star(const Scalar& x, Index pivot, Index column = 0) const {
    if (counter_) ++counter_->stars;
    if (auto v = s_.try_star(x)) return *v;
    std::string where = "pivot " + std::to_string(pivot);
    if (column > 0) where = "column " + std::to_string(column) + ", " + where;
    throw StarUndefinedError("star undefined at " + where + " in " + std::string(s_.name()),
                             static_cast<std::size_t>(pivot), static_cast<std::size_t>(column));
  }

 private:
  const S& s_;
  OpCounter* counter_;
};

template <SemiringType S>
void require_strict(const Matrix<S>& t, bool lower) {
  detail::require(t.is_square(), ErrorCode::DimensionMismatch, "triangular factor must be square");
  const auto zero = t.semiring().zero();
  for (Index i = 0; i < t.rows(); ++i)
    for (Index j = 0; j < t.cols(); ++j)
      if ((lower ? i <= j : i >= j) && !(t(i, j) == zero))
        throw Error(ErrorCode::ShapeViolation,
                    std::string("matrix is not strictly ") + (lower ? "lower" : "upper") +
                        " triangular at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                        ")");
}

template <class Vec>
void require_length(const Vec& b, Index n) {
  detail::require(b.size() == n, ErrorCode::DimensionMismatch,
                  "vector has length " + std::to_string(b.size()) + ", expected " +
                      std::to_string(n));
}

template <SemiringType S>
void forward_in_place(const CountingOps<S>& ops, const Dense<typename S::Scalar>& l,
                      DenseVector<typename S::Scalar>& x) {
  const Index n = x.size();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j) x(i) = ops.add(x(i), ops.mul(l(i, j), x(j)));
}

template <SemiringType S>
void diagonal_in_place(const CountingOps<S>& ops, const DenseVector<typename S::Scalar>& d,
                       DenseVector<typename S::Scalar>& x) {
  for (Index i = 0; i < x.size(); ++i) x(i) = ops.mul(ops.star(d(i), i + 1), x(i));
}

// Back substitution continuing from the current contents of x.
template <SemiringType S>
void back_in_place(const CountingOps<S>& ops, const Dense<typename S::Scalar>& m,
                   DenseVector<typename S::Scalar>& x) {
  const Index n = x.size();
  for (Index i = n - 1; i >= 0; --i)
    for (Index j = n - 1; j > i; --j) x(i) = ops.add(x(i), ops.mul(m(i, j), x(j)));
}

}  // namespace detail

/// Solves X = L X (+) B for strictly lower L in ascending order.
template <SemiringType S>
DenseVector<typename S::Scalar> forward_substitution(const Matrix<S>& l,
                                                     const DenseVector<typename S::Scalar>& b,
                                                     OpCounter* counter = nullptr) {
  detail::require_strict(l, true);
  detail::require_length(b, l.rows());
  DenseVector<typename S::Scalar> x = b;
  detail::forward_in_place(detail::CountingOps<S>(l.semiring(), counter), l.storage(), x);
  return x;
}

/// Solves X = M X (+) B for strictly upper M in descending order.
template <SemiringType S>
DenseVector<typename S::Scalar> back_substitution(const Matrix<S>& m,
                                                  const DenseVector<typename S::Scalar>& b,
                                                  OpCounter* counter = nullptr) {
  detail::require_strict(m, false);
  detail::require_length(b, m.rows());
  DenseVector<typename S::Scalar> x = b;
  detail::back_in_place(detail::CountingOps<S>(m.semiring(), counter), m.storage(), x);
  return x;
}

/// Solves X = D X (+) B for diagonal D: x_i = d_i* (x) b_i.
template <SemiringType S>
DenseVector<typename S::Scalar> diagonal_solve(const S& s,
                                               const DenseVector<typename S::Scalar>& d,
                                               const DenseVector<typename S::Scalar>& b,
                                               OpCounter* counter = nullptr) {
  detail::require_length(b, d.size());
  DenseVector<typename S::Scalar> x = b;
  detail::diagonal_in_place(detail::CountingOps<S>(s, counter), d, x);
  return x;
}

/// Solves X = A X (+) B given the LDM factorization of A by chaining
/// Z = L Z (+) B, Y = D Y (+) Z, X = M X (+) Y in a single buffer.
template <SemiringType S>
DenseVector<typename S::Scalar> solve_ldm(const LdmTriple<S>& t,
                                          const DenseVector<typename S::Scalar>& b,
                                          OpCounter* counter = nullptr) {
  detail::require_length(b, t.size());
  const detail::CountingOps<S> ops(t.semiring(), counter);
  DenseVector<typename S::Scalar> x = b;
  detail::forward_in_place(ops, t.lower().storage(), x);
  detail::diagonal_in_place(ops, t.diagonal(), x);
  detail::back_in_place(ops, t.upper().storage(), x);
  return x;
}

/// LDM factorization, column by column on a working copy C of A.
///
/// For column j the upper part is forward-substituted through the L
/// columns already stored, M entries are scaled by the earlier diagonal
/// stars, and the lower part is eliminated and scaled by (d_j)*. On return
/// L, D and M occupy the strict lower triangle, the diagonal and the strict
/// upper triangle of C.
template <SemiringType S>
LdmTriple<S> ldm_factorize(const Matrix<S>& a, OpCounter* counter = nullptr) {
  detail::require(a.is_square(), ErrorCode::DimensionMismatch, "LDM of a non-square matrix");
  const auto& s = a.semiring();
  const detail::CountingOps<S> ops(s, counter);
  const Index n = a.rows();
  using Scalar = typename S::Scalar;

  Dense<Scalar> c = a.storage();
  DenseVector<Scalar> v(n);
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i <= j; ++i) v(i) = c(i, j);
    for (Index k = 0; k < j; ++k)
      for (Index i = k + 1; i <= j; ++i) v(i) = ops.add(v(i), ops.mul(c(i, k), v(k)));
    for (Index i = 0; i < j; ++i) c(i, j) = ops.mul(ops.star(c(i, i), i + 1, j + 1), v(i));
    c(j, j) = v(j);
    for (Index k = 0; k < j; ++k)
      for (Index i = j + 1; i < n; ++i) c(i, j) = ops.add(c(i, j), ops.mul(c(i, k), v(k)));
    const Scalar d = ops.star(v(j), j + 1, j + 1);
    for (Index i = j + 1; i < n; ++i) c(i, j) = ops.mul(c(i, j), d);
  }

  Dense<Scalar> lower = Dense<Scalar>::Constant(n, n, s.zero());
  Dense<Scalar> upper = lower;
  DenseVector<Scalar> diagonal(n);
  for (Index i = 0; i < n; ++i) {
    diagonal(i) = c(i, i);
    for (Index j = 0; j < i; ++j) lower(i, j) = c(i, j);
    for (Index j = i + 1; j < n; ++j) upper(i, j) = c(i, j);
  }
  return LdmTriple<S>(Matrix<S>::adopt(s, std::move(lower)), std::move(diagonal),
                      Matrix<S>::adopt(s, std::move(upper)));
}

/// LDM factorization of a symmetric matrix over a commutative semiring.
///
/// Only L and D are computed; M = L^T. The unscaled lower entries of row j
/// equal the forward-substituted upper column j, so the upper half of the
/// general loop is skipped entirely.
template <SemiringType S>
LdmTriple<S> symmetric_factorize(const Matrix<S>& a, OpCounter* counter = nullptr) {
  detail::require(a.is_square(), ErrorCode::DimensionMismatch, "LDM of a non-square matrix");
  const auto& s = a.semiring();
  if (!s.flags().commutative_mul) {
    throw Error(ErrorCode::NotCommutative,
                std::string(s.name()) + " does not have a commutative multiplication");
  }
  const Index n = a.rows();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < i; ++j)
      if (!(a(i, j) == a(j, i)))
        throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric at (" +
                                                 std::to_string(i + 1) + "," +
                                                 std::to_string(j + 1) + ")");
  const detail::CountingOps<S> ops(s, counter);
  using Scalar = typename S::Scalar;

  // Lower triangle holds L, upper triangle holds the unscaled entries
  // (c(k, i) for k < i is the unscaled value of l(i, k)).
  Dense<Scalar> c = a.storage();
  for (Index j = 0; j < n; ++j) {
    Scalar pivot = c(j, j);
    for (Index k = 0; k < j; ++k) pivot = ops.add(pivot, ops.mul(c(j, k), c(k, j)));
    c(j, j) = pivot;
    for (Index i = j + 1; i < n; ++i) {
      Scalar w = c(i, j);
      for (Index k = 0; k < j; ++k) w = ops.add(w, ops.mul(c(i, k), c(k, j)));
      c(j, i) = w;
    }
    const Scalar d = ops.star(pivot, j + 1, j + 1);
    for (Index i = j + 1; i < n; ++i) c(i, j) = ops.mul(c(j, i), d);
  }

  Dense<Scalar> lower = Dense<Scalar>::Constant(n, n, s.zero());
  DenseVector<Scalar> diagonal(n);
  for (Index i = 0; i < n; ++i) {
    diagonal(i) = c(i, i);
    for (Index j = 0; j < i; ++j) lower(i, j) = c(i, j);
  }
  Dense<Scalar> upper = lower.transpose();
  return LdmTriple<S>(Matrix<S>::adopt(s, std::move(lower)), std::move(diagonal),
                      Matrix<S>::adopt(s, std::move(upper)));
}

/// X = A* B computed column by column through the LDM factorization.
template <SemiringType S>
Matrix<S> solve_via_ldm(const Matrix<S>& a, const Matrix<S>& b, OpCounter* counter = nullptr) {
  detail::require_same_semiring(a.semiring(), b.semiring());
  detail::require(b.rows() == a.rows(), ErrorCode::DimensionMismatch,
                  "right-hand side has " + std::to_string(b.rows()) + " rows, expected " +
                      std::to_string(a.rows()));
  const auto t = ldm_factorize(a, counter);
  Dense<typename S::Scalar> x(b.rows(), b.cols());
  for (Index col = 0; col < b.cols(); ++col) {
    DenseVector<typename S::Scalar> rhs = b.storage().col(col);
    x.col(col) = solve_ldm(t, rhs, counter);
  }
  return Matrix<S>::adopt(a.semiring(), std::move(x));
}

}  // namespace tropical
