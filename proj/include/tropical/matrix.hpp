#pragma once

#include <Eigen/Core>
#include <initializer_list>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "tropical/error.hpp"
#include "tropical/semiring.hpp"

namespace tropical {

using Index = Eigen::Index;

template <class Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Dense row-major matrix over a semiring.
///
/// Entries are validated against the semiring on construction; afterwards a
/// Matrix is an immutable value. Algorithms build results on a `Dense`
/// buffer and wrap it with `adopt`, which skips re-validation since the
/// semiring operations are closed on the carrier.
template <SemiringType S>
class Matrix {
 public:
  using Semiring = S;
  using Scalar = typename S::Scalar;
  using Storage = Dense<Scalar>;

  Matrix(S semiring, Storage data) : semiring_(std::move(semiring)), data_(std::move(data)) {
    if (data_.rows() < 1 || data_.cols() < 1) {
      throw Error(ErrorCode::DimensionMismatch, "matrix must have at least one row and column");
    }
    for (Index i = 0; i < data_.rows(); ++i) {
      for (Index j = 0; j < data_.cols(); ++j) {
        if (!semiring_.is_legal(data_(i, j))) {
          throw Error(ErrorCode::IllegalElement,
                      "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          ") is not legal in " + std::string(semiring_.name()));
        }
      }
    }
  }

  Matrix(S semiring, std::initializer_list<std::initializer_list<Scalar>> rows)
      : Matrix(semiring, from_rows(rows)) {}

  static Matrix adopt(S semiring, Storage data) {
    return Matrix(std::move(semiring), std::move(data), Adopted{});
  }

  const S& semiring() const { return semiring_; }
  Index rows() const { return data_.rows(); }
  Index cols() const { return data_.cols(); }
  bool is_square() const { return rows() == cols(); }
  const Scalar& operator()(Index i, Index j) const { return data_(i, j); }
  const Storage& storage() const { return data_; }

  /// Exact equality: same semiring, same shape, identical entries.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.semiring_ == b.semiring_ && a.rows() == b.rows() && a.cols() == b.cols() &&
           a.data_ == b.data_;
  }

 private:
  struct Adopted {};
  Matrix(S semiring, Storage data, Adopted)
      : semiring_(std::move(semiring)), data_(std::move(data)) {}

  static Storage from_rows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    const Index m = static_cast<Index>(rows.size());
    const Index n = m == 0 ? 0 : static_cast<Index>(rows.begin()->size());
    Storage out(m, n);
    Index i = 0;
    for (const auto& row : rows) {
      if (static_cast<Index>(row.size()) != n) {
        throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
      }
      Index j = 0;
      for (const auto& x : row) out(i, j++) = x;
      ++i;
    }
    return out;
  }

  S semiring_;
  Storage data_;
};

namespace detail {

template <SemiringType S>
void require_same_semiring(const S& a, const S& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::DescriptorMismatch,
                std::string(a.name()) + " vs " + std::string(b.name()));
  }
}

inline void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

inline std::string shape(Index m, Index n) {
  return std::to_string(m) + "x" + std::to_string(n);
}

/// Descriptor whose scalars are [lo, hi] pairs and whose operations act on
/// each endpoint with the base semiring.
template <class S>
concept EndpointWise = requires(const S& s, const typename S::Scalar& x) {
  requires SemiringType<std::remove_cvref_t<decltype(s.base())>>;
  x.lo;
  x.hi;
};

// One plane of C = A B: `proj` selects the component of each scalar that
// `o` operates on.
template <class Ops, class Proj, class DA, class DB, class Scalar>
void multiply_plane(const Ops& o, Proj proj, const Eigen::MatrixBase<DA>& a,
                    const Eigen::MatrixBase<DB>& b, Dense<Scalar>& out, Index row_begin,
                    Index row_end) {
  const Index inner = a.cols();
  const Index n = b.cols();
  for (Index i = row_begin; i < row_end; ++i) {
    const auto a0 = proj(a(i, 0));
    for (Index j = 0; j < n; ++j) proj(out(i, j)) = o.mul(a0, proj(b(0, j)));
    for (Index k = 1; k < inner; ++k) {
      const auto aik = proj(a(i, k));
      for (Index j = 0; j < n; ++j) proj(out(i, j)) = o.add(proj(out(i, j)), o.mul(aik, proj(b(k, j))));
    }
  }
}

/// C = A B with each entry reduced over k in ascending order. Rows
/// [row_begin, row_end) only; the remaining rows of `out` are untouched.
/// Endpoint-wise descriptors run the base kernel on each endpoint plane.
template <SemiringType S, class DA, class DB>
void multiply_rows(const S& s, const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b,
                   Dense<typename S::Scalar>& out, Index row_begin, Index row_end) {
  if constexpr (EndpointWise<S>) {
    with_ops(s.base(), [&](const auto& o) {
      multiply_plane(o, [](auto&& x) -> auto& { return x.lo; }, a, b, out, row_begin, row_end);
      multiply_plane(o, [](auto&& x) -> auto& { return x.hi; }, a, b, out, row_begin, row_end);
    });
  } else {
    with_ops(s, [&](const auto& o) {
      multiply_plane(o, [](auto&& x) -> decltype(auto) { return (x); }, a, b, out, row_begin,
                     row_end);
    });
  }
}

template <SemiringType S, class DA, class DB>
Dense<typename S::Scalar> multiply(const S& s, const Eigen::MatrixBase<DA>& a,
                                   const Eigen::MatrixBase<DB>& b) {
  Dense<typename S::Scalar> out(a.rows(), b.cols());
  multiply_rows(s, a, b, out, 0, a.rows());
  return out;
}

template <SemiringType S, class DA, class DB>
Dense<typename S::Scalar> add(const S& s, const Eigen::MatrixBase<DA>& a,
                              const Eigen::MatrixBase<DB>& b) {
  Dense<typename S::Scalar> out(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out(i, j) = s.add(a(i, j), b(i, j));
  return out;
}

template <SemiringType S>
Dense<typename S::Scalar> identity(const S& s, Index n) {
  Dense<typename S::Scalar> out = Dense<typename S::Scalar>::Constant(n, n, s.zero());
  for (Index i = 0; i < n; ++i) out(i, i) = s.one();
  return out;
}

}  // namespace detail

template <SemiringType S>
Matrix<S> identity(const S& s, Index n) {
  detail::require(n >= 1, ErrorCode::DimensionMismatch, "identity needs n >= 1");
  return Matrix<S>::adopt(s, detail::identity(s, n));
}

template <SemiringType S>
Matrix<S> zeros(const S& s, Index m, Index n) {
  detail::require(m >= 1 && n >= 1, ErrorCode::DimensionMismatch, "zeros needs m, n >= 1");
  return Matrix<S>::adopt(s, Dense<typename S::Scalar>::Constant(m, n, s.zero()));
}

/// Entry-wise a_ij (+) b_ij.
template <SemiringType S>
Matrix<S> mat_add(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_semiring(a.semiring(), b.semiring());
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimensionMismatch,
                  "add " + detail::shape(a.rows(), a.cols()) + " and " +
                      detail::shape(b.rows(), b.cols()));
  return Matrix<S>::adopt(a.semiring(), detail::add(a.semiring(), a.storage(), b.storage()));
}

/// (i,j) entry is the (+)-sum over k of a_ik (x) b_kj, reduced for k
/// ascending so that rounding carriers are reproducible.
template <SemiringType S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_semiring(a.semiring(), b.semiring());
  detail::require(a.cols() == b.rows(), ErrorCode::DimensionMismatch,
                  "multiply " + detail::shape(a.rows(), a.cols()) + " by " +
                      detail::shape(b.rows(), b.cols()));
  return Matrix<S>::adopt(a.semiring(), detail::multiply(a.semiring(), a.storage(), b.storage()));
}

template <SemiringType S>
Matrix<S> operator+(const Matrix<S>& a, const Matrix<S>& b) {
  return mat_add(a, b);
}

template <SemiringType S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  return mat_mul(a, b);
}

/// Entry-wise semiring order.
template <SemiringType S>
bool mat_leq(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_semiring(a.semiring(), b.semiring());
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::DimensionMismatch,
                  "compare " + detail::shape(a.rows(), a.cols()) + " and " +
                      detail::shape(b.rows(), b.cols()));
  const auto& s = a.semiring();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!s.leq(a(i, j), b(i, j))) return false;
  return true;
}

/// A^k as the iterated left product A (A (... A)), with A^0 = E.
template <SemiringType S>
Matrix<S> mat_pow(const Matrix<S>& a, int k) {
  detail::require(a.is_square(), ErrorCode::DimensionMismatch, "power of a non-square matrix");
  detail::require(k >= 0, ErrorCode::DimensionMismatch, "negative matrix power");
  auto result = detail::identity(a.semiring(), a.rows());
  for (int step = 0; step < k; ++step) result = detail::multiply(a.semiring(), a.storage(), result);
  return Matrix<S>::adopt(a.semiring(), std::move(result));
}

template <SemiringType S>
Matrix<S> transpose(const Matrix<S>& a) {
  typename Matrix<S>::Storage t = a.storage().transpose();
  return Matrix<S>::adopt(a.semiring(), std::move(t));
}

/// Equality up to the semiring's scalar tolerance (exact for
/// non-rounding carriers).
template <SemiringType S>
bool approx_equal(const Matrix<S>& a, const Matrix<S>& b) {
  if (!(a.semiring() == b.semiring()) || a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!a.semiring().equal(a(i, j), b(i, j))) return false;
  return true;
}

/// Builds a matrix from nested rows, validating every entry.
template <SemiringType S>
Matrix<S> from_rows(const S& s, const std::vector<std::vector<typename S::Scalar>>& rows) {
  detail::require(!rows.empty() && !rows.front().empty(), ErrorCode::DimensionMismatch,
                  "matrix must have at least one row and column");
  const Index m = static_cast<Index>(rows.size());
  const Index n = static_cast<Index>(rows.front().size());
  Dense<typename S::Scalar> data(m, n);
  for (Index i = 0; i < m; ++i) {
    detail::require(static_cast<Index>(rows[i].size()) == n, ErrorCode::DimensionMismatch,
                    "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                        " entries, expected " + std::to_string(n));
    for (Index j = 0; j < n; ++j) data(i, j) = rows[i][j];
  }
  return Matrix<S>(s, std::move(data));
}

}  // namespace tropical
