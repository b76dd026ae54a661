#pragma once

#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tropical/matrix.hpp"
#include "tropical/parallel.hpp"

namespace tropical {

enum class Algorithm { Block, GaussJordan, Iterative };

/// Where the block method splits an n x n matrix: k = ceil(n/2), or a fixed
/// leading block size 1 <= k <= n-1 at the top level (sub-blocks split in
/// half).
struct SplitRule {
  Index k = 0;  // 0 means half

  static SplitRule half() { return {}; }
  static SplitRule fixed(Index k) { return {k}; }
  bool is_half() const { return k == 0; }
};

struct ClosureOptions {
  Algorithm algorithm = Algorithm::Block;
  SplitRule split = SplitRule::half();
  /// Partial-sum cap for the iterative method on non-idempotent semirings.
  int max_iterations = 64;
  bool parallel = false;
  /// Blocks of this size or smaller are processed serially.
  Index parallel_grain = 16;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
};

/// Partial sum E (+) A (+) ... (+) A^k of the closure series.
template <SemiringType S>
struct IterativeClosure {
  Matrix<S> matrix;
  /// k of the returned partial sum.
  int iterations = 0;
  /// True when the series was cut off rather than reaching a fixpoint.
  bool truncated = false;
};

namespace detail {

template <SemiringType S>
typename S::Scalar pivot_star(const S& s, const typename S::Scalar& x, Index pivot) {
  if (auto v = s.try_star(x)) return *v;
  throw StarUndefinedError("closure undefined at pivot " + std::to_string(pivot) + " in " +
                               std::string(s.name()),
                           static_cast<std::size_t>(pivot));
}

inline void validate_options(const ClosureOptions& opts, Index n) {
  if (!opts.split.is_half() && n > 1 && (opts.split.k < 1 || opts.split.k > n - 1)) {
    throw Error(ErrorCode::DimensionMismatch, "split point " + std::to_string(opts.split.k) +
                                                  " outside 1.." + std::to_string(n - 1));
  }
  if (opts.max_iterations < 1) {
    throw Error(ErrorCode::DimensionMismatch, "max_iterations must be >= 1");
  }
}

template <SemiringType S>
class BlockClosure {
 public:
  using Storage = Dense<typename S::Scalar>;

  BlockClosure(const S& s, const ClosureOptions& opts, ForkJoin* pool)
      : s_(s), opts_(opts), pool_(pool) {}

  Storage run(const Storage& a, Index offset, bool top) const {
    const Index n = a.rows();
    if (n == 1) {
      Storage out(1, 1);
      out(0, 0) = pivot_star(s_, a(0, 0), offset + 1);
      return out;
    }
    const Index k = (top && !opts_.split.is_half()) ? opts_.split.k : (n + 1) / 2;
    const Index m = n - k;
    const bool par = pool_ != nullptr && n > opts_.parallel_grain;

    const Storage a12 = a.topRightCorner(k, m);
    const Storage a21 = a.bottomLeftCorner(m, k);

    const Storage s11 = run(a.topLeftCorner(k, k), offset, false);
    Storage u, v;  // A11* A12 and A21 A11*
    fork(par, [&] { u = product(s11, a12, par); }, [&] { v = product(a21, s11, par); });

    const Storage d = add(s_, a.bottomRightCorner(m, m), product(v, a12, par));
    const Storage sd = run(d, offset + k, false);
    Storage upper_right, lower_left;
    fork(par, [&] { upper_right = product(u, sd, par); },
         [&] { lower_left = product(sd, v, par); });

    Storage out(n, n);
    out.topLeftCorner(k, k) = add(s_, s11, product(upper_right, v, par));
    out.topRightCorner(k, m) = upper_right;
    out.bottomLeftCorner(m, k) = lower_left;
    out.bottomRightCorner(m, m) = sd;
    return out;
  }

 private:
  template <class F, class G>
  void fork(bool par, F&& f, G&& g) const {
    if (par) {
      pool_->invoke(std::forward<F>(f), std::forward<G>(g));
    } else {
      f();
      g();
    }
  }

  Storage product(const Storage& x, const Storage& y, bool par) const {
    if (!par) return multiply(s_, x, y);
    Storage out(x.rows(), y.cols());
    pool_->for_bands(x.rows(),
                     [&](Index lo, Index hi) { multiply_rows(s_, x, y, out, lo, hi); });
    return out;
  }

  const S& s_;
  const ClosureOptions& opts_;
  ForkJoin* pool_;
};

}  // namespace detail

/// Block-recursive closure: with A split into A11 (k x k), A12, A21, A22 and
/// D = A22 (+) A21 A11* A12,
///
///   A* = [ A11* (+) A11* A12 D* A21 A11*   A11* A12 D* ]
///        [ D* A21 A11*                     D*          ]
///
/// The 1 x 1 base case is the scalar star. With `opts.parallel` the two
/// independent products of each stage run concurrently and large products
/// are split into row bands; the result is identical to the serial run.
template <SemiringType S>
Matrix<S> closure_block(const Matrix<S>& a, const ClosureOptions& opts = {}) {
  detail::require(a.is_square(), ErrorCode::DimensionMismatch, "closure of a non-square matrix");
  detail::validate_options(opts, a.rows());
  if (opts.parallel && opts.threads > 1) {
    ForkJoin pool(opts.threads);
    detail::BlockClosure<S> block(a.semiring(), opts, &pool);
    return Matrix<S>::adopt(a.semiring(), block.run(a.storage(), 0, true));
  }
  detail::BlockClosure<S> block(a.semiring(), opts, nullptr);
  return Matrix<S>::adopt(a.semiring(), block.run(a.storage(), 0, true));
}

/// Elimination closure. For each pivot k every entry is updated as
/// a_ij <- a_ij (+) a_ik (x) a_kk* (x) a_kj, which leaves A A* in the
/// buffer; the result is E (+) A A*.
template <SemiringType S>
Matrix<S> closure_gauss_jordan(const Matrix<S>& a) {
  detail::require(a.is_square(), ErrorCode::DimensionMismatch, "closure of a non-square matrix");
  const auto& s = a.semiring();
  const Index n = a.rows();
  auto work = a.storage();
  std::vector<typename S::Scalar> column(static_cast<std::size_t>(n));
  std::vector<typename S::Scalar> row(static_cast<std::size_t>(n));
  for (Index k = 0; k < n; ++k) {
    const auto c = detail::pivot_star(s, work(k, k), k + 1);
    for (Index i = 0; i < n; ++i) column[i] = s.mul(work(i, k), c);
    for (Index j = 0; j < n; ++j) row[j] = work(k, j);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) work(i, j) = s.add(work(i, j), s.mul(column[i], row[j]));
  }
  for (Index i = 0; i < n; ++i) work(i, i) = s.add(s.one(), work(i, i));
  return Matrix<S>::adopt(s, std::move(work));
}

/// Partial sums S_k = E (+) A S_{k-1}.
///
/// Idempotent semirings stop at the first k with S_k = S_{k-1}; if none
/// occurs by k = n the closure does not exist in this semiring and
/// NoStabilization is thrown. Other semirings run to `max_iterations`
/// (or an exact fixpoint) and report whether the sum was truncated.
template <SemiringType S>
IterativeClosure<S> closure_iterative(const Matrix<S>& a, const ClosureOptions& opts = {}) {
  detail::require(a.is_square(), ErrorCode::DimensionMismatch, "closure of a non-square matrix");
  detail::validate_options(opts, a.rows());
  const auto& s = a.semiring();
  const Index n = a.rows();
  const auto e = detail::identity(s, n);
  const bool idempotent = s.flags().idempotent;
  const int limit = idempotent ? static_cast<int>(n) : opts.max_iterations;

  auto sum = e;
  for (int k = 1; k <= limit; ++k) {
    auto next = detail::add(s, e, detail::multiply(s, a.storage(), sum));
    if (next == sum) return {Matrix<S>::adopt(s, std::move(next)), k, false};
    sum = std::move(next);
  }
  if (idempotent) {
    throw Error(ErrorCode::NoStabilization,
                "partial sums did not stabilize within " + std::to_string(n) +
                    " iterations (a cycle outweighs the unit)");
  }
  return {Matrix<S>::adopt(s, std::move(sum)), limit, true};
}

/// Closure by the algorithm named in `opts`. A truncated iterative run is
/// reported as NoStabilization; call closure_iterative directly to obtain
/// the partial sum.
template <SemiringType S>
Matrix<S> closure(const Matrix<S>& a, const ClosureOptions& opts = {}) {
  switch (opts.algorithm) {
    case Algorithm::Block: return closure_block(a, opts);
    case Algorithm::GaussJordan: return closure_gauss_jordan(a);
    case Algorithm::Iterative: {
      auto result = closure_iterative(a, opts);
      if (result.truncated) {
        throw Error(ErrorCode::NoStabilization,
                    "closure series truncated after " + std::to_string(result.iterations) +
                        " terms");
      }
      return std::move(result.matrix);
    }
  }
  return closure_block(a, opts);
}

/// Least solution X = A* B of X = A X (+) B.
template <SemiringType S>
Matrix<S> solve_bellman(const Matrix<S>& a, const Matrix<S>& b, const ClosureOptions& opts = {}) {
  detail::require_same_semiring(a.semiring(), b.semiring());
  detail::require(a.is_square(), ErrorCode::DimensionMismatch, "Bellman matrix must be square");
  detail::require(b.rows() == a.rows(), ErrorCode::DimensionMismatch,
                  "right-hand side has " + std::to_string(b.rows()) + " rows, expected " +
                      std::to_string(a.rows()));
  return mat_mul(closure(a, opts), b);
}

/// True when X = A X (+) B holds (up to the semiring's tolerance).
template <SemiringType S>
bool satisfies_bellman(const Matrix<S>& a, const Matrix<S>& b, const Matrix<S>& x) {
  return approx_equal(mat_add(mat_mul(a, x), b), x);
}

/// True when A* = A A* (+) E = A* A (+) E.
template <SemiringType S>
bool satisfies_closure_axiom(const Matrix<S>& a, const Matrix<S>& star) {
  const auto e = identity(a.semiring(), a.rows());
  return approx_equal(mat_add(mat_mul(a, star), e), star) &&
         approx_equal(mat_add(mat_mul(star, a), e), star);
}

}  // namespace tropical
