#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tropical/closure.hpp"
#include "tropical/matrix.hpp"

namespace tropical {

template <SemiringType S>
struct Arc {
  Index from = 0;  // 1-based
  Index to = 0;    // 1-based
  typename S::Scalar weight{};

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Weighted digraph on nodes 1..n. Absent arcs stand for zero-weight
/// entries, so no stored arc carries the semiring zero, and each ordered
/// pair appears at most once. Loops are allowed.
template <SemiringType S>
class WeightedDigraph {
 public:
  using Scalar = typename S::Scalar;

  WeightedDigraph(S semiring, Index n, std::vector<Arc<S>> arcs)
      : semiring_(std::move(semiring)), n_(n), arcs_(std::move(arcs)) {
    detail::require(n_ >= 1, ErrorCode::IndexOutOfRange, "graph needs at least one node");
    std::set<std::pair<Index, Index>> seen;
    for (const auto& arc : arcs_) {
      const std::string where =
          "arc (" + std::to_string(arc.from) + "," + std::to_string(arc.to) + ")";
      detail::require(arc.from >= 1 && arc.from <= n_ && arc.to >= 1 && arc.to <= n_,
                      ErrorCode::IndexOutOfRange, where + " outside 1.." + std::to_string(n_));
      require_legal(semiring_, arc.weight);
      detail::require(!(arc.weight == semiring_.zero()), ErrorCode::IllegalElement,
                      where + " has zero weight");
      detail::require(seen.emplace(arc.from, arc.to).second, ErrorCode::IllegalElement,
                      where + " appears twice");
    }
    std::sort(arcs_.begin(), arcs_.end(), [](const Arc<S>& a, const Arc<S>& b) {
      return std::pair(a.from, a.to) < std::pair(b.from, b.to);
    });
  }

  const S& semiring() const { return semiring_; }
  Index size() const { return n_; }
  /// Arcs ordered by (from, to).
  const std::vector<Arc<S>>& arcs() const { return arcs_; }

  std::optional<Scalar> weight(Index from, Index to) const {
    for (const auto& arc : arcs_)
      if (arc.from == from && arc.to == to) return arc.weight;
    return std::nullopt;
  }

  friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
    return a.semiring_ == b.semiring_ && a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  S semiring_;
  Index n_;
  std::vector<Arc<S>> arcs_;
};

/// Node sequence y_0..y_k, 1-based.
using Path = std::vector<Index>;

template <SemiringType S>
Matrix<S> graph_to_matrix(const WeightedDigraph<S>& g) {
  const auto& s = g.semiring();
  Dense<typename S::Scalar> a = Dense<typename S::Scalar>::Constant(g.size(), g.size(), s.zero());
  for (const auto& arc : g.arcs()) a(arc.from - 1, arc.to - 1) = arc.weight;
  return Matrix<S>::adopt(s, std::move(a));
}

template <SemiringType S>
WeightedDigraph<S> matrix_to_graph(const Matrix<S>& a) {
  detail::require(a.is_square(), ErrorCode::DimensionMismatch, "graph matrix must be square");
  std::vector<Arc<S>> arcs;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (!(a(i, j) == a.semiring().zero())) arcs.push_back({i + 1, j + 1, a(i, j)});
  return WeightedDigraph<S>(a.semiring(), a.rows(), std::move(arcs));
}

/// Product of arc weights along the path; one for a single-node path.
template <SemiringType S>
typename S::Scalar path_weight(const WeightedDigraph<S>& g, const Path& p) {
  detail::require(!p.empty(), ErrorCode::InvalidPath, "path has no nodes");
  for (Index node : p)
    detail::require(node >= 1 && node <= g.size(), ErrorCode::InvalidPath,
                    "path visits node " + std::to_string(node) + " outside 1.." +
                        std::to_string(g.size()));
  const auto& s = g.semiring();
  auto weight = s.one();
  for (std::size_t step = 1; step < p.size(); ++step) {
    const auto arc = g.weight(p[step - 1], p[step]);
    detail::require(arc.has_value(), ErrorCode::InvalidPath,
                    "no arc " + std::to_string(p[step - 1]) + " -> " + std::to_string(p[step]));
    weight = s.mul(weight, *arc);
  }
  return weight;
}

/// Largest graph and path length the enumeration oracle accepts.
inline constexpr Index kOracleMaxNodes = 8;
inline constexpr int kOracleMaxLength = 8;

/// (+)-sum of path weights over every path of length <= max_len, by explicit
/// depth-first enumeration. Intended as a test oracle.
template <SemiringType S>
Matrix<S> brute_force_star(const WeightedDigraph<S>& g, int max_len) {
  if (g.size() > kOracleMaxNodes || max_len > kOracleMaxLength || max_len < 0) {
    throw Error(ErrorCode::OracleScaleExceeded,
                "oracle limited to n <= " + std::to_string(kOracleMaxNodes) +
                    " and 0 <= max_len <= " + std::to_string(kOracleMaxLength));
  }
  const auto& s = g.semiring();
  const Index n = g.size();
  Dense<typename S::Scalar> out = Dense<typename S::Scalar>::Constant(n, n, s.zero());
  std::vector<std::vector<const Arc<S>*>> out_arcs(static_cast<std::size_t>(n));
  for (const auto& arc : g.arcs()) out_arcs[arc.from - 1].push_back(&arc);

  auto visit = [&](auto&& self, Index start, Index node, const typename S::Scalar& weight,
                   int length) -> void {
    out(start, node) = s.add(out(start, node), weight);
    if (length == max_len) return;
    for (const Arc<S>* arc : out_arcs[node])
      self(self, start, arc->to - 1, s.mul(weight, arc->weight), length + 1);
  };
  for (Index start = 0; start < n; ++start) visit(visit, start, start, s.one(), 0);
  return Matrix<S>::adopt(s, std::move(out));
}

/// Underlying scalar semiring of a descriptor (itself, for scalar ones).
inline const Semiring& base_semiring(const Semiring& s) { return s; }

namespace detail {

template <SemiringType S>
void require_base_kind(const S& s, std::initializer_list<Semiring::Kind> kinds,
                       const std::string& what) {
  const auto kind = base_semiring(s).kind();
  for (auto k : kinds)
    if (k == kind) return;
  throw Error(ErrorCode::WrongDescriptor, what + ", got " + std::string(s.name()));
}

}  // namespace detail

/// All-pairs shortest path lengths; g must be over minplus.
template <SemiringType S>
Matrix<S> shortest_paths(const WeightedDigraph<S>& g, const ClosureOptions& opts = {}) {
  detail::require_base_kind(g.semiring(), {Semiring::Kind::MinPlus}, "shortest paths need minplus");
  return closure(graph_to_matrix(g), opts);
}

/// All-pairs maximal path widths; g must be over maxmin.
template <SemiringType S>
Matrix<S> widest_paths(const WeightedDigraph<S>& g, const ClosureOptions& opts = {}) {
  detail::require_base_kind(g.semiring(), {Semiring::Kind::MaxMin}, "widest paths need maxmin");
  return closure(graph_to_matrix(g), opts);
}

/// Best achievable profit from each node: (A^k B)_i for a bounded horizon
/// k, (A* B)_i when `horizon` is empty. g must be over maxplus or its
/// completion.
template <SemiringType S>
DenseVector<typename S::Scalar> max_profit(const WeightedDigraph<S>& g,
                                           const DenseVector<typename S::Scalar>& terminal,
                                           std::optional<int> horizon,
                                           const ClosureOptions& opts = {}) {
  detail::require_base_kind(g.semiring(),
                            {Semiring::Kind::MaxPlus, Semiring::Kind::MaxPlusComplete},
                            "profit needs maxplus");
  detail::require(terminal.size() == g.size(), ErrorCode::DimensionMismatch,
                  "terminal profit vector has length " + std::to_string(terminal.size()) +
                      ", expected " + std::to_string(g.size()));
  Dense<typename S::Scalar> b(g.size(), 1);
  b.col(0) = terminal;
  const Matrix<S> bm(g.semiring(), std::move(b));
  const auto a = graph_to_matrix(g);
  const auto result = horizon ? mat_mul(mat_pow(a, *horizon), bm) : solve_bellman(a, bm, opts);
  return result.storage().col(0);
}

/// Closure over the real field, E + A + A^2 + ... = (E - A)^-1, by
/// elimination.
inline Matrix<Semiring> real_matrix_star(const Matrix<Semiring>& a) {
  detail::require(a.semiring().kind() == Semiring::Kind::RealField, ErrorCode::WrongDescriptor,
                  "real_matrix_star needs real_field, got " + a.semiring().name());
  return closure_gauss_jordan(a);
}

}  // namespace tropical
