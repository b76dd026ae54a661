#include <gtest/gtest.h>

#include "test_support.hpp"
#include "tropical/graph.hpp"

namespace tropical::testing {
namespace {

using M = Matrix<Semiring>;
using G = WeightedDigraph<Semiring>;

// 1 -> 2 (5), 2 -> 3 (2), 1 -> 3 (9).
G three_node() { return G(minplus(), 3, {{1, 2, fin(5)}, {2, 3, fin(2)}, {1, 3, fin(9)}}); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

TEST(Digraph, MatrixRoundTrip) {
  Rng rng(31);
  for (const auto& s : all_semirings()) {
    for (Index n = 1; n <= 6; ++n) {
      const auto a = random_matrix(s, n, n, rng, 0.5);
      EXPECT_EQ(graph_to_matrix(matrix_to_graph(a)), a) << s.name();
    }
  }
  const auto g = three_node();
  EXPECT_EQ(matrix_to_graph(graph_to_matrix(g)), g);
}

TEST(Digraph, EmptyAndLoop) {
  const auto s = maxplus();
  EXPECT_EQ(graph_to_matrix(G(s, 3, {})), zeros(s, 3, 3));
  const G loop(s, 1, {{1, 1, fin(-2)}});
  EXPECT_EQ(graph_to_matrix(loop), M(s, {{fin(-2)}}));
}

TEST(Digraph, Validation) {
  const auto s = minplus();
  EXPECT_EQ(code_of([&] { G(s, 2, {{1, 3, fin(1)}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { G(s, 2, {{0, 1, fin(1)}}); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { G(s, 2, {{1, 2, pinf()}}); }), ErrorCode::IllegalElement);
  EXPECT_EQ(code_of([&] { G(s, 2, {{1, 2, fin(1)}, {1, 2, fin(3)}}); }),
            ErrorCode::IllegalElement);
  EXPECT_EQ(code_of([&] { G(s, 2, {{1, 2, ninf()}}); }), ErrorCode::IllegalElement);
}

TEST(PathWeight, Examples) {
  EXPECT_EQ(path_weight(three_node(), {1, 2, 3}), fin(7));
  const G widths(maxmin(), 3, {{1, 2, fin(4)}, {2, 3, fin(7)}, {1, 3, fin(3)}});
  EXPECT_EQ(path_weight(widths, {1, 2, 3}), fin(4));
  EXPECT_EQ(path_weight(widths, {2}), fin(10));
  EXPECT_EQ(path_weight(three_node(), {3}), fin(0));
  EXPECT_EQ(code_of([] { path_weight(three_node(), {3, 1}); }), ErrorCode::InvalidPath);
  EXPECT_EQ(code_of([] { path_weight(three_node(), {}); }), ErrorCode::InvalidPath);
  EXPECT_EQ(code_of([] { path_weight(three_node(), {1, 4}); }), ErrorCode::InvalidPath);
}

TEST(BruteForceStar, Limits) {
  const auto g = three_node();
  EXPECT_EQ(brute_force_star(g, 0), identity(minplus(), 3));
  EXPECT_EQ(code_of([&] { brute_force_star(g, kOracleMaxLength + 1); }),
            ErrorCode::OracleScaleExceeded);
  EXPECT_EQ(code_of([] { brute_force_star(G(minplus(), kOracleMaxNodes + 1, {}), 1); }),
            ErrorCode::OracleScaleExceeded);
}

TEST(BruteForceStar, MatchesPowerSeries) {
  Rng rng(32);
  for (const auto& s : all_semirings()) {
    for (Index n = 1; n <= 4; ++n) {
      const auto a = random_matrix(s, n, n, rng, 0.4);
      const auto g = matrix_to_graph(a);
      for (int len = 0; len <= 3; ++len)
        EXPECT_TRUE(approx_equal(brute_force_star(g, len), series_oracle(a, len))) << s.name();
    }
  }
}

TEST(ShortestPaths, ThreeNodeExample) {
  const auto d = shortest_paths(three_node());
  EXPECT_EQ(d(0, 2), fin(7));
  EXPECT_EQ(d(0, 1), fin(5));
  EXPECT_EQ(d(2, 0), pinf());
  EXPECT_EQ(d, brute_force_star(three_node(), 2));
}

TEST(ShortestPaths, TriangleFixedPoint) {
  Rng rng(33);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = uniform_int(rng, 1, 8);
    const auto a = random_closable(minplus(), n, rng, 0.4);
    const auto g = matrix_to_graph(a);
    const auto d = shortest_paths(g);
    EXPECT_EQ(d, brute_force_star(g, static_cast<int>(n) - 1));
    for (Index i = 0; i < n; ++i) {
      EXPECT_EQ(d(i, i), fin(0));
      for (Index j = 0; j < n; ++j)
        for (Index k = 0; k < n; ++k)
          EXPECT_TRUE(minplus().leq(minplus().mul(d(i, k), d(k, j)), d(i, j)));
    }
  }
}

TEST(WidestPaths, Example) {
  const G g(maxmin(), 3, {{1, 2, fin(4)}, {2, 3, fin(7)}, {1, 3, fin(3)}});
  const auto w = widest_paths(g);
  EXPECT_EQ(w(0, 2), fin(4));
  EXPECT_EQ(w(2, 0), fin(0));
  EXPECT_EQ(w(1, 1), fin(10));
}

TEST(WidestPaths, EveryWidthIsAttained) {
  Rng rng(34);
  for (int trial = 0; trial < 30; ++trial) {
    const Index n = uniform_int(rng, 1, 6);
    const auto g = matrix_to_graph(random_matrix(maxmin(), n, n, rng, 0.5));
    const auto w = widest_paths(g);
    // Each width is the bottleneck of some path with at most n - 1 arcs.
    EXPECT_EQ(w, brute_force_star(g, static_cast<int>(n) - 1));
  }
}

TEST(Paths, WrongDescriptor) {
  const G g(maxplus(), 2, {{1, 2, fin(1)}});
  EXPECT_EQ(code_of([&] { shortest_paths(g); }), ErrorCode::WrongDescriptor);
  EXPECT_EQ(code_of([&] { widest_paths(g); }), ErrorCode::WrongDescriptor);
  EXPECT_EQ(code_of([] { max_profit(three_node(), vec({fin(0), fin(0), fin(0)}), 1); }),
            ErrorCode::WrongDescriptor);
  EXPECT_EQ(code_of([] { real_matrix_star(zeros(maxplus(), 2, 2)); }),
            ErrorCode::WrongDescriptor);
}

TEST(MaxProfit, Examples) {
  const G g(maxplus(), 2, {{1, 2, fin(3)}});
  const auto b = vec({fin(0), fin(10)});
  EXPECT_EQ(max_profit(g, b, 1)(0), fin(13));
  EXPECT_EQ(max_profit(g, b, 0), b);
  EXPECT_EQ(max_profit(g, b, std::nullopt), vec({fin(13), fin(10)}));
  EXPECT_EQ(code_of([&] { max_profit(g, vec({fin(0)}), 1); }), ErrorCode::DimensionMismatch);
}

TEST(MaxProfit, UnboundedEqualsBestBoundedHorizon) {
  // 1 -> 2 (4), 2 -> 1 (-5): each loop loses 1, so no walk beats its simple prefix.
  const G g(maxplus(), 3, {{1, 2, fin(4)}, {2, 1, fin(-5)}, {2, 3, fin(1)}});
  const auto b = vec({fin(0), fin(2), fin(6)});
  const auto unbounded = max_profit(g, b, std::nullopt);
  auto best = max_profit(g, b, 0);
  for (int k = 1; k <= 2; ++k) {
    const auto hk = max_profit(g, b, k);
    for (Index i = 0; i < 3; ++i) best(i) = maxplus().add(best(i), hk(i));
  }
  EXPECT_EQ(unbounded, best);
  EXPECT_EQ(unbounded, vec({fin(11), fin(7), fin(6)}));
}

TEST(MaxProfit, PositiveCycle) {
  const G g(maxplus(), 2, {{1, 2, fin(3)}, {2, 1, fin(-1)}});
  const auto b = vec({fin(0), fin(0)});
  EXPECT_THROW(max_profit(g, b, std::nullopt), StarUndefinedError);
  const G gc(maxplus_complete(), 2, {{1, 2, fin(3)}, {2, 1, fin(-1)}});
  EXPECT_EQ(max_profit(gc, b, std::nullopt), vec({pinf(), pinf()}));
}

TEST(RealMatrixStar, Examples) {
  const auto s = real_field();
  EXPECT_EQ(real_matrix_star(zeros(s, 3, 3)), identity(s, 3));
  EXPECT_EQ(real_matrix_star(M(s, {{fin(0), fin(0.5)}, {fin(0), fin(0)}})),
            M(s, {{fin(1), fin(0.5)}, {fin(0), fin(1)}}));
  EXPECT_THROW(real_matrix_star(M(s, {{fin(1)}})), StarUndefinedError);
}

TEST(RealMatrixStar, NeumannSeriesAndInverse) {
  Rng rng(35);
  const auto s = real_field();
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = uniform_int(rng, 1, 6);
    Dense<Value> d(n, n);
    // Row sums below 1/2 bound the spectral radius.
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j)
        d(i, j) = fin(std::uniform_real_distribution<double>(-0.5, 0.5)(rng) / n);
    const M a(s, d);
    const auto star = real_matrix_star(a);
    auto series = identity(s, n);
    auto power = identity(s, n);
    for (int k = 1; k <= 40; ++k) {
      power = power * a;
      series = series + power;
    }
    const auto residual = mat_add(identity(s, n), mat_mul(a, star));
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        EXPECT_NEAR(star(i, j).number(), series(i, j).number(), 1e-7);
        // (I - A) A* = I  <=>  A* = I + A A*.
        EXPECT_NEAR(residual(i, j).number(), star(i, j).number(), 1e-9);
      }
  }
}

}  // namespace
}  // namespace tropical::testing
