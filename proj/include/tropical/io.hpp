#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "tropical/graph.hpp"
#include "tropical/interval.hpp"
#include "tropical/ldm.hpp"
#include "tropical/matrix.hpp"

namespace tropical {

using Json = nlohmann::ordered_json;

// Scalars: finite values are JSON numbers, infinities the strings "-inf" and
// "inf", Booleans JSON true/false. An interval is the pair [lo, hi].

Json scalar_to_json(const Value& v);
Json scalar_to_json(const Interval& x);

/// Parses and validates a scalar for `s`. `where` names the field in
/// ParseError messages.
Value scalar_from_json(const Json& j, const Semiring& s, const std::string& where);
Interval scalar_from_json(const Json& j, const IntervalSemiring& s, const std::string& where);

/// Plain-text rendering used by table output; zero renders as ".".
std::string scalar_to_text(const Value& v, const Semiring& s);
std::string scalar_to_text(const Interval& x, const IntervalSemiring& s);

[[noreturn]] void parse_error(const std::string& where, const std::string& what);

/// {"rows": m, "cols": n, "data": [[...], ...]}
template <SemiringType S>
Json matrix_to_json(const Matrix<S>& a) {
  Json data = Json::array();
  for (Index i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < a.cols(); ++j) row.push_back(scalar_to_json(a(i, j)));
    data.push_back(std::move(row));
  }
  return Json{{"rows", a.rows()}, {"cols", a.cols()}, {"data", std::move(data)}};
}

template <SemiringType S>
Matrix<S> matrix_from_json(const Json& j, const S& s) {
  if (!j.is_object() || !j.contains("data")) parse_error("matrix", "expected an object with \"data\"");
  const Json& data = j.at("data");
  if (!data.is_array() || data.empty()) parse_error("data", "expected a non-empty array of rows");
  const auto m = static_cast<Index>(data.size());
  if (!data[0].is_array() || data[0].empty()) parse_error("data[0]", "expected a non-empty row");
  const auto n = static_cast<Index>(data[0].size());
  if (j.contains("rows") && (!j.at("rows").is_number_integer() || j.at("rows").get<Index>() != m))
    parse_error("rows", "does not match the number of data rows (" + std::to_string(m) + ")");
  if (j.contains("cols") && (!j.at("cols").is_number_integer() || j.at("cols").get<Index>() != n))
    parse_error("cols", "does not match the row length (" + std::to_string(n) + ")");
  Dense<typename S::Scalar> out(m, n);
  for (Index i = 0; i < m; ++i) {
    const std::string row_name = "data[" + std::to_string(i) + "]";
    const Json& row = data[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      parse_error(row_name, "expected a row of " + std::to_string(n) + " entries");
    for (Index c = 0; c < n; ++c)
      out(i, c) = scalar_from_json(row[static_cast<std::size_t>(c)], s,
                                   row_name + "[" + std::to_string(c) + "]");
  }
  return Matrix<S>(s, std::move(out));
}

/// {"n": n, "arcs": [[from, to, weight], ...]} with 1-based nodes.
template <SemiringType S>
Json graph_to_json(const WeightedDigraph<S>& g) {
  Json arcs = Json::array();
  for (const auto& arc : g.arcs())
    arcs.push_back(Json::array({arc.from, arc.to, scalar_to_json(arc.weight)}));
  return Json{{"n", g.size()}, {"arcs", std::move(arcs)}};
}

template <SemiringType S>
WeightedDigraph<S> graph_from_json(const Json& j, const S& s) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    parse_error("graph", "expected an object with integer \"n\"");
  const auto n = j.at("n").get<Index>();
  std::vector<Arc<S>> arcs;
  if (j.contains("arcs")) {
    const Json& list = j.at("arcs");
    if (!list.is_array()) parse_error("arcs", "expected an array");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string where = "arcs[" + std::to_string(k) + "]";
      const Json& arc = list[k];
      if (!arc.is_array() || arc.size() != 3 || !arc[0].is_number_integer() ||
          !arc[1].is_number_integer())
        parse_error(where, "expected [from, to, weight]");
      arcs.push_back({arc[0].get<Index>(), arc[1].get<Index>(),
                      scalar_from_json(arc[2], s, where + "[2]")});
    }
  }
  return WeightedDigraph<S>(s, n, std::move(arcs));
}

template <class Scalar>
Json vector_to_json(const DenseVector<Scalar>& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(scalar_to_json(v(i)));
  return out;
}

/// Accepts a flat array of scalars or an n x 1 matrix object.
template <SemiringType S>
DenseVector<typename S::Scalar> vector_from_json(const Json& j, const S& s) {
  if (j.is_object()) {
    const auto m = matrix_from_json(j, s);
    if (m.cols() != 1) parse_error("vector", "expected a single column");
    return m.storage().col(0);
  }
  if (!j.is_array() || j.empty()) parse_error("vector", "expected a non-empty array");
  DenseVector<typename S::Scalar> out(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    out(static_cast<Index>(i)) = scalar_from_json(j[i], s, "vector[" + std::to_string(i) + "]");
  return out;
}

/// {"L": matrix, "D": [...], "M": matrix}
template <SemiringType S>
Json ldm_to_json(const LdmTriple<S>& t) {
  return Json{{"L", matrix_to_json(t.lower())},
              {"D", vector_to_json(t.diagonal())},
              {"M", matrix_to_json(t.upper())}};
}

template <SemiringType S>
LdmTriple<S> ldm_from_json(const Json& j, const S& s) {
  if (!j.is_object() || !j.contains("L") || !j.contains("D") || !j.contains("M"))
    parse_error("ldm", "expected an object with \"L\", \"D\" and \"M\"");
  return LdmTriple<S>(matrix_from_json(j.at("L"), s), vector_from_json(j.at("D"), s),
                      matrix_from_json(j.at("M"), s));
}

Json op_counter_to_json(const OpCounter& c);

/// Right-aligned text table, one matrix row per line.
template <SemiringType S>
std::string matrix_to_table(const Matrix<S>& a) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      cells.push_back(scalar_to_text(a(i, j), a.semiring()));
      width = std::max(width, cells.back().size());
    }
  std::string out;
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      const auto& cell = cells[static_cast<std::size_t>(i * a.cols() + j)];
      if (j > 0) out += ' ';
      out += std::string(width - cell.size(), ' ') + cell;
    }
    out += '\n';
  }
  return out;
}

}  // namespace tropical
