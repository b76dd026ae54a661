#include "tropical/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "tropical/graph.hpp"
#include "tropical/interval.hpp"
#include "tropical/io.hpp"
#include "tropical/ldm.hpp"

namespace tropical::cli {

namespace {

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, path + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void require_inputs(const RunConfig& config, std::size_t count, const char* usage) {
  if (config.inputs.size() != count) {
    throw Error(ErrorCode::ParseError, std::string("expected ") + usage);
  }
}

bool is_graph(const Json& j) { return j.is_object() && j.contains("n") && !j.contains("data"); }

template <SemiringType S>
Matrix<S> matrix_or_graph(const Json& j, const S& s) {
  return is_graph(j) ? graph_to_matrix(graph_from_json(j, s)) : matrix_from_json(j, s);
}

template <SemiringType S>
std::string emit(const Matrix<S>& m, OutputFormat format) {
  if (format == OutputFormat::Table) return matrix_to_table(m);
  return matrix_to_json(m).dump() + "\n";
}

template <SemiringType S>
std::string execute(const RunConfig& config, const S& s) {
  const auto& in = config.inputs;
  switch (config.command) {
    case Command::Closure: {
      require_inputs(config, 1, "one input file");
      return emit(closure(matrix_or_graph(read_json(in[0]), s), config.closure), config.format);
    }
    case Command::Solve: {
      require_inputs(config, 2, "matrix file A and right-hand side file B");
      const auto a = matrix_or_graph(read_json(in[0]), s);
      const Json bj = read_json(in[1]);
      Matrix<S> b = bj.is_array() ? [&] {
        const auto v = vector_from_json(bj, s);
        Dense<typename S::Scalar> col(v.size(), 1);
        col.col(0) = v;
        return Matrix<S>(s, std::move(col));
      }()
                                  : matrix_from_json(bj, s);
      return emit(solve_bellman(a, b, config.closure), config.format);
    }
    case Command::Factor: {
      require_inputs(config, 1, "one input file");
      const auto a = matrix_or_graph(read_json(in[0]), s);
      OpCounter counter;
      const auto t = ldm_factorize(a, config.count_ops ? &counter : nullptr);
      if (config.format == OutputFormat::Table) {
        std::string out = "L\n" + matrix_to_table(t.lower()) + "D\n" +
                          matrix_to_table(t.diagonal_matrix()) + "M\n" + matrix_to_table(t.upper());
        if (config.count_ops) {
          out += "ops adds=" + std::to_string(counter.adds) + " muls=" +
                 std::to_string(counter.muls) + " stars=" + std::to_string(counter.stars) + "\n";
        }
        return out;
      }
      Json j = ldm_to_json(t);
      if (config.count_ops) j["ops"] = op_counter_to_json(counter);
      return j.dump() + "\n";
    }
    case Command::Paths: {
      require_inputs(config, 1, "one graph file");
      const auto g = graph_from_json(read_json(in[0]), s);
      const auto kind = base_semiring(s).kind();
      if (kind == Semiring::Kind::MaxMin) return emit(widest_paths(g, config.closure), config.format);
      return emit(shortest_paths(g, config.closure), config.format);
    }
    case Command::Profit: {
      require_inputs(config, 2, "graph file and terminal profit file");
      const auto g = graph_from_json(read_json(in[0]), s);
      const auto b = vector_from_json(read_json(in[1]), s);
      const auto values = max_profit(g, b, config.horizon, config.closure);
      Dense<typename S::Scalar> col(values.size(), 1);
      col.col(0) = values;
      return emit(Matrix<S>::adopt(s, std::move(col)), config.format);
    }
    case Command::Invert: {
      require_inputs(config, 1, "one matrix file");
      if constexpr (std::is_same_v<S, Semiring>) {
        return emit(real_matrix_star(matrix_from_json(read_json(in[0]), s)), config.format);
      } else {
        throw Error(ErrorCode::WrongDescriptor, "invert does not support interval input");
      }
    }
  }
  return {};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IllegalElement:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::EmptyInterval: return kParse;
    case ErrorCode::DimensionMismatch:
    case ErrorCode::DescriptorMismatch:
    case ErrorCode::ShapeViolation: return kDimension;
    case ErrorCode::StarUndefined:
    case ErrorCode::NoStabilization: return kStarUndefined;
    case ErrorCode::UnknownSemiring:
    case ErrorCode::InvalidBounds: return kUnknownSemiring;
    default: return kFailure;
  }
}

}  // namespace

RunResult run(const RunConfig& config) {
  RunResult result;
  try {
    if (config.threads < 1) throw Error(ErrorCode::ParseError, "--threads must be >= 1");
    RunConfig effective = config;
    effective.closure.threads = config.threads;
    effective.closure.parallel = config.threads > 1;
    const Semiring base = parse_semiring(config.semiring);
    result.output = config.interval ? execute(effective, lift_semiring(base))
                                    : execute(effective, base);
  } catch (const StarUndefinedError& e) {
    result.exit_code = kStarUndefined;
    result.diagnostic = std::string("error: StarUndefined: ") + e.what();
  } catch (const Error& e) {
    result.exit_code = exit_code_for(e.code());
    result.diagnostic = std::string("error: ") + to_string(e.code()) + ": " + e.what();
  } catch (const std::exception& e) {
    result.exit_code = kFailure;
    result.diagnostic = std::string("error: ") + e.what();
  }
  return result;
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal closure, Bellman and LDM solvers over numerical semirings"};
  app.require_subcommand(1);
  app.footer(
      "Semirings: rplus, rplus_complete, maxplus, maxplus_complete, minplus,\n"
      "maxmin,a,b, boolean, real_field.\n"
      "Exit codes: 0 ok, 1 other failure, 2 parse error, 3 dimension mismatch,\n"
      "4 star undefined (closure does not exist), 5 unknown semiring or bad bounds.");

  RunConfig config;
  std::string algorithm = "block";
  std::string format = "json";
  std::string horizon = "inf";
  Index split = 0;

  const std::map<std::string, Command> commands{
      {"closure", Command::Closure}, {"solve", Command::Solve},   {"factor", Command::Factor},
      {"paths", Command::Paths},     {"profit", Command::Profit}, {"invert", Command::Invert},
  };
  const std::map<std::string, const char*> help{
      {"closure", "closure A* of a matrix or graph"},
      {"solve", "least solution X = A*B of X = AX + B"},
      {"factor", "LDM factorization"},
      {"paths", "shortest (minplus) or widest (maxmin) paths"},
      {"profit", "best profit per start node (maxplus)"},
      {"invert", "(I - A)^-1 over real_field"},
  };
  for (const auto& [name, command] : commands) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("--semiring", config.semiring, "NAME or NAME,a,b")->required();
    sub->add_flag("--interval", config.interval, "read scalars as [lo, hi] intervals");
    sub->add_option("--algorithm", algorithm, "block | gauss_jordan | iterative")
        ->check(CLI::IsMember({"block", "gauss_jordan", "iterative"}));
    sub->add_option("--split", split, "fixed top-level split point for the block method");
    sub->add_option("--max-iterations", config.closure.max_iterations,
                    "series cap for the iterative method on non-idempotent semirings");
    sub->add_option("--threads", config.threads, "fork-join width of the block method");
    sub->add_flag("--count-ops", config.count_ops, "report semiring operation counts (factor)");
    sub->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));
    if (command == Command::Profit)
      sub->add_option("--horizon", horizon, "path length bound K, or inf");
    sub->add_option("inputs", config.inputs, "input files")->required();
    sub->callback([&config, command = command] { config.command = command; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  config.closure.algorithm = algorithm == "gauss_jordan" ? Algorithm::GaussJordan
                             : algorithm == "iterative"  ? Algorithm::Iterative
                                                         : Algorithm::Block;
  if (split > 0) config.closure.split = SplitRule::fixed(split);
  config.format = format == "table" ? OutputFormat::Table : OutputFormat::Json;
  if (horizon != "inf") {
    try {
      std::size_t used = 0;
      const int k = std::stoi(horizon, &used);
      if (used != horizon.size() || k < 0) throw std::invalid_argument(horizon);
      config.horizon = k;
    } catch (const std::exception&) {
      err << "error: ParseError: --horizon expects a non-negative integer or inf\n";
      return kParse;
    }
  }

  const RunResult result = run(config);
  out << result.output;
  if (!result.diagnostic.empty()) err << result.diagnostic << "\n";
  return result.exit_code;
}

}  // namespace tropical::cli
