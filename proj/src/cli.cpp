#include "gmosaic/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmosaic/census.hpp"
#include "gmosaic/magnified.hpp"
#include "gmosaic/mosaic.hpp"
#include "gmosaic/state_matrices.hpp"
#include "gmosaic/verify.hpp"

namespace gmosaic::cli {

namespace {

struct CountArgs {
  unsigned rows = 0;
  unsigned cols = 0;
  bool json = false;
  std::string backend = "auto";
  unsigned threads = 0;
};

struct MatrixArgs {
  std::string kind;
  unsigned m = 0;
  unsigned n = 0;
  std::string out_path;
  unsigned threads = 0;
};

int cmd_count(const CountArgs& args, std::ostream& out) {
  const std::optional<Backend> backend = parse_backend(args.backend);
  if (!backend) throw DomainError("unknown backend '" + args.backend + "'");
  const CensusResult r = count_graph_mosaics(args.rows, args.cols, {*backend, args.threads});
  if (!args.json) {
    out << r.count.str() << '\n';
    return kOk;
  }
  const nlohmann::json report{
      {"command", "count"},
      {"rows", r.rows},
      {"cols", r.cols},
      {"count", r.count.str()},
      {"method", method_name(r.method)},
      {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()},
      {"backend", r.backend},
      {"threads", r.threads},
      {"peak_dimension", r.peak_dimension},
  };
  out << report.dump() << '\n';
  return kOk;
}

int cmd_verify(unsigned max_cells, unsigned threads, std::ostream& out, std::ostream& err) {
  return report_verification(run_verification({max_cells, resolve_threads(threads), std::nullopt}), out, err);
}

// Fixed-width first; arbitrary precision if any entry overflows.
template <typename Fn>
void dump_with_fallback(std::ostream& out, Fn&& build) {
  try {
    write_matrix_dump(out, build(Fixed128{}));
  } catch (const OverflowError&) {
    write_matrix_dump(out, build(Count{}));
  }
}

int cmd_matrix(bool magnified, const MatrixArgs& args, std::ostream& out) {
  std::ostringstream buffer;
  const BuildOptions build{resolve_threads(args.threads)};
  if (magnified) {
    dump_with_fallback(buffer, [&](auto tag) {
      using T = decltype(tag);
      return build_magnified<T>(args.m, args.n, build).entries;
    });
  } else {
    const std::optional<StateKind> kind = parse_kind(args.kind);
    if (!kind) throw DomainError("unknown state matrix kind '" + args.kind + "' (use X+, X-, O+ or O-)");
    dump_with_fallback(buffer, [&](auto tag) {
      using T = decltype(tag);
      return build_state_matrices<T>(args.m, build)[*kind];
    });
  }
  if (args.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(args.out_path, std::ios::binary);
    if (!file || !(file << buffer.str())) throw ResourceError("cannot write " + args.out_path);
  }
  return kOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_mosaic(const std::string& action, const std::string& path, std::ostream& out) {
  const Mosaic mosaic = parse_mosaic(read_file(path));
  if (action == "render") {
    out << render_ascii(mosaic);
    return kOk;
  }
  if (is_graph_mosaic(mosaic)) {
    out << "graph-mosaic\n";
  } else if (is_suitably_connected(mosaic)) {
    out << "suitably-connected\n";
  } else {
    out << "invalid\n";
  }
  out << "l-state: " << boundary_state(mosaic, Side::Left).letters() << '\n'
      << "r-state: " << boundary_state(mosaic, Side::Right).letters() << '\n'
      << "t-state: " << boundary_state(mosaic, Side::Top).letters() << '\n'
      << "b-state: " << boundary_state(mosaic, Side::Bottom).letters() << '\n';
  return kOk;
}

}  // namespace

int report_verification(const std::vector<SuiteOutcome>& suites, std::ostream& out, std::ostream& err) {
  bool all = true;
  for (const SuiteOutcome& s : suites) {
    out << std::left << std::setw(18) << s.name << std::setw(6) << (s.passed ? "pass" : "FAIL") << s.checks
        << " checks\n";
    if (!s.passed) {
      all = false;
      err << s.name << ": first mismatch at " << s.first_mismatch << '\n';
    }
  }
  return all ? kOk : kMismatch;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of graph mosaics", "gmosaic"};
  app.require_subcommand(1);

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "Number of graph mosaics on a rows x cols grid");
  count_cmd->add_option("rows", count.rows)->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("cols", count.cols)->required()->check(CLI::PositiveNumber);
  count_cmd->add_flag("--json", count.json, "Print a JSON report");
  count_cmd->add_option("--backend", count.backend, "auto, fixed128 or bignum")
      ->check(CLI::IsMember({"auto", "fixed128", "bignum"}));
  count_cmd->add_option("--threads", count.threads, "Worker threads (0 = all cores)");

  unsigned max_cells = 0;
  unsigned verify_threads = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the formula against brute force");
  verify_cmd->add_option("max_cells", max_cells, "Largest rows*cols to brute-force")->required();
  verify_cmd->add_option("--threads", verify_threads, "Worker threads (0 = all cores)");

  MatrixArgs matrix;
  auto* matrix_cmd = app.add_subcommand("matrix", "Dump a state or magnified state matrix");
  matrix_cmd->require_subcommand(1);
  auto* state_cmd = matrix_cmd->add_subcommand("state", "State matrix X+, X-, O+ or O- of level m");
  state_cmd->add_option("kind", matrix.kind)->required();
  state_cmd->add_option("m", matrix.m)->required();
  auto* magnified_cmd = matrix_cmd->add_subcommand("magnified", "Magnified state matrix N(m,n)");
  magnified_cmd->add_option("m", matrix.m)->required();
  magnified_cmd->add_option("n", matrix.n)->required();
  for (auto* sub : {state_cmd, magnified_cmd}) {
    sub->add_option("--out", matrix.out_path, "Write to a file instead of stdout");
    sub->add_option("--threads", matrix.threads, "Worker threads (0 = all cores)");
  }

  std::string mosaic_action;
  std::string mosaic_path;
  auto* mosaic_cmd = app.add_subcommand("mosaic", "Validate or render a .mosaic file");
  mosaic_cmd->add_option("action", mosaic_action)->required()->check(CLI::IsMember({"validate", "render"}));
  mosaic_cmd->add_option("path", mosaic_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (count_cmd->parsed()) return cmd_count(count, out);
    if (verify_cmd->parsed()) return cmd_verify(max_cells, verify_threads, out, err);
    if (matrix_cmd->parsed()) return cmd_matrix(magnified_cmd->parsed(), matrix, out);
    if (mosaic_cmd->parsed()) return cmd_mosaic(mosaic_action, mosaic_path, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const OverflowError& e) {
    err << "overflow: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace gmosaic::cli
