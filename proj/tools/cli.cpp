#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "render.hpp"
#include "stabent/codes.hpp"
#include "stabent/errors.hpp"
#include "stabent/graph_state.hpp"
#include "stabent/report.hpp"

namespace stabent::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw IoError("error writing '" + path + "'");
}

/// Runs `body` and maps library exceptions to exit codes.
template <typename Body>
int guarded(std::ostream& err, const std::string& context, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << fmt::format("{}: parse error: {}\n", context, e.what());
    return kParse;
  } catch (const ValidationError& e) {
    err << fmt::format("{}: invalid code: {}\n", context, e.what());
    return kValidation;
  } catch (const ResourceLimitError& e) {
    err << fmt::format("{}: resource limit: {}\n", context, e.what());
    return kResourceLimit;
  } catch (const UnsupportedInputError& e) {
    err << fmt::format("{}: unsupported input: {}\n", context, e.what());
    return kUnsupported;
  } catch (const IoError& e) {
    err << fmt::format("{}: {}\n", context, e.what());
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << fmt::format("{}: {}\n", context, e.what());
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << fmt::format("{}: {}\n", context, e.what());
    return kUsage;
  } catch (const std::exception& e) {
    err << fmt::format("{}: internal error: {}\n", context, e.what());
    return kInternal;
  }
}

}  // namespace

int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, args.input, [&] {
    const auto started = std::chrono::steady_clock::now();
    const StabilizerCode code = parse_code(read_file(args.input));

    ReportOptions options;
    options.exact = args.exact;
    options.persistency = args.persistency;
    options.budget = args.budget;
    options.dense_limit = args.dense_limit;
    options.iteration.starts = args.starts;
    options.iteration.seed = args.seed;
    options.iteration.tol = args.tol;
    options.iteration.max_iter = args.max_iter;
    const EntanglementReport report = entanglement_report(code, options);

    const double elapsed =
        args.timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count()
                    : 0.0;
    if (args.json) {
      out << report_to_json(report, elapsed).dump(2) << '\n';
    } else {
      out << report_to_text(report, elapsed);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, "construct " + args.family, [&] {
    StabilizerCode code;
    std::string header;
    if (args.family == "css") {
      if (args.u_path.empty()) throw std::invalid_argument("css needs --u");
      CssSpec spec;
      spec.U = parse_binary_matrix(read_file(args.u_path));
      spec.V = args.v_path.empty() ? spec.U : parse_binary_matrix(read_file(args.v_path));
      code = css(spec);
      header = fmt::format("CSS code from {} and {}", args.u_path, args.v_path.empty() ? args.u_path : args.v_path);
    } else if (args.family == "toric") {
      code = toric(args.k);
      header = fmt::format("toric code, k = {}", args.k);
    } else if (args.family == "gottesman") {
      std::optional<F2Matrix> c;
      if (!args.c_path.empty()) c = parse_binary_matrix(read_file(args.c_path));
      code = gottesman(args.m, c);
      header = fmt::format("Gottesman code, m = {}", args.m);
    } else {
      throw std::invalid_argument("unknown family '" + args.family + "'");
    }
    header += fmt::format("\n[[{}, {}]], {} generators", code.n, code.k, code.generators.size());
    write_output(args.output, format_code(code, header), out);
    return static_cast<int>(kOk);
  });
}

int cmd_graph(const GraphArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, args.input, [&] {
    const StabilizerCode code = parse_code(read_file(args.input));
    const GraphStateForm graph = css_to_graph(css_spec_from_code(code));
    const GraphBounds bounds = graph_bounds(graph);
    if (args.json) {
      out << graph_to_json(graph, bounds).dump(2) << '\n';
    } else {
      out << graph_to_text(graph, bounds);
    }
    return static_cast<int>(kOk);
  });
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement of stabilizer codewords", "stabent"};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  bool no_timing = false;
  bool no_persistency = false;
  auto* an = app.add_subcommand("analyze", "Bounds and estimate of the codeword entanglement");
  an->add_option("input", analyze.input, "Code file, one generator per line")->required();
  an->add_flag("--exact", analyze.exact, "Force persistency and exhaustive bipartitions");
  an->add_option("--starts", analyze.starts, "Iteration starts")->check(CLI::PositiveNumber);
  an->add_option("--seed", analyze.seed, "Seed for sampled starts and bipartitions");
  an->add_option("--tol", analyze.tol, "Iteration tolerance")->check(CLI::PositiveNumber);
  an->add_option("--max-iter", analyze.max_iter, "Sweeps per start")->check(CLI::PositiveNumber);
  an->add_flag("--json", analyze.json, "Machine-readable report");
  an->add_option("--dense-limit", analyze.dense_limit, "Largest n for dense state vectors");
  an->add_option("--budget", analyze.budget, "Longest persistency sequence searched");
  an->add_flag("--no-persistency", no_persistency, "Skip the persistency search");
  an->add_flag("--no-timing", no_timing, "Report timing_ms as 0");

  ConstructArgs construct;
  auto* co = app.add_subcommand("construct", "Write the generators of a code family");
  co->add_option("family", construct.family, "css, toric or gottesman")
      ->required()
      ->check(CLI::IsMember({"css", "toric", "gottesman"}));
  co->add_option("--u", construct.u_path, "css: binary matrix of X checks");
  co->add_option("--v", construct.v_path, "css: binary matrix of Z checks (default: same as --u)");
  co->add_option("--k", construct.k, "toric: lattice size");
  co->add_option("--m", construct.m, "gottesman: code has 2^m qubits");
  co->add_option("--c", construct.c_path, "gottesman: binary m x m matrix C");
  co->add_option("-o,--output", construct.output, "Output file (default stdout)");

  GraphArgs graph;
  auto* gr = app.add_subcommand("graph", "Graph state locally equivalent to a CSS codeword");
  gr->add_option("input", graph.input, "CSS code file")->required();
  gr->add_flag("--json", graph.json, "Machine-readable output");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? static_cast<int>(kOk) : static_cast<int>(kUsage);
  }

  if (an->parsed()) {
    analyze.timing = !no_timing;
    if (no_persistency) analyze.persistency = false;
    return cmd_analyze(analyze, out, err);
  }
  if (co->parsed()) return cmd_construct(construct, out, err);
  return cmd_graph(graph, out, err);
}

}  // namespace stabent::cli
