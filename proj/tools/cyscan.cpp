// Command-line front end: enumerate, invariants, fit, figures, table1, verify.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "cyscan/commands.hpp"

namespace {

using cyscan::Weight;
namespace cli = cyscan::cli;

// "1,1,1,2,5" or five separate arguments.
bool collect_weights(const std::vector<std::string>& args, std::vector<Weight>& out) {
  for (const auto& arg : args) {
    std::size_t start = 0;
    while (start <= arg.size()) {
      const auto pos = arg.find(',', start);
      const std::string tok = arg.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
      if (tok.empty() || tok.find_first_not_of("-0123456789") != std::string::npos) return false;
      try {
        out.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        return false;
      }
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scan and analysis of Calabi-Yau hypersurfaces in weighted P^4"};
  app.require_subcommand(1);

  std::optional<Weight> max_degree;
  std::string out_path;
  std::string input;
  std::string law = "theorem1";
  std::string format = "structured-records";
  int which = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::string> weight_args;

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the class and write the dataset");
  enumerate->add_option("--max-degree", max_degree, "Largest degree to scan (default: whole class)");
  enumerate->add_option("--out", out_path, "Dataset output path")->required();
  enumerate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  auto* invariants = app.add_subcommand("invariants", "Invariants of one weight system");
  invariants->add_option("weights", weight_args, "Five weights, e.g. 1,1,1,2,5")->required();
  invariants->add_option("--format", format, "csv | structured-records");

  auto* fit = app.add_subcommand("fit", "Power-law fit over a dataset");
  fit->add_option("--input", input, "Dataset path")->required();
  fit->add_option("--law", law, "theorem1 (distance vs hL) | theorem2 (Lc2 vs L3)");

  auto* figures = app.add_subcommand("figures", "Emit the data series of a figure");
  figures->add_option("--input", input, "Dataset path")->required();
  figures->add_option("--which", which, "Figure 1..4")->required();
  figures->add_option("--out", out_path, "Output path")->required();

  auto* table1 = app.add_subcommand("table1", "Configurations with Fujita index <= 2");
  table1->add_option("--input", input, "Dataset path")->required();
  table1->add_option("--format", format, "csv | structured-records");

  auto* verify = app.add_subcommand("verify", "Recompute the embedded reference rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kParseError;
  }

  const auto fmt = cli::parse_format(format);
  if (!fmt) {
    std::cerr << "error: unknown format '" << format << "'\n";
    return cli::kParseError;
  }

  if (*enumerate) return cli::cmd_enumerate(max_degree, out_path, threads, std::cout, std::cerr);
  if (*invariants) {
    std::vector<Weight> raw;
    if (!collect_weights(weight_args, raw)) {
      std::cerr << "error: weights must be integers\n";
      return cli::kParseError;
    }
    return cli::cmd_invariants(raw, *fmt, std::cout, std::cerr);
  }
  if (*fit) {
    const auto l = cli::parse_law(law);
    if (!l) {
      std::cerr << "error: unknown law '" << law << "'\n";
      return cli::kParseError;
    }
    return cli::cmd_fit(input, *l, std::cout, std::cerr);
  }
  if (*figures) return cli::cmd_figures(input, which, out_path, std::cout, std::cerr);
  if (*table1) return cli::cmd_table1(input, *fmt, std::cout, std::cerr);
  if (*verify) return cli::cmd_verify(std::cout, std::cerr);
  return cli::kUnexpected;
}
