#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>

#include "cyscan/fixtures.hpp"
#include "cyscan/weights.hpp"

namespace cyscan::cli {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUnexpected = 1,
  kParseError = 2,     // malformed arguments or dataset text
  kNotTransverse = 3,  // weight system outside the class
  kVerifyFailed = 4,   // a fixture did not reproduce
  kIoError = 5,
  kIntegrality = 6,    // L^3 or the Euler number came out fractional
  kFitError = 7,       // too few or degenerate points
};

enum class Format { kCsv, kRecords };
enum class Law { kTheorem1, kTheorem2 };

/// Accepts "csv" and "structured-records" (alias "records").
std::optional<Format> parse_format(std::string_view s);
std::optional<Law> parse_law(std::string_view s);

int cmd_enumerate(std::optional<Weight> max_degree, const std::filesystem::path& out_path, unsigned threads,
                  std::ostream& out, std::ostream& err);

int cmd_invariants(std::span<const Weight> raw, Format format, std::ostream& out, std::ostream& err);

int cmd_fit(const std::filesystem::path& input, Law law, std::ostream& out, std::ostream& err);

int cmd_figures(const std::filesystem::path& input, int which, const std::filesystem::path& out_path,
                std::ostream& out, std::ostream& err);

int cmd_table1(const std::filesystem::path& input, Format format, std::ostream& out, std::ostream& err);

/// Recomputes every fixture row from its weights alone and compares each
/// published field exactly; also checks the quintic against the P^4[d]
/// closed forms.  Prints a field-level diff for each mismatch.
int cmd_verify(std::span<const Table1Row> fixtures, std::ostream& out, std::ostream& err);
int cmd_verify(std::ostream& out, std::ostream& err);

}  // namespace cyscan::cli
