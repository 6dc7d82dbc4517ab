#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cyscan/analysis.hpp"
#include "cyscan/invariants.hpp"

namespace cyscan {

/// Column layout of a dataset file, version 1.
inline constexpr std::string_view kDatasetHeader = "k1,k2,k3,k4,k5,degree,k,L3,hL,Lc2,delta,euler";

/// Malformed dataset text; `line()` is 1-based, 0 when not line-specific.
class DatasetError : public std::runtime_error {
 public:
  DatasetError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Header line, then one comma-separated row per record in canonical order,
/// LF endings.  Throws DatasetError when two records share a weight system.
void write_dataset(std::ostream& os, std::span<const InvariantRecord> records);
std::string serialize_dataset(std::span<const InvariantRecord> records);

/// Strict reader: exact header, twelve base-10 integer fields per row,
/// canonical weights with degree equal to their sum, rows strictly ascending.
std::vector<InvariantRecord> parse_dataset(std::istream& is);
std::vector<InvariantRecord> parse_dataset(std::string_view text);

std::vector<InvariantRecord> read_dataset_file(const std::filesystem::path& path);
void write_dataset_file(const std::filesystem::path& path, std::span<const InvariantRecord> records);

/// "p/q" in lowest terms, or a plain integer when q = 1.
std::string format_rational(const Rational& q);

/// Fifteen significant digits, fixed or exponent form as needed.
std::string format_decimal(double x);

/// Two-column "x,y" file with exact values; '#' lines carry metadata.  For
/// the L.c2 figure the Wilson line y = 10x is recorded over the x range.
void write_figure(std::ostream& os, std::span<const SeriesPoint> series, Figure which);

}  // namespace cyscan
