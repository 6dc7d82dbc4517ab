#include "cyscan/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cyscan {

namespace {

constexpr std::size_t kColumns = 12;

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Optional '-', then digits with no superfluous leading zero.
bool is_decimal_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  if (s.size() > 1 && s.front() == '0') return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

BigInt parse_big(std::string_view field, std::size_t line) {
  if (!is_decimal_integer(field) || field == "-0")
    throw DatasetError("not a base-10 integer: '" + std::string(field) + "'", line);
  return BigInt(std::string(field));
}

Weight parse_small(std::string_view field, std::size_t line) {
  if (!is_decimal_integer(field)) throw DatasetError("not a base-10 integer: '" + std::string(field) + "'", line);
  Weight v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw DatasetError("integer out of range: '" + std::string(field) + "'", line);
  return v;
}

InvariantRecord parse_row(std::string_view line, std::size_t lineno) {
  const auto fields = split_commas(line);
  if (fields.size() != kColumns)
    throw DatasetError("expected " + std::to_string(kColumns) + " fields, got " + std::to_string(fields.size()),
                       lineno);

  std::array<Weight, kNumWeights> w{};
  for (std::size_t i = 0; i < kNumWeights; ++i) w[i] = parse_small(fields[i], lineno);
  const Weight degree = parse_small(fields[5], lineno);

  InvariantRecord rec{[&] {
    try {
      return WeightSystem::make(w);
    } catch (const std::invalid_argument& e) {
      throw DatasetError(e.what(), lineno);
    }
  }()};
  if (rec.ws.weights() != w) throw DatasetError("weights are not in canonical form", lineno);
  if (rec.ws.degree() != degree) throw DatasetError("degree is not the sum of the weights", lineno);

  rec.k = parse_small(fields[6], lineno);
  if (rec.k < 1) throw DatasetError("k must be positive", lineno);
  rec.L3 = parse_big(fields[7], lineno);
  rec.hL = parse_big(fields[8], lineno);
  rec.Lc2 = parse_big(fields[9], lineno);
  rec.delta = parse_big(fields[10], lineno);
  rec.euler = parse_big(fields[11], lineno);
  return rec;
}

}  // namespace

void write_dataset(std::ostream& os, std::span<const InvariantRecord> records) {
  std::vector<const InvariantRecord*> order;
  order.reserve(records.size());
  for (const auto& r : records) order.push_back(&r);
  std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->ws < b->ws; });
  for (std::size_t i = 1; i < order.size(); ++i)
    if (order[i - 1]->ws == order[i]->ws) throw DatasetError("duplicate weight system " + order[i]->ws.to_string(), 0);

  os << kDatasetHeader << '\n';
  for (const auto* r : order) {
    for (auto w : r->ws.weights()) os << w << ',';
    os << r->ws.degree() << ',' << r->k << ',' << r->L3 << ',' << r->hL << ',' << r->Lc2 << ',' << r->delta << ','
       << r->euler << '\n';
  }
}

std::string serialize_dataset(std::span<const InvariantRecord> records) {
  std::ostringstream os;
  write_dataset(os, records);
  return os.str();
}

std::vector<InvariantRecord> parse_dataset(std::istream& is) {
  std::vector<InvariantRecord> out;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find('\r') != std::string::npos) throw DatasetError("CR line endings are not allowed", lineno);
    if (!header_seen) {
      if (line != kDatasetHeader) throw DatasetError("unexpected header '" + line + "'", lineno);
      header_seen = true;
      continue;
    }
    auto rec = parse_row(line, lineno);
    if (!out.empty() && !(out.back().ws < rec.ws))
      throw DatasetError("rows must be strictly ascending by (degree, weights)", lineno);
    out.push_back(std::move(rec));
  }
  if (!header_seen) throw DatasetError("missing header", 0);
  return out;
}

std::vector<InvariantRecord> parse_dataset(std::string_view text) {
  std::istringstream is{std::string(text)};
  return parse_dataset(is);
}

std::vector<InvariantRecord> read_dataset_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_dataset(in);
}

void write_dataset_file(const std::filesystem::path& path, std::span<const InvariantRecord> records) {
  const std::string text = serialize_dataset(records);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed: " + path.string());
}

std::string format_rational(const Rational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

std::string format_decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

void write_figure(std::ostream& os, std::span<const SeriesPoint> series, Figure which) {
  static constexpr const char* kTitles[] = {"", "L3 versus hL", "D versus hL", "Lc2 versus L3", "L3/hL versus hL"};
  os << "# figure " << static_cast<int>(which) << ": " << kTitles[static_cast<int>(which)] << '\n';
  if (which == Figure::kChern && !series.empty()) {
    auto [lo, hi] = std::minmax_element(series.begin(), series.end(),
                                        [](const SeriesPoint& a, const SeriesPoint& b) { return a.x < b.x; });
    os << "# wilson_line y=10x from " << format_rational(lo->x) << ',' << format_rational(10 * lo->x) << " to "
       << format_rational(hi->x) << ',' << format_rational(10 * hi->x) << '\n';
  }
  os << "x,y\n";
  for (const auto& p : series) os << format_rational(p.x) << ',' << format_rational(p.y) << '\n';
}

}  // namespace cyscan
