#include "cyscan/commands.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "cyscan/analysis.hpp"
#include "cyscan/dataset.hpp"
#include "cyscan/invariants.hpp"

namespace cyscan::cli {

namespace {

// Runs a command body and maps library exceptions onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IntegralityError& e) {
    err << "error: " << e.what() << '\n';
    return kIntegrality;
  } catch (const DatasetError& e) {
    err << "error: dataset: " << e.what() << '\n';
    return kParseError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUnexpected;
  }
}

std::string weights_csv(const WeightSystem& ws) {
  std::string s;
  for (std::size_t i = 0; i < kNumWeights; ++i) s += (i ? "," : "") + std::to_string(ws.weight(i));
  return s;
}

std::string manifold_name(const WeightSystem& ws) {
  return "P(" + weights_csv(ws) + ")[" + std::to_string(ws.degree()) + "]";
}

const Table1Row* find_fixture(const WeightSystem& ws) {
  for (const auto& row : kTable1)
    if (row.weights == ws.weights()) return &row;
  return nullptr;
}

void print_record(std::ostream& out, const InvariantRecord& r, Format format) {
  if (format == Format::kCsv) {
    out << serialize_dataset(std::span(&r, 1));
    return;
  }
  const Rational index = index_limit(r.Lc2);
  const Rational dist = distance_D(r.L3, r.hL);
  out << "weights=" << weights_csv(r.ws) << '\n'
      << "degree=" << r.ws.degree() << '\n'
      << "k=" << r.k << '\n'
      << "L3=" << r.L3 << '\n'
      << "hL=" << r.hL << '\n'
      << "Lc2=" << r.Lc2 << '\n'
      << "delta=" << r.delta << '\n'
      << "euler=" << r.euler << '\n'
      << "index_limit=" << format_rational(index) << " (" << format_decimal(to_double(index)) << ")\n"
      << "distance_D=" << format_rational(dist) << " (" << format_decimal(to_double(dist)) << ")\n"
      << "theorem1_bound=" << (check_theorem1_bound(r) ? "holds" : "violated") << '\n'
      << "wilson_bound=" << (check_wilson_bound(r) ? "holds" : "violated") << '\n';
}

}  // namespace

std::optional<Format> parse_format(std::string_view s) {
  if (s == "csv") return Format::kCsv;
  if (s == "structured-records" || s == "records") return Format::kRecords;
  return std::nullopt;
}

std::optional<Law> parse_law(std::string_view s) {
  if (s == "theorem1") return Law::kTheorem1;
  if (s == "theorem2") return Law::kTheorem2;
  return std::nullopt;
}

int cmd_enumerate(std::optional<Weight> max_degree, const std::filesystem::path& out_path, unsigned threads,
                  std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto systems = enumerate_transverse({max_degree, threads});
    const auto records = compute_records(systems, threads);
    write_dataset_file(out_path, records);
    out << records.size() << " records written to " << out_path.string() << '\n';
    return kOk;
  });
}

int cmd_invariants(std::span<const Weight> raw, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ws = WeightSystem::make(raw);
    if (!is_transverse(ws)) {
      err << "error: " << ws.to_string() << " admits no transverse hypersurface\n";
      return kNotTransverse;
    }
    print_record(out, compute_record(ws), format);
    return kOk;
  });
}

int cmd_fit(const std::filesystem::path& input, Law law, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto records = read_dataset_file(input);
    try {
      if (law == Law::kTheorem1) {
        const auto res = fit_distance_law(records);
        out << "law=theorem1\n"
            << "amplitude=" << format_decimal(res.fit.amplitude) << '\n'
            << "exponent=" << format_decimal(res.fit.exponent) << '\n'
            << "decay_exponent=" << format_decimal(-res.fit.exponent) << '\n'
            << "residual=" << format_decimal(res.fit.residual) << '\n'
            << "n_points=" << res.fit.n_points << '\n'
            << "excluded_zero_distance=" << res.excluded_zero << '\n';
      } else {
        const auto fit = fit_chern_law(records);
        out << "law=theorem2\n"
            << "amplitude=" << format_decimal(fit.amplitude) << '\n'
            << "exponent=" << format_decimal(fit.exponent) << '\n'
            << "residual=" << format_decimal(fit.residual) << '\n'
            << "n_points=" << fit.n_points << '\n';
      }
    } catch (const std::invalid_argument& e) {
      err << "error: fit: " << e.what() << '\n';
      return kFitError;
    }
    return kOk;
  });
}

int cmd_figures(const std::filesystem::path& input, int which, const std::filesystem::path& out_path,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Figure fig = figure_from_int(which);
    const auto records = read_dataset_file(input);
    const auto series = figure_series(records, fig);
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open " + out_path.string() + " for writing");
    write_figure(file, series, fig);
    file.flush();
    if (!file) throw IoError("write failed: " + out_path.string());
    out << series.size() << " points written to " << out_path.string() << '\n';
    return kOk;
  });
}

int cmd_table1(const std::filesystem::path& input, Format format, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto records = read_dataset_file(input);
    const auto rows = delta_filter(records, 2);
    auto hodge = [](const WeightSystem& ws, bool first) -> std::string {
      const auto* fx = find_fixture(ws);
      if (!fx) return "-";
      return std::to_string(first ? fx->h11 : fx->h21);
    };
    if (format == Format::kCsv) {
      out << "manifold,delta,L3,hL,Lc2,euler,h11,h21\n";
      for (const auto& r : rows)
        out << manifold_name(r.ws) << ',' << r.delta << ',' << r.L3 << ',' << r.hL << ',' << r.Lc2 << ','
            << r.euler << ',' << hodge(r.ws, true) << ',' << hodge(r.ws, false) << '\n';
    } else {
      for (const auto& r : rows)
        out << "manifold=" << manifold_name(r.ws) << " delta=" << r.delta << " L3=" << r.L3 << " hL=" << r.hL
            << " Lc2=" << r.Lc2 << " euler=" << r.euler << " h11=" << hodge(r.ws, true)
            << " h21=" << hodge(r.ws, false) << '\n';
    }
    out << "# " << rows.size() << " configurations with delta <= 2\n";
    return kOk;
  });
}

int cmd_verify(std::span<const Table1Row> fixtures, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::size_t passed = 0;
    bool ok = true;
    for (const auto& row : fixtures) {
      const auto ws = WeightSystem::make(row.weights);
      const std::string name = manifold_name(ws);
      bool row_ok = true;
      auto mismatch = [&](const char* field, const auto& expected, const auto& got) {
        out << "MISMATCH " << name << " field " << field << ": expected " << expected << ", got " << got << '\n';
        row_ok = false;
      };
      if (ws.degree() != row.degree) mismatch("degree", row.degree, ws.degree());
      if (!is_transverse(ws)) {
        out << "MISMATCH " << name << " field transverse: expected true, got false\n";
        ok = false;
        continue;
      }
      const auto r = compute_record(ws);
      if (r.delta != row.delta) mismatch("delta", row.delta, r.delta);
      if (r.L3 != row.L3) mismatch("L3", row.L3, r.L3);
      if (r.hL != row.hL) mismatch("hL", row.hL, r.hL);
      if (r.Lc2 != row.Lc2) mismatch("Lc2", row.Lc2, r.Lc2);
      if (r.euler != row.euler) mismatch("euler", row.euler, r.euler);
      if (row.euler != 2 * (row.h11 - row.h21)) mismatch("euler=2(h11-h21)", 2 * (row.h11 - row.h21), row.euler);
      if (row_ok) {
        ++passed;
        out << "ok " << name << '\n';
      }
      ok = ok && row_ok;
    }
    out << passed << "/" << fixtures.size() << " rows exact\n";

    const auto quintic = compute_record(WeightSystem::make(kQuinticWeights));
    const auto closed = p4_family(5);
    const P4Invariants expected{5, 5, 50};
    const bool quintic_ok = closed == expected && quintic.L3 == closed.L3 && quintic.hL == closed.hL &&
                            quintic.Lc2 == closed.Lc2;
    out << (quintic_ok ? "ok" : "MISMATCH") << " quintic closed form (L3, hL, Lc2) = (" << quintic.L3 << ", "
        << quintic.hL << ", " << quintic.Lc2 << ")\n";
    ok = ok && quintic_ok;

    out << (ok ? "verify: pass" : "verify: FAIL") << '\n';
    return ok ? kOk : kVerifyFailed;
  });
}

int cmd_verify(std::ostream& out, std::ostream& err) { return cmd_verify(kTable1, out, err); }

}  // namespace cyscan::cli
