// Runs the full scan once and prints one PASS/FAIL line per acceptance
// criterion.  Exit status is the number of failing criteria.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "cyscan/analysis.hpp"
#include "cyscan/fixtures.hpp"
#include "properties.hpp"

using namespace cyscan;

namespace {

constexpr std::size_t kExpectedClassSize = 7555;
constexpr std::size_t kExpectedLowDelta = 11;
constexpr double kAmin = 3.5, kAmax = 6.5, kAlphaMin = 0.55, kAlphaMax = 0.85;
constexpr double kBmin = 25.0, kBmax = 50.0, kBetaMin = 0.21, kBetaMax = 0.37;
constexpr double kMinSpan = 15.0;

int failures = 0;

void report(int id, bool pass, const std::string& detail, double seconds) {
  if (!pass) ++failures;
  std::printf("criterion %d: %s  %s  [%.2fs]\n", id, pass ? "PASS" : "FAIL", detail.c_str(), seconds);
  std::fflush(stdout);
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int main() {
  const unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  {
    Stopwatch sw;
    int exact = 0;
    std::string first_bad;
    for (const auto& row : kTable1) {
      const auto r = compute_record(WeightSystem::make(row.weights));
      const bool ok = r.ws.degree() == row.degree && r.delta == row.delta && r.L3 == row.L3 && r.hL == row.hL &&
                      r.Lc2 == row.Lc2 && r.euler == row.euler;
      exact += ok;
      if (!ok && first_bad.empty()) first_bad = r.ws.to_string();
    }
    report(1, exact == 11, std::to_string(exact) + "/11 rows exact" + (first_bad.empty() ? "" : ", first mismatch " + first_bad),
           sw.seconds());
  }

  Stopwatch scan;
  const auto systems = enumerate_transverse({std::nullopt, threads});
  const double scan_seconds = scan.seconds();
  {
    const auto delta = static_cast<long long>(systems.size()) - static_cast<long long>(kExpectedClassSize);
    report(2, systems.size() == kExpectedClassSize,
           std::to_string(systems.size()) + " systems (delta " + std::to_string(delta) + ")", scan_seconds);
  }

  Stopwatch inv;
  auto records = compute_records(systems, threads);
  sort_canonical(records);
  std::printf("# invariants for %zu records in %.2fs\n", records.size(), inv.seconds());

  {
    Stopwatch sw;
    std::size_t thm1 = 0, weak = 0, positive = 0;
    for (const auto& r : records) {
      thm1 += check_theorem1_bound(r);
      weak += r.L3 < 6 * r.hL;
      positive += r.Lc2 > 0;
    }
    const auto n = records.size();
    std::ostringstream os;
    os << "theorem1 " << thm1 << "/" << n << ", L3<6hL " << weak << "/" << n << ", Lc2>0 " << positive << "/" << n;
    report(3, n > 0 && thm1 == n && weak == n && positive == n, os.str(), sw.seconds());
  }

  {
    Stopwatch sw;
    bool ok = false;
    std::ostringstream os;
    try {
      const auto d = fit_distance_law(records);
      const double alpha = -d.fit.exponent;
      ok = d.fit.amplitude >= kAmin && d.fit.amplitude <= kAmax && alpha >= kAlphaMin && alpha <= kAlphaMax;
      os << "A=" << format_decimal(d.fit.amplitude) << " alpha=" << format_decimal(alpha) << " (bands [" << kAmin
         << "," << kAmax << "], [" << kAlphaMin << "," << kAlphaMax << "]), n=" << d.fit.n_points
         << ", excluded D=0: " << d.excluded_zero;
    } catch (const std::exception& e) {
      os << "fit failed: " << e.what();
    }
    report(4, ok, os.str(), sw.seconds());
  }

  {
    Stopwatch sw;
    bool ok = false;
    std::ostringstream os;
    try {
      const auto f = fit_chern_law(records);
      ok = f.amplitude >= kBmin && f.amplitude <= kBmax && f.exponent >= kBetaMin && f.exponent <= kBetaMax;
      os << "B=" << format_decimal(f.amplitude) << " beta=" << format_decimal(f.exponent) << " (bands [" << kBmin
         << "," << kBmax << "], [" << kBetaMin << "," << kBetaMax << "]), n=" << f.n_points;
    } catch (const std::exception& e) {
      os << "fit failed: " << e.what();
    }
    report(5, ok, os.str(), sw.seconds());
  }

  {
    Stopwatch sw;
    std::size_t violators = 0, bad = 0;
    for (const auto& r : records) {
      if (check_wilson_bound(r)) continue;
      ++violators;
      if (r.delta > 2) ++bad;
    }
    const auto low = delta_filter(records, 2).size();
    std::ostringstream os;
    os << violators << " records with Lc2>10L3, " << bad << " of them with delta>2; delta<=2 subset has " << low;
    report(6, bad == 0 && low == kExpectedLowDelta, os.str(), sw.seconds());
  }

  {
    Stopwatch sw;
    const double span = magnitude_span(records, Field::kL3);
    report(7, span >= kMinSpan, "log10(max L3/min L3) = " + format_decimal(span) + " (>= 15)", sw.seconds());
  }

  {
    Stopwatch sw;
    std::vector<std::pair<const char*, std::string>> checks = {
        {"hrr", props::hrr_identity(records)},
        {"poincare", props::poincare_vs_oracle(30)},
        {"euler", props::euler_divisibility(1000, 250)},
        {"fit", props::fit_recovery()},
        {"determinism", props::enumeration_determinism(300)},
    };
    bool ok = true;
    std::string detail;
    for (const auto& [name, msg] : checks) {
      ok = ok && msg.empty();
      detail += std::string(detail.empty() ? "" : ", ") + name + (msg.empty() ? " ok" : " FAILED (" + msg + ")");
    }
    report(8, ok, detail, sw.seconds());
  }

  {
    // Ordinary P^4[d] hypersurfaces all have h_L = 5, so any scaling law
    // D = A h_L^-alpha predicts one distance for the whole family.  The
    // family instead spreads over many distances: D is not governed by h_L.
    Stopwatch sw;
    bool closed_form = true;
    std::set<Rational> distances;
    std::set<BigInt> sections;
    for (Weight d = 2; d <= 10; ++d) {
      const auto p = p4_family(d);
      closed_form = closed_form && p == P4Invariants{d, 5, d * (d * d - 5 * d + 10)};
      distances.insert(distance_D(p.L3, p.hL));
      sections.insert(p.hL);
    }
    const auto q = compute_record(WeightSystem::make(kQuinticWeights));
    const auto p5 = p4_family(5);
    const bool agrees = q.L3 == p5.L3 && q.hL == p5.hL && q.Lc2 == p5.Lc2;
    const bool off_trend = sections.size() == 1 && distances.size() == 9;
    std::ostringstream os;
    os << "closed forms " << (closed_form ? "ok" : "WRONG") << ", d=5 vs pipeline " << (agrees ? "ok" : "MISMATCH")
       << ", hL fixed at 5 while D takes " << distances.size() << " values from "
       << format_rational(*distances.rbegin()) << " to " << format_rational(*distances.begin());
    report(9, closed_form && agrees && off_trend, os.str(), sw.seconds());
  }

  std::printf("%d criteria failed\n", failures);
  return failures;
}
