#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cyscan/invariants.hpp"

namespace cyscan {

/// y ~ amplitude * x^exponent, fitted in log-log space.
struct FitResult {
  double amplitude = 0.0;
  double exponent = 0.0;
  double residual = 0.0;  // RMS of ln y - fitted ln y
  std::size_t n_points = 0;
};

struct FitPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Ordinary least squares of ln y against ln x.  Throws std::invalid_argument
/// on non-positive coordinates, fewer than two points, or all-equal x.
FitResult fit_power_law(std::span<const FitPoint> points);

/// Distance from the asymptotic line, 2(3 h_L - 8)/L^3 - 1.
Rational distance_D(const BigInt& L3, const BigInt& hL);

/// L^3 <= 2(3 h_L - 8).
bool check_theorem1_bound(const InvariantRecord& rec);

/// Wilson's inequality L.c2 <= 10 L^3.
bool check_wilson_bound(const InvariantRecord& rec);

/// Degree predicted by the distance scaling law:
///   2(3 h_L - 8) / (1 + A h_L^(-alpha)),
/// where `decay` is alpha (a positive number for a decaying distance).
double predicted_L3(const BigInt& hL, double amplitude, double decay);

/// Same, reading A and alpha = -exponent from a distance fit.
double predicted_L3(const BigInt& hL, const FitResult& distance_fit);

struct DistanceFit {
  FitResult fit;
  std::size_t excluded_zero = 0;  // records sitting on the asymptotic line
};

/// Fit of D against h_L over records with D > 0.
DistanceFit fit_distance_law(std::span<const InvariantRecord> records);

/// Fit of L.c2 against L^3.
FitResult fit_chern_law(std::span<const InvariantRecord> records);

enum class Figure { kDegree = 1, kDistance = 2, kChern = 3, kNormalizedDegree = 4 };

/// Parses 1..4; throws std::invalid_argument otherwise.
Figure figure_from_int(int which);

struct SeriesPoint {
  Rational x;
  Rational y;
  friend bool operator==(const SeriesPoint&, const SeriesPoint&) = default;
};

/// Exact data behind a figure, in canonical record order:
///   1: (h_L, L^3)   2: (h_L, D)   3: (L^3, L.c2)   4: (h_L, L^3 / h_L)
std::vector<SeriesPoint> figure_series(std::span<const InvariantRecord> records, Figure which);

/// Records with delta <= max_delta, sorted by (delta, L^3, degree, weights).
std::vector<InvariantRecord> delta_filter(std::span<const InvariantRecord> records, const BigInt& max_delta);

enum class Field { kL3, kHL, kLc2 };

/// log10(max / min) of a positive field over the records; 0 when empty.
double magnitude_span(std::span<const InvariantRecord> records, Field field);

/// Sorts into canonical (degree, weights) order.
void sort_canonical(std::vector<InvariantRecord>& records);

double to_double(const Rational& q);
double to_double(const BigInt& n);

}  // namespace cyscan
