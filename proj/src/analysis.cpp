#include "cyscan/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cyscan {

double to_double(const Rational& q) { return q.convert_to<double>(); }
double to_double(const BigInt& n) { return n.convert_to<double>(); }

FitResult fit_power_law(std::span<const FitPoint> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < 2) throw std::invalid_argument("power-law fit needs at least two points");

  Eigen::MatrixXd design(n, 2);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& p = points[static_cast<std::size_t>(i)];
    if (!(p.x > 0.0) || !(p.y > 0.0)) throw std::invalid_argument("power-law fit needs positive coordinates");
    design(i, 0) = 1.0;
    design(i, 1) = std::log(p.x);
    rhs(i) = std::log(p.y);
  }
  const auto& lx = design.col(1);
  if ((lx.array() == lx(0)).all()) throw std::invalid_argument("power-law fit needs two distinct x values");

  const Eigen::Vector2d coef = design.colPivHouseholderQr().solve(rhs);
  const Eigen::VectorXd resid = rhs - design * coef;

  FitResult out;
  out.amplitude = std::exp(coef(0));
  out.exponent = coef(1);
  out.residual = std::sqrt(resid.squaredNorm() / static_cast<double>(n));
  out.n_points = points.size();
  return out;
}

Rational distance_D(const BigInt& L3, const BigInt& hL) { return Rational(2 * (3 * hL - 8), L3) - 1; }

bool check_theorem1_bound(const InvariantRecord& rec) { return rec.L3 <= 2 * (3 * rec.hL - 8); }

bool check_wilson_bound(const InvariantRecord& rec) { return rec.Lc2 <= 10 * rec.L3; }

double predicted_L3(const BigInt& hL, double amplitude, double decay) {
  const double h = to_double(hL);
  const double asymptote = to_double(BigInt(2 * (3 * hL - 8)));
  return asymptote / (1.0 + amplitude * std::pow(h, -decay));
}

double predicted_L3(const BigInt& hL, const FitResult& distance_fit) {
  return predicted_L3(hL, distance_fit.amplitude, -distance_fit.exponent);
}

DistanceFit fit_distance_law(std::span<const InvariantRecord> records) {
  DistanceFit out;
  std::vector<FitPoint> pts;
  pts.reserve(records.size());
  for (const auto& r : records) {
    const Rational dist = distance_D(r.L3, r.hL);
    if (dist.is_zero()) {
      ++out.excluded_zero;
      continue;
    }
    pts.push_back({to_double(r.hL), to_double(dist)});
  }
  out.fit = fit_power_law(pts);
  return out;
}

FitResult fit_chern_law(std::span<const InvariantRecord> records) {
  std::vector<FitPoint> pts;
  pts.reserve(records.size());
  for (const auto& r : records) pts.push_back({to_double(r.L3), to_double(r.Lc2)});
  return fit_power_law(pts);
}

Figure figure_from_int(int which) {
  if (which < 1 || which > 4) throw std::invalid_argument("figure selector must be 1, 2, 3 or 4");
  return static_cast<Figure>(which);
}

std::vector<SeriesPoint> figure_series(std::span<const InvariantRecord> records, Figure which) {
  std::vector<const InvariantRecord*> order;
  order.reserve(records.size());
  for (const auto& r : records) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->ws < b->ws; });

  std::vector<SeriesPoint> out;
  out.reserve(order.size());
  for (const auto* r : order) {
    switch (which) {
      case Figure::kDegree:
        out.push_back({r->hL, r->L3});
        break;
      case Figure::kDistance:
        out.push_back({r->hL, distance_D(r->L3, r->hL)});
        break;
      case Figure::kChern:
        out.push_back({r->L3, r->Lc2});
        break;
      case Figure::kNormalizedDegree:
        out.push_back({r->hL, Rational(r->L3, r->hL)});
        break;
      default:
        throw std::invalid_argument("unknown figure");
    }
  }
  return out;
}

std::vector<InvariantRecord> delta_filter(std::span<const InvariantRecord> records, const BigInt& max_delta) {
  std::vector<InvariantRecord> out;
  for (const auto& r : records)
    if (r.delta <= max_delta) out.push_back(r);
  std::sort(out.begin(), out.end(), [](const InvariantRecord& a, const InvariantRecord& b) {
    if (a.delta != b.delta) return a.delta < b.delta;
    if (a.L3 != b.L3) return a.L3 < b.L3;
    return a.ws < b.ws;
  });
  return out;
}

double magnitude_span(std::span<const InvariantRecord> records, Field field) {
  if (records.empty()) return 0.0;
  auto value = [field](const InvariantRecord& r) -> const BigInt& {
    switch (field) {
      case Field::kL3:
        return r.L3;
      case Field::kHL:
        return r.hL;
      case Field::kLc2:
        return r.Lc2;
    }
    throw std::invalid_argument("unknown field");
  };
  const BigInt* lo = &value(records.front());
  const BigInt* hi = lo;
  for (const auto& r : records) {
    const BigInt& v = value(r);
    if (v <= 0) throw std::invalid_argument("magnitude span needs positive values");
    if (v < *lo) lo = &v;
    if (v > *hi) hi = &v;
  }
  return std::log10(to_double(*hi)) - std::log10(to_double(*lo));
}

void sort_canonical(std::vector<InvariantRecord>& records) {
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.ws < b.ws; });
}

}  // namespace cyscan
