#include "cyscan/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyscan {

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("truncated series needs at least one coefficient");
}

TruncatedSeries& TruncatedSeries::divide_by_one_minus_power(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("1/(1 - t^0) is not a power series");
  for (std::size_t i = k; i < coeffs_.size(); ++i) coeffs_[i] += coeffs_[i - k];
  return *this;
}

TruncatedSeries geometric_factor(std::uint64_t k, std::size_t order) {
  if (k == 0) throw std::invalid_argument("geometric factor needs k >= 1");
  TruncatedSeries s(order);
  for (std::size_t i = 0; i <= order; i += k) s[i] = 1;
  return s;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("cannot multiply series of different orders");
  const auto n = a.order();
  const auto ca = a.coefficients();
  const auto cb = b.coefficients();
  TruncatedSeries out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (ca[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= n; ++j) out[i + j] += ca[i] * cb[j];
  }
  return out;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return multiply(a, b); }

BigInt rational_coefficient(std::span<const BigInt> numerator, std::span<const Weight> denominator_weights,
                            std::uint64_t m) {
  for (auto w : denominator_weights)
    if (w < 1) throw std::invalid_argument("denominator weights must be positive");

  if (numerator.empty()) return 0;
  const auto keep = static_cast<std::size_t>(std::min<std::uint64_t>(m, numerator.size() - 1) + 1);
  std::vector<BigInt> a(numerator.begin(), numerator.begin() + static_cast<std::ptrdiff_t>(keep));

  while (m > 0) {
    // b = a * prod(1 + t^w), truncated at t^m.
    std::size_t deg = a.size() - 1;
    for (auto w : denominator_weights) deg += static_cast<std::size_t>(w);
    deg = static_cast<std::size_t>(std::min<std::uint64_t>(deg, m));
    a.resize(deg + 1);
    for (auto w : denominator_weights) {
      const auto step = static_cast<std::size_t>(w);
      for (std::size_t i = deg; i >= step; --i) a[i] += a[i - step];
    }
    const auto parity = static_cast<std::size_t>(m & 1u);
    std::size_t j = 0;
    for (std::size_t i = parity; i <= deg; i += 2) a[j++] = std::move(a[i]);
    a.resize(std::max<std::size_t>(j, 1));
    if (j == 0) a[0] = 0;
    m >>= 1;
  }
  return a[0];
}

BigInt poincare_coefficient(const WeightSystem& ws, std::uint64_t m) {
  const auto d = static_cast<std::size_t>(ws.degree());
  std::vector<BigInt> numerator(d + 1);
  numerator[0] = 1;
  numerator[d] = -1;
  return rational_coefficient(numerator, ws.weights(), m);
}

BigInt poincare_coefficient_by_series(const WeightSystem& ws, std::uint64_t m) {
  const auto order = static_cast<std::size_t>(m);
  TruncatedSeries s(order);
  s[0] = 1;
  if (static_cast<std::uint64_t>(ws.degree()) <= m) s[static_cast<std::size_t>(ws.degree())] = -1;
  for (auto w : ws.weights()) s.divide_by_one_minus_power(static_cast<std::uint64_t>(w));
  return s[order];
}

}  // namespace cyscan
