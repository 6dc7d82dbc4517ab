#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <vector>

#include "cyscan/weights.hpp"

namespace cyscan {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Power series c_0 + c_1 t + ... + c_N t^N with exact integer coefficients;
/// every term above t^N is discarded.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit TruncatedSeries(std::vector<BigInt> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const BigInt> coefficients() const noexcept { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_.at(i); }
  BigInt& operator[](std::size_t i) { return coeffs_.at(i); }

  /// In-place multiplication by 1/(1 - t^k), a strided prefix sum.
  TruncatedSeries& divide_by_one_minus_power(std::uint64_t k);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

/// Series of 1/(1 - t^k) to order N: c_i = 1 iff k divides i.
TruncatedSeries geometric_factor(std::uint64_t k, std::size_t order);

/// Cauchy product.  Throws std::invalid_argument on mismatched orders.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/// [t^m] numerator(t) / prod_i (1 - t^{w_i}), for a polynomial numerator.
///
/// Uses Q(t) * prod(1 + t^{w_i}) = Q(t^2): multiplying through and keeping the
/// half of the coefficients with the parity of m halves the target index
/// while the denominator keeps its shape.  Cost is O(deg * log m) big-integer
/// additions, independent of the size of m.
BigInt rational_coefficient(std::span<const BigInt> numerator, std::span<const Weight> denominator_weights,
                            std::uint64_t m);

/// Coefficient of t^m in (1 - t^d) / prod_i (1 - t^{k_i}).
BigInt poincare_coefficient(const WeightSystem& ws, std::uint64_t m);

/// Same coefficient via an explicit truncated series of order m.  Linear in
/// m; only practical for moderate m.
BigInt poincare_coefficient_by_series(const WeightSystem& ws, std::uint64_t m);

}  // namespace cyscan
