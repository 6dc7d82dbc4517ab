#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cyscan {

using Weight = std::int64_t;

inline constexpr std::size_t kNumWeights = 5;

/// Largest degree attained by a transverse Calabi-Yau weight system in
/// four-dimensional weighted projective space: 3486 = 2*3*7*83, realised by
/// (41,42,498,1162,1743).  Used as the default scan horizon.
inline constexpr Weight kMaxTransverseDegree = 3486;

/// Canonical weight system: five positive weights, sorted ascending, with
/// overall gcd 1.  The degree is always the sum of the weights.
class WeightSystem {
 public:
  using Weights = std::array<Weight, kNumWeights>;

  /// Canonicalizes `raw` (sort, divide by gcd).  Throws std::invalid_argument
  /// unless it holds exactly five positive entries.
  static WeightSystem make(std::span<const Weight> raw);
  static WeightSystem make(std::initializer_list<Weight> raw);

  const Weights& weights() const noexcept { return weights_; }
  Weight weight(std::size_t i) const noexcept { return weights_[i]; }
  Weight degree() const noexcept { return degree_; }

  std::string to_string() const;

  /// Canonical order: by degree, then lexicographically by weights.
  friend std::strong_ordering operator<=>(const WeightSystem& a, const WeightSystem& b) noexcept {
    if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
    return a.weights_ <=> b.weights_;
  }
  friend bool operator==(const WeightSystem&, const WeightSystem&) noexcept = default;

 private:
  WeightSystem(const Weights& w, Weight d) : weights_(w), degree_(d) {}

  Weights weights_{};
  Weight degree_ = 0;
};

WeightSystem make_weight_system(std::span<const Weight> raw);

/// Twist of the hyperplane bundle: lcm of all pairwise gcds of the weights
/// together with every weight that does not divide the degree.
Weight hyperplane_k(const WeightSystem& ws);

/// Single-coordinate condition: every weight k_i admits n >= 1 and j with
/// n*k_i = d or n*k_i + k_j = d.
bool satisfies_pointer_condition(const WeightSystem::Weights& w, Weight degree);

/// Quasi-smoothness of a generic degree-d hypersurface.  For every nonempty
/// coordinate subset J either some J-monomial has degree d, or at least |J|
/// monomials of the form (J-monomial) * x_e of degree d exist with pairwise
/// distinct e outside J.
bool is_transverse(const WeightSystem& ws);

/// Raw-array variant; `w` need not be canonical.  Throws
/// std::invalid_argument unless the weights are positive and sum to `degree`.
bool is_transverse(const WeightSystem::Weights& w, Weight degree);

struct EnumerateOptions {
  std::optional<Weight> max_degree;  // defaults to kMaxTransverseDegree
  unsigned threads = 1;
};

/// Every canonical transverse weight system of degree <= max_degree, sorted
/// by (degree, weights).  Output does not depend on the thread count.
std::vector<WeightSystem> enumerate_transverse(const EnumerateOptions& opts = {});

/// Transverse canonical systems of exactly one degree, sorted by weights.
std::vector<WeightSystem> enumerate_transverse_degree(Weight degree);

}  // namespace cyscan
