#pragma once

#include <stdexcept>
#include <span>
#include <string>
#include <vector>

#include "cyscan/series.hpp"
#include "cyscan/weights.hpp"

namespace cyscan {

/// Raised when a quantity that must be an integer comes out fractional.
class IntegralityError : public std::runtime_error {
 public:
  IntegralityError(const std::string& what, const WeightSystem& ws)
      : std::runtime_error(what + " is not integral for " + ws.to_string()), ws_(ws) {}
  const WeightSystem& weight_system() const noexcept { return ws_; }

 private:
  WeightSystem ws_;
};

/// Every invariant of the hyperplane bundle L on one hypersurface.
struct InvariantRecord {
  WeightSystem ws;
  Weight k = 0;    // twist O(k)
  BigInt L3{};     // degree, equal to the Yukawa coupling kappa_L
  BigInt hL{};     // global sections
  BigInt Lc2{};    // pairing with the second Chern class
  BigInt delta{};  // Fujita index
  BigInt euler{};  // Euler characteristic of the resolved hypersurface

  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

/// (sum k_i / prod k_i) * k^3, exactly.  Throws IntegralityError.
BigInt degree_L3(const WeightSystem& ws);

/// [t^k] (1 - t^d) / prod (1 - t^{k_i}) with k = hyperplane_k(ws).
BigInt global_sections_hL(const WeightSystem& ws);

/// Riemann-Roch on a Calabi-Yau threefold: L.c2 = 12 h_L - 2 L^3.
BigInt chern2_pairing(const BigInt& L3, const BigInt& hL);

/// 3 + L^3 - h_L.
BigInt fujita_delta(const BigInt& L3, const BigInt& hL);

/// Large-volume limit of the generalized index, L.c2 / 24.
Rational index_limit(const BigInt& Lc2);

/// Orbifold Euler number
///   chi = (1/d) sum_{l,r=0}^{d-1} prod_{i in C(l) & C(r)} (1 - d/k_i),
/// with C(l) = { i : d | l k_i }.  Throws IntegralityError if d does not
/// divide the double sum.
BigInt euler_orbifold(const WeightSystem& ws);

/// Closed forms for degree-d hypersurfaces in ordinary P^4.
struct P4Invariants {
  BigInt L3{};
  BigInt hL{};
  BigInt Lc2{};
  friend bool operator==(const P4Invariants&, const P4Invariants&) = default;
};
P4Invariants p4_family(Weight d);

/// Exponent L.c2 / b of the effective GUT scale, b = 54 + 3 (h11 + h21).
Rational gut_scale_exponent(const BigInt& Lc2, Weight h11, Weight h21);

InvariantRecord compute_record(const WeightSystem& ws);

/// compute_record over a list; output order matches input order for any
/// thread count.
std::vector<InvariantRecord> compute_records(std::span<const WeightSystem> systems, unsigned threads = 1);

}  // namespace cyscan
