#include "cyscan/invariants.hpp"

#include <array>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace cyscan {

BigInt degree_L3(const WeightSystem& ws) {
  BigInt num = ws.degree();
  BigInt k = hyperplane_k(ws);
  num *= k * k * k;
  BigInt den = 1;
  for (auto w : ws.weights()) den *= w;
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (!r.is_zero()) throw IntegralityError("degree L^3", ws);
  return q;
}

BigInt global_sections_hL(const WeightSystem& ws) {
  return poincare_coefficient(ws, static_cast<std::uint64_t>(hyperplane_k(ws)));
}

BigInt chern2_pairing(const BigInt& L3, const BigInt& hL) { return 12 * hL - 2 * L3; }

BigInt fujita_delta(const BigInt& L3, const BigInt& hL) { return 3 + L3 - hL; }

Rational index_limit(const BigInt& Lc2) { return Rational(Lc2, 24); }

BigInt euler_orbifold(const WeightSystem& ws) {
  constexpr unsigned kMasks = 1u << kNumWeights;
  const auto& w = ws.weights();
  const Weight d = ws.degree();

  // The summand depends on l and r only through C(l) and C(r).
  std::array<BigInt, kMasks> sectors{};
  for (Weight l = 0; l < d; ++l) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < kNumWeights; ++i)
      if ((l * w[i]) % d == 0) mask |= 1u << i;
    ++sectors[mask];
  }

  std::array<Rational, kMasks> product{};
  for (unsigned mask = 0; mask < kMasks; ++mask) {
    product[mask] = 1;
    for (std::size_t i = 0; i < kNumWeights; ++i)
      if (mask & (1u << i)) product[mask] *= Rational(w[i] - d, w[i]);
  }

  Rational sum = 0;
  for (unsigned a = 0; a < kMasks; ++a) {
    if (sectors[a].is_zero()) continue;
    for (unsigned b = 0; b < kMasks; ++b) {
      if (sectors[b].is_zero()) continue;
      sum += Rational(sectors[a] * sectors[b]) * product[a & b];
    }
  }
  sum /= d;
  if (boost::multiprecision::denominator(sum) != 1) throw IntegralityError("orbifold Euler number", ws);
  return boost::multiprecision::numerator(sum);
}

P4Invariants p4_family(Weight d) {
  const BigInt deg = d;
  return {deg, 5, deg * (deg * deg - 5 * deg + 10)};
}

Rational gut_scale_exponent(const BigInt& Lc2, Weight h11, Weight h21) {
  return Rational(Lc2, BigInt(54 + 3 * (h11 + h21)));
}

InvariantRecord compute_record(const WeightSystem& ws) {
  InvariantRecord rec{ws};
  rec.k = hyperplane_k(ws);
  rec.L3 = degree_L3(ws);
  rec.hL = global_sections_hL(ws);
  rec.Lc2 = chern2_pairing(rec.L3, rec.hL);
  rec.delta = fujita_delta(rec.L3, rec.hL);
  rec.euler = euler_orbifold(ws);
  return rec;
}

std::vector<InvariantRecord> compute_records(std::span<const WeightSystem> systems, unsigned threads) {
  std::vector<InvariantRecord> out(systems.size(), InvariantRecord{WeightSystem::make({1, 1, 1, 1, 1})});
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < systems.size(); i = next++) {
      try {
        out[i] = compute_record(systems[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = systems.size();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace cyscan
