#include "cyscan/weights.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cyscan {

WeightSystem WeightSystem::make(std::span<const Weight> raw) {
  if (raw.size() != kNumWeights) {
    throw std::invalid_argument("weight system needs exactly 5 weights, got " +
                                std::to_string(raw.size()));
  }
  Weights w{};
  Weight g = 0;
  for (std::size_t i = 0; i < kNumWeights; ++i) {
    if (raw[i] < 1) throw std::invalid_argument("weights must be positive integers");
    w[i] = raw[i];
    g = std::gcd(g, raw[i]);
  }
  std::sort(w.begin(), w.end());
  Weight d = 0;
  for (auto& x : w) {
    x /= g;
    d += x;
  }
  return WeightSystem(w, d);
}

WeightSystem WeightSystem::make(std::initializer_list<Weight> raw) {
  return make(std::span<const Weight>(raw.begin(), raw.size()));
}

WeightSystem make_weight_system(std::span<const Weight> raw) { return WeightSystem::make(raw); }

std::string WeightSystem::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < kNumWeights; ++i) os << (i ? "," : "") << weights_[i];
  os << ")[" << degree_ << "]";
  return os.str();
}

Weight hyperplane_k(const WeightSystem& ws) {
  const auto& w = ws.weights();
  const Weight d = ws.degree();
  Weight k = 1;
  for (std::size_t i = 0; i < kNumWeights; ++i) {
    for (std::size_t j = i + 1; j < kNumWeights; ++j) k = std::lcm(k, std::gcd(w[i], w[j]));
    if (d % w[i] != 0) k = std::lcm(k, w[i]);
  }
  return k;
}

bool satisfies_pointer_condition(const WeightSystem::Weights& w, Weight degree) {
  for (std::size_t i = 0; i < kNumWeights; ++i) {
    if (degree % w[i] == 0) continue;
    bool ok = false;
    for (std::size_t j = 0; j < kNumWeights && !ok; ++j)
      ok = j != i && w[j] < degree && (degree - w[j]) % w[i] == 0;
    if (!ok) return false;
  }
  return true;
}

bool is_transverse(const WeightSystem::Weights& w, Weight degree) {
  Weight sum = 0;
  for (auto x : w) {
    if (x < 1) throw std::invalid_argument("weights must be positive integers");
    sum += x;
  }
  if (sum != degree) throw std::invalid_argument("degree must equal the sum of the weights");
  constexpr unsigned kFull = (1u << kNumWeights) - 1;
  const auto n = static_cast<std::size_t>(degree) + 1;
  // reach[mask][m]: some monomial in the variables of `mask` has degree m.
  // Built by adding one variable at a time to a smaller subset.
  std::array<std::vector<char>, kFull + 1> reach;
  reach[0].assign(n, 0);
  reach[0][0] = 1;
  for (unsigned mask = 1; mask <= kFull; ++mask) {
    const unsigned top = 31u - static_cast<unsigned>(__builtin_clz(mask));
    auto& cur = reach[mask];
    cur = reach[mask & ~(1u << top)];
    const auto step = static_cast<std::size_t>(w[top]);
    for (std::size_t m = step; m < n; ++m) cur[m] |= cur[m - step];

    if (cur[n - 1]) continue;
    const int need = __builtin_popcount(mask);
    int found = 0;
    for (std::size_t e = 0; e < kNumWeights; ++e) {
      if (mask & (1u << e)) continue;
      if (w[e] < degree && cur[static_cast<std::size_t>(degree - w[e])]) ++found;
    }
    if (found < need) return false;
  }
  return true;
}

bool is_transverse(const WeightSystem& ws) { return is_transverse(ws.weights(), ws.degree()); }

namespace {

// Depth-first search over sorted weight tuples of a fixed degree, largest
// weight first.  A placed weight w that does not yet satisfy the pointer
// condition can only be rescued by a later (smaller) weight equal to d mod w;
// those values are tracked as demands, and there must be a free slot for each.
class DegreeSearch {
 public:
  explicit DegreeSearch(Weight degree) : d_(degree) {}

  std::vector<WeightSystem> run() {
    if (d_ >= static_cast<Weight>(kNumWeights)) place(kNumWeights - 1, d_, d_);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  // Fills slots [0, slot]; slots above `slot` hold weights in descending
  // order. `remaining` is the sum still to distribute, `upper` the cap.
  void place(std::size_t slot, Weight remaining, Weight upper) {
    const auto open = static_cast<Weight>(slot + 1);

    std::array<Weight, kNumWeights> demands{};
    std::size_t num_demands = 0;
    Weight demand_sum = 0;
    for (std::size_t i = slot + 1; i < kNumWeights; ++i) {
      const Weight w = chosen_[i];
      if (d_ % w == 0) continue;
      bool ok = false;
      for (std::size_t j = slot + 1; j < kNumWeights && !ok; ++j)
        ok = j != i && (d_ - chosen_[j]) % w == 0;
      if (ok) continue;
      const Weight r = d_ % w;
      if (r > upper) return;
      if (std::find(demands.begin(), demands.begin() + num_demands, r) ==
          demands.begin() + num_demands) {
        demands[num_demands++] = r;
        demand_sum += r;
      }
    }
    const auto m = static_cast<Weight>(num_demands);
    if (m > open || demand_sum > remaining || remaining - demand_sum < open - m) return;

    const Weight hi = std::min(upper, remaining - (open - 1));
    const Weight lo = (remaining + open - 1) / open;
    if (lo > hi) return;

    auto visit = [&](Weight v) {
      chosen_[slot] = v;
      if (slot == 0) {
        leaf();
      } else {
        place(slot - 1, remaining - v, v);
      }
    };

    if (slot == 0) {
      if (remaining <= upper) visit(remaining);
      return;
    }
    if (m + 2 <= open) {
      for (Weight v = hi; v >= lo; --v) visit(v);
      return;
    }
    // m == open - 1: either v fills a demand, or every later slot is a demand
    // and v is forced by the sum.  m == open: v must fill a demand.
    std::array<Weight, kNumWeights + 1> cand{};
    std::size_t nc = 0;
    for (std::size_t i = 0; i < num_demands; ++i) cand[nc++] = demands[i];
    if (m + 1 == open) cand[nc++] = remaining - demand_sum;
    std::sort(cand.begin(), cand.begin() + nc, std::greater<>());
    auto last = std::unique(cand.begin(), cand.begin() + nc);
    for (auto it = cand.begin(); it != last; ++it)
      if (*it >= lo && *it <= hi) visit(*it);
  }

  void leaf() {
    WeightSystem::Weights w{};
    Weight g = 0;
    for (std::size_t i = 0; i < kNumWeights; ++i) {
      w[i] = chosen_[i];
      g = std::gcd(g, w[i]);
    }
    if (g != 1) return;
    if (!satisfies_pointer_condition(w, d_)) return;
    if (!is_transverse(w, d_)) return;
    found_.push_back(WeightSystem::make(w));
  }

  Weight d_;
  std::array<Weight, kNumWeights> chosen_{};
  std::vector<WeightSystem> found_;
};

}  // namespace

std::vector<WeightSystem> enumerate_transverse_degree(Weight degree) {
  return DegreeSearch(degree).run();
}

std::vector<WeightSystem> enumerate_transverse(const EnumerateOptions& opts) {
  const Weight max_degree = opts.max_degree.value_or(kMaxTransverseDegree);
  const unsigned threads = std::max(1u, opts.threads);
  if (max_degree < static_cast<Weight>(kNumWeights)) return {};

  std::vector<std::vector<WeightSystem>> per_degree(static_cast<std::size_t>(max_degree) + 1);
  // Largest degrees first: they dominate the cost.
  std::atomic<Weight> next{max_degree};
  auto worker = [&] {
    for (Weight d = next--; d >= static_cast<Weight>(kNumWeights); d = next--)
      per_degree[static_cast<std::size_t>(d)] = enumerate_transverse_degree(d);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  std::vector<WeightSystem> out;
  for (auto& v : per_degree) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace cyscan
