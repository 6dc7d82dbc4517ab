#pragma once

#include <array>

#include "cyscan/weights.hpp"

namespace cyscan {

/// One published row of the Delta <= 2 classification.  h11 and h21 are
/// reference data only; nothing in the library computes them.
struct Table1Row {
  std::array<Weight, kNumWeights> weights;
  Weight degree;
  Weight delta;
  Weight L3;
  Weight hL;
  Weight Lc2;
  Weight euler;
  Weight h11;
  Weight h21;
};

// clang-format off
inline constexpr std::array<Table1Row, 11> kTable1 = {{
    {{1, 1, 1, 2, 5},   10, 1, 1, 3,  34,  -288, 1, 145},
    {{1, 2, 2, 2, 7},   14, 1, 2, 4,  44,  -240, 2, 122},
    {{1, 1, 1, 1, 4},    8, 1, 2, 4,  44,  -296, 1, 149},
    {{1, 2, 2, 3, 4},   12, 2, 2, 3,  32,  -144, 2,  74},
    {{1, 3, 3, 3, 5},   15, 2, 3, 4,  42,  -144, 3,  75},
    {{1, 2, 3, 3, 9},   18, 2, 3, 4,  42,  -192, 3,  99},
    {{1, 1, 1, 1, 2},    6, 2, 3, 4,  42,  -204, 1, 103},
    {{1, 1, 2, 2, 6},   12, 2, 4, 5,  52,  -252, 2, 128},
    {{1, 2, 3, 12, 18}, 36, 2, 6, 7,  72,  -360, 5, 185},
    {{1, 1, 2, 8, 12},  24, 2, 8, 9,  92,  -480, 3, 243},
    {{1, 1, 1, 6, 9},   18, 2, 9, 10, 102, -540, 2, 272},
}};
// clang-format on

/// Quintic threefold in P^4: L^3 = 5, h_L = 5, L.c2 = 50.
inline constexpr std::array<Weight, kNumWeights> kQuinticWeights = {1, 1, 1, 1, 1};

}  // namespace cyscan
