#include <gtest/gtest.h>

#include "properties.hpp"

using namespace cyscan;

TEST(Property, HrrIdentityOnComputedRecords) {
  const auto records = compute_records(enumerate_transverse({200, 4}), 4);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(props::hrr_identity(records), "");
}

TEST(Property, PoincareMatchesMonomialCount) { EXPECT_EQ(props::poincare_vs_oracle(30), ""); }

TEST(Property, EulerDoubleSumDivisibleByDegree) { EXPECT_EQ(props::euler_divisibility(1000, 250), ""); }

TEST(Property, FitRecoversExactPowerLaw) { EXPECT_EQ(props::fit_recovery(), ""); }

TEST(Property, EnumerationDeterministic) { EXPECT_EQ(props::enumeration_determinism(300), ""); }

TEST(Property, DistanceNonNegativeAndZeroOnBoundary) {
  for (const auto& r : compute_records(enumerate_transverse({200, 4}), 4)) {
    const auto D = distance_D(r.L3, r.hL);
    EXPECT_GE(D, 0) << r.ws.to_string();
    EXPECT_EQ(D == 0, r.L3 == 2 * (3 * r.hL - 8)) << r.ws.to_string();
    EXPECT_TRUE(check_theorem1_bound(r)) << r.ws.to_string();
    if (!check_wilson_bound(r)) EXPECT_LE(r.delta, 2) << r.ws.to_string();
  }
}
