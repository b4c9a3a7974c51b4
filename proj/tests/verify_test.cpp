#include <gtest/gtest.h>

#include "gentaut/errors.hpp"
#include "gentaut/verify.hpp"

using namespace gentaut;

TEST(Verify, AllFamiliesPassAtDefaultDegree) {
  const auto results = run_verification(6);
  const std::vector<std::string> names{"cosets",  "characters", "rectangular",
                                       "rank",    "generating", "regular"};
  ASSERT_EQ(results.size(), names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    EXPECT_EQ(results[i].name, names[i]);
    EXPECT_TRUE(results[i].passed) << results[i].name << ": " << results[i].detail;
    EXPECT_GT(results[i].cases, 0u);
  }
  EXPECT_TRUE(all_passed(results));
}

TEST(Verify, Bounds) {
  EXPECT_THROW(run_verification(0), SizeError);
  EXPECT_THROW(run_verification(8), SizeError);
  EXPECT_TRUE(all_passed(run_verification(1)));
}
