#include "hjoints/acceptance.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <iostream>

using namespace hjoints;

namespace {

std::uint64_t suite_seed() {
  const char* env = std::getenv("HJOINTS_SEED");
  return env ? std::strtoull(env, nullptr, 10) : 0;
}

class Criterion : public ::testing::TestWithParam<int> {};

}  // namespace

TEST_P(Criterion, Holds) {
  AcceptanceOptions o;
  o.seed = suite_seed();
  auto r = run_criterion(GetParam(), o);
  std::cout << criterion_line(r) << std::endl;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Fail || r.status != CheckStatus::Pass)
      std::cout << "    " << to_string(c.status) << "  " << c.name << "  slack=" << c.slack << "  " << c.detail
                << std::endl;
  }
  EXPECT_NE(r.status, CheckStatus::Fail);
  EXPECT_FALSE(r.checks.empty());
}

INSTANTIATE_TEST_SUITE_P(All, Criterion, ::testing::Range(1, kCriterionCount + 1),
                         [](const ::testing::TestParamInfo<int>& info) { return "c" + std::to_string(info.param); });
