#include <gtest/gtest.h>

#include "dofb/verify/properties.hpp"

using namespace dofb;

TEST(PropertySuite, AllPropertiesHold) {
  int total = 0;
  for (const prop::PropertyOutcome& o : prop::run_property_suite(20261019)) {
    EXPECT_TRUE(o.passed()) << o.name << ": " << o.counterexample;
    total += o.cases;
  }
  EXPECT_GE(total, 1000);
}

TEST(PropertyHarness, ReportsFirstCounterexample) {
  const auto o = prop::check_property("odd draws", 50, 1, [](prop::Rng& rng) -> std::optional<std::string> {
    if (rng() % 2) return "odd";
    return std::nullopt;
  });
  EXPECT_EQ(o.cases, 50);
  EXPECT_GT(o.failures, 0);
  EXPECT_FALSE(o.passed());
  EXPECT_NE(o.counterexample.find("odd"), std::string::npos);
}

TEST(PropertyHarness, ExceptionsCountAsFailures) {
  const auto o = prop::check_property("throws", 3, 1, [](prop::Rng&) -> std::optional<std::string> {
    throw std::runtime_error("boom");
  });
  EXPECT_EQ(o.failures, 3);
  EXPECT_NE(o.counterexample.find("boom"), std::string::npos);
}

TEST(PropertyHarness, DeterministicPerSeed) {
  const auto draw = [](prop::Rng& rng) -> std::optional<std::string> { return std::to_string(rng()); };
  EXPECT_EQ(prop::check_property("a", 1, 9, draw).counterexample, prop::check_property("a", 1, 9, draw).counterexample);
}
