#include <gtest/gtest.h>

#include "diagramma/error.hpp"
#include "diagramma/suites.hpp"

using namespace diagramma;

TEST(Suites, AllPassOnSmallRuns) {
  for (const auto& name : suite_names()) {
    auto r = run_suite(name, 5, 40, 2);
    EXPECT_EQ(r.count, 40U);
    EXPECT_TRUE(r.ok()) << name << ": " << (r.failures.empty() ? "" : r.failures.front());
  }
}

TEST(Suites, ThreadCountDoesNotChangeReports) {
  auto one = run_suite("pvt-oracle", 9, 60, 1);
  auto four = run_suite("pvt-oracle", 9, 60, 4);
  EXPECT_EQ(one.passed, four.passed);
  EXPECT_EQ(one.failures, four.failures);
}

TEST(Suites, UnknownName) { EXPECT_THROW(run_suite("nope", 1, 1), Error); }
