#include "weakorder/check.hpp"

#include <gtest/gtest.h>

using namespace weakorder;

TEST(Check, DefaultSuitesPass) {
  CheckOptions opts;
  opts.iters = 15;
  opts.rays = 300;
  for (const auto& r : run_all_checks(opts)) {
    EXPECT_FALSE(r.skipped) << r.name;
    EXPECT_TRUE(r.passed) << r.name << ": " << r.witness;
    EXPECT_GT(r.cases, 0u) << r.name;
  }
}

TEST(Check, ZeroItersSkipsEverything) {
  CheckOptions opts;
  opts.iters = 0;
  auto results = run_all_checks(opts);
  EXPECT_EQ(results.size(), 11u);
  for (const auto& r : results) {
    EXPECT_TRUE(r.skipped) << r.name;
    EXPECT_TRUE(r.passed) << r.name;
  }
}

TEST(Check, BrokenJoinIsCaughtWithWitness) {
  CheckOptions opts;
  opts.iters = 10;
  opts.rays = 200;
  opts.join = [](const LatticeElement& x, const LatticeElement& y) {
    return is_bottom(x) ? y : x;
  };
  auto r = check_lattice_axioms(opts);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.witness.find("\"frame\""), std::string::npos) << r.witness;
  EXPECT_FALSE(check_upper_bound(opts).passed);
  EXPECT_FALSE(check_oracle_equivalence(opts).passed);
}

TEST(Check, SameSeedSameOutcome) {
  CheckOptions opts;
  opts.iters = 5;
  opts.rays = 50;
  auto a = run_all_checks(opts);
  auto b = run_all_checks(opts);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].cases, b[i].cases);
}

TEST(Check, FalsifierNeverContradictsLeq) {
  CheckOptions opts;
  opts.iters = 20;
  opts.rays = 10000;
  auto r = check_falsifier_consistency(opts);
  EXPECT_TRUE(r.passed) << r.witness;
}
