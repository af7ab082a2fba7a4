#pragma once

// Seeded property suites over the exact backend. Each suite runs `iters`
// cases per dimension, stops at the first failure and records a witness
// (serialized elements and/or a ray) that reproduces it.

#include "weakorder/lattice.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace weakorder {

using JoinFn = std::function<LatticeElement(const LatticeElement&, const LatticeElement&)>;

struct CheckOptions {
  std::size_t min_dim = 2;
  std::size_t max_dim = 5;
  /// Cases per dimension; 0 skips every suite.
  std::size_t iters = 100;
  std::uint64_t seed = 1;
  /// Membership samples per case for the sampling-based suites.
  std::size_t rays = 1000;
  std::int64_t bound = 20;
  /// Coordinate bound of the exhaustive planar family in the arc suite.
  std::int64_t arc_bound = 4;
  /// Join under test; empty means the library join. meet, leq and join_all
  /// inside the suites are derived from it.
  JoinFn join;
};

struct SuiteResult {
  std::string name;
  bool skipped = false;
  bool passed = true;
  std::size_t cases = 0;
  std::string witness;
  double seconds = 0;
};

SuiteResult check_oracle_equivalence(const CheckOptions& opts);
SuiteResult check_cone_properties(const CheckOptions& opts);
SuiteResult check_lattice_axioms(const CheckOptions& opts);
SuiteResult check_duality(const CheckOptions& opts);
SuiteResult check_upper_bound(const CheckOptions& opts);
SuiteResult check_minimality(const CheckOptions& opts);
SuiteResult check_jtp(const CheckOptions& opts);
SuiteResult check_bottom_uniqueness(const CheckOptions& opts);
SuiteResult check_projection(const CheckOptions& opts);
SuiteResult check_canonicalization(const CheckOptions& opts);
SuiteResult check_falsifier_consistency(const CheckOptions& opts);

std::vector<SuiteResult> run_all_checks(const CheckOptions& opts);

/// Planar elements whose cone's last vector has coordinates in
/// [-bound, bound], with both orientations of the first vector.
std::vector<LatticeElement> planar_family(std::int64_t bound);

}  // namespace weakorder
