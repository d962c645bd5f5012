#pragma once

// Max-min packing of k points in the unit square, used as an empirical check
// of the packing bounds. Floating point is acceptable here.

#include <cstdint>

#include <Eigen/Core>

namespace ips {

struct Packing {
  int k = 0;
  Eigen::Matrix2Xd coordinates;  // column i is point i
  double min_pairwise = 0.0;
};

struct PackingOptions {
  std::uint64_t seed = 1;
  int restarts = 16;
  int iterations = 3000;
  unsigned jobs = 1;  // worker threads; never changes the result
};

/// Best packing over independent restarts: repulsion-energy descent with a
/// growing exponent, then a local search that moves the most constrained point
/// within a shrinking radius. Deterministic for fixed options.
Packing pps_solve(int k, const PackingOptions& options = {});
Packing pps_solve(int k, std::uint64_t seed, int restarts, int iterations);

struct PackingValidation {
  bool in_square = false;  // every coordinate within [0, 1] up to 1e-9
  double min_pairwise = 0.0;
};

PackingValidation pps_validate(const Eigen::Matrix2Xd& coordinates);
inline PackingValidation pps_validate(const Packing& p) { return pps_validate(p.coordinates); }

}  // namespace ips
