#pragma once

// Planar integral point sets containing distance 1 (a facher family built from
// Fermat-number factorizations), trimming, dilation, and the simplex blow-up to
// higher dimensions that yields prime sets with a prescribed distance.

#include <cstdint>
#include <optional>
#include <vector>

#include "ips/dmatrix.hpp"
#include "ips/geometry.hpp"

namespace ips {

/// One subset J of {1, ..., k-1}: c_J = prod d_j, b_J = (c_J - a/c_J)/2,
/// g_J = (c_J + a/c_J)/2.
struct SubsetParams {
  std::uint32_t mask = 0;   // bit j-1 set iff j in J
  std::vector<int> members;
  Integer c;
  Integer b;
  Integer g;
};

struct ConstructionParams {
  int k = 0;
  Integer a;                  // 2^(2^k) - 1
  std::vector<Integer> d;     // d_j = 2^(2^j) + 1, j = 1..k-1
  std::vector<SubsetParams> subsets;  // ordered by mask
  std::size_t unit_subset = 0;        // index of H = {k-1}; b_H = 1

  static ConstructionParams make(int k);
};

enum class RoleKind { LinePlus, LineMinus, Apex };

/// Which construction point a coordinate came from: M_{J+}, M_{J-} or N.
struct PointRole {
  RoleKind kind;
  std::uint32_t mask = 0;

  friend bool operator==(const PointRole&, const PointRole&) = default;
};

struct Construction {
  ConstructionParams params;
  PlanarPointSet set;
  std::vector<PointRole> roles;  // parallel to set.points()
  Integer dilation = 1;

  std::size_t apex_index() const;
};

/// The 2^k + 1 point set {M_{J+-} = (+-b_J/2, 0)} plus N = (0, sqrt(a)/2).
/// k = 1 gives the unit equilateral triangle.
Construction construction1(int k, unsigned long trial_limit = kDefaultTrialLimit);

/// Keeps target_n points: drops M_{J+-} pairs by descending |b_J| and, when a
/// single point has to go, the one with positive x. M_{H+-} and N always stay.
Construction trim(const Construction& c, std::size_t target_n);

PlanarPointSet dilate(const PlanarPointSet& s, const Integer& p);
DistanceMatrix dilate(const DistanceMatrix& dm, const Integer& p);
Construction dilate(const Construction& c, const Integer& p);

/// Squared circumradius s^2 (m-2) / (2(m-1)) of the regular simplex with m-1
/// vertices and side s.
Rational simplex_circumradius_squared(int target_dim, const Integer& side);

/// Strict inequality: equality would put the simplex through the apex foot
/// and lose a dimension.
bool circumradius_condition_holds(int target_dim, const Integer& side,
                                  const Rational& apex_height_squared);

struct BlowupPlan {
  PlanarPointSet base;  // facher: all points but `apex` on one line
  std::size_t apex = 0;
  int target_dim = 3;
  Integer simplex_side = 1;
  Rational apex_height_squared;
};

BlowupPlan make_blowup_plan(const PlanarPointSet& base, int target_dim,
                            const Integer& simplex_side,
                            std::optional<std::size_t> apex = std::nullopt);

/// Replaces the apex by m-1 points forming a regular simplex of the given side
/// at the apex's distance from the line. The line points come first in the
/// output; the dimension is certified with realizable_dim.
DistanceMatrix blowup(const BlowupPlan& plan);

struct PrimeSetResult {
  DistanceMatrix matrix;
  int k = 0;
  std::vector<PointRole> kept;  // planar points kept before the blow-up
  Integer dilation;
  int target_dim = 0;
  Integer simplex_side;
  bool min_distance_unique = false;  // d is the minimum and occurs once
};

/// Prime integral set of n points in dimension m containing distance d. The
/// smallest admissible k is used (k >= 2 when unique_min is requested).
PrimeSetResult prime_set(int m, int n, long d, bool unique_min);

}  // namespace ips
