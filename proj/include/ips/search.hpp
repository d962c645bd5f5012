#pragma once

// Exhaustive desk-scale oracles: minimum diameters of planar integral point
// sets, four-point sets with a unit distance, the structure of unit-distance
// sets, and bounded checks for extension points.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ips/dmatrix.hpp"
#include "ips/geometry.hpp"

namespace ips {

struct Found {
  Integer min_diameter;
  DistanceMatrix witness;
};

struct SearchOutcome {
  int n = 0;
  long bound = 0;
  std::optional<Found> result;  // empty: nothing within the bound
  std::uint64_t nodes_explored = 0;
};

/// Least diameter of an n-point planar integral set with all distances <= b_max.
/// Guards: 3 <= n <= 7, 1 <= b_max <= 50. `jobs` never changes the outcome.
SearchOutcome min_diameter(int n, long b_max, unsigned jobs = 1);

/// Every 4-point planar integral set with a unit distance and diameter <= b_max,
/// one canonical matrix per isometry class, sorted. Guard: 1 <= b_max <= 50.
std::vector<DistanceMatrix> enumerate_unit4(long b_max);

/// Lexicographically least row-major matrix over all point orderings.
DistanceMatrix canonical_form(const DistanceMatrix& dm);

/// Does some triple contain the unit pair and a third point on its line?
bool has_collinear_triple_with_unit_pair(const DistanceMatrix& dm);

struct FacherVerdict {
  std::vector<std::size_t> line_points;
  std::size_t apex = 0;
  std::pair<std::size_t, std::size_t> unit_pair;
};

struct Violation {
  std::string reason;
  std::vector<std::size_t> witness;
};

using UnitSetClassification = std::variant<FacherVerdict, Violation>;

/// Checks that an integral planar set with a unit distance has n - 1 points on
/// the unit pair's line and the remaining point on its perpendicular bisector.
UnitSetClassification classify_unit_set(const PlanarPointSet& s);

struct Extendable {
  PlanarPoint point;
};

struct MaximalWithin {
  long radius_bound = 0;
};

using MaximalityVerdict = std::variant<Extendable, MaximalWithin>;

/// Sweeps the intersections of circles of integer radii <= radius_bound around
/// two base points and reports the first candidate (in sweep order) at integer
/// distance <= radius_bound from every point of s.
MaximalityVerdict bounded_maximality(const PlanarPointSet& s, long radius_bound,
                                     std::size_t base_a = 0, std::size_t base_b = 1);

}  // namespace ips
