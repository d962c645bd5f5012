#pragma once

// Planar point sets in shared-radicand coordinates: every point is
// (x, y * sqrt(q)) with x, y rational and one squarefree q for the whole set.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ips/exactnum.hpp"

namespace ips {

struct PlanarPoint {
  Rational x;
  Rational y_coeff;  // the y coordinate is y_coeff * sqrt(q)

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
  friend auto operator<=>(const PlanarPoint&, const PlanarPoint&) = default;
};

class PlanarPointSet {
 public:
  PlanarPointSet() = default;
  /// Rejects negative or non-squarefree q, nonzero y coefficients when q == 0,
  /// and repeated points.
  PlanarPointSet(Integer radicand, std::vector<PlanarPoint> points);

  const Integer& radicand() const { return q_; }
  const std::vector<PlanarPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const PlanarPoint& operator[](std::size_t i) const { return points_[i]; }

  friend bool operator==(const PlanarPointSet&, const PlanarPointSet&) = default;

 private:
  Integer q_ = 0;
  std::vector<PlanarPoint> points_;
};

struct Segment {
  PlanarPoint first;
  PlanarPoint second;

  Segment(PlanarPoint a, PlanarPoint b);
};

Rational dist_squared(const PlanarPoint& p, const PlanarPoint& q_pt, const Integer& radicand);

/// Exact distance when the squared distance is a perfect integer square.
std::optional<Integer> integer_distance(const PlanarPoint& p, const PlanarPoint& q_pt,
                                        const Integer& radicand);

/// Cross product (b - o) x (c - o); it always has the form r * sqrt(q).
QuadraticNumber cross(const PlanarPoint& o, const PlanarPoint& b, const PlanarPoint& c,
                      const Integer& radicand);

/// Sign of the orientation of the triple (o, b, c).
int orientation(const PlanarPoint& o, const PlanarPoint& b, const PlanarPoint& c,
                const Integer& radicand);

bool all_collinear(const PlanarPointSet& s);

/// Indices of the points of s on the line through points i and j.
std::vector<std::size_t> points_on_line(const PlanarPointSet& s, std::size_t i, std::size_t j);

struct PairWitness {
  std::size_t i;
  std::size_t j;
  Rational dist_squared;
};

struct IntegralityReport {
  bool is_integral = false;
  bool full_dimensional = false;
  Integer diameter = 0;
  Integer min_distance = 0;
  std::vector<Integer> distance_multiset;  // sorted; filled when integral
  std::vector<PairWitness> failures;
};

IntegralityReport verify_integral_set(const PlanarPointSet& s);

/// Squarefree q with every triangle area in Q * sqrt(q); checked on every
/// non-degenerate triangle.
Integer characteristic(const PlanarPointSet& s);

/// Indices of an n-1 point line and the single point off it, if s has that shape.
struct FacherSplit {
  std::vector<std::size_t> line_points;
  std::size_t apex;
};

/// For three points the apex is ambiguous; `preferred_apex` picks it.
std::optional<FacherSplit> facher_split(const PlanarPointSet& s,
                                        std::optional<std::size_t> preferred_apex = {});

/// Squared distance from point `apex` to the line through points i and j.
Rational height_squared(const PlanarPointSet& s, std::size_t apex, std::size_t i, std::size_t j);

enum class CrossKind { WholeLine, FinitePoints };

struct CrossIntersection {
  CrossKind kind;
  std::size_t count = 0;            // number of points for FinitePoints
  std::vector<PlanarPoint> points;  // sorted, distinct
};

/// Intersection of the crosses (carrier line plus perpendicular bisector) of
/// two segments whose open interiors must not meet. Coordinates use the
/// radicand convention of PlanarPoint; plain Cartesian input uses q = 1.
CrossIntersection cross_intersection(const Segment& seg1, const Segment& seg2,
                                     const Integer& radicand = 1);

/// |N M1| - |N M2| for seg = (M1, M2). Throws when either distance is irrational.
Rational rho_value(const PlanarPoint& n_pt, const Segment& seg, const Integer& radicand);

/// Multiplicity of each distance among point pairs on the line through i and j.
std::map<Integer, std::size_t> equal_segment_counts_on_line(const PlanarPointSet& s,
                                                            std::size_t i, std::size_t j);

std::size_t count_equal_segments_on_line(const PlanarPointSet& s, std::size_t i, std::size_t j,
                                         const Integer& k);

/// For a strictly convex quadrilateral abcd (cyclic order): is the longer
/// diagonal longer than the shortest side? Throws on non-convex input.
bool convex_quad_diag_exceeds_side(const PlanarPoint& a, const PlanarPoint& b,
                                   const PlanarPoint& c, const PlanarPoint& d,
                                   const Integer& radicand = 1);

/// Extents of an integral set in the frame whose first axis runs along a
/// diameter. The across-axis extent leaves Q(sqrt q) and is bracketed.
struct SquareContainerReport {
  Integer diameter;
  std::size_t axis_from = 0;
  std::size_t axis_to = 0;
  RationalInterval along;
  RationalInterval across;
  Rational tolerance;
  bool fits = false;  // both extents certified <= diameter
};

SquareContainerReport square_container(const PlanarPointSet& s,
                                       const Rational& tolerance = pow2(-40));

}  // namespace ips
