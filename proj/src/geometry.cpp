#include "ips/geometry.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace ips {

PlanarPointSet::PlanarPointSet(Integer radicand, std::vector<PlanarPoint> points)
    : q_(std::move(radicand)), points_(std::move(points)) {
  if (q_ < 0) throw std::invalid_argument("radicand must be non-negative");
  if (q_ > 0 && !is_squarefree(q_))
    throw std::invalid_argument("radicand " + q_.get_str() + " is not squarefree");
  if (q_ == 0) {
    for (const auto& p : points_)
      if (!p.y_coeff.is_zero())
        throw std::invalid_argument("radicand 0 admits only points on the x-axis");
  }
  std::vector<PlanarPoint> sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("point set contains duplicate points");
}

Segment::Segment(PlanarPoint a, PlanarPoint b) : first(std::move(a)), second(std::move(b)) {
  if (first == second) throw std::invalid_argument("segment endpoints coincide");
}

Rational dist_squared(const PlanarPoint& p, const PlanarPoint& q_pt, const Integer& radicand) {
  return square(p.x - q_pt.x) + square(p.y_coeff - q_pt.y_coeff) * Rational(radicand);
}

std::optional<Integer> integer_distance(const PlanarPoint& p, const PlanarPoint& q_pt,
                                        const Integer& radicand) {
  const Rational d2 = dist_squared(p, q_pt, radicand);
  if (!d2.is_integer()) return std::nullopt;
  const auto root = isqrt(d2.numerator());
  if (!root.exact) return std::nullopt;
  return root.root;
}

namespace {

// Coefficient r of cross(o, b, c) = r * sqrt(q).
Rational cross_bracket(const PlanarPoint& o, const PlanarPoint& b, const PlanarPoint& c) {
  return (b.x - o.x) * (c.y_coeff - o.y_coeff) - (c.x - o.x) * (b.y_coeff - o.y_coeff);
}

}  // namespace

QuadraticNumber cross(const PlanarPoint& o, const PlanarPoint& b, const PlanarPoint& c,
                      const Integer& radicand) {
  const QuadraticNumber bx(b.x - o.x), cx(c.x - o.x);
  const auto by = QuadraticNumber::unchecked(0, b.y_coeff - o.y_coeff, radicand);
  const auto cy = QuadraticNumber::unchecked(0, c.y_coeff - o.y_coeff, radicand);
  return bx * cy - cx * by;
}

int orientation(const PlanarPoint& o, const PlanarPoint& b, const PlanarPoint& c,
                const Integer& radicand) {
  return radicand == 0 ? 0 : cross_bracket(o, b, c).sign();
}

bool all_collinear(const PlanarPointSet& s) {
  for (std::size_t k = 2; k < s.size(); ++k)
    if (orientation(s[0], s[1], s[k], s.radicand()) != 0) return false;
  return true;
}

std::vector<std::size_t> points_on_line(const PlanarPointSet& s, std::size_t i, std::size_t j) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (k == i || k == j || orientation(s[i], s[j], s[k], s.radicand()) == 0) out.push_back(k);
  return out;
}

IntegralityReport verify_integral_set(const PlanarPointSet& s) {
  if (s.size() < 3) throw std::invalid_argument("integrality check needs at least 3 points");
  IntegralityReport report;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (auto d = integer_distance(s[i], s[j], s.radicand()))
        report.distance_multiset.push_back(*d);
      else
        report.failures.push_back({i, j, dist_squared(s[i], s[j], s.radicand())});
    }
  }
  report.is_integral = report.failures.empty();
  report.full_dimensional = !all_collinear(s);
  if (report.is_integral) {
    std::sort(report.distance_multiset.begin(), report.distance_multiset.end());
    report.min_distance = report.distance_multiset.front();
    report.diameter = report.distance_multiset.back();
  } else {
    report.distance_multiset.clear();
  }
  return report;
}

Integer characteristic(const PlanarPointSet& s) {
  if (s.size() < 3 || all_collinear(s))
    throw std::invalid_argument("characteristic of a degenerate point set");
  const Integer& q = s.radicand();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      for (std::size_t k = j + 1; k < s.size(); ++k) {
        const Rational bracket = cross_bracket(s[i], s[j], s[k]);
        if (bracket.is_zero()) continue;
        // area^2 = bracket^2 q / 4; its squarefree kernel is that of num * den.
        const Rational area2 = square(bracket) * Rational(q) / Rational(4);
        const Integer nd = area2.numerator() * area2.denominator();
        if (!mpz_divisible_p(nd.get_mpz_t(), q.get_mpz_t()) || !isqrt(Integer(nd / q)).exact)
          throw std::logic_error("triangle area outside Q*sqrt(q)");
      }
    }
  }
  return q;
}

std::optional<FacherSplit> facher_split(const PlanarPointSet& s,
                                        std::optional<std::size_t> preferred_apex) {
  const std::size_t n = s.size();
  if (n < 3 || all_collinear(s)) return std::nullopt;
  std::optional<std::size_t> apex;
  if (n == 3) {
    apex = preferred_apex.value_or(2);
    if (*apex >= 3) return std::nullopt;
  } else {
    const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    for (const auto& [i, j] : pairs) {
      const auto on_line = points_on_line(s, i, j);
      if (on_line.size() != n - 1) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (!std::binary_search(on_line.begin(), on_line.end(), k)) apex = k;
      break;
    }
    if (!apex || (preferred_apex && *preferred_apex != *apex)) return std::nullopt;
  }
  FacherSplit split{{}, *apex};
  for (std::size_t k = 0; k < n; ++k)
    if (k != *apex) split.line_points.push_back(k);
  return split;
}

Rational height_squared(const PlanarPointSet& s, std::size_t apex, std::size_t i, std::size_t j) {
  const Rational bracket = cross_bracket(s[i], s[j], s[apex]);
  return square(bracket) * Rational(s.radicand()) / dist_squared(s[i], s[j], s.radicand());
}

// ---------------------------------------------------------------------------
// Crosses. Work in the scaled plane (x, y_coeff); the map (x, y) -> (x, y/sqrt q)
// is affine, so incidences, parallelism and interior membership carry over.

namespace {

struct Line {
  Rational a, b, c;  // a x + b Y = c
};

Line carrier(const PlanarPoint& p1, const PlanarPoint& p2) {
  Line l{p2.y_coeff - p1.y_coeff, p1.x - p2.x, 0};
  l.c = l.a * p1.x + l.b * p1.y_coeff;
  return l;
}

// |X - P1|^2 = |X - P2|^2 with the true metric dx^2 + q dY^2.
Line bisector(const PlanarPoint& p1, const PlanarPoint& p2, const Rational& q) {
  return {Rational(2) * (p2.x - p1.x), Rational(2) * q * (p2.y_coeff - p1.y_coeff),
          square(p2.x) - square(p1.x) + q * (square(p2.y_coeff) - square(p1.y_coeff))};
}

bool same_line(const Line& l1, const Line& l2) {
  return (l1.a * l2.b - l2.a * l1.b).is_zero() && (l1.a * l2.c - l2.a * l1.c).is_zero() &&
         (l1.b * l2.c - l2.b * l1.c).is_zero();
}

std::optional<PlanarPoint> meet(const Line& l1, const Line& l2) {
  const Rational det = l1.a * l2.b - l2.a * l1.b;
  if (det.is_zero()) return std::nullopt;
  return PlanarPoint{(l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det};
}

Rational cross2(const Rational& ux, const Rational& uy, const Rational& vx, const Rational& vy) {
  return ux * vy - uy * vx;
}

bool open_interiors_meet(const Segment& s1, const Segment& s2) {
  const Rational d1x = s1.second.x - s1.first.x, d1y = s1.second.y_coeff - s1.first.y_coeff;
  const Rational d2x = s2.second.x - s2.first.x, d2y = s2.second.y_coeff - s2.first.y_coeff;
  const Rational rx = s2.first.x - s1.first.x, ry = s2.first.y_coeff - s1.first.y_coeff;
  const Rational denom = cross2(d1x, d1y, d2x, d2y);
  if (!denom.is_zero()) {
    const Rational t = cross2(rx, ry, d2x, d2y) / denom;
    const Rational u = cross2(rx, ry, d1x, d1y) / denom;
    return t > 0 && t < 1 && u > 0 && u < 1;
  }
  if (!cross2(rx, ry, d1x, d1y).is_zero()) return false;
  // Collinear: compare parameter ranges along s1.
  const Rational len2 = square(d1x) + square(d1y);
  const Rational t3 = (rx * d1x + ry * d1y) / len2;
  const Rational t4 =
      ((s2.second.x - s1.first.x) * d1x + (s2.second.y_coeff - s1.first.y_coeff) * d1y) / len2;
  return std::max(Rational(0), std::min(t3, t4)) < std::min(Rational(1), std::max(t3, t4));
}

}  // namespace

CrossIntersection cross_intersection(const Segment& seg1, const Segment& seg2,
                                     const Integer& radicand) {
  if (radicand < 1) throw std::invalid_argument("cross intersection needs radicand >= 1");
  if (open_interiors_meet(seg1, seg2))
    throw std::invalid_argument("open segments intersect");
  const Rational q(radicand);
  const std::array<Line, 2> first{carrier(seg1.first, seg1.second),
                                  bisector(seg1.first, seg1.second, q)};
  const std::array<Line, 2> second{carrier(seg2.first, seg2.second),
                                   bisector(seg2.first, seg2.second, q)};
  CrossIntersection out{CrossKind::FinitePoints, 0, {}};
  for (const auto& l1 : first) {
    for (const auto& l2 : second) {
      if (same_line(l1, l2)) return {CrossKind::WholeLine, 0, {}};
      if (auto p = meet(l1, l2)) out.points.push_back(*p);
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  out.count = out.points.size();
  return out;
}

Rational rho_value(const PlanarPoint& n_pt, const Segment& seg, const Integer& radicand) {
  const auto d1 = rational_sqrt(dist_squared(n_pt, seg.first, radicand));
  const auto d2 = rational_sqrt(dist_squared(n_pt, seg.second, radicand));
  if (!d1 || !d2) throw std::domain_error("rho_value needs rational distances");
  return *d1 - *d2;
}

std::map<Integer, std::size_t> equal_segment_counts_on_line(const PlanarPointSet& s,
                                                            std::size_t i, std::size_t j) {
  if (i == j || i >= s.size() || j >= s.size())
    throw std::invalid_argument("line needs two distinct point indices");
  const auto on_line = points_on_line(s, i, j);
  std::map<Integer, std::size_t> counts;
  for (std::size_t a = 0; a < on_line.size(); ++a) {
    for (std::size_t b = a + 1; b < on_line.size(); ++b) {
      const auto d = integer_distance(s[on_line[a]], s[on_line[b]], s.radicand());
      if (!d) throw std::invalid_argument("point set is not integral");
      ++counts[*d];
    }
  }
  return counts;
}

std::size_t count_equal_segments_on_line(const PlanarPointSet& s, std::size_t i, std::size_t j,
                                         const Integer& k) {
  const auto counts = equal_segment_counts_on_line(s, i, j);
  const auto it = counts.find(k);
  return it == counts.end() ? 0 : it->second;
}

bool convex_quad_diag_exceeds_side(const PlanarPoint& a, const PlanarPoint& b,
                                   const PlanarPoint& c, const PlanarPoint& d,
                                   const Integer& radicand) {
  const std::array<int, 4> turns{orientation(a, b, c, radicand), orientation(b, c, d, radicand),
                                 orientation(c, d, a, radicand), orientation(d, a, b, radicand)};
  if (turns[0] == 0 || std::any_of(turns.begin(), turns.end(), [&](int t) { return t != turns[0]; }))
    throw std::invalid_argument("quadrilateral is not strictly convex");
  const Rational diagonal =
      std::max(dist_squared(a, c, radicand), dist_squared(b, d, radicand));
  const Rational side = std::min({dist_squared(a, b, radicand), dist_squared(b, c, radicand),
                                  dist_squared(c, d, radicand), dist_squared(d, a, radicand)});
  return diagonal > side;
}

SquareContainerReport square_container(const PlanarPointSet& s, const Rational& tolerance) {
  const auto integrality = verify_integral_set(s);
  if (!integrality.is_integral) throw std::invalid_argument("point set is not integral");
  SquareContainerReport report;
  report.diameter = integrality.diameter;
  report.tolerance = tolerance;
  const Rational d2 = square(Rational(report.diameter));
  for (std::size_t i = 0; i < s.size() && report.axis_to == 0; ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (dist_squared(s[i], s[j], s.radicand()) == d2) {
        report.axis_from = i;
        report.axis_to = j;
        break;
      }

  const PlanarPoint& a = s[report.axis_from];
  const PlanarPoint& b = s[report.axis_to];
  const Rational q(s.radicand());
  const Rational d(report.diameter);
  std::vector<Rational> along, across;
  for (const auto& p : s.points()) {
    along.push_back(((p.x - a.x) * (b.x - a.x) + q * (p.y_coeff - a.y_coeff) * (b.y_coeff - a.y_coeff)) / d);
    across.push_back(cross_bracket(a, b, p) / d);  // times sqrt(q)
  }
  const auto [along_lo, along_hi] = std::minmax_element(along.begin(), along.end());
  const auto [across_lo, across_hi] = std::minmax_element(across.begin(), across.end());
  report.along = RationalInterval(*along_hi - *along_lo);
  const Rational spread = *across_hi - *across_lo;
  if (spread.is_zero()) {
    report.across = RationalInterval(Rational(0));
  } else {
    const RationalInterval root_q = interval_sqrt(q, tolerance / spread);
    report.across = RationalInterval(spread) * root_q;
  }
  report.fits = report.along.high() <= d && report.across.high() <= d;
  return report;
}

}  // namespace ips
