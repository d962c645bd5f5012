#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ips/search.hpp"
#include "support.hpp"

using namespace ips;
using ips::testing::dm;
using ips::testing::equilateral;
using ips::testing::k2_set;

namespace {

// 16 * area^2 of the triangle (i, j, k), straight from the side lengths.
long long heron16(const DistanceMatrix& m, Eigen::Index i, Eigen::Index j, Eigen::Index k) {
  const long long a = m(i, j).get_si(), b = m(i, k).get_si(), c = m(j, k).get_si();
  return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
}

// Independent planarity check: every triangle is a real triangle, not all are
// degenerate, and each 4-point Cayley-Menger determinant vanishes.
bool planar_by_triangles(const DistanceMatrix& m) {
  const auto n = m.size();
  bool some_area = false;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      for (Eigen::Index k = j + 1; k < n; ++k) {
        const auto h = heron16(m, i, j, k);
        if (h < 0) return false;
        some_area = some_area || h > 0;
      }
  if (!some_area) return false;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = a + 1; b < n; ++b)
      for (Eigen::Index c = b + 1; c < n; ++c)
        for (Eigen::Index d = c + 1; d < n; ++d) {
          const Eigen::Index idx[4] = {a, b, c, d};
          IntegerMatrix sub(4, 4);
          for (int r = 0; r < 4; ++r)
            for (int s = 0; s < 4; ++s) sub(r, s) = m(idx[r], idx[s]);
          if (cayley_menger_determinant(DistanceMatrix(sub)) != 0) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("least diameters for n = 3..7") {
  const std::pair<int, long> expected[] = {{3, 1}, {4, 4}, {5, 7}, {6, 8}, {7, 17}};
  for (const auto& [n, d] : expected) {
    CAPTURE(n);
    const auto out = min_diameter(n, 20);
    REQUIRE(out.result.has_value());
    CHECK(out.result->min_diameter == d);
    CHECK(out.n == n);
    CHECK(out.bound == 20);
    CHECK(out.nodes_explored > 0);

    const auto& w = out.result->witness;
    CHECK(w.size() == n);
    CHECK(w.diameter() == d);
    CHECK(realizable_dim(w).dimension == Eigen::Index{2});
    CHECK(planar_by_triangles(w));
  }
}

TEST_CASE("outcome is stable once the bound covers the answer") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const auto a = min_diameter(n, 10), b = min_diameter(n, 12);
    REQUIRE(a.result.has_value());
    REQUIRE(b.result.has_value());
    CHECK(a.result->min_diameter == b.result->min_diameter);
    CHECK(a.result->witness == b.result->witness);
  }
}

TEST_CASE("bound below the answer reports nothing") {
  const auto out = min_diameter(7, 16);
  CHECK_FALSE(out.result.has_value());
  CHECK(out.nodes_explored > 0);
  CHECK_FALSE(min_diameter(4, 3).result.has_value());
  CHECK(min_diameter(5, 7).result->min_diameter == 7);
}

TEST_CASE("jobs never change the outcome") {
  for (int n : {5, 6, 7}) {
    CAPTURE(n);
    const auto one = min_diameter(n, 18, 1);
    for (unsigned jobs : {2u, 4u}) {
      const auto many = min_diameter(n, 18, jobs);
      REQUIRE(many.result.has_value());
      CHECK(many.result->min_diameter == one.result->min_diameter);
      CHECK(many.result->witness == one.result->witness);
      CHECK(many.nodes_explored == one.nodes_explored);
    }
  }
}

TEST_CASE("search guards") {
  CHECK_THROWS_AS(min_diameter(2, 10), std::invalid_argument);
  CHECK_THROWS_AS(min_diameter(8, 10), std::invalid_argument);
  CHECK_THROWS_AS(min_diameter(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(min_diameter(4, 51), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_unit4(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_unit4(51), std::invalid_argument);
}

TEST_CASE("canonical form is invariant under relabelling") {
  const auto m = dm({{0, 7, 4, 3, 4}, {7, 0, 4, 4, 3}, {4, 4, 0, 2, 2}, {3, 4, 2, 0, 1},
                     {4, 3, 2, 1, 0}});
  const auto c = canonical_form(m);
  CHECK(canonical_form(c) == c);
  ips::testing::Gen gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Eigen::Index> perm{0, 1, 2, 3, 4};
    for (Eigen::Index i = 4; i > 0; --i) std::swap(perm[i], perm[gen.range(0, i)]);
    IntegerMatrix p(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) p(i, j) = m(perm[i], perm[j]);
    CHECK(canonical_form(DistanceMatrix(p)) == c);
  }
  CHECK(c.multiset() == m.multiset());
}

TEST_CASE("four-point sets with a unit distance") {
  CHECK(enumerate_unit4(1).empty());
  CHECK(enumerate_unit4(3).empty());

  const auto small = enumerate_unit4(4);
  REQUIRE(small.size() == 1);
  CHECK(small[0] == canonical_form(from_points(trim(construction1(2), 4).set)));

  const auto all = enumerate_unit4(50);
  CHECK(all.size() == 43);
  std::set<std::vector<Integer>> seen;
  for (const auto& m : all) {
    CHECK(m.size() == 4);
    CHECK(m.min_distance() == 1);
    CHECK(m.diameter() <= 50);
    CHECK(canonical_form(m) == m);
    CHECK(realizable_dim(m).dimension == Eigen::Index{2});
    CHECK(planar_by_triangles(m));
    CHECK(has_collinear_triple_with_unit_pair(m));
    std::vector<Integer> flat(m.entries().data(), m.entries().data() + 16);
    CHECK(seen.insert(flat).second);
  }
  // Counts only grow with the bound.
  CHECK(enumerate_unit4(30).size() <= all.size());
}

TEST_CASE("collinear unit triple detection") {
  CHECK(has_collinear_triple_with_unit_pair(dm({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}})));
  CHECK_FALSE(has_collinear_triple_with_unit_pair(dm({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})));
  CHECK_FALSE(has_collinear_triple_with_unit_pair(dm({{0, 3, 4}, {3, 0, 5}, {4, 5, 0}})));
}

TEST_CASE("unit-distance sets split into a line and an apex") {
  const auto verdict = classify_unit_set(k2_set());
  REQUIRE(std::holds_alternative<FacherVerdict>(verdict));
  const auto& f = std::get<FacherVerdict>(verdict);
  CHECK(f.apex == 4);
  CHECK(f.unit_pair == std::pair<std::size_t, std::size_t>{2, 3});
  CHECK(f.line_points == std::vector<std::size_t>{0, 1, 2, 3});

  const auto tri = classify_unit_set(equilateral());
  REQUIRE(std::holds_alternative<FacherVerdict>(tri));

  for (std::size_t k : {1, 2, 3}) {
    const auto c = construction1(static_cast<int>(k));
    for (std::size_t n = 3; n <= c.set.size(); ++n) {
      const auto t = trim(c, n);
      CAPTURE(k);
      CAPTURE(n);
      const auto v = classify_unit_set(t.set);
      REQUIRE(std::holds_alternative<FacherVerdict>(v));
      CHECK(std::get<FacherVerdict>(v).line_points.size() == n - 1);
    }
  }
}

TEST_CASE("classification rejects or flags bad input") {
  CHECK_THROWS_AS(classify_unit_set(dilate(k2_set(), Integer(2))), std::invalid_argument);
  const PlanarPointSet line(1, {{0, 0}, {1, 0}, {2, 0}});
  CHECK_THROWS_AS(classify_unit_set(line), std::invalid_argument);
  const PlanarPointSet not_integral(1, {{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(classify_unit_set(not_integral), std::invalid_argument);

  // Two unit pairs on a line plus an apex: never integral, so rejected.
  const PlanarPointSet two_units(3, {{Rational(-1, 2), 0}, {Rational(1, 2), 0},
                                     {Rational(3, 2), 0}, {0, Rational(1, 2)}});
  CHECK_FALSE(verify_integral_set(two_units).is_integral);
  CHECK_THROWS_AS(classify_unit_set(two_units), std::invalid_argument);
}

TEST_CASE("bounded maximality") {
  const auto verdict = bounded_maximality(k2_set(), 7);
  REQUIRE(std::holds_alternative<MaximalWithin>(verdict));
  CHECK(std::get<MaximalWithin>(verdict).radius_bound == 7);

  const auto trimmed = trim(construction1(2), 4).set;
  const auto ext = bounded_maximality(trimmed, 7);
  REQUIRE(std::holds_alternative<Extendable>(ext));
  const auto& p = std::get<Extendable>(ext).point;
  CHECK(p == PlanarPoint{Rational(7, 2), 0});
  for (const auto& other : trimmed.points()) {
    const auto d = integer_distance(p, other, trimmed.radicand());
    REQUIRE(d.has_value());
    CHECK(*d <= 7);
  }

  CHECK(std::holds_alternative<MaximalWithin>(bounded_maximality(equilateral(), 100)));

  CHECK_THROWS_AS(bounded_maximality(k2_set(), 6), std::invalid_argument);
  CHECK_THROWS_AS(bounded_maximality(k2_set(), 7, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(bounded_maximality(k2_set(), 7, 0, 9), std::invalid_argument);
}
