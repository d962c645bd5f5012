#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ips/constructions.hpp"
#include "support.hpp"

using namespace ips;
using ips::testing::as_longs;
using ips::testing::dm;
using ips::testing::equilateral;

namespace {

std::vector<Rational> xs(const PlanarPointSet& s) {
  std::vector<Rational> out;
  for (const auto& p : s.points())
    if (p.y_coeff.is_zero()) out.push_back(p.x);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_of(const std::vector<Integer>& v, long x) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), Integer(x)));
}

}  // namespace

TEST_CASE("parameters for small k") {
  const auto p3 = ConstructionParams::make(3);
  CHECK(p3.a == 255);
  CHECK(p3.d == std::vector<Integer>{5, 17});
  std::vector<long> b, g;
  for (const auto& s : p3.subsets) {
    b.push_back(s.b.get_si());
    g.push_back(s.g.get_si());
  }
  CHECK(b == std::vector<long>{-127, -23, 1, 41});
  CHECK(g == std::vector<long>{128, 28, 16, 44});
  CHECK(p3.subsets[p3.unit_subset].b == 1);
  CHECK(p3.subsets[p3.unit_subset].members == std::vector<int>{2});

  const auto p1 = ConstructionParams::make(1);
  CHECK(p1.a == 3);
  REQUIRE(p1.subsets.size() == 1);
  CHECK(p1.subsets[0].b == -1);
  CHECK_THROWS(ConstructionParams::make(0));
}

TEST_CASE("parameter congruences") {
  for (int k = 1; k <= 12; ++k) {
    const auto p = ConstructionParams::make(k);
    CHECK(p.a % 4 == 3);
    CHECK(p.subsets.size() == (std::size_t{1} << (k - 1)));
    std::set<Integer> abs_b;
    for (const auto& s : p.subsets) {
      CHECK(s.c % 4 == 1);
      CHECK(p.a % s.c == 0);
      CHECK(s.b % 2 != 0);
      CHECK(s.g % 2 == 0);
      CHECK(s.g * s.g - s.b * s.b == p.a);
      abs_b.insert(s.b < 0 ? Integer(-s.b) : s.b);
    }
    CHECK(abs_b.size() == p.subsets.size());
    if (k >= 2) CHECK(p.subsets[p.unit_subset].b == 1);
  }
}

TEST_CASE("construction for k = 1, 2, 3") {
  const auto c1 = construction1(1);
  CHECK(c1.set.size() == 3);
  CHECK(from_points(c1.set) == dm({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));

  const auto c2 = construction1(2);
  CHECK(c2.set.size() == 5);
  CHECK(c2.set.radicand() == 15);
  CHECK(xs(c2.set) == std::vector<Rational>{Rational(-7, 2), Rational(-1, 2), Rational(1, 2),
                                            Rational(7, 2)});
  CHECK(c2.set[c2.apex_index()] == PlanarPoint{0, Rational(1, 2)});
  CHECK(verify_integral_set(c2.set).diameter == 7);

  const auto c3 = construction1(3);
  CHECK(c3.set.size() == 9);
  CHECK(c3.set.radicand() == 255);
  const auto r3 = verify_integral_set(c3.set);
  CHECK(r3.is_integral);
  CHECK(r3.diameter == 127);
}

TEST_CASE("apex distances and unit pairs across k") {
  for (int k = 1; k <= 6; ++k) {
    const auto c = construction1(k);
    const auto& s = c.set;
    CHECK(s.size() == (std::size_t{1} << k) + 1);
    const auto apex = c.apex_index();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i == apex) continue;
      const auto& sub = *std::find_if(c.params.subsets.begin(), c.params.subsets.end(),
                                      [&](const SubsetParams& p) { return p.mask == c.roles[i].mask; });
      CHECK(integer_distance(s[i], s[apex], s.radicand()) == Integer(sub.g / 2));
    }
    const auto x = xs(s);
    CHECK(std::adjacent_find(x.begin(), x.end()) == x.end());
    CHECK(x.size() == s.size() - 1);
    const auto split = facher_split(s, apex);
    REQUIRE(split.has_value());
    CHECK(split->line_points.size() == s.size() - 1);
    if (k <= 4) {
      const auto r = verify_integral_set(s);
      CHECK(r.is_integral);
      CHECK(r.full_dimensional);
      CHECK(count_of(r.distance_multiset, 1) == (k == 1 ? 3u : 1u));
    }
  }
}

TEST_CASE("factorization limit") {
  CHECK_NOTHROW(construction1(6));
  CHECK_THROWS_AS(construction1(7), FactorizationLimitError);
}

TEST_CASE("trim") {
  const auto c2 = construction1(2);
  const auto t3 = trim(c2, 3);
  CHECK(xs(t3.set) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK(as_longs(verify_integral_set(t3.set).distance_multiset) == std::vector<long>{1, 2, 2});

  const auto t4 = trim(c2, 4);
  CHECK(xs(t4.set) == std::vector<Rational>{Rational(-7, 2), Rational(-1, 2), Rational(1, 2)});
  CHECK(verify_integral_set(t4.set).diameter == 4);

  CHECK(trim(c2, 5).set == c2.set);
  CHECK_THROWS(trim(c2, 2));
  CHECK_THROWS(trim(c2, 6));
}

TEST_CASE("trims keep the unit pair and the apex") {
  for (int k = 2; k <= 4; ++k) {
    const auto c = construction1(k);
    for (std::size_t n = 3; n <= c.set.size(); ++n) {
      const auto t = trim(c, n);
      CHECK(t.set.size() == n);
      const auto r = verify_integral_set(t.set);
      CHECK(r.is_integral);
      CHECK(r.full_dimensional);
      CHECK(count_of(r.distance_multiset, 1) == 1);
      CHECK(std::count_if(t.roles.begin(), t.roles.end(),
                          [](const PointRole& p) { return p.kind == RoleKind::Apex; }) == 1);
    }
  }
}

TEST_CASE("dilation") {
  const auto tri3 = dilate(equilateral(), Integer(3));
  CHECK(from_points(tri3) == dm({{0, 3, 3}, {3, 0, 3}, {3, 3, 0}}));
  const auto k2 = dilate(construction1(2).set, Integer(2));
  const auto r = verify_integral_set(k2);
  CHECK(r.diameter == 14);
  CHECK(r.min_distance == 2);
  const auto d = dm({{0, 3, 4}, {3, 0, 5}, {4, 5, 0}});
  CHECK(dilate(d, Integer(1)) == d);
  CHECK(dilate(d, Integer(2)) == dm({{0, 6, 8}, {6, 0, 10}, {8, 10, 0}}));
  CHECK_THROWS(dilate(d, Integer(0)));
  CHECK_THROWS(dilate(equilateral(), Integer(-1)));
}

TEST_CASE("blow-up") {
  const auto base3 = trim(construction1(2), 3).set;
  const auto four = blowup(make_blowup_plan(base3, 3, Integer(2)));
  CHECK(as_longs(four.multiset()) == std::vector<long>{1, 2, 2, 2, 2, 2});
  CHECK(realizable_dim(four).dimension == 3);

  CHECK_THROWS(blowup(make_blowup_plan(equilateral(), 3, Integer(2))));

  const auto seven = blowup(make_blowup_plan(construction1(2).set, 4, Integer(2)));
  CHECK(seven.size() == 7);
  CHECK(realizable_dim(seven).dimension == 4);
  CHECK(simplex_circumradius_squared(4, Integer(2)) == Rational(4, 3));
}

TEST_CASE("blow-up rejects the boundary of the circumradius condition") {
  // Side-2 equilateral: h^2 = 3 equals the circumradius^2 of a side-3 triangle.
  const auto tri2 = dilate(equilateral(), Integer(2));
  CHECK_FALSE(circumradius_condition_holds(4, Integer(3), Rational(3)));
  CHECK_THROWS(blowup(make_blowup_plan(tri2, 4, Integer(3))));
  // The same distances with the simplex through the apex foot only span three dimensions.
  const auto flat = dm({{0, 2, 2, 2, 2}, {2, 0, 2, 2, 2}, {2, 2, 0, 3, 3},
                        {2, 2, 3, 0, 3}, {2, 2, 3, 3, 0}});
  CHECK(realizable_dim(flat).dimension == 3);
}

TEST_CASE("blow-up rejects bases that are not facher") {
  const PlanarPointSet rect(1, {{0, 0}, {3, 0}, {0, 4}, {3, 4}});
  CHECK_THROWS(make_blowup_plan(rect, 3, Integer(1)));
  auto plan = make_blowup_plan(construction1(2).set, 3, Integer(1));
  plan.base = rect;
  CHECK_THROWS(blowup(plan));
  auto low = make_blowup_plan(construction1(2).set, 3, Integer(1));
  low.target_dim = 2;
  CHECK_THROWS(blowup(low));
}

TEST_CASE("prime sets") {
  const auto a = prime_set(3, 4, 1, false);
  CHECK(a.k == 2);
  CHECK(as_longs(a.matrix.multiset()) == std::vector<long>{1, 2, 2, 2, 2, 2});
  CHECK(a.matrix.gcd() == 1);
  CHECK(realizable_dim(a.matrix).dimension == 3);

  const auto b = prime_set(3, 5, 2, true);
  CHECK(b.k == 2);
  CHECK(b.matrix == dm({{0, 8, 6, 8, 8}, {8, 0, 2, 4, 4}, {6, 2, 0, 4, 4},
                        {8, 4, 4, 0, 3}, {8, 4, 4, 3, 0}}));
  CHECK(b.min_distance_unique);
  CHECK(b.simplex_side == 3);
  CHECK(b.dilation == 2);

  // k = 1 would fit the point count but not the simplex.
  CHECK_FALSE(circumradius_condition_holds(3, Integer(2), Rational(3, 4)));

  CHECK_THROWS(prime_set(2, 4, 1, false));
  CHECK_THROWS(prime_set(3, 3, 1, false));
  CHECK_THROWS(prime_set(3, 4, 0, false));
}

TEST_CASE("prime set sweep") {
  for (int m = 3; m <= 5; ++m)
    for (int n = m + 1; n <= m + 6; ++n)
      for (long d = 1; d <= 4; ++d)
        for (bool unique : {false, true}) {
          const auto r = prime_set(m, n, d, unique);
          CHECK(r.matrix.size() == n);
          CHECK(r.matrix.gcd() == 1);
          CHECK(realizable_dim(r.matrix).dimension == m);
          const auto all = r.matrix.multiset();
          CHECK(count_of(all, d) >= 1);
          if (unique || n - m + 2 > 3) {
            CHECK(r.min_distance_unique);
            CHECK(all.front() == d);
            CHECK(count_of(all, d) == 1);
          }
        }
}
