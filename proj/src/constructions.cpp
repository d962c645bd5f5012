#include "ips/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace ips {

namespace {

Integer fermat_like(int exponent_log2, int offset) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, 1UL << exponent_log2);
  return v + offset;
}

}  // namespace

ConstructionParams ConstructionParams::make(int k) {
  if (k < 1) throw std::invalid_argument("construction needs k >= 1");
  if (k > 16) throw std::invalid_argument("construction supports k <= 16");
  ConstructionParams p;
  p.k = k;
  p.a = fermat_like(k, -1);
  for (int j = 1; j <= k - 1; ++j) p.d.push_back(fermat_like(j, 1));

  const std::uint32_t subsets = 1U << (k - 1);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    SubsetParams s;
    s.mask = mask;
    s.c = 1;
    for (int j = 1; j <= k - 1; ++j) {
      if (mask & (1U << (j - 1))) {
        s.members.push_back(j);
        s.c *= p.d[static_cast<std::size_t>(j - 1)];
      }
    }
    const Integer cofactor = p.a / s.c;
    s.b = (s.c - cofactor) / 2;
    s.g = (s.c + cofactor) / 2;
    p.subsets.push_back(std::move(s));
  }
  // H = {k-1}; for k = 1 the only subset is the empty one.
  p.unit_subset = k == 1 ? 0 : (std::size_t{1} << (k - 2));
  return p;
}

std::size_t Construction::apex_index() const {
  for (std::size_t i = 0; i < roles.size(); ++i)
    if (roles[i].kind == RoleKind::Apex) return i;
  throw std::logic_error("construction without apex");
}

Construction construction1(int k, unsigned long trial_limit) {
  Construction out;
  out.params = ConstructionParams::make(k);
  const auto [radicand, factor] = squarefree_part(out.params.a, trial_limit);

  std::vector<PlanarPoint> points;
  for (const auto& s : out.params.subsets) {
    points.push_back({Rational(s.b, 2), 0});
    out.roles.push_back({RoleKind::LinePlus, s.mask});
    points.push_back({Rational(Integer(-s.b), 2), 0});
    out.roles.push_back({RoleKind::LineMinus, s.mask});
  }
  // sqrt(a)/2 = (factor/2) sqrt(radicand)
  points.push_back({0, Rational(factor, 2)});
  out.roles.push_back({RoleKind::Apex, 0});
  out.set = PlanarPointSet(radicand, std::move(points));
  return out;
}

Construction trim(const Construction& c, std::size_t target_n) {
  if (target_n < 3 || target_n > c.set.size())
    throw std::invalid_argument("trim target out of range");
  const auto& unit_mask = c.params.subsets[c.params.unit_subset].mask;

  // Subsets still present, largest |b_J| first.
  std::vector<const SubsetParams*> order;
  for (const auto& s : c.params.subsets)
    if (s.mask != unit_mask) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(), [](const SubsetParams* x, const SubsetParams* y) {
    return abs(Rational(x->b)) > abs(Rational(y->b));
  });

  std::vector<bool> keep(c.set.size(), true);
  std::size_t excess = c.set.size() - target_n;
  for (const SubsetParams* s : order) {
    if (excess == 0) break;
    std::vector<std::size_t> present;
    for (std::size_t i = 0; i < c.roles.size(); ++i)
      if (keep[i] && c.roles[i].kind != RoleKind::Apex && c.roles[i].mask == s->mask)
        present.push_back(i);
    if (present.empty()) continue;
    if (excess >= present.size()) {
      for (auto i : present) keep[i] = false;
      excess -= present.size();
    } else {
      const auto positive = std::find_if(present.begin(), present.end(), [&](std::size_t i) {
        return c.set[i].x.sign() > 0;
      });
      keep[positive != present.end() ? *positive : present.front()] = false;
      excess = 0;
    }
  }
  if (excess != 0) throw std::invalid_argument("trim target below the protected points");

  Construction out;
  out.params = c.params;
  out.dilation = c.dilation;
  std::vector<PlanarPoint> points;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!keep[i]) continue;
    points.push_back(c.set[i]);
    out.roles.push_back(c.roles[i]);
  }
  out.set = PlanarPointSet(c.set.radicand(), std::move(points));
  return out;
}

PlanarPointSet dilate(const PlanarPointSet& s, const Integer& p) {
  if (p < 1) throw std::invalid_argument("dilation factor must be >= 1");
  std::vector<PlanarPoint> points;
  points.reserve(s.size());
  for (const auto& pt : s.points()) points.push_back({pt.x * Rational(p), pt.y_coeff * Rational(p)});
  return PlanarPointSet(s.radicand(), std::move(points));
}

DistanceMatrix dilate(const DistanceMatrix& dm, const Integer& p) {
  if (p < 1) throw std::invalid_argument("dilation factor must be >= 1");
  IntegerMatrix m = dm.entries();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) *= p;
  return DistanceMatrix(std::move(m));
}

Construction dilate(const Construction& c, const Integer& p) {
  Construction out = c;
  out.set = dilate(c.set, p);
  out.dilation = c.dilation * p;
  return out;
}

Rational simplex_circumradius_squared(int target_dim, const Integer& side) {
  return Rational(Integer(side * side * (target_dim - 2)), Integer(2 * (target_dim - 1)));
}

bool circumradius_condition_holds(int target_dim, const Integer& side,
                                  const Rational& apex_height_squared) {
  return simplex_circumradius_squared(target_dim, side) < apex_height_squared;
}

BlowupPlan make_blowup_plan(const PlanarPointSet& base, int target_dim,
                            const Integer& simplex_side, std::optional<std::size_t> apex) {
  const auto split = facher_split(base, apex);
  if (!split) throw std::invalid_argument("blow-up base is not facher");
  BlowupPlan plan;
  plan.base = base;
  plan.apex = split->apex;
  plan.target_dim = target_dim;
  plan.simplex_side = simplex_side;
  plan.apex_height_squared =
      height_squared(base, split->apex, split->line_points[0], split->line_points[1]);
  return plan;
}

DistanceMatrix blowup(const BlowupPlan& plan) {
  const int m = plan.target_dim;
  if (m < 3) throw std::invalid_argument("blow-up target dimension must be >= 3");
  if (plan.simplex_side < 1) throw std::invalid_argument("simplex side must be >= 1");
  const auto split = facher_split(plan.base, plan.apex);
  if (!split || split->apex != plan.apex) throw std::invalid_argument("blow-up base is not facher");
  const auto report = verify_integral_set(plan.base);
  if (!report.is_integral) throw std::invalid_argument("blow-up base is not integral");
  const Rational h2 =
      height_squared(plan.base, plan.apex, split->line_points[0], split->line_points[1]);
  if (h2 != plan.apex_height_squared)
    throw std::invalid_argument("plan apex height does not match the base");
  if (!circumradius_condition_holds(m, plan.simplex_side, h2))
    throw std::invalid_argument("simplex circumradius " +
                                simplex_circumradius_squared(m, plan.simplex_side).str() +
                                " (squared) does not fit below apex height " + h2.str() +
                                " (squared)");

  const auto& line = split->line_points;
  const auto n_line = static_cast<Eigen::Index>(line.size());
  const Eigen::Index total = n_line + (m - 1);
  IntegerMatrix out = IntegerMatrix::Constant(total, total, Integer(0));
  const auto& pts = plan.base.points();
  const Integer& q = plan.base.radicand();
  for (Eigen::Index i = 0; i < n_line; ++i) {
    for (Eigen::Index j = i + 1; j < n_line; ++j)
      out(i, j) = out(j, i) = *integer_distance(pts[line[i]], pts[line[j]], q);
    const Integer to_apex = *integer_distance(pts[line[i]], pts[plan.apex], q);
    for (Eigen::Index v = n_line; v < total; ++v) out(i, v) = out(v, i) = to_apex;
  }
  for (Eigen::Index v = n_line; v < total; ++v)
    for (Eigen::Index w = v + 1; w < total; ++w) out(v, w) = out(w, v) = plan.simplex_side;

  DistanceMatrix dm(std::move(out));
  const auto verdict = realizable_dim(dm);
  if (!verdict.dimension || *verdict.dimension != m)
    throw std::logic_error("blow-up is not realized in dimension " + std::to_string(m));
  return dm;
}

PrimeSetResult prime_set(int m, int n, long d, bool unique_min) {
  if (m < 3) throw std::invalid_argument("prime_set needs m >= 3");
  if (n < m + 1) throw std::invalid_argument("prime_set needs n >= m + 1");
  if (d < 1) throw std::invalid_argument("prime_set needs d >= 1");
  const auto base_size = static_cast<std::size_t>(n - m + 2);
  const Integer dist(d);
  const Integer side = dist + 1;

  int k = unique_min ? 2 : 1;
  while ((std::size_t{1} << k) + 1 < base_size) ++k;
  // Apex height after dilation by d is d sqrt(a) / 2.
  for (;; ++k) {
    const Integer a = fermat_like(k, -1);
    if (circumradius_condition_holds(m, side, Rational(Integer(dist * dist * a), Integer(4))))
      break;
  }

  const Construction planar = dilate(trim(construction1(k), base_size), dist);
  const auto plan = make_blowup_plan(planar.set, m, side, planar.apex_index());
  PrimeSetResult out{blowup(plan), k, planar.roles, dist, m, side, false};

  const auto all = out.matrix.multiset();
  out.min_distance_unique =
      all.front() == dist && (all.size() == 1 || all[1] != dist);
  if (out.matrix.gcd() != 1) throw std::logic_error("prime_set produced a non-prime set");
  return out;
}

}  // namespace ips
