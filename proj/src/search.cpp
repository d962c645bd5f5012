#include "ips/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace ips {

namespace {

using i64 = std::int64_t;

std::optional<i64> exact_root(i64 n) {
  if (n < 0) return std::nullopt;
  auto r = static_cast<i64>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

// A point described by its distances to the three fixed points.
struct Candidate {
  i64 a, b, c;
  i64 h0, h1;  // row of 2G against the fixed points 1 and 2 (base 0)
};

struct Branch {
  i64 diameter, a2, e2;  // d01, d02, d12
};

struct BranchResult {
  std::optional<DistanceMatrix> witness;
  std::uint64_t nodes = 0;
};

class CliqueSearch {
 public:
  CliqueSearch(const Branch& br, int need) : br_(br), need_(need) {
    const i64 D = br.diameter, D2 = D * D, a2 = br.a2, e2 = br.e2;
    m_ = D2 + a2 * a2 - e2 * e2;
    adj00_ = 2 * a2 * a2;
    adj11_ = 2 * D2;
    det_ = 2 * D2 * 2 * a2 * a2 - m_ * m_;
    for (i64 a = 1; a <= D; ++a)
      for (i64 b = std::max<i64>(1, D - a); b <= D; ++b) {
        if (std::abs(a - b) > D) continue;
        const i64 lo = std::max({i64{1}, std::abs(a - a2), std::abs(b - e2)});
        const i64 hi = std::min({D, a + a2, b + e2});
        for (i64 c = lo; c <= hi; ++c) {
          const i64 h0 = D2 + a * a - b * b, h1 = a2 * a2 + a * a - c * c;
          if (quad(h0, h1, h0, h1) == det_ * 2 * a * a) cands_.push_back({a, b, c, h0, h1});
        }
      }
    const std::size_t m = cands_.size();
    dist_.assign(m * m, 0);
    for (std::size_t s = 0; s < m; ++s)
      for (std::size_t t = s + 1; t < m; ++t) {
        const i64 num = quad(cands_[s].h0, cands_[s].h1, cands_[t].h0, cands_[t].h1);
        if (num % det_ != 0) continue;
        const i64 d2 = cands_[s].a * cands_[s].a + cands_[t].a * cands_[t].a - num / det_;
        if (d2 < 1 || d2 > D2) continue;
        if (const auto d = exact_root(d2)) dist_[s * m + t] = dist_[t * m + s] = *d;
      }
  }

  BranchResult run() {
    BranchResult out;
    chosen_.clear();
    if (extend(0, out.nodes)) out.witness = witness();
    return out;
  }

 private:
  i64 quad(i64 x0, i64 x1, i64 y0, i64 y1) const {
    return x0 * adj00_ * y0 - x0 * m_ * y1 - x1 * m_ * y0 + x1 * adj11_ * y1;
  }

  bool extend(std::size_t start, std::uint64_t& nodes) {
    ++nodes;
    if (static_cast<int>(chosen_.size()) == need_) return true;
    const std::size_t m = cands_.size();
    for (std::size_t i = start; i < m; ++i) {
      if (m - i < static_cast<std::size_t>(need_) - chosen_.size()) break;
      const bool ok = std::all_of(chosen_.begin(), chosen_.end(),
                                  [&](std::size_t j) { return dist_[i * m + j] != 0; });
      if (!ok) continue;
      chosen_.push_back(i);
      if (extend(i + 1, nodes)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  DistanceMatrix witness() const {
    const auto n = static_cast<Eigen::Index>(3 + chosen_.size());
    IntegerMatrix w = IntegerMatrix::Constant(n, n, Integer(0));
    auto set = [&](Eigen::Index i, Eigen::Index j, i64 v) {
      w(i, j) = w(j, i) = Integer(static_cast<long>(v));
    };
    set(0, 1, br_.diameter);
    set(0, 2, br_.a2);
    set(1, 2, br_.e2);
    const std::size_t m = cands_.size();
    for (std::size_t s = 0; s < chosen_.size(); ++s) {
      const auto& c = cands_[chosen_[s]];
      const auto row = static_cast<Eigen::Index>(3 + s);
      set(0, row, c.a);
      set(1, row, c.b);
      set(2, row, c.c);
      for (std::size_t t = s + 1; t < chosen_.size(); ++t)
        set(row, static_cast<Eigen::Index>(3 + t), dist_[chosen_[s] * m + chosen_[t]]);
    }
    return DistanceMatrix(std::move(w));
  }

  Branch br_;
  int need_;
  i64 m_, adj00_, adj11_, det_;
  std::vector<Candidate> cands_;
  std::vector<i64> dist_;
  std::vector<std::size_t> chosen_;
};

std::vector<long> flatten(const IntegerMatrix& m) {
  std::vector<long> out;
  out.reserve(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out.push_back(m(i, j).get_si());
  return out;
}

}  // namespace

SearchOutcome min_diameter(int n, long b_max, unsigned jobs) {
  if (n < 3 || n > 7) throw std::invalid_argument("min_diameter supports 3 <= n <= 7");
  if (b_max < 1 || b_max > 50) throw std::invalid_argument("min_diameter supports 1 <= b_max <= 50");
  SearchOutcome out;
  out.n = n;
  out.bound = b_max;
  const unsigned workers = std::max(1u, jobs);

  for (i64 D = 1; D <= b_max; ++D) {
    std::vector<Branch> branches;
    for (i64 a2 = 1; a2 <= D; ++a2)
      for (i64 e2 = std::max(a2, D - a2 + 1); e2 <= D; ++e2) branches.push_back({D, a2, e2});

    std::vector<BranchResult> results(branches.size());
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
    auto work = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= branches.size() || i > best.load()) return;
        results[i] = CliqueSearch(branches[i], n - 3).run();
        if (results[i].witness) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }

    const std::size_t winner = best.load();
    const std::size_t counted = std::min(winner, branches.size() - 1);
    for (std::size_t i = 0; i <= counted && !branches.empty(); ++i)
      out.nodes_explored += results[i].nodes;
    if (winner < branches.size()) {
      DistanceMatrix w = *results[winner].witness;
      const auto verdict = realizable_dim(w);
      if (verdict.dimension != 2) throw std::logic_error("search witness is not planar");
      out.result = Found{Integer(static_cast<long>(D)), std::move(w)};
      return out;
    }
  }
  return out;
}

DistanceMatrix canonical_form(const DistanceMatrix& dm) {
  const Eigen::Index n = dm.size();
  if (n > 8) throw std::invalid_argument("canonical_form supports at most 8 points");
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  IntegerMatrix best;
  std::vector<long> best_key;
  do {
    IntegerMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        m(i, j) = dm(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    auto key = flatten(m);
    if (best_key.empty() || key < best_key) {
      best_key = std::move(key);
      best = std::move(m);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return DistanceMatrix(std::move(best));
}

bool has_collinear_triple_with_unit_pair(const DistanceMatrix& dm) {
  const Eigen::Index n = dm.size();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (dm(i, j) != 1) continue;
      for (Eigen::Index k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Integer diff = dm(i, k) - dm(j, k);
        if (diff == 1 || diff == -1) return true;  // degenerate triangle, Heron zero
      }
    }
  return false;
}

std::vector<DistanceMatrix> enumerate_unit4(long b_max) {
  if (b_max < 1 || b_max > 50) throw std::invalid_argument("enumerate_unit4 supports 1 <= b_max <= 50");
  const i64 B = b_max;
  std::set<std::vector<long>> seen;
  std::vector<DistanceMatrix> out;
  for (i64 d02 = 1; d02 <= B; ++d02)
    for (i64 d12 = std::max<i64>(1, d02 - 1); d12 <= std::min(B, d02 + 1); ++d12)
      for (i64 d03 = 1; d03 <= B; ++d03)
        for (i64 d13 = std::max<i64>(1, d03 - 1); d13 <= std::min(B, d03 + 1); ++d13) {
          const i64 lo = std::max({i64{1}, std::abs(d02 - d03), std::abs(d12 - d13)});
          const i64 hi = std::min({B, d02 + d03, d12 + d13});
          for (i64 d23 = lo; d23 <= hi; ++d23) {
            // 2G against point 0; a non-zero determinant means three dimensions.
            const i64 g11 = 2, g22 = 2 * d02 * d02, g33 = 2 * d03 * d03;
            const i64 g12 = 1 + d02 * d02 - d12 * d12;
            const i64 g13 = 1 + d03 * d03 - d13 * d13;
            const i64 g23 = d02 * d02 + d03 * d03 - d23 * d23;
            const i64 det = g11 * (g22 * g33 - g23 * g23) - g12 * (g12 * g33 - g23 * g13) +
                            g13 * (g12 * g23 - g22 * g13);
            if (det != 0) continue;
            IntegerMatrix m(4, 4);
            const long v[4][4] = {{0, 1, static_cast<long>(d02), static_cast<long>(d03)},
                                  {1, 0, static_cast<long>(d12), static_cast<long>(d13)},
                                  {static_cast<long>(d02), static_cast<long>(d12), 0, static_cast<long>(d23)},
                                  {static_cast<long>(d03), static_cast<long>(d13), static_cast<long>(d23), 0}};
            for (int i = 0; i < 4; ++i)
              for (int j = 0; j < 4; ++j) m(i, j) = v[i][j];
            DistanceMatrix dm(std::move(m));
            if (realizable_dim(dm).dimension != 2) continue;
            DistanceMatrix canon = canonical_form(dm);
            if (seen.insert(flatten(canon.entries())).second) out.push_back(std::move(canon));
          }
        }
  std::sort(out.begin(), out.end(), [](const DistanceMatrix& x, const DistanceMatrix& y) {
    return flatten(x.entries()) < flatten(y.entries());
  });
  return out;
}

UnitSetClassification classify_unit_set(const PlanarPointSet& s) {
  const auto report = verify_integral_set(s);
  if (!report.is_integral) throw std::invalid_argument("point set is not integral");
  if (!report.full_dimensional) throw std::invalid_argument("point set is collinear");
  const Integer& q = s.radicand();
  std::vector<std::pair<std::size_t, std::size_t>> unit_pairs;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (dist_squared(s[i], s[j], q) == 1) unit_pairs.emplace_back(i, j);
  if (unit_pairs.empty()) throw std::invalid_argument("point set has no unit distance");

  if (s.size() > 3 && unit_pairs.size() > 1) {
    Violation v{"unit distance occurs " + std::to_string(unit_pairs.size()) + " times", {}};
    for (const auto& [i, j] : unit_pairs) {
      v.witness.push_back(i);
      v.witness.push_back(j);
    }
    return v;
  }
  const auto [i, j] = unit_pairs.front();
  const auto line = points_on_line(s, i, j);
  if (line.size() != s.size() - 1)
    return Violation{std::to_string(line.size()) + " of " + std::to_string(s.size()) +
                         " points on the unit pair's line",
                     line};
  std::size_t apex = 0;
  while (std::find(line.begin(), line.end(), apex) != line.end()) ++apex;
  if (dist_squared(s[apex], s[i], q) != dist_squared(s[apex], s[j], q))
    return Violation{"apex is not on the perpendicular bisector of the unit pair", {apex, i, j}};
  return FacherVerdict{line, apex, {i, j}};
}

MaximalityVerdict bounded_maximality(const PlanarPointSet& s, long radius_bound,
                                     std::size_t base_a, std::size_t base_b) {
  const auto report = verify_integral_set(s);
  if (!report.is_integral) throw std::invalid_argument("point set is not integral");
  if (!report.full_dimensional) throw std::invalid_argument("point set is collinear");
  if (radius_bound < report.diameter) throw std::invalid_argument("radius bound below the diameter");
  if (base_a == base_b || base_a >= s.size() || base_b >= s.size())
    throw std::invalid_argument("degenerate base pair");

  const Integer& q = s.radicand();
  const PlanarPoint& A = s[base_a];
  const PlanarPoint& B = s[base_b];
  const Rational d(*integer_distance(A, B, q));
  const Rational dx = B.x - A.x, dy = B.y_coeff - A.y_coeff;
  const Rational bound{Integer(radius_bound)};

  auto extends = [&](const PlanarPoint& p) {
    for (const auto& other : s.points()) {
      if (other == p) return false;
      const auto dist = integer_distance(p, other, q);
      if (!dist || Rational(*dist) > bound) return false;
    }
    return true;
  };

  for (long r1 = 1; r1 <= radius_bound; ++r1)
    for (long r2 = 1; r2 <= radius_bound; ++r2) {
      const Rational u = (Rational(r1 * r1) - Rational(r2 * r2) + d * d) / (Rational(2) * d);
      const Rational v2 = Rational(r1 * r1) - u * u;
      if (v2.sign() < 0) continue;
      // The offset v along the normal must be w sqrt(q) to stay in the set's field.
      const auto w = rational_sqrt(v2 / Rational(q));
      if (!w) continue;
      for (const Rational& sw : {-*w, *w}) {
        const PlanarPoint p{A.x + u * dx / d - sw * Rational(q) * dy / d,
                            A.y_coeff + u * dy / d + sw * dx / d};
        if (extends(p)) return Extendable{p};
        if (w->is_zero()) break;
      }
    }
  return MaximalWithin{radius_bound};
}

}  // namespace ips
