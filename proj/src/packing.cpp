#include "ips/packing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace ips {

namespace {

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

double min_distance(const Eigen::Matrix2Xd& x) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < x.cols(); ++i)
    for (Eigen::Index j = i + 1; j < x.cols(); ++j)
      best = std::min(best, (x.col(i) - x.col(j)).norm());
  return best;
}

double nearest(const Eigen::Matrix2Xd& x, Eigen::Index i, const Eigen::Vector2d& at) {
  double best = std::numeric_limits<double>::infinity();
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    if (j != i) best = std::min(best, (at - x.col(j)).norm());
  return best;
}

void clamp_unit(Eigen::Matrix2Xd& x) { x = x.cwiseMax(0.0).cwiseMin(1.0); }

// Sum over pairs of (scale / d)^p.
double energy(const Eigen::Matrix2Xd& x, double p, double scale) {
  double e = 0;
  for (Eigen::Index i = 0; i < x.cols(); ++i)
    for (Eigen::Index j = i + 1; j < x.cols(); ++j)
      e += std::pow(scale / std::max((x.col(i) - x.col(j)).norm(), 1e-300), p);
  return e;
}

Eigen::Matrix2Xd energy_gradient(const Eigen::Matrix2Xd& x, double p, double scale) {
  Eigen::Matrix2Xd g = Eigen::Matrix2Xd::Zero(2, x.cols());
  for (Eigen::Index i = 0; i < x.cols(); ++i)
    for (Eigen::Index j = i + 1; j < x.cols(); ++j) {
      const Eigen::Vector2d diff = x.col(i) - x.col(j);
      const double d = std::max(diff.norm(), 1e-300);
      const Eigen::Vector2d term = (-p * std::pow(scale / d, p) / (d * d)) * diff;
      g.col(i) += term;
      g.col(j) -= term;
    }
  return g;
}

void descend(Eigen::Matrix2Xd& x, int steps) {
  static constexpr double kExponents[] = {8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096};
  const int per_stage = std::max(1, steps / 10);
  for (double p : kExponents) {
    double step = 0.05;
    for (int s = 0; s < per_stage && step > 1e-12; ++s) {
      const double scale = min_distance(x);
      const double e0 = energy(x, p, scale);
      const Eigen::Matrix2Xd g = energy_gradient(x, p, scale);
      const double gn = g.norm();
      if (gn == 0) break;
      Eigen::Matrix2Xd trial = x - (step / gn) * g;
      clamp_unit(trial);
      if (energy(trial, p, scale) < e0) {
        x = std::move(trial);
        step *= 1.2;
      } else {
        step *= 0.5;
      }
    }
  }
}

void polish(Eigen::Matrix2Xd& x, int steps, SplitMix& rng) {
  const Eigen::Index k = x.cols();
  double radius = 0.1 * min_distance(x);
  int failures = 0;
  for (int s = 0; s < steps && radius > 1e-13; ++s) {
    const double current = min_distance(x);
    // Endpoints of the closest pair are the most constrained points.
    Eigen::Index a = 0, b = 1;
    double best = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < k; ++i)
      for (Eigen::Index j = i + 1; j < k; ++j) {
        const double d = (x.col(i) - x.col(j)).norm();
        if (d < best) {
          best = d;
          a = i;
          b = j;
        }
      }
    bool moved = false;
    for (Eigen::Index i : {a, b}) {
      const double angle = 2 * M_PI * rng.uniform();
      const double r = radius * rng.uniform();
      Eigen::Vector2d at = x.col(i) + r * Eigen::Vector2d(std::cos(angle), std::sin(angle));
      at = at.cwiseMax(0.0).cwiseMin(1.0);
      const double own = nearest(x, i, x.col(i));
      const double moved_own = nearest(x, i, at);
      if (moved_own > own && moved_own >= current) {
        x.col(i) = at;
        moved = true;
        break;
      }
    }
    if (moved) {
      failures = 0;
    } else if (++failures >= 40) {
      radius *= 0.5;
      failures = 0;
    }
  }
}

bool better(const Packing& a, const Packing& b) {
  if (a.min_pairwise != b.min_pairwise) return a.min_pairwise > b.min_pairwise;
  const auto n = a.coordinates.size();
  return std::lexicographical_compare(a.coordinates.data(), a.coordinates.data() + n,
                                      b.coordinates.data(), b.coordinates.data() + n);
}

Packing solve_restart(int k, std::uint64_t seed, int restart, int iterations) {
  SplitMix rng(seed ^ (0xd1b54a32d192ed03ULL * static_cast<std::uint64_t>(restart + 1)));
  Eigen::Matrix2Xd x(2, k);
  for (int i = 0; i < k; ++i) x.col(i) = Eigen::Vector2d(rng.uniform(), rng.uniform());
  descend(x, iterations);
  polish(x, iterations, rng);
  return Packing{k, x, min_distance(x)};
}

}  // namespace

Packing pps_solve(int k, const PackingOptions& options) {
  if (k < 2) throw std::invalid_argument("pps_solve needs k >= 2");
  if (options.restarts < 1) throw std::invalid_argument("pps_solve needs restarts >= 1");
  if (options.iterations < 1) throw std::invalid_argument("pps_solve needs iterations >= 1");

  std::vector<Packing> results(static_cast<std::size_t>(options.restarts));
  const unsigned workers =
      std::max(1u, std::min(options.jobs, static_cast<unsigned>(options.restarts)));
  auto run = [&](unsigned w) {
    for (int r = static_cast<int>(w); r < options.restarts; r += static_cast<int>(workers))
      results[static_cast<std::size_t>(r)] = solve_restart(k, options.seed, r, options.iterations);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  return *std::min_element(results.begin(), results.end(), better);
}

Packing pps_solve(int k, std::uint64_t seed, int restarts, int iterations) {
  PackingOptions o;
  o.seed = seed;
  o.restarts = restarts;
  o.iterations = iterations;
  return pps_solve(k, o);
}

PackingValidation pps_validate(const Eigen::Matrix2Xd& coordinates) {
  PackingValidation v;
  v.in_square = (coordinates.array() >= -1e-9).all() && (coordinates.array() <= 1 + 1e-9).all();
  v.min_pairwise = std::numeric_limits<double>::infinity();
  const auto n = coordinates.cols();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double dx = coordinates(0, i) - coordinates(0, j);
      const double dy = coordinates(1, i) - coordinates(1, j);
      v.min_pairwise = std::min(v.min_pairwise, std::hypot(dx, dy));
    }
  if (n < 2) v.min_pairwise = 0.0;
  return v;
}

}  // namespace ips
