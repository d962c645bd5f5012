#pragma once

#include <cstdint>
#include <vector>

#include "ips/constructions.hpp"
#include "ips/dmatrix.hpp"
#include "ips/geometry.hpp"

namespace ips::testing {

// splitmix64; enough for hand-rolled property generators.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rational rational(long span, long max_den) {
    return Rational(Integer(range(-span * max_den, span * max_den)), Integer(range(1, max_den)));
  }

 private:
  std::uint64_t state_;
};

inline PlanarPointSet equilateral() {
  return PlanarPointSet(3, {{Rational(-1, 2), 0}, {Rational(1, 2), 0}, {0, Rational(1, 2)}});
}

inline PlanarPointSet k2_set() { return construction1(2).set; }

inline DistanceMatrix dm(std::vector<std::vector<long>> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntegerMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return DistanceMatrix(std::move(m));
}

inline std::vector<long> as_longs(const std::vector<Integer>& v) {
  std::vector<long> out;
  for (const auto& x : v) out.push_back(x.get_si());
  return out;
}

// Every planar set the constructions produce for small parameters.
inline std::vector<PlanarPointSet> generated_sets() {
  std::vector<PlanarPointSet> out{equilateral()};
  for (int k = 1; k <= 3; ++k) {
    const auto c = construction1(k);
    for (std::size_t n = 3; n <= c.set.size(); ++n) {
      const auto t = trim(c, n);
      out.push_back(t.set);
      out.push_back(dilate(t.set, Integer(2)));
    }
  }
  return out;
}

}  // namespace ips::testing
