#pragma once

// Dimension-agnostic integral point sets as integer distance matrices, with an
// exact realizability oracle (Gram rank and positive semidefiniteness).

#include <optional>
#include <type_traits>
#include <vector>

#include "ips/geometry.hpp"
#include "ips/matrix.hpp"

namespace ips {

class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Requires a square, symmetric matrix with zero diagonal and off-diagonal
  /// entries >= 1.
  explicit DistanceMatrix(IntegerMatrix entries);

  Eigen::Index size() const { return entries_.rows(); }
  const Integer& operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }
  const IntegerMatrix& entries() const { return entries_; }

  Integer diameter() const;
  Integer min_distance() const;
  /// gcd of all off-diagonal entries.
  Integer gcd() const;
  /// Sorted off-diagonal entries, one per unordered pair.
  std::vector<Integer> multiset() const;

  friend bool operator==(const DistanceMatrix& a, const DistanceMatrix& b) {
    return a.size() == b.size() && (a.size() == 0 || a.entries_ == b.entries_);
  }

 private:
  IntegerMatrix entries_;
};

DistanceMatrix from_points(const PlanarPointSet& s);

/// G_ij = (d_bi^2 + d_bj^2 - d_ij^2) / 2 over the points other than `base`.
RationalMatrix gram(const DistanceMatrix& dm, Eigen::Index base = 0);

struct RankPsd {
  Eigen::Index rank = 0;
  bool psd = true;
};

namespace detail {
RankPsd rank_psd_fraction_free(IntegerMatrix m);
IntegerMatrix clear_denominators(const RationalMatrix& m);
}  // namespace detail

/// Exact rank and PSD verdict of a symmetric matrix over Integer or Rational.
/// Denominators are cleared first; elimination is fraction-free (Bareiss) with
/// symmetric pivoting on the largest remaining diagonal entry.
template <typename Derived>
RankPsd rank_psd(const Eigen::MatrixBase<Derived>& g) {
  using Scalar = typename Derived::Scalar;
  static_assert(std::is_same_v<Scalar, Rational> || std::is_same_v<Scalar, Integer>,
                "rank_psd needs exact scalars");
  if constexpr (std::is_same_v<Scalar, Rational>)
    return detail::rank_psd_fraction_free(detail::clear_denominators(g.eval()));
  else
    return detail::rank_psd_fraction_free(g.eval());
}

/// Determinant by fraction-free elimination.
Integer bareiss_determinant(IntegerMatrix m);

/// Bordered Cayley-Menger determinant of squared distances.
Integer cayley_menger_determinant(const DistanceMatrix& dm);

struct RealizabilityVerdict {
  Eigen::Index gram_rank = 0;
  bool psd = false;
  std::optional<Eigen::Index> dimension;    // affine span dimension when realizable
  std::optional<Eigen::Index> full_dim_in;  // the m with the set in M(m, n)
};

RealizabilityVerdict realizable_dim(const DistanceMatrix& dm);

}  // namespace ips
