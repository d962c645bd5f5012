#pragma once

// Certified evaluation of the packing-based lower bounds on the diameter of
// planar integral point sets. Every irrational quantity is a RationalInterval.

#include <filesystem>
#include <map>

#include "ips/exactnum.hpp"

namespace ips {

/// Precision handed to interval_sqrt by every routine here.
Rational bounds_sqrt_precision();

struct PpsBounds {
  RationalInterval lower;  // sqrt(2 / (k sqrt3))
  RationalInterval upper;  // 1/(k-1) + sqrt(1/(k-1)^2 + 2/((k-1) sqrt3))
};

/// Bounds on the maximal minimum distance of k points in a unit square.
PpsBounds pps_bounds(long k, const Rational& precision = bounds_sqrt_precision());

/// Cutoffs from which the constants are derived: exact d(2, n) is known up to
/// `n` and every set of diameter <= `diameter` is known; `t` is the smallest
/// collinear count whose forced segment length exceeds `diameter`.
struct Cutoffs {
  long n = 21491;
  Integer diameter = 10000;
  long t = 647;
};

struct BoundsConstants {
  RationalInterval beta;
  RationalInterval gamma2;
  RationalInterval gamma;
  RationalInterval lambda_min;
  Cutoffs cutoffs;
};

/// beta = 1/sqrt(n-1) + sqrt(2/sqrt3 + 1/(n-1)) for the cutoff n.
RationalInterval beta_for(long cutoff_n);
/// gamma2 = (t - 6) / L(t) with L the segment-length bound below.
RationalInterval gamma2_for(long t);
/// Positive root of 4 beta^2 x^2 + gamma2 x - 1.
RationalInterval lambda_min(const RationalInterval& beta, const RationalInterval& gamma2);

BoundsConstants constants();
BoundsConstants constants_for(const Cutoffs& cutoffs);
RationalInterval gamma_for_cutoffs(const Cutoffs& cutoffs);

/// Cutoffs for a hypothetical table complete up to diameter D: n = floor(D/c)
/// with c = 3^(1/4) 2^(-3/2), t = threshold_t(D).
Cutoffs cutoffs_for_diameter(const Integer& diameter);

/// 3^(1/4) * 2^(-3/2).
RationalInterval limit_constant();

/// upper(k) <= beta / sqrt(k-1). Exact termwise comparison once k - 1 reaches
/// cutoff_n - 1; certified interval comparison below that.
bool beta_envelope_holds(long k, long cutoff_n = Cutoffs{}.n);

/// (2/3) n^3 + (1/2) n^2 - (1/6) n.
Integer min_segment_length_exact(long n);

/// (2/3) t^(3/2) - (3/2) t + (5/6) t^(1/2).
RationalInterval min_segment_length(long t);

/// Exact test of min_segment_length(t) > bound.
bool segment_length_exceeds(long t, const Integer& bound);

/// Smallest t >= 2 with min_segment_length(t) > diameter.
long threshold_t(const Integer& diameter);

/// floor(gamma2 * b + 6), using the upper end of gamma2; requires b > 10000.
Integer max_collinear(const Integer& b);

/// 4 b^2 phi^2 + gamma2 b + 2; requires b > 10000.
RationalInterval point_count_bound(const Integer& b, const RationalInterval& phi_upper);

/// c n for 4 <= n <= cutoff n, gamma (n - 2) beyond. Both strictly exceed 5n/11.
RationalInterval diameter_lower(long n);

/// Reference upper value for beta that reports compare the certified
/// interval against.
inline constexpr const char* kBetaReferenceBound = "107464/100000";

/// Reads a CSV with header "n,diameter".
std::map<long, Integer> load_known_values(const std::filesystem::path& path);

}  // namespace ips
