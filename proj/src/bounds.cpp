#include "ips/bounds.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ips {

namespace {

RationalInterval point(const Rational& x) { return RationalInterval(x); }

RationalInterval sqrt3() { return interval_sqrt(Rational(3), bounds_sqrt_precision()); }

void require_b(const Integer& b) {
  if (b <= 10000) throw std::invalid_argument("b must exceed 10000");
}

}  // namespace

Rational bounds_sqrt_precision() { return pow2(-80); }

PpsBounds pps_bounds(long k, const Rational& precision) {
  if (k < 2) throw std::invalid_argument("pps_bounds needs k >= 2");
  const RationalInterval r3 = interval_sqrt(Rational(3), precision);
  const RationalInterval lower =
      interval_sqrt(point(Rational(2)) / (point(Rational(k)) * r3), precision);
  const Rational u(Integer(1), Integer(k - 1));
  const RationalInterval inner = point(u * u) + point(Rational(2) * u) / r3;
  return {lower, point(u) + interval_sqrt(inner, precision)};
}

RationalInterval beta_for(long cutoff_n) {
  if (cutoff_n < 3) throw std::invalid_argument("beta needs cutoff n >= 3");
  const Rational inv(Integer(1), Integer(cutoff_n - 1));
  const auto p = bounds_sqrt_precision();
  return interval_sqrt(inv, p) + interval_sqrt(point(Rational(2)) / sqrt3() + point(inv), p);
}

RationalInterval min_segment_length(long t) {
  if (t < 2) throw std::invalid_argument("min_segment_length needs t >= 2");
  // Increasing in sqrt(t) once t is fixed: s (4t + 5)/6 - 3t/2.
  const RationalInterval s = interval_sqrt(Rational(t), bounds_sqrt_precision());
  const Rational slope(Integer(4 * t + 5), Integer(6));
  const Rational shift(Integer(3 * t), Integer(2));
  return RationalInterval(s.low() * slope - shift, s.high() * slope - shift);
}

bool segment_length_exceeds(long t, const Integer& bound) {
  if (t < 2) throw std::invalid_argument("segment length needs t >= 2");
  // sqrt(t) (4t + 5) > 6 bound + 9t, both sides compared after squaring.
  const Integer rhs = 6 * bound + 9 * Integer(t);
  if (rhs < 0) return true;
  const Integer lhs_factor = 4 * Integer(t) + 5;
  return Integer(t) * lhs_factor * lhs_factor > rhs * rhs;
}

long threshold_t(const Integer& diameter) {
  if (diameter < 1) throw std::invalid_argument("threshold_t needs diameter >= 1");
  long lo = 2, hi = 2;
  while (!segment_length_exceeds(hi, diameter)) {
    lo = hi;
    hi *= 2;
  }
  if (segment_length_exceeds(lo, diameter)) return lo;
  while (hi - lo > 1) {
    const long mid = lo + (hi - lo) / 2;
    (segment_length_exceeds(mid, diameter) ? hi : lo) = mid;
  }
  return hi;
}

RationalInterval gamma2_for(long t) {
  if (t <= 6) throw std::invalid_argument("gamma2 needs t > 6");
  return point(Rational(t - 6)) / min_segment_length(t);
}

RationalInterval lambda_min(const RationalInterval& beta, const RationalInterval& gamma2) {
  const RationalInterval b2 = beta * beta;
  const RationalInterval disc = gamma2 * gamma2 + point(Rational(16)) * b2;
  const RationalInterval num = interval_sqrt(disc, bounds_sqrt_precision()) - gamma2;
  return num / (point(Rational(8)) * b2);
}

BoundsConstants constants_for(const Cutoffs& cutoffs) {
  if (cutoffs.diameter < 1) throw std::invalid_argument("cutoff diameter must be >= 1");
  if (cutoffs.n < 4) throw std::invalid_argument("cutoff n must be >= 4");
  if (cutoffs.t <= 6) throw std::invalid_argument("cutoff t must exceed 6");
  if (!segment_length_exceeds(cutoffs.t, cutoffs.diameter))
    throw std::invalid_argument("cutoff t = " + std::to_string(cutoffs.t) +
                                " does not force a segment longer than the cutoff diameter");
  BoundsConstants c;
  c.cutoffs = cutoffs;
  c.beta = beta_for(cutoffs.n);
  c.gamma2 = gamma2_for(cutoffs.t);
  c.lambda_min = lambda_min(c.beta, c.gamma2);
  c.gamma = c.lambda_min;
  return c;
}

BoundsConstants constants() {
  static const BoundsConstants cached = constants_for(Cutoffs{});
  return cached;
}

RationalInterval gamma_for_cutoffs(const Cutoffs& cutoffs) { return constants_for(cutoffs).gamma; }

RationalInterval limit_constant() {
  // c^4 = 3/64
  const auto p = bounds_sqrt_precision();
  return interval_sqrt(interval_sqrt(Rational(3, 64), p), p);
}

Cutoffs cutoffs_for_diameter(const Integer& diameter) {
  if (diameter < 1) throw std::invalid_argument("diameter must be >= 1");
  const RationalInterval ratio = point(Rational(diameter)) / limit_constant();
  const Integer lo = floor(ratio.low()), hi = floor(ratio.high());
  if (lo != hi) throw std::runtime_error("floor(D / c) not resolved at this precision");
  if (!lo.fits_slong_p()) throw std::out_of_range("cutoff n exceeds the supported range");
  return Cutoffs{lo.get_si(), diameter, threshold_t(diameter)};
}

bool beta_envelope_holds(long k, long cutoff_n) {
  if (k < 2) throw std::invalid_argument("beta envelope needs k >= 2");
  if (cutoff_n < 3) throw std::invalid_argument("beta needs cutoff n >= 3");
  // Both sides are 1/(k-1)-style term plus a square root; compare termwise.
  if (k - 1 >= cutoff_n - 1) return true;
  const RationalInterval upper = pps_bounds(k).upper;
  const RationalInterval envelope =
      beta_for(cutoff_n) / interval_sqrt(Rational(k - 1), bounds_sqrt_precision());
  if (upper.high() <= envelope.low()) return true;
  if (upper.low() > envelope.high()) return false;
  throw std::runtime_error("beta envelope comparison not resolved at this precision");
}

Integer min_segment_length_exact(long n) {
  if (n < 1) throw std::invalid_argument("min_segment_length_exact needs n >= 1");
  const Integer m(n);
  return m * (4 * m * m + 3 * m - 1) / 6;
}

Integer max_collinear(const Integer& b) {
  require_b(b);
  return floor(constants().gamma2.high() * Rational(b) + Rational(6));
}

RationalInterval point_count_bound(const Integer& b, const RationalInterval& phi_upper) {
  require_b(b);
  const RationalInterval bb = point(Rational(b));
  return point(Rational(4)) * bb * bb * phi_upper * phi_upper + constants().gamma2 * bb +
         point(Rational(2));
}

RationalInterval diameter_lower(long n) {
  if (n < 4) throw std::invalid_argument("diameter_lower needs n >= 4");
  const auto& k = constants();
  const RationalInterval value = n <= k.cutoffs.n
                                     ? limit_constant() * point(Rational(n))
                                     : k.gamma * point(Rational(n - 2));
  if (value.low() <= Rational(Integer(5 * Integer(n)), Integer(11)))
    throw std::logic_error("diameter bound does not exceed 5n/11 at n = " + std::to_string(n));
  return value;
}

std::map<long, Integer> load_known_values(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.substr(0, 10) != "n,diameter")
    throw std::runtime_error(path.string() + ": expected header n,diameter");
  std::map<long, Integer> out;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error(path.string() + ":" + std::to_string(row) + ": missing comma");
    try {
      std::size_t used = 0;
      const long n = std::stol(line.substr(0, comma), &used);
      if (used != comma || n < 3) throw std::invalid_argument("n");
      const Integer d(line.substr(comma + 1), 10);
      if (d < 1) throw std::invalid_argument("diameter");
      if (!out.emplace(n, d).second) throw std::invalid_argument("duplicate n");
    } catch (const std::exception&) {
      throw std::runtime_error(path.string() + ":" + std::to_string(row) + ": malformed row");
    }
  }
  return out;
}

}  // namespace ips
