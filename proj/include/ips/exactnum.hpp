#pragma once

// Exact scalars: arbitrary-precision integers and rationals, quadratic
// irrationalities p + r*sqrt(q), and certified rational intervals.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ips {

using Integer = mpz_class;

/// Raised when trial division cannot certify a factorization within its limit.
class FactorizationLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational number, always kept in canonical form: the denominator is
/// positive and coprime to the numerator, so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}
  Rational(long v) : value_(v) {}
  Rational(const Integer& v) : value_(v) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& v);

  /// Parses "num/den" or "num"; the result is canonicalized.
  static Rational parse(std::string_view text);

  /// "num/den", or "num" when the denominator is 1.
  std::string str() const;

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_integer() const { return value_.get_den() == 1; }
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

Rational abs(const Rational& x);
Rational square(const Rational& x);
Integer floor(const Rational& x);
Integer ceil(const Rational& x);

/// Dyadic rational 2^exponent (exponent may be negative).
Rational pow2(long exponent);

struct IsqrtResult {
  Integer root;  // floor(sqrt(n))
  bool exact;    // root * root == n
};

IsqrtResult isqrt(const Integer& n);

/// n = squarefree * factor^2 with `squarefree` squarefree.
struct SquarefreeDecomposition {
  Integer squarefree;
  Integer factor;
};

inline constexpr unsigned long kDefaultTrialLimit = 1'000'000;

/// Trial division by every integer up to `trial_limit`. A cofactor left over
/// after that is accepted only when it is provably prime (below limit^2);
/// otherwise FactorizationLimitError is thrown.
SquarefreeDecomposition squarefree_part(const Integer& n,
                                        unsigned long trial_limit = kDefaultTrialLimit);

bool is_squarefree(const Integer& n, unsigned long trial_limit = kDefaultTrialLimit);

/// The exact square root of x when x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

/// p + r*sqrt(q) with q squarefree. Normalized so that r == 0 iff q == 0, and
/// q == 1 is folded into the rational part; equality is therefore exact.
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(Rational rational_part);
  /// Validates that q is non-negative and squarefree.
  QuadraticNumber(Rational rational_part, Rational radical_coefficient, Integer radicand);

  /// Skips the squarefree check; the caller guarantees it.
  static QuadraticNumber unchecked(Rational rational_part, Rational radical_coefficient,
                                   Integer radicand);

  const Rational& rational_part() const { return p_; }
  const Rational& radical_coefficient() const { return r_; }
  const Integer& radicand() const { return q_; }
  bool is_rational() const { return r_.is_zero(); }

  /// Exact sign of p + r*sqrt(q).
  int sign() const;

  QuadraticNumber operator-() const;
  friend QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b);
  friend QuadraticNumber operator*(const QuadraticNumber& a, const Rational& s);
  friend QuadraticNumber operator*(const Rational& s, const QuadraticNumber& a) { return a * s; }
  friend bool operator==(const QuadraticNumber& a, const QuadraticNumber& b) = default;

  QuadraticNumber square() const { return *this * *this; }

  std::string str() const;

 private:
  void normalize();

  Rational p_;
  Rational r_;
  Integer q_ = 0;
};

/// Closed interval [low, high] with exact rational endpoints.
class RationalInterval {
 public:
  RationalInterval() = default;
  RationalInterval(Rational point) : low_(point), high_(std::move(point)) {}
  RationalInterval(Rational low, Rational high);

  const Rational& low() const { return low_; }
  const Rational& high() const { return high_; }
  Rational width() const { return high_ - low_; }
  Rational midpoint() const { return (low_ + high_) / Rational(2); }
  bool contains(const Rational& x) const { return low_ <= x && x <= high_; }
  bool contains(const RationalInterval& x) const { return low_ <= x.low_ && x.high_ <= high_; }
  bool is_point() const { return low_ == high_; }

  /// Rounds the endpoints outward onto the grid 2^-bits.
  RationalInterval rounded_outward(long bits) const;

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator/(const RationalInterval& a, const RationalInterval& b);
  RationalInterval operator-() const { return {-high_, -low_}; }
  friend bool operator==(const RationalInterval& a, const RationalInterval& b) = default;

 private:
  Rational low_;
  Rational high_;
};

/// a.high < b.low
bool certainly_less(const RationalInterval& a, const RationalInterval& b);

inline Rational default_sqrt_precision() { return pow2(-64); }

/// Certified bracket of sqrt(x): low^2 <= x <= high^2 and width <= precision.
/// Exact rational roots come back as a point interval.
RationalInterval interval_sqrt(const Rational& x,
                               const Rational& precision = default_sqrt_precision());
RationalInterval interval_sqrt(const RationalInterval& x,
                               const Rational& precision = default_sqrt_precision());

enum class Rounding { Down, Up };

/// Fixed-point decimal rendering with `digits` fractional digits, rounded in
/// the requested direction (so interval endpoints stay outward-rounded).
std::string to_decimal(const Rational& x, int digits, Rounding rounding);

}  // namespace ips
