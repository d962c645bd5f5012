#include "ips/exactnum.hpp"

#include <algorithm>
#include <cctype>

namespace ips {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(const mpq_class& v) : value_(v) { value_.canonicalize(); }

namespace {

bool parse_integer(std::string_view text, Integer& out) {
  if (text.empty()) return false;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return out.set_str(digits, 10) == 0;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  Integer num;
  Integer den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(text, num)
                      : parse_integer(text.substr(0, slash), num) &&
                            parse_integer(text.substr(slash + 1), den);
  if (!ok) throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  return Rational(num, den);
}

std::string Rational::str() const {
  std::string s = value_.get_num().get_str();
  if (value_.get_den() != 1) s += "/" + value_.get_den().get_str();
  return s;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational square(const Rational& x) { return x * x; }

Integer floor(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& x) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), x.mpq().get_num_mpz_t(), x.mpq().get_den_mpz_t());
  return q;
}

Rational pow2(long exponent) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(Integer(1), p) : Rational(p);
}

IsqrtResult isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  IsqrtResult r;
  Integer rem;
  mpz_sqrtrem(r.root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
  r.exact = rem == 0;
  return r;
}

SquarefreeDecomposition squarefree_part(const Integer& n, unsigned long trial_limit) {
  if (n < 1) throw std::domain_error("squarefree_part needs a positive integer");
  Integer rest = n;
  Integer squarefree = 1;
  Integer factor = 1;
  Integer root = isqrt(rest).root;
  for (unsigned long p = 2; p <= trial_limit; p += (p == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(root.get_mpz_t(), p) < 0) break;
    unsigned long exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    if (exponent > 0) root = isqrt(rest).root;
    if (exponent % 2 == 1) squarefree *= p;
    for (unsigned long e = 0; e < exponent / 2; ++e) factor *= p;
  }
  if (rest > 1) {
    // No divisor <= min(limit, sqrt(rest)) remains, so rest is prime whenever
    // rest < (limit + 1)^2.
    const Integer bound = Integer(trial_limit + 1) * (trial_limit + 1);
    if (rest >= bound)
      throw FactorizationLimitError("cofactor " + rest.get_str() +
                                    " exceeds the trial-division limit " +
                                    std::to_string(trial_limit));
    squarefree *= rest;
  }
  return {squarefree, factor};
}

bool is_squarefree(const Integer& n, unsigned long trial_limit) {
  if (n == 0) return false;
  return squarefree_part(n, trial_limit).factor == 1;
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x.sign() < 0) return std::nullopt;
  const auto num = isqrt(x.numerator());
  const auto den = isqrt(x.denominator());
  if (!num.exact || !den.exact) return std::nullopt;
  return Rational(num.root, den.root);
}

// ---------------------------------------------------------------------------

QuadraticNumber::QuadraticNumber(Rational rational_part) : p_(std::move(rational_part)) {}

QuadraticNumber::QuadraticNumber(Rational rational_part, Rational radical_coefficient,
                                 Integer radicand)
    : p_(std::move(rational_part)), r_(std::move(radical_coefficient)), q_(std::move(radicand)) {
  if (q_ < 0) throw std::domain_error("negative radicand");
  if (q_ > 0 && !is_squarefree(q_)) throw std::domain_error("radicand is not squarefree");
  normalize();
}

QuadraticNumber QuadraticNumber::unchecked(Rational rational_part, Rational radical_coefficient,
                                           Integer radicand) {
  QuadraticNumber x;
  x.p_ = std::move(rational_part);
  x.r_ = std::move(radical_coefficient);
  x.q_ = std::move(radicand);
  x.normalize();
  return x;
}

void QuadraticNumber::normalize() {
  if (q_ == 1) {
    p_ += r_;
    r_ = 0;
  }
  if (q_ == 0) r_ = 0;
  if (r_.is_zero()) q_ = 0;
}

int QuadraticNumber::sign() const {
  const int sp = p_.sign();
  const int sr = r_.sign();
  if (sr == 0) return sp;
  if (sp == 0 || sp == sr) return sr;
  // Opposite signs: compare p^2 with r^2 q (never equal for squarefree q > 1).
  return ips::square(p_) > ips::square(r_) * Rational(q_) ? sp : sr;
}

QuadraticNumber QuadraticNumber::operator-() const { return unchecked(-p_, -r_, q_); }

namespace {

Integer common_radicand(const QuadraticNumber& a, const QuadraticNumber& b) {
  if (a.radicand() == 0) return b.radicand();
  if (b.radicand() == 0 || a.radicand() == b.radicand()) return a.radicand();
  throw std::domain_error("quadratic numbers with different radicands");
}

}  // namespace

QuadraticNumber operator+(const QuadraticNumber& a, const QuadraticNumber& b) {
  return QuadraticNumber::unchecked(a.p_ + b.p_, a.r_ + b.r_, common_radicand(a, b));
}

QuadraticNumber operator-(const QuadraticNumber& a, const QuadraticNumber& b) {
  return QuadraticNumber::unchecked(a.p_ - b.p_, a.r_ - b.r_, common_radicand(a, b));
}

QuadraticNumber operator*(const QuadraticNumber& a, const QuadraticNumber& b) {
  const Integer q = common_radicand(a, b);
  return QuadraticNumber::unchecked(a.p_ * b.p_ + a.r_ * b.r_ * Rational(q),
                                    a.p_ * b.r_ + a.r_ * b.p_, q);
}

QuadraticNumber operator*(const QuadraticNumber& a, const Rational& s) {
  return QuadraticNumber::unchecked(a.p_ * s, a.r_ * s, a.q_);
}

std::string QuadraticNumber::str() const {
  if (is_rational()) return p_.str();
  return p_.str() + " + " + r_.str() + "*sqrt(" + q_.get_str() + ")";
}

// ---------------------------------------------------------------------------

RationalInterval::RationalInterval(Rational low, Rational high)
    : low_(std::move(low)), high_(std::move(high)) {
  if (high_ < low_) throw std::invalid_argument("interval with low > high");
}

RationalInterval RationalInterval::rounded_outward(long bits) const {
  const Rational scale = pow2(bits);
  return {Rational(floor(low_ * scale)) / scale, Rational(ceil(high_ * scale)) / scale};
}

namespace {

// Products and quotients grow endpoint sizes; snapping to a 2^-256 grid keeps
// them bounded while staying far below any tolerance used here.
constexpr long kGridBits = 256;

}  // namespace

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.low_ + b.low_, a.high_ + b.high_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
  return {a.low_ - b.high_, a.high_ - b.low_};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
  const Rational c[4] = {a.low_ * b.low_, a.low_ * b.high_, a.high_ * b.low_, a.high_ * b.high_};
  const auto [lo, hi] = std::minmax_element(std::begin(c), std::end(c));
  RationalInterval r(*lo, *hi);
  return r.is_point() ? r : r.rounded_outward(kGridBits);
}

RationalInterval operator/(const RationalInterval& a, const RationalInterval& b) {
  if (b.low_.sign() <= 0 && b.high_.sign() >= 0)
    throw std::domain_error("interval division by an interval containing zero");
  const RationalInterval reciprocal(Rational(1) / b.high_, Rational(1) / b.low_);
  return a * reciprocal;
}

bool certainly_less(const RationalInterval& a, const RationalInterval& b) {
  return a.high() < b.low();
}

RationalInterval interval_sqrt(const Rational& x, const Rational& precision) {
  if (x.sign() < 0) throw std::domain_error("interval_sqrt of a negative number");
  if (precision.sign() <= 0) throw std::invalid_argument("precision must be positive");
  if (auto exact = rational_sqrt(x)) return {*exact, *exact};

  // Smallest bits with 2^-bits <= precision.
  const Integer inverse = ceil(Rational(1) / precision);
  const long bits =
      inverse <= 1 ? 0 : static_cast<long>(mpz_sizeinbase(Integer(inverse - 1).get_mpz_t(), 2));

  Integer scaled = x.numerator();
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * bits));
  mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.denominator().get_mpz_t());
  const Integer root = isqrt(scaled).root;
  const Rational unit = pow2(-bits);
  return {Rational(root) * unit, Rational(Integer(root + 1)) * unit};
}

RationalInterval interval_sqrt(const RationalInterval& x, const Rational& precision) {
  if (x.low().sign() < 0) throw std::domain_error("interval_sqrt of a negative interval");
  if (x.is_point()) return interval_sqrt(x.low(), precision);
  return {interval_sqrt(x.low(), precision).low(), interval_sqrt(x.high(), precision).high()};
}

std::string to_decimal(const Rational& x, int digits, Rounding rounding) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Rational scaled = x * Rational(scale);
  Integer v = rounding == Rounding::Down ? floor(scaled) : ceil(scaled);
  const bool negative = v < 0;
  if (negative) v = -v;
  std::string s = v.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace ips
