#include "ips/dmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace ips {

DistanceMatrix::DistanceMatrix(IntegerMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols())
    throw std::invalid_argument("distance matrix must be square");
  if (entries_.rows() == 0) throw std::invalid_argument("distance matrix must be non-empty");
  for (Eigen::Index i = 0; i < entries_.rows(); ++i) {
    if (entries_(i, i) != 0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (Eigen::Index j = i + 1; j < entries_.cols(); ++j) {
      if (entries_(i, j) != entries_(j, i))
        throw std::invalid_argument("distance matrix must be symmetric");
      if (entries_(i, j) < 1)
        throw std::invalid_argument("off-diagonal distances must be >= 1");
    }
  }
}

std::vector<Integer> DistanceMatrix::multiset() const {
  std::vector<Integer> out;
  for (Eigen::Index i = 0; i < size(); ++i)
    for (Eigen::Index j = i + 1; j < size(); ++j) out.push_back(entries_(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

Integer DistanceMatrix::diameter() const {
  const auto all = multiset();
  return all.empty() ? Integer(0) : all.back();
}

Integer DistanceMatrix::min_distance() const {
  const auto all = multiset();
  return all.empty() ? Integer(0) : all.front();
}

Integer DistanceMatrix::gcd() const {
  Integer g = 0;
  for (const auto& d : multiset()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  return g;
}

DistanceMatrix from_points(const PlanarPointSet& s) {
  const auto report = verify_integral_set(s);
  if (!report.is_integral) throw std::invalid_argument("point set is not integral");
  if (!report.full_dimensional) throw std::invalid_argument("point set is collinear");
  const auto n = static_cast<Eigen::Index>(s.size());
  IntegerMatrix m = IntegerMatrix::Constant(n, n, Integer(0));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      m(i, j) = m(j, i) = *integer_distance(s[i], s[j], s.radicand());
  return DistanceMatrix(std::move(m));
}

RationalMatrix gram(const DistanceMatrix& dm, Eigen::Index base) {
  const Eigen::Index n = dm.size();
  if (base < 0 || base >= n) throw std::out_of_range("gram base index out of range");
  std::vector<Eigen::Index> others;
  for (Eigen::Index i = 0; i < n; ++i)
    if (i != base) others.push_back(i);
  const auto m = static_cast<Eigen::Index>(others.size());
  RationalMatrix g(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      const Integer& d0a = dm(base, others[a]);
      const Integer& d0b = dm(base, others[b]);
      const Integer& dab = dm(others[a], others[b]);
      g(a, b) = Rational(Integer(d0a * d0a + d0b * d0b - dab * dab), Integer(2));
    }
  }
  return g;
}

namespace detail {

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  Integer scale = 1;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).denominator().get_mpz_t());
  IntegerMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = m(i, j).numerator() * Integer(scale / m(i, j).denominator());
  return out;
}

namespace {

void swap_symmetric(IntegerMatrix& a, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  a.row(i).swap(a.row(j));
  a.col(i).swap(a.col(j));
}

// One Bareiss step on the trailing block below pivot k.
void eliminate(IntegerMatrix& a, Eigen::Index k, const Integer& previous) {
  const Eigen::Index n = a.rows();
  for (Eigen::Index i = k + 1; i < n; ++i) {
    for (Eigen::Index j = k + 1; j < n; ++j) {
      Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
      a(i, j) = v;
    }
  }
  for (Eigen::Index i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
}

bool trailing_block_zero(const IntegerMatrix& a, Eigen::Index k) {
  for (Eigen::Index i = k; i < a.rows(); ++i)
    for (Eigen::Index j = k; j < a.cols(); ++j)
      if (a(i, j) != 0) return false;
  return true;
}

Eigen::Index general_rank(IntegerMatrix a) {
  const Eigen::Index n = a.rows();
  Integer previous = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pr = -1, pc = -1;
    for (Eigen::Index i = k; i < n && pr < 0; ++i)
      for (Eigen::Index j = k; j < a.cols(); ++j)
        if (a(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    a.row(k).swap(a.row(pr));
    a.col(k).swap(a.col(pc));
    eliminate(a, k, previous);
    previous = a(k, k);
    ++rank;
  }
  return rank;
}

}  // namespace

RankPsd rank_psd_fraction_free(IntegerMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("rank_psd needs a square matrix");
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) throw std::invalid_argument("rank_psd needs a symmetric matrix");

  const IntegerMatrix original = a;
  const Eigen::Index n = a.rows();
  Integer previous = 1;
  RankPsd out;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (a(i, i) > a(p, p)) p = i;
    if (a(p, p) < 0) {
      out.psd = false;
      break;
    }
    if (a(p, p) == 0) {
      // A PSD matrix with a zero diagonal entry has that whole row zero.
      out.psd = trailing_block_zero(a, k);
      break;
    }
    swap_symmetric(a, k, p);
    eliminate(a, k, previous);
    previous = a(k, k);
    ++out.rank;
  }
  if (!out.psd) out.rank = general_rank(original);
  return out;
}

}  // namespace detail

Integer bareiss_determinant(IntegerMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant needs a square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  Integer previous = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    Eigen::Index p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = v;
      }
    }
    previous = a(k, k);
  }
  return sign > 0 ? Integer(a(n - 1, n - 1)) : Integer(-a(n - 1, n - 1));
}

Integer cayley_menger_determinant(const DistanceMatrix& dm) {
  const Eigen::Index n = dm.size();
  IntegerMatrix cm = IntegerMatrix::Constant(n + 1, n + 1, Integer(1));
  cm(0, 0) = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) cm(i + 1, j + 1) = dm(i, j) * dm(i, j);
  return bareiss_determinant(std::move(cm));
}

RealizabilityVerdict realizable_dim(const DistanceMatrix& dm) {
  RealizabilityVerdict verdict;
  const RankPsd rp = rank_psd(gram(dm, 0));
  verdict.gram_rank = rp.rank;
  verdict.psd = rp.psd;
  if (rp.psd) {
    verdict.dimension = rp.rank;
    if (rp.rank >= 1) verdict.full_dim_in = rp.rank;
  }
  return verdict;
}

}  // namespace ips
