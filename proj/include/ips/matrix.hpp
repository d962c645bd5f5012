#pragma once

// Eigen dense types over the exact scalars.

#include <Eigen/Core>

#include "ips/exactnum.hpp"

namespace Eigen {

template <>
struct NumTraits<ips::Rational> : GenericNumTraits<ips::Rational> {
  using Real = ips::Rational;
  using NonInteger = ips::Rational;
  using Literal = ips::Rational;
  using Nested = ips::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 32,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<ips::Integer> : GenericNumTraits<ips::Integer> {
  using Real = ips::Integer;
  using NonInteger = ips::Rational;
  using Literal = ips::Integer;
  using Nested = ips::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ips {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntegerMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;

}  // namespace ips
