#pragma once

#include <Eigen/Core>

#include "coxfold/surd.hpp"

namespace Eigen {

template <>
struct NumTraits<coxfold::Surd> : GenericNumTraits<coxfold::Surd> {
  using Real = coxfold::Surd;
  using NonInteger = coxfold::Surd;
  using Nested = coxfold::Surd;
  using Literal = coxfold::Surd;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace coxfold {

using Vector = Eigen::Matrix<Surd, Eigen::Dynamic, 1>;
using Matrix = Eigen::Matrix<Surd, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact product; avoids the blocked kernels, which gain nothing for exact scalars.
template <typename A, typename B>
auto mul(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.lazyProduct(b).eval();
}

/// Exact test for the zero vector.
template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) return false;
  return true;
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Surd(i == j ? 1 : 0)) return false;
  return true;
}

/// Sign shared by every nonzero coordinate, or Sign::zero when the signs are mixed
/// or the vector vanishes.
Sign uniform_sign(const Vector& x);

/// Total order on vectors by coordinates (Surd::lex_compare per entry).
std::strong_ordering lex_compare(const Vector& a, const Vector& b);

struct VectorLess {
  bool operator()(const Vector& a, const Vector& b) const { return lex_compare(a, b) < 0; }
};

/// Canonical exact string of a coordinate vector, e.g. "[1, 0, 1/2√2]".
std::string to_string(const Vector& x);

}  // namespace coxfold
