#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "hf/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<hf::Rational> : GenericNumTraits<hf::Rational> {
  using Real = hf::Rational;
  using NonInteger = hf::Rational;
  using Nested = hf::Rational;
  using Literal = hf::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 32
  };
  static hf::Rational epsilon() { return hf::Rational(0); }
  static hf::Rational dummy_precision() { return hf::Rational(0); }
  static int digits10() { return 0; }
};

} // namespace Eigen

namespace hf {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

namespace detail {

/// Magnitude used to choose pivots; any nonzero pivot gives the same exact result.
inline Integer pivot_weight(const Rational &x) { return abs(x.num()); }

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> rows;           // fraction-free row echelon form
  std::vector<Eigen::Index> pivots; // pivot column of each nonzero row
};

/// Fraction-free (Bareiss) elimination to row echelon form.  Rows are first
/// scaled to integer entries so every intermediate division is exact.
template <typename Scalar>
Echelon<Scalar> echelon(Matrix<Scalar> a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Integer den = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).den().get_mpz_t());
    if (den != 1) a.row(i) *= Scalar(den);
  }
  Echelon<Scalar> out;
  Scalar prev(1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index best = -1;
    for (Eigen::Index i = row; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      if (best < 0 || pivot_weight(a(i, col)) > pivot_weight(a(best, col))) best = i;
    }
    if (best < 0) continue;
    a.row(row).swap(a.row(best));
    for (Eigen::Index i = row + 1; i < a.rows(); ++i) {
      for (Eigen::Index j = col + 1; j < a.cols(); ++j)
        a(i, j) = (a(row, col) * a(i, j) - a(i, col) * a(row, j)) / prev;
      a(i, col) = Scalar(0);
    }
    prev = a(row, col);
    out.pivots.push_back(col);
    ++row;
  }
  out.rows = std::move(a);
  return out;
}

} // namespace detail

template <typename Scalar>
std::size_t rank(const Matrix<Scalar> &a) {
  return detail::echelon(a).pivots.size();
}

/// Exact basis of { x : a x = 0 }, one column per basis vector.  Each basis
/// vector is scaled so its first nonzero coordinate is 1.
template <typename Scalar>
Matrix<Scalar> null_space(const Matrix<Scalar> &a) {
  const auto ech = detail::echelon(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> x = Vector<Scalar>::Constant(n, Scalar(0));
    x(free) = Scalar(1);
    for (std::size_t k = ech.pivots.size(); k-- > 0;) {
      const Eigen::Index row = static_cast<Eigen::Index>(k), pc = ech.pivots[k];
      Scalar acc(0);
      for (Eigen::Index j = pc + 1; j < n; ++j)
        if (!x(j).is_zero()) acc += ech.rows(row, j) * x(j);
      x(pc) = -acc / ech.rows(row, pc);
    }
    for (Eigen::Index j = 0; j < n; ++j)
      if (!x(j).is_zero()) {
        x /= Scalar(x(j));
        break;
      }
    basis.push_back(std::move(x));
  }
  Matrix<Scalar> out(n, static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) out.col(static_cast<Eigen::Index>(k)) = basis[k];
  return out;
}

/// One exact solution of a x = b, or nullopt if the system is inconsistent.
template <typename Scalar>
std::optional<Vector<Scalar>> solve(const Matrix<Scalar> &a, const Vector<Scalar> &b) {
  Matrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug << a, b;
  const Matrix<Scalar> ns = null_space(aug);
  // A solution exists iff some kernel vector of [a | b] has a nonzero last coordinate.
  for (Eigen::Index k = 0; k < ns.cols(); ++k) {
    const Scalar last = ns(a.cols(), k);
    if (!last.is_zero()) return Vector<Scalar>(-ns.col(k).head(a.cols()) / last);
  }
  return std::nullopt;
}

/// Reduced basis of the column span of a (columns of the result are
/// linearly independent and span the same space).
template <typename Scalar>
Matrix<Scalar> column_basis(const Matrix<Scalar> &a) {
  const auto ech = detail::echelon(Matrix<Scalar>(a.transpose()));
  Matrix<Scalar> out(a.rows(), static_cast<Eigen::Index>(ech.pivots.size()));
  for (std::size_t k = 0; k < ech.pivots.size(); ++k)
    out.col(static_cast<Eigen::Index>(k)) = ech.rows.row(static_cast<Eigen::Index>(k)).transpose();
  return out;
}

} // namespace hf
