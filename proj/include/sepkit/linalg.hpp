#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

#include "sepkit/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<sepkit::Integer> : GenericNumTraits<sepkit::Integer> {
  using Real = sepkit::Integer;
  using NonInteger = sepkit::Rational;
  using Nested = sepkit::Integer;
  using Literal = sepkit::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<sepkit::Rational> : GenericNumTraits<sepkit::Rational> {
  using Real = sepkit::Rational;
  using NonInteger = sepkit::Rational;
  using Nested = sepkit::Rational;
  using Literal = sepkit::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace sepkit {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<int>;
using IntVector = Vector<int>;
using BigMatrix = Matrix<Integer>;
using BigVector = Vector<Integer>;
using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;

template <class To, class From>
Matrix<To> cast_matrix(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

/// Reduced row echelon form over a field, in place. Returns the pivot
/// column of each nonzero row, in row order.
template <class Field>
std::vector<Eigen::Index> rref_in_place(Matrix<Field>& a) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Eigen::Index p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    Field inv = Field(1) / a(row, col);
    for (Eigen::Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      Field f = a(r, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

/// Rank over the rationals.
Eigen::Index rank(const IntMatrix& a);
Eigen::Index rank(const BigMatrix& a);

/// Indices of a maximal set of linearly independent rows, chosen greedily
/// from the top.
std::vector<Eigen::Index> independent_rows(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const BigMatrix& a);
Integer determinant(const IntMatrix& a);

/// Exhaustive check that every square minor lies in {-1,0,1}.
bool is_totally_unimodular(const IntMatrix& a);

/// Basis (as columns) of the lattice span(cols) ∩ Z^n, where `cols` holds
/// integer vectors as columns. The returned basis is saturated: every
/// integer point of the span is an integer combination of it.
BigMatrix saturated_lattice_basis(const BigMatrix& cols);

/// Solves basis * x = v for integral x; throws VerificationError if v is
/// outside the lattice generated by `basis`.
BigVector lattice_coordinates(const BigMatrix& basis, const BigVector& v);

}  // namespace sepkit
