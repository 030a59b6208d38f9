#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sepkit/linalg.hpp"

using namespace sepkit;

namespace {

oracle::Mat to_rows(const IntMatrix& a) {
  oracle::Mat out(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(i)].push_back(a(i, j));
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix a(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) a(i, j) = d(rng);
  return a;
}

}  // namespace

TEST(Determinant, AgreesWithLeibniz) {
  std::mt19937 rng(11);
  for (int n = 1; n <= 6; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      const IntMatrix a = random_matrix(rng, n, n, -4, 4);
      EXPECT_EQ(determinant(a), oracle::leibniz(to_rows(a)));
    }
}

TEST(Determinant, LargeEntriesStayExact) {
  // Hilbert-like integer matrix whose determinant overflows 64 bits.
  IntMatrix a(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a(i, j) = 100000 * (i + 1) + (j + 1) * (j + 1) * (i + 3) + (i == j ? 99991 : 0);
  std::vector<std::vector<oracle::Rat>> q(8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) q[i].emplace_back(a(i, j));
  EXPECT_EQ(Rational(determinant(a)), oracle::det_rational(q));
}

TEST(Rank, AgreesWithRationalElimination) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 6, -1, 1);
    if (trial % 3 == 0) a.row(3) = a.row(0) + a.row(1);
    std::vector<int> all{0, 1, 2, 3, 4, 5};
    EXPECT_EQ(rank(a), oracle::rank_rational(oracle::columns(to_rows(a), all)));
  }
}

TEST(TotalUnimodularity, IncidenceMatricesAreTU) {
  IntMatrix k4(4, 6);
  k4 << 1, 1, 1, 0, 0, 0,
      -1, 0, 0, 1, 1, 0,
      0, -1, 0, -1, 0, 1,
      0, 0, -1, 0, -1, -1;
  EXPECT_TRUE(is_totally_unimodular(k4));
  IntMatrix odd(3, 3);
  odd << 1, 1, 0,
      0, 1, 1,
      1, 0, 1;  // determinant 2
  EXPECT_FALSE(is_totally_unimodular(odd));
}

TEST(Lattice, SaturatedBasisCoordinates) {
  // Columns spanning the sum-zero plane in Z^3, given non-primitively.
  BigMatrix cols(3, 2);
  cols << 2, 0,
      -2, 3,
      0, -3;
  const BigMatrix basis = saturated_lattice_basis(cols);
  ASSERT_EQ(basis.cols(), 2);
  BigVector v(3);
  v << 1, -1, 0;  // in the lattice, but not in the span of the given columns over Z
  const BigVector x = lattice_coordinates(basis, v);
  EXPECT_EQ(basis * x, v);
  BigVector off(3);
  off << 1, 0, 0;
  EXPECT_THROW(lattice_coordinates(basis, off), VerificationError);
}
