#include "sepkit/linalg.hpp"

#include <bit>
#include <cstdlib>

#include "sepkit/errors.hpp"

namespace sepkit {

namespace {

// Bareiss on a small dense int64 block; entries of TU candidates keep all
// intermediates bounded by minors, far inside 64 bits for the sizes used.
long long small_determinant(long long* a, int n) {
  int sign = 1;
  long long prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int p = k + 1;
      while (p < n && a[p * n + k] == 0) ++p;
      if (p == n) return 0;
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

}  // namespace

Eigen::Index rank(const IntMatrix& a) {
  RationalMatrix r = cast_matrix<Rational>(a);
  return static_cast<Eigen::Index>(rref_in_place(r).size());
}

Eigen::Index rank(const BigMatrix& a) {
  RationalMatrix r = cast_matrix<Rational>(a);
  return static_cast<Eigen::Index>(rref_in_place(r).size());
}

std::vector<Eigen::Index> independent_rows(const IntMatrix& a) {
  // Rows are independent iff they are pivot columns of the transpose.
  RationalMatrix t = cast_matrix<Rational>(IntMatrix(a.transpose()));
  return rref_in_place(t);
}

Integer determinant(const BigMatrix& input) {
  if (input.rows() != input.cols()) throw InputError("determinant of a non-square matrix");
  const Eigen::Index n = input.rows();
  if (n == 0) return 1;
  BigMatrix a = input;
  int sign = 1;
  Integer prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer determinant(const IntMatrix& a) { return determinant(cast_matrix<Integer>(a)); }

bool is_totally_unimodular(const IntMatrix& a) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  if (rows > 20 || cols > 20) throw BudgetExceeded("exhaustive unimodularity check is limited to 20x20");
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      if (std::abs(a(i, j)) > 1) return false;
  std::vector<long long> buf;
  for (std::uint32_t rmask = 1; rmask < (1U << rows); ++rmask) {
    const int k = std::popcount(rmask);
    if (k < 2 || k > cols) continue;
    std::vector<int> r;
    for (int i = 0; i < rows; ++i)
      if (rmask >> i & 1U) r.push_back(i);
    for (std::uint32_t cmask = 1; cmask < (1U << cols); ++cmask) {
      if (std::popcount(cmask) != k) continue;
      buf.clear();
      for (int i : r)
        for (int j = 0; j < cols; ++j)
          if (cmask >> j & 1U) buf.push_back(a(i, j));
      long long d = small_determinant(buf.data(), k);
      if (d < -1 || d > 1) return false;
    }
  }
  return true;
}

BigMatrix saturated_lattice_basis(const BigMatrix& cols) {
  const Eigen::Index n = cols.rows();
  // Rational orthogonal complement of the span: kernel of cols^T.
  RationalMatrix t = cast_matrix<Rational>(BigMatrix(cols.transpose()));
  std::vector<Eigen::Index> pivots = rref_in_place(t);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<BigVector> normals;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RationalVector v = RationalVector::Zero(n);
    v(free) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r]) = -t(static_cast<Eigen::Index>(r), free);
    Integer den = 1;
    for (Eigen::Index i = 0; i < n; ++i) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v(i).get_den_mpz_t());
    BigVector w(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      Rational s = v(i) * den;
      w(i) = s.get_num();
    }
    normals.push_back(std::move(w));
  }

  // Integer kernel of the normals by unimodular column operations.
  BigMatrix c(static_cast<Eigen::Index>(normals.size()), n);
  for (std::size_t i = 0; i < normals.size(); ++i) c.row(static_cast<Eigen::Index>(i)) = normals[i].transpose();
  BigMatrix u = BigMatrix::Identity(n, n);
  Eigen::Index piv = 0;
  for (Eigen::Index i = 0; i < c.rows() && piv < n; ++i) {
    for (Eigen::Index j = piv + 1; j < n; ++j) {
      if (c(i, j) == 0) continue;
      if (c(i, piv) == 0) {
        c.col(piv).swap(c.col(j));
        u.col(piv).swap(u.col(j));
        continue;
      }
      Integer g, s, r;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), r.get_mpz_t(), c(i, piv).get_mpz_t(), c(i, j).get_mpz_t());
      Integer a_g = c(i, piv) / g;
      Integer b_g = c(i, j) / g;
      BigVector cp = c.col(piv), cj = c.col(j);
      c.col(piv) = s * cp + r * cj;
      c.col(j) = a_g * cj - b_g * cp;
      BigVector up = u.col(piv), uj = u.col(j);
      u.col(piv) = s * up + r * uj;
      u.col(j) = a_g * uj - b_g * up;
    }
    if (c(i, piv) != 0) ++piv;
  }
  return u.rightCols(n - piv);
}

BigVector lattice_coordinates(const BigMatrix& basis, const BigVector& v) {
  const Eigen::Index n = basis.rows();
  const Eigen::Index d = basis.cols();
  RationalMatrix aug(n, d + 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) aug(i, j) = basis(i, j);
    aug(i, d) = v(i);
  }
  std::vector<Eigen::Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == d) throw VerificationError("vector lies outside the lattice span");
  if (static_cast<Eigen::Index>(pivots.size()) != d) throw InputError("lattice basis is not of full column rank");
  BigVector x(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const Rational& q = aug(j, d);
    if (q.get_den() != 1) throw VerificationError("vector is not an integer combination of the lattice basis");
    x(j) = q.get_num();
  }
  return x;
}

}  // namespace sepkit
