#include "sepkit/ehrhart.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "sepkit/errors.hpp"
#include "sepkit/parallel.hpp"

namespace sepkit {

LatticePolytope make_polytope(const IntMatrix& points) {
  std::set<std::vector<int>> seen;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index j = 0; j < points.cols(); ++j) {
    std::vector<int> key(points.col(j).data(), points.col(j).data() + points.rows());
    if (seen.insert(key).second) keep.push_back(j);
  }
  LatticePolytope p;
  p.vertices.resize(points.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) p.vertices.col(static_cast<Eigen::Index>(k)) = points.col(keep[k]);
  return p;
}

LatticePolytope sep_of(const Matroid& m) {
  if (m.rank() == 0) throw InputError("symmetric edge polytope needs positive rank");
  IntMatrix pts(m.rank(), 2 * m.size());
  int loops = 0;
  Eigen::Index k = 0;
  for (int e = 0; e < m.size(); ++e) {
    if (m.is_loop(e)) {
      ++loops;
      continue;
    }
    pts.col(k++) = m.column(e);
    pts.col(k++) = -m.column(e);
  }
  LatticePolytope p = make_polytope(pts.leftCols(k));
  p.dropped_loops = loops;
  return p;
}

int affine_dimension(const LatticePolytope& p) {
  if (p.vertex_count() == 0) return -1;
  IntMatrix diff = p.vertices.colwise() - p.vertices.col(0);
  return static_cast<int>(rank(diff));
}

bool dim_check(const LatticePolytope& p, const Matroid& m) { return affine_dimension(p) == m.rank(); }

bool is_centrally_symmetric(const LatticePolytope& p) {
  std::set<std::vector<int>> pts;
  for (Eigen::Index j = 0; j < p.vertices.cols(); ++j)
    pts.emplace(p.vertices.col(j).data(), p.vertices.col(j).data() + p.vertices.rows());
  for (const auto& v : pts) {
    std::vector<int> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](int x) { return -x; });
    if (!pts.count(neg)) return false;
  }
  return true;
}

namespace {

// Phase-one simplex over the system  Σλ = m,  Vλ = y,  λ >= 0.
// The tableau is kept integral: every entry is the rational tableau entry
// times the current basis determinant `det` (Edmonds/Bareiss pivoting).
template <class Scalar>
bool feasible(const IntMatrix& v, const IntVector& y, int m) {
  const int d = static_cast<int>(v.rows());
  const int n = static_cast<int>(v.cols());
  const int rows = d + 1;
  const int cols = n + rows + 1;  // structural, artificial, rhs
  const int rhs = cols - 1;
  std::vector<Scalar> t(static_cast<std::size_t>((rows + 1) * cols), Scalar(0));
  auto at = [&](int i, int j) -> Scalar& { return t[static_cast<std::size_t>(i * cols + j)]; };

  for (int i = 0; i < rows; ++i) {
    int b = i == 0 ? m : y(i - 1);
    int s = b < 0 ? -1 : 1;
    for (int j = 0; j < n; ++j) at(i, j) = s * (i == 0 ? 1 : v(i - 1, j));
    at(i, n + i) = 1;
    at(i, rhs) = s * b;
  }
  const int obj = rows;
  for (int j = 0; j < n; ++j) {
    Scalar sum = 0;
    for (int i = 0; i < rows; ++i) sum += at(i, j);
    at(obj, j) = sum;
  }
  {
    Scalar sum = 0;
    for (int i = 0; i < rows; ++i) sum += at(i, rhs);
    at(obj, rhs) = sum;
  }
  std::vector<int> basic(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) basic[static_cast<std::size_t>(i)] = n + i;
  std::vector<bool> is_basic(static_cast<std::size_t>(n + rows), false);
  for (int i = 0; i < rows; ++i) is_basic[static_cast<std::size_t>(n + i)] = true;
  Scalar det = 1;

  while (at(obj, rhs) != 0) {
    int enter = -1;
    for (int j = 0; j < n; ++j) {
      if (!is_basic[static_cast<std::size_t>(j)] && at(obj, j) > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return false;
    int leave = -1;
    for (int i = 0; i < rows; ++i) {
      if (at(i, enter) <= 0) continue;
      if (leave < 0) {
        leave = i;
        continue;
      }
      Scalar lhs = at(i, rhs) * at(leave, enter);
      Scalar rhs_ratio = at(leave, rhs) * at(i, enter);
      if (lhs < rhs_ratio || (lhs == rhs_ratio && basic[static_cast<std::size_t>(i)] < basic[static_cast<std::size_t>(leave)])) {
        leave = i;
      }
    }
    if (leave < 0) return false;  // unbounded direction cannot occur; treat as infeasible
    const Scalar piv = at(leave, enter);
    for (int i = 0; i <= rows; ++i) {
      if (i == leave) continue;
      const Scalar f = at(i, enter);
      for (int j = 0; j < cols; ++j) {
        if (j == enter) continue;
        at(i, j) = (at(i, j) * piv - f * at(leave, j)) / det;
      }
      at(i, enter) = 0;
    }
    det = piv;
    is_basic[static_cast<std::size_t>(basic[static_cast<std::size_t>(leave)])] = false;
    basic[static_cast<std::size_t>(leave)] = enter;
    is_basic[static_cast<std::size_t>(enter)] = true;
  }
  return true;
}

struct LatticeFrame {
  IntMatrix coords;  // vertices in lattice coordinates, one column each
  IntVector offset;  // first vertex, removed before taking coordinates
  bool translated = false;
};

LatticeFrame lattice_frame(const LatticePolytope& p) {
  LatticeFrame f;
  const int dim = affine_dimension(p);
  if (dim == p.ambient_dim()) {
    f.coords = p.vertices;
    return f;
  }
  f.translated = true;
  f.offset = p.vertices.col(0);
  BigMatrix diff = cast_matrix<Integer>(IntMatrix(p.vertices.colwise() - p.vertices.col(0)));
  BigMatrix basis = saturated_lattice_basis(diff);
  f.coords.resize(basis.cols(), p.vertex_count());
  for (int j = 0; j < p.vertex_count(); ++j) {
    BigVector c = lattice_coordinates(basis, diff.col(j));
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      if (!fits_int64(c(i)) || abs(c(i)) > 1'000'000) throw BudgetExceeded("lattice coordinates are too large");
      f.coords(i, j) = static_cast<int>(c(i).get_si());
    }
  }
  return f;
}

}  // namespace

bool in_dilate(const IntMatrix& v, const IntVector& y, int m) {
  return with_int64_fallback([&]<class Scalar>() { return feasible<Scalar>(v, y, m); });
}

Integer count_points(const LatticePolytope& p, int m, const EhrhartOptions& opts) {
  if (m < 0) throw InputError("negative dilation");
  if (m == 0 || p.vertex_count() == 0) return m == 0 ? 1 : 0;
  LatticeFrame frame = lattice_frame(p);
  const IntMatrix& c = frame.coords;
  const int d = static_cast<int>(c.rows());
  if (d == 0) return 1;
  // With a translated frame the dilate is m·(v0 + Q) = m·v0 + m·Q, so we
  // count lattice points of m·Q for Q the translated copy.
  IntVector lo = m * c.rowwise().minCoeff();
  IntVector hi = m * c.rowwise().maxCoeff();
  double volume = 1;
  for (int i = 0; i < d; ++i) volume *= static_cast<double>(hi(i) - lo(i) + 1);
  if (volume > opts.budget_box) {
    throw BudgetExceeded("lattice box of " + std::to_string(static_cast<long long>(volume)) +
                         " points exceeds the budget; use the triangulation engine");
  }
  const int slices = hi(0) - lo(0) + 1;
  std::vector<long long> per_slice(static_cast<std::size_t>(slices), 0);
  parallel_for(static_cast<std::size_t>(slices), opts.workers, [&](unsigned, std::size_t s) {
    IntVector y = lo;
    y(0) = lo(0) + static_cast<int>(s);
    long long found = 0;
    while (true) {
      if (in_dilate(c, y, m)) ++found;
      int k = 1;
      while (k < d && y(k) == hi(k)) {
        y(k) = lo(k);
        ++k;
      }
      if (k >= d) break;
      ++y(k);
    }
    per_slice[s] = found;
  });
  Integer total = 0;
  for (long long x : per_slice) total += Integer(static_cast<long>(x));
  return total;
}

IntPolynomial hstar_from_counts(const std::vector<Integer>& counts, int d) {
  if (static_cast<int>(counts.size()) != d + 1) throw InputError("need exactly d+1 lattice point counts");
  if (counts[0] != 1) throw InputError("L(0) must be 1");
  std::vector<Integer> h(static_cast<std::size_t>(d + 1));
  for (int j = 0; j <= d; ++j) {
    Integer acc = 0;
    for (int i = 0; i <= j; ++i) {
      Integer term = binomial(d + 1, j - i) * counts[static_cast<std::size_t>(i)];
      if ((j - i) % 2 == 0) acc += term;
      else acc -= term;
    }
    if (acc < 0) throw VerificationError("negative h* coefficient at degree " + std::to_string(j));
    h[static_cast<std::size_t>(j)] = acc;
  }
  return IntPolynomial(std::move(h));
}

RationalPolynomial gamma_from_hstar(const IntPolynomial& h) {
  if (!is_symmetric(h)) throw InputError("gamma vector needs a symmetric polynomial");
  const long d = h.degree();
  if (d < 0) return {};
  RationalPolynomial rest = to_rational(h);
  std::vector<Rational> gamma;
  const RationalPolynomial one_plus_t{1, 1};
  for (long i = 0; 2 * i <= d; ++i) {
    Rational g = rest.coefficient(static_cast<std::size_t>(i));
    gamma.push_back(g);
    rest -= g * pow(one_plus_t, static_cast<unsigned>(d - 2 * i)).shifted(static_cast<std::size_t>(i));
  }
  if (!rest.is_zero()) throw VerificationError("gamma elimination left a residual");
  return RationalPolynomial(std::move(gamma));
}

RationalPolynomial expand_gamma(const RationalPolynomial& gamma, int d) {
  RationalPolynomial out;
  const RationalPolynomial one_plus_t{1, 1};
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (2 * static_cast<int>(i) > d) throw InputError("gamma vector too long for degree");
    out += gamma.coefficient(i) * pow(one_plus_t, static_cast<unsigned>(d - 2 * static_cast<int>(i))).shifted(i);
  }
  return out;
}

Predicates predicates(const IntPolynomial& h) {
  Predicates p;
  p.symmetric = is_symmetric(h);
  p.unimodal = is_unimodal(h);
  if (p.symmetric) {
    const auto g = gamma_from_hstar(h);
    p.gamma_nonnegative = std::all_of(g.coefficients().begin(), g.coefficients().end(),
                                      [](const Rational& x) { return x >= 0; });
  }
  return p;
}

EhrhartData ehrhart_data(const LatticePolytope& p, const EhrhartOptions& opts) {
  EhrhartData out;
  out.dim = affine_dimension(p);
  for (int m = 0; m <= out.dim; ++m) out.counts.push_back(count_points(p, m, opts));
  out.hstar = hstar_from_counts(out.counts, out.dim);
  return out;
}

IntPolynomial hstar_bruteforce(const Matroid& m, const EhrhartOptions& opts) {
  return ehrhart_data(sep_of(m), opts).hstar;
}

ProductCheck free_sum_check(const Matroid& m1, const Matroid& m2, const EhrhartOptions& opts) {
  ProductCheck c;
  c.identity = "free-sum";
  c.lhs = hstar_bruteforce(direct_sum(m1, m2), opts);
  c.rhs = hstar_bruteforce(m1, opts) * hstar_bruteforce(m2, opts);
  c.holds = c.lhs == c.rhs;
  return c;
}

ProductCheck contraction_check(const Matroid& m, int e, const EhrhartOptions& opts) {
  if (!is_bipartite(m)) throw InputError("contraction identity needs a bipartite matroid");
  ProductCheck c;
  c.identity = "contraction";
  c.lhs = hstar_bruteforce(m, opts);
  c.rhs = IntPolynomial{1, 1} * hstar_bruteforce(contraction(m, e), opts);
  c.holds = c.lhs == c.rhs;
  return c;
}

ProductCheck parallel_check(const Matroid& m1, const Matroid& m2, const std::string& p,
                            const EhrhartOptions& opts) {
  if (!is_bipartite(m1)) throw InputError("parallel-connection identity needs a bipartite first operand");
  ProductCheck c;
  c.identity = "parallel";
  c.lhs = IntPolynomial{1, 1} * hstar_bruteforce(parallel_connection(m1, m2, p), opts);
  c.rhs = hstar_bruteforce(m1, opts) * hstar_bruteforce(m2, opts);
  c.holds = c.lhs == c.rhs;
  return c;
}

}  // namespace sepkit
