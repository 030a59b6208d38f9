#pragma once

// Test-side reference computations. None of these call into the library's
// engines; they only read plain data (matrices, edge lists) from it.

#include <algorithm>
#include <climits>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Rat = mpq_class;
using Int = mpz_class;
using Mat = std::vector<std::vector<long>>;

inline Int choose(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Leibniz expansion; only for tiny matrices.
inline long leibniz(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  long total = 0;
  do {
    long sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    long prod = sign;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= a[i][perm[i]];
    total += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Determinant by Gaussian elimination over Q.
inline Rat det_rational(std::vector<std::vector<Rat>> a) {
  const std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

inline int rank_rational(std::vector<std::vector<Rat>> a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

// Submatrix of `a` on the given columns, as rationals.
inline std::vector<std::vector<Rat>> columns(const Mat& a, const std::vector<int>& cols) {
  std::vector<std::vector<Rat>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int c : cols) out[i].emplace_back(a[i][static_cast<std::size_t>(c)]);
  return out;
}

// Bases of the column matroid of a full-row-rank matrix: every r-subset
// with nonzero determinant, as bitmasks.
inline std::set<std::uint64_t> bases_by_determinant(const Mat& a, int cols) {
  std::set<std::uint64_t> out;
  const int r = static_cast<int>(a.size());
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << cols); ++s) {
    if (__builtin_popcountll(s) != r) continue;
    std::vector<int> picked;
    for (int e = 0; e < cols; ++e)
      if ((s >> e) & 1U) picked.push_back(e);
    if (det_rational(columns(a, picked)) != 0) out.insert(s);
  }
  return out;
}

// Minimal dependent column sets, by rank.
inline std::set<std::uint64_t> circuits_by_rank(const Mat& a, int cols) {
  std::vector<std::uint64_t> dependent;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << cols); ++s) {
    std::vector<int> picked;
    for (int e = 0; e < cols; ++e)
      if ((s >> e) & 1U) picked.push_back(e);
    if (rank_rational(columns(a, picked)) < static_cast<int>(picked.size())) dependent.push_back(s);
  }
  std::set<std::uint64_t> out;
  for (auto s : dependent) {
    bool minimal = true;
    for (auto t : dependent)
      if (t != s && (t & s) == t) minimal = false;
    if (minimal) out.insert(s);
  }
  return out;
}

struct SimpleEdge {
  int a, b;
};

// Spanning-tree count by the matrix-tree theorem (multigraphs allowed).
inline Int matrix_tree(int vertices, const std::vector<SimpleEdge>& edges) {
  std::vector<std::vector<Rat>> lap(static_cast<std::size_t>(vertices - 1),
                                    std::vector<Rat>(static_cast<std::size_t>(vertices - 1), 0));
  for (const auto& e : edges) {
    if (e.a == e.b) continue;
    for (int x : {e.a, e.b})
      if (x > 0) lap[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(x - 1)] += 1;
    if (e.a > 0 && e.b > 0) {
      lap[static_cast<std::size_t>(e.a - 1)][static_cast<std::size_t>(e.b - 1)] -= 1;
      lap[static_cast<std::size_t>(e.b - 1)][static_cast<std::size_t>(e.a - 1)] -= 1;
    }
  }
  const Rat d = det_rational(lap);
  return d.get_num();
}

// Lattice points of m·SEP(G) for a connected graph G. A point x with
// coordinate sum zero lies in m·conv{±(e_i - e_j)} iff the cheapest
// undirected flow meeting demand x costs at most m; the flow problem is
// solved as a transport between unit tokens with graph distances.
inline long sep_lattice_count(int vertices, const std::vector<SimpleEdge>& edges, int m) {
  const int n = vertices;
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), INT_MAX));
  for (int s = 0; s < n; ++s) {
    auto& d = dist[static_cast<std::size_t>(s)];
    std::queue<int> q;
    d[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (const auto& e : edges)
        for (auto [p, r] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}})
          if (p == x && d[static_cast<std::size_t>(r)] == INT_MAX) {
            d[static_cast<std::size_t>(r)] = d[static_cast<std::size_t>(x)] + 1;
            q.push(r);
          }
    }
  }
  long count = 0;
  std::vector<int> x(static_cast<std::size_t>(n), -m);
  while (true) {
    int sum = 0;
    for (int v : x) sum += v;
    if (sum == 0) {
      std::vector<int> plus, minus;
      for (int v = 0; v < n; ++v) {
        for (int k = 0; k < x[static_cast<std::size_t>(v)]; ++k) plus.push_back(v);
        for (int k = 0; k < -x[static_cast<std::size_t>(v)]; ++k) minus.push_back(v);
      }
      if (static_cast<int>(plus.size()) <= m) {
        // Assignment by bitmask DP over the negative tokens.
        const std::size_t k = plus.size();
        std::vector<int> best(std::size_t{1} << k, INT_MAX);
        best[0] = 0;
        for (std::uint32_t mask = 0; mask < best.size(); ++mask) {
          if (best[mask] == INT_MAX) continue;
          const std::size_t i = static_cast<std::size_t>(__builtin_popcount(mask));
          if (i == k) continue;
          for (std::size_t j = 0; j < k; ++j) {
            if ((mask >> j) & 1U) continue;
            const int c = best[mask] + dist[static_cast<std::size_t>(plus[i])][static_cast<std::size_t>(minus[j])];
            best[mask | (1U << j)] = std::min(best[mask | (1U << j)], c);
          }
        }
        if (best.back() <= m) ++count;
      }
    }
    int pos = 0;
    while (pos < n && x[static_cast<std::size_t>(pos)] == m) x[static_cast<std::size_t>(pos++)] = -m;
    if (pos == n) break;
    ++x[static_cast<std::size_t>(pos)];
  }
  return count;
}

// h* from L(0..d) by multiplying the Ehrhart series by (1-t)^{d+1}.
inline std::vector<Int> hstar_from_series(const std::vector<Int>& counts, int d) {
  std::vector<Int> h(static_cast<std::size_t>(d + 1), 0);
  for (int j = 0; j <= d; ++j)
    for (int i = 0; i <= j; ++i) {
      const Int term = choose(d + 1, j - i) * counts[static_cast<std::size_t>(i)];
      h[static_cast<std::size_t>(j)] += (j - i) % 2 == 0 ? term : Int(-term);
    }
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

// Closed h* of Σ(Γ(n+1)), written straight from the counting argument:
// Σ_ℓ C(n,2ℓ) (2t)^{n-2ℓ} Σ_{p,q} C(2ℓ+1,p+q+1) f_{pql}
//  + Σ_ℓ C(n,2ℓ+1) (2t)^{n-2ℓ-1} (1+t)^2 Σ_{p,q} C(2ℓ+1,p+q+1) f_{pql}.
inline std::vector<Int> closed_hstar(int n) {
  std::vector<Int> h(static_cast<std::size_t>(2 * n + 1), 0);
  auto add = [&](int shift, const Int& coeff) { h[static_cast<std::size_t>(shift)] += coeff; };
  for (int l = 0; 2 * l <= n; ++l) {
    // f-sum as coefficients in t.
    std::vector<Int> f(static_cast<std::size_t>(4 * l + 1), 0);
    for (int p = 0; p <= 2 * l; ++p)
      for (int q = 0; p + q <= 2 * l; ++q)
        for (int i = 0; i <= p; ++i)
          for (int j = 0; j <= q; ++j) {
            const Int c = choose(2 * l + 1, p + q + 1) * choose(p, i) * choose(q, j) * choose(2 * l - p - q, l - q - i + j);
            f[static_cast<std::size_t>(2 * l - p - q + 2 * (i + j))] += c;
          }
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f[k] == 0) continue;
      const int e = n - 2 * l;
      Int two = 1;
      for (int s = 0; s < e; ++s) two *= 2;
      add(static_cast<int>(k) + e, choose(n, 2 * l) * two * f[k]);
      if (2 * l + 1 <= n) {
        Int two1 = two / 2;
        const int e1 = e - 1;
        const Int base = choose(n, 2 * l + 1) * two1 * f[k];
        add(static_cast<int>(k) + e1, base);
        add(static_cast<int>(k) + e1 + 1, 2 * base);
        add(static_cast<int>(k) + e1 + 2, base);
      }
    }
  }
  return h;
}

}  // namespace oracle
