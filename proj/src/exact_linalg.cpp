#include "toric/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "toric/subset.hpp"

namespace toric {

namespace {

int cmp_abs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& input) {
  const Index m = input.rows();
  const Index n = input.cols();

  IntMatrix a = input;
  IntMatrix u = IntMatrix::Identity(m, m);
  IntMatrix u_inv = u;
  IntMatrix v = IntMatrix::Identity(n, n);
  IntMatrix v_inv = v;

  // Every elementary step is applied to a together with u/u_inv (row side)
  // or v/v_inv (column side), keeping u*input*v equal to a throughout.
  auto row_sub = [&](Index i, Index t, const Int& q) {
    a.row(i) -= q * a.row(t);
    u.row(i) -= q * u.row(t);
    u_inv.col(t) += q * u_inv.col(i);
  };
  auto col_sub = [&](Index j, Index t, const Int& q) {
    a.col(j) -= q * a.col(t);
    v.col(j) -= q * v.col(t);
    v_inv.row(t) += q * v_inv.row(j);
  };
  auto row_add = [&](Index t, Index i) {  // row t += row i
    a.row(t) += a.row(i);
    u.row(t) += u.row(i);
    u_inv.col(i) -= u_inv.col(t);
  };
  auto row_swap = [&](Index i, Index t) {
    if (i == t) return;
    a.row(i).swap(a.row(t));
    u.row(i).swap(u.row(t));
    u_inv.col(i).swap(u_inv.col(t));
  };
  auto col_swap = [&](Index j, Index t) {
    if (j == t) return;
    a.col(j).swap(a.col(t));
    v.col(j).swap(v.col(t));
    v_inv.row(j).swap(v_inv.row(t));
  };
  auto row_negate = [&](Index i) {
    a.row(i) = -a.row(i);
    u.row(i) = -u.row(i);
    u_inv.col(i) = -u_inv.col(i);
  };

  Index t = 0;
  const Index dmax = std::min(m, n);
  while (t < dmax) {
    // Pivot: nonzero entry of minimal absolute value, lowest (row, col) wins ties.
    Index pi = -1, pj = -1;
    for (Index i = t; i < m; ++i)
      for (Index j = t; j < n; ++j)
        if (a(i, j) != 0 && (pi < 0 || cmp_abs(a(i, j), a(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    row_swap(pi, t);
    col_swap(pj, t);

    // Reduce until the pivot clears its row and column and divides the
    // remaining block. Each restart strictly shrinks |pivot|, so this ends.
    bool settled = false;
    while (!settled) {
      settled = true;
      for (Index i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        if (q != 0) row_sub(i, t, q);
        if (a(i, t) != 0) {
          row_swap(i, t);
          settled = false;
          break;
        }
      }
      if (!settled) continue;
      for (Index j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        if (q != 0) col_sub(j, t, q);
        if (a(t, j) != 0) {
          col_swap(j, t);
          settled = false;
          break;
        }
      }
      if (!settled) continue;
      for (Index i = t + 1; i < m && settled; ++i)
        for (Index j = t + 1; j < n && settled; ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_add(t, i);
            settled = false;
          }
    }
    ++t;
  }

  for (Index k = 0; k < t; ++k)
    if (a(k, k) < 0) row_negate(k);

  SmithDecomposition out;
  out.u = std::move(u);
  out.u_inv = std::move(u_inv);
  out.v = std::move(v);
  out.v_inv = std::move(v_inv);
  out.r = t;
  out.factors.reserve(static_cast<std::size_t>(t));
  for (Index k = 0; k < t; ++k) out.factors.push_back(a(k, k));
  return out;
}

Index rank(const IntMatrix& input) {
  IntMatrix a = input;
  const Index m = a.rows();
  const Index n = a.cols();
  Index r = 0;
  Int prev = 1;
  for (Index c = 0; c < n && r < m; ++c) {
    Index p = -1;
    for (Index i = r; i < m; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    for (Index i = r + 1; i < m; ++i) {
      for (Index j = c + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

Int determinant(const IntMatrix& input) {
  if (input.rows() != input.cols())
    throw std::invalid_argument("determinant: matrix is not square");
  const Index n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  int sign = 1;
  Int prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    Index p = -1;
    for (Index i = k; i < n; ++i)
      if (a(i, k) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != k) {
      a.row(p).swap(a.row(k));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign < 0 ? Int(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

Int gcd_of_maximal_minors(const IntMatrix& a) {
  const Index m = a.rows();
  const Index k = a.cols();
  if (rank(a) != k)
    throw std::invalid_argument("gcd_of_maximal_minors: columns are dependent");
  if (k == 0) return 1;

  std::vector<int> rows(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = static_cast<int>(i);
  Int g = 0;
  IntMatrix minor(k, k);
  do {
    for (Index i = 0; i < k; ++i) minor.row(i) = a.row(rows[static_cast<std::size_t>(i)]);
    g = gcd(g, determinant(minor));
    if (g == 1) break;
  } while (next_combination(rows, static_cast<int>(m)));
  return g;
}

std::optional<IntVector> solve_integer_membership(const IntMatrix& basis,
                                                  const IntVector& target) {
  if (target.size() != basis.rows())
    throw std::invalid_argument("solve_integer_membership: dimension mismatch");
  const SmithDecomposition snf = smith_normal_form(basis);
  const IntVector y = snf.u * target;
  IntVector z = IntVector::Zero(basis.cols());
  for (Index i = 0; i < snf.r; ++i) {
    const Int& d = snf.factors[static_cast<std::size_t>(i)];
    if (y(i) % d != 0) return std::nullopt;
    z(i) = y(i) / d;
  }
  for (Index i = snf.r; i < y.size(); ++i)
    if (y(i) != 0) return std::nullopt;
  return IntVector(snf.v * z);
}

}  // namespace toric
