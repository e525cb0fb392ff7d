#include "skewlie/linalg.hpp"

#include "skewlie/errors.hpp"

namespace skewlie {

EchelonResult echelonize(const Matrix& m) {
  EchelonResult out{m, 0, {}};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && a(r, c).is_zero()) ++r;
    if (r == rows) continue;
    a.swap_rows(r, pivot_row);

    const Rational inv = Rational(1) / a(pivot_row, c);
    for (std::size_t j = c; j < cols; ++j) a(pivot_row, j) *= inv;

    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || a(i, c).is_zero()) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!a(pivot_row, j).is_zero()) a(i, j) -= factor * a(pivot_row, j);
      }
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const Matrix& m) { return echelonize(m).rank; }

namespace {

std::vector<Vec> kernel_from_rref(const EchelonResult& e) {
  const std::size_t cols = e.reduced.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rank; ++i) v[e.pivot_columns[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<Vec> kernel_basis(const Matrix& m) { return kernel_from_rref(echelonize(m)); }

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw NonSquare("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;

  // Clear denominators row by row so elimination runs over the integers.
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).value().get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& x = m(r, c).value();
      a[r][c] = x.get_num() * (l / x.get_den());
    }
    scale *= l;
  }

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  mpq_class det(a[n - 1][n - 1] * sign, scale);
  return Rational(det);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw NonSquare("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const EchelonResult e = echelonize(aug);
  if (e.rank < n || e.pivot_columns[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

AffineSolution solve_affine(const Matrix& m, const Vec& rhs) {
  if (rhs.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
  const std::size_t cols = m.cols();
  AffineSolution out;

  const EchelonResult coeff = echelonize(m);
  out.homogeneous = kernel_from_rref(coeff);

  Matrix aug(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug(r, c) = m(r, c);
    aug(r, cols) = rhs[r];
  }
  const EchelonResult e = echelonize(aug);
  if (e.rank > 0 && e.pivot_columns.back() == cols) return out;  // inconsistent

  Vec x(cols);
  for (std::size_t i = 0; i < e.rank; ++i) x[e.pivot_columns[i]] = e.reduced(i, cols);
  out.particular = std::move(x);
  return out;
}

}  // namespace skewlie
