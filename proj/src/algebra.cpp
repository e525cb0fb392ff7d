#include "skewlie/algebra.hpp"

#include <set>
#include <string>
#include <utility>

#include "skewlie/errors.hpp"
#include "skewlie/linalg.hpp"

namespace skewlie {

namespace {

void check_dim(std::size_t dim) {
  if (dim < kMinDim || dim > kMaxDim) {
    throw UnsupportedDim("dimension " + std::to_string(dim) + " outside supported range 2..6");
  }
}

void check_vec(const SkewAlgebra& a, const Vec& v) {
  if (v.size() != a.dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " in algebra of dimension " + std::to_string(a.dim()));
  }
}

}  // namespace

SkewAlgebra::SkewAlgebra(std::size_t dim) : dim_(dim) {
  check_dim(dim);
  constants_.assign(dim * (dim - 1) / 2, Vec(dim));
}

SkewAlgebra::SkewAlgebra(std::size_t dim, std::vector<Vec> pair_constants)
    : dim_(dim), constants_(std::move(pair_constants)) {
  check_dim(dim);
  if (constants_.size() != dim * (dim - 1) / 2) {
    throw DimensionMismatch("expected " + std::to_string(dim * (dim - 1) / 2) + " pair entries");
  }
  for (const auto& v : constants_) {
    if (v.size() != dim) throw DimensionMismatch("structure constant vector of wrong length");
  }
}

SkewAlgebra SkewAlgebra::from_products(std::size_t dim, std::span<const Product> products) {
  SkewAlgebra a(dim);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& p : products) {
    if (p.i < 1 || p.j > dim || p.i >= p.j) {
      throw InvariantError("product (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                           ") must satisfy 1 <= i < j <= " + std::to_string(dim));
    }
    if (!seen.emplace(p.i, p.j).second) {
      throw InvariantError("duplicate product (" + std::to_string(p.i) + "," +
                           std::to_string(p.j) + ")");
    }
    if (p.coeffs.size() != dim) {
      throw DimensionMismatch("product (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                              ") has " + std::to_string(p.coeffs.size()) + " coefficients, expected " +
                              std::to_string(dim));
    }
    a.constants_[a.pair_index(p.i - 1, p.j - 1)] = p.coeffs;
  }
  return a;
}

std::size_t SkewAlgebra::pair_index(std::size_t i, std::size_t j) const {
  // Pairs before row i: sum_{r<i} (n-1-r).
  return i * (2 * dim_ - i - 1) / 2 + (j - i - 1);
}

Rational SkewAlgebra::coefficient(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return 0;
  if (i < j) return constants_[pair_index(i, j)][k];
  return -constants_[pair_index(j, i)][k];
}

bool SkewAlgebra::is_abelian() const {
  for (const auto& v : constants_) {
    if (!is_zero(v)) return false;
  }
  return true;
}

Vec multiply(const SkewAlgebra& a, const Vec& x, const Vec& y) {
  check_vec(a, x);
  check_vec(a, y);
  const std::size_t n = a.dim();
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      // x_i y_j - x_j y_i multiplies mu(e_i, e_j).
      const Rational w = x[i] * y[j] - x[j] * y[i];
      if (w.is_zero()) continue;
      const Vec& c = a.constants(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_zero()) out[k] += w * c[k];
      }
    }
  }
  return out;
}

Vec jacobiator(const SkewAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return multiply(a, multiply(a, x, y), z) + multiply(a, multiply(a, y, z), x) +
         multiply(a, multiply(a, z, x), y);
}

bool is_lie(const SkewAlgebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!is_zero(jacobiator(a, unit_vec(n, i), unit_vec(n, j), unit_vec(n, k)))) return false;
      }
  return true;
}

Endo left_mult(const SkewAlgebra& a, const Vec& x) {
  check_vec(a, x);
  const std::size_t n = a.dim();
  std::vector<Vec> cols;
  cols.reserve(n);
  for (std::size_t j = 0; j < n; ++j) cols.push_back(multiply(a, x, unit_vec(n, j)));
  return Matrix::from_columns(cols, n);
}

Matrix killing_matrix(const SkewAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Endo> ops;
  ops.reserve(n);
  for (std::size_t i = 0; i < n; ++i) ops.push_back(left_mult(a, unit_vec(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      k(i, j) = (ops[i] * ops[j]).trace();
      k(j, i) = k(i, j);
    }
  }
  return k;
}

Rational killing_determinant(const SkewAlgebra& a) { return determinant(killing_matrix(a)); }

SkewAlgebra transport(const SkewAlgebra& a, const Endo& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw DimensionMismatch("basis change has wrong shape");
  const auto inv = inverse(p);
  if (!inv) throw SingularMap("basis change is not invertible");

  std::vector<Vec> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) images.push_back(p.col(i));

  std::vector<Vec> constants;
  constants.reserve(a.pair_count());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      constants.push_back(inv->apply(multiply(a, images[i], images[j])));
  return SkewAlgebra(n, std::move(constants));
}

Subspace Subspace::full(std::size_t ambient) {
  std::vector<Vec> units;
  for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vec(ambient, i));
  return span(ambient, units);
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match subspace");
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < dim(); ++r) rows.push_back(basis_.row(r));
  rows.push_back(v);
  return rank(Matrix::from_rows(rows, ambient_)) == dim();
}

Subspace span(std::size_t ambient, std::span<const Vec> vectors) {
  Subspace s(ambient);
  if (vectors.empty()) return s;
  const EchelonResult e = echelonize(Matrix::from_rows(vectors, ambient));
  Matrix basis(e.rank, ambient);
  for (std::size_t r = 0; r < e.rank; ++r)
    for (std::size_t c = 0; c < ambient; ++c) basis(r, c) = e.reduced(r, c);
  s.basis_ = std::move(basis);
  return s;
}

Subspace subspace_product(const SkewAlgebra& a, const Subspace& u, const Subspace& w) {
  if (u.ambient() != a.dim() || w.ambient() != a.dim()) {
    throw DimensionMismatch("subspace ambient dimension does not match algebra");
  }
  std::vector<Vec> products;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j)
      products.push_back(multiply(a, u.basis_vector(i), w.basis_vector(j)));
  return span(a.dim(), products);
}

namespace {

template <typename Step>
SeriesReport run_series(const SkewAlgebra& a, SeriesKind kind, Step step) {
  SeriesReport report{kind, {}, {}};
  Subspace current = Subspace::full(a.dim());
  report.dims.push_back(current.dim());
  report.terms.push_back(current);
  while (current.dim() > 0) {
    Subspace next = step(current);
    const bool stable = next == current;
    report.dims.push_back(next.dim());
    report.terms.push_back(next);
    if (stable) break;
    current = std::move(next);
  }
  return report;
}

}  // namespace

SeriesReport central_series(const SkewAlgebra& a) {
  const Subspace whole = Subspace::full(a.dim());
  return run_series(a, SeriesKind::Central,
                    [&](const Subspace& c) { return subspace_product(a, c, whole); });
}

SeriesReport derived_series(const SkewAlgebra& a) {
  return run_series(a, SeriesKind::Derived,
                    [&](const Subspace& d) { return subspace_product(a, d, d); });
}

bool is_nilpotent(const SkewAlgebra& a) { return central_series(a).dims.back() == 0; }
bool is_solvable(const SkewAlgebra& a) { return derived_series(a).dims.back() == 0; }

SkewAlgebra filiform5(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return SkewAlgebra::from_products(5, {
                                           {1, 2, {0, 0, 1, 0, 0}},
                                           {1, 3, {0, 0, 0, 1, 0}},
                                           {1, 4, {0, 0, 0, 0, 1}},
                                           {2, 3, {0, 0, 0, a, b}},
                                           {2, 4, {0, 0, 0, 0, c}},
                                           {3, 4, {0, 0, 0, 0, d}},
                                       });
}

}  // namespace skewlie
