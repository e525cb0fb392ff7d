#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "skewlie/matrix.hpp"

namespace skewlie {

inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 6;

/// A linear map of the ambient space; column j is the image of e_j.
using Endo = Matrix;

/// One structure-constant record mu(e_i, e_j) = sum_k coeffs[k] e_k, with the
/// basis labelled 1..n as in the e_1..e_n notation (so i, j are 1-based).
struct Product {
  std::size_t i;
  std::size_t j;
  Vec coeffs;
};

/// Finite-dimensional algebra with skew-symmetric bilinear product.
///
/// Only mu(e_i, e_j) for i < j is stored, as a dense list indexed by the
/// lexicographic position of the pair. All indices in this class are 0-based.
class SkewAlgebra {
 public:
  /// Abelian algebra of the given dimension. Throws UnsupportedDim outside 2..6.
  explicit SkewAlgebra(std::size_t dim);

  /// pair_constants[pair_index(i, j)] = coefficients of mu(e_i, e_j).
  SkewAlgebra(std::size_t dim, std::vector<Vec> pair_constants);

  /// Builds from 1-based product records. Unlisted pairs are zero. Throws
  /// InvariantError on i >= j, out-of-range indices or duplicate pairs, and
  /// DimensionMismatch on coefficient lists of the wrong length.
  static SkewAlgebra from_products(std::size_t dim, std::span<const Product> products);
  static SkewAlgebra from_products(std::size_t dim, std::initializer_list<Product> products) {
    return from_products(dim, std::span<const Product>(products.begin(), products.size()));
  }

  std::size_t dim() const { return dim_; }
  std::size_t pair_count() const { return constants_.size(); }

  /// Lexicographic index of the pair (i, j), i < j.
  std::size_t pair_index(std::size_t i, std::size_t j) const;

  /// Coefficients of mu(e_i, e_j) for i < j.
  const Vec& constants(std::size_t i, std::size_t j) const { return constants_[pair_index(i, j)]; }
  const std::vector<Vec>& all_constants() const { return constants_; }

  /// C_{i,j}^k for any i, j, using skew-symmetry.
  Rational coefficient(std::size_t i, std::size_t j, std::size_t k) const;

  bool is_abelian() const;

  friend bool operator==(const SkewAlgebra&, const SkewAlgebra&) = default;

 private:
  std::size_t dim_;
  std::vector<Vec> constants_;
};

Vec multiply(const SkewAlgebra& a, const Vec& x, const Vec& y);

/// mu(mu(x,y),z) + mu(mu(y,z),x) + mu(mu(z,x),y)
Vec jacobiator(const SkewAlgebra& a, const Vec& x, const Vec& y, const Vec& z);
bool is_lie(const SkewAlgebra& a);

/// L_x : y -> mu(x, y)
Endo left_mult(const SkewAlgebra& a, const Vec& x);

/// Gram matrix of K(x, y) = tr(L_x o L_y) in the standard basis.
Matrix killing_matrix(const SkewAlgebra& a);
Rational killing_determinant(const SkewAlgebra& a);

/// mu_p(x, y) = p^{-1} mu(p x, p y). Throws SingularMap if p is not invertible.
SkewAlgebra transport(const SkewAlgebra& a, const Endo& p);

/// Linear subspace of Q^n stored as the RREF of a spanning set (zero rows
/// dropped), so equal subspaces have equal representations.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec basis_vector(std::size_t r) const { return basis_.row(r); }
  bool contains(const Vec& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace span(std::size_t ambient, std::span<const Vec> vectors);
  std::size_t ambient_;
  Matrix basis_;
};

Subspace span(std::size_t ambient, std::span<const Vec> vectors);

/// span{ mu(u_i, w_j) } over basis pairs.
Subspace subspace_product(const SkewAlgebra& a, const Subspace& u, const Subspace& w);

enum class SeriesKind { Central, Derived };

struct SeriesReport {
  SeriesKind kind;
  std::vector<std::size_t> dims;  ///< starts at n; ends at 0 or at the first repeat
  std::vector<Subspace> terms;    ///< terms[k] is C^k or D^k, same length as dims
};

SeriesReport central_series(const SkewAlgebra& a);
SeriesReport derived_series(const SkewAlgebra& a);
bool is_nilpotent(const SkewAlgebra& a);
bool is_solvable(const SkewAlgebra& a);

/// mu(e1,e_i) = e_{i+1} (i = 2,3,4), mu(e2,e3) = a e4 + b e5, mu(e2,e4) = c e5,
/// mu(e3,e4) = d e5.
SkewAlgebra filiform5(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

}  // namespace skewlie
