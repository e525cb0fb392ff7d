#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "skewlie/matrix.hpp"

namespace skewlie {

struct EchelonResult {
  Matrix reduced;  ///< unique reduced row-echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;  ///< strictly increasing, size == rank
};

/// Gauss-Jordan elimination over the rationals.
EchelonResult echelonize(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Canonical kernel basis read off the RREF: one vector per free column, in
/// increasing column order, with that free variable set to 1 and the other
/// free variables set to 0.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. Throws NonSquare.
Rational determinant(const Matrix& m);

/// Inverse, or nullopt when m is singular. Throws NonSquare.
std::optional<Matrix> inverse(const Matrix& m);

/// Solution set of m x = rhs: a particular solution (free variables zero) if
/// the system is consistent, plus the canonical kernel basis of m.
struct AffineSolution {
  std::optional<Vec> particular;
  std::vector<Vec> homogeneous;
};

AffineSolution solve_affine(const Matrix& m, const Vec& rhs);

}  // namespace skewlie
