#pragma once

#include <cstddef>
#include <vector>

#include "skewlie/algebra.hpp"
#include "skewlie/matrix.hpp"

namespace skewlie {

/// Column-major flattening (f_11, f_21, ..., f_n1, f_12, ..., f_nn).
Vec vec_of_endo(const Endo& f);
/// Inverse of vec_of_endo for a vector of length n^2.
Endo endo_of_vec(std::size_t n, const Vec& v);

/// Matrix of f -> delta_mu f, where
///   delta_mu f(x, y) = mu(f x, y) + mu(x, f y) - f(mu(x, y)).
/// Rows: pairs i<j in lexicographic order, components 1..n inside each pair.
/// Columns: vec_of_endo ordering. Shape (n * C(n,2)) x n^2.
Matrix build_M(const SkewAlgebra& a);

struct DerivationSpace {
  std::vector<Endo> basis;
  std::size_t dim = 0;
};

DerivationSpace derivation_space(const SkewAlgebra& a);
/// Dimension of Der(mu), i.e. of the automorphism group.
std::size_t aut_dimension(const SkewAlgebra& a);
/// rank(build_M(a)) = n^2 - aut_dimension(a).
std::size_t orbit_dimension(const SkewAlgebra& a);

/// Matrix of f -> (cyclic sums mu(mu(e_i,e_j), f e_k) + mu(mu(e_j,e_k), f e_i)
/// + mu(mu(e_k,e_i), f e_j)) over triples i<j<k in lexicographic order,
/// components innermost. Shape (n * C(n,3)) x n^2. Throws UnsupportedDim for n < 3.
Matrix build_HL(const SkewAlgebra& a);

struct HomLieSpace {
  std::vector<Endo> basis;
  std::size_t dim = 0;
};

/// Kernel of build_HL reshaped to maps; for n = 2 the whole of gl(V).
HomLieSpace homlie_space(const SkewAlgebra& a);
/// True iff a nonzero twisting map exists.
bool is_homlie(const SkewAlgebra& a);
/// Evaluates the Hom-Jacobi identity for f directly on all basis triples.
bool hom_check(const SkewAlgebra& a, const Endo& f);

}  // namespace skewlie
