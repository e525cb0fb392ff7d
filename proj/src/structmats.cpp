#include "skewlie/structmats.hpp"

#include "skewlie/errors.hpp"
#include "skewlie/linalg.hpp"

namespace skewlie {

namespace {

std::vector<Endo> reshape_all(std::size_t n, const std::vector<Vec>& vectors) {
  std::vector<Endo> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(endo_of_vec(n, v));
  return out;
}

void check_endo(const SkewAlgebra& a, const Endo& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim()) {
    throw DimensionMismatch("endomorphism shape does not match algebra dimension");
  }
}

}  // namespace

Vec vec_of_endo(const Endo& f) {
  if (!f.is_square()) throw NonSquare("endomorphism must be square");
  const std::size_t n = f.rows();
  Vec v(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) v[c * n + r] = f(r, c);
  return v;
}

Endo endo_of_vec(std::size_t n, const Vec& v) {
  if (v.size() != n * n) throw DimensionMismatch("flattened endomorphism has wrong length");
  Endo f(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) f(r, c) = v[c * n + r];
  return f;
}

Matrix build_M(const SkewAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n * a.pair_count(), n * n);
  // Unit map E_{r,c} sends e_c to e_r. Its image under delta at (e_i, e_j),
  // component k:  [c = i] C_{r,j}^k + [c = j] C_{i,r}^k - [r = k] C_{i,j}^c.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::size_t base = a.pair_index(i, j) * n;
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t r = 0; r < n; ++r) {
          const std::size_t col = c * n + r;
          for (std::size_t k = 0; k < n; ++k) {
            Rational entry;
            if (c == i) entry += a.coefficient(r, j, k);
            if (c == j) entry += a.coefficient(i, r, k);
            if (r == k) entry -= a.coefficient(i, j, c);
            m(base + k, col) = entry;
          }
        }
      }
    }
  }
  return m;
}

DerivationSpace derivation_space(const SkewAlgebra& a) {
  auto basis = reshape_all(a.dim(), kernel_basis(build_M(a)));
  const std::size_t dim = basis.size();
  return {std::move(basis), dim};
}

std::size_t aut_dimension(const SkewAlgebra& a) {
  return a.dim() * a.dim() - rank(build_M(a));
}

std::size_t orbit_dimension(const SkewAlgebra& a) { return rank(build_M(a)); }

Matrix build_HL(const SkewAlgebra& a) {
  const std::size_t n = a.dim();
  if (n < 3) throw UnsupportedDim("Hom-Lie matrix needs dimension >= 3; every 2-dimensional algebra is Hom-Lie");

  // dd[p][r][m] = component m of mu(mu(e_p1, e_p2), e_r) for the ordered pair p.
  auto double_product = [&](std::size_t x, std::size_t y, std::size_t r, std::size_t m) {
    Rational s;
    for (std::size_t l = 0; l < n; ++l) {
      const Rational cxy = a.coefficient(x, y, l);
      if (!cxy.is_zero()) s += cxy * a.coefficient(l, r, m);
    }
    return s;
  };

  const std::size_t triples = n * (n - 1) * (n - 2) / 6;
  Matrix h(n * triples, n * n);
  std::size_t t = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k, ++t) {
        // Cyclic terms (x, y; z): f is applied to z. E_{r,c} contributes only when c = z.
        const std::size_t cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& term : cyc) {
          const std::size_t c = term[2];
          for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t m = 0; m < n; ++m) {
              h(t * n + m, c * n + r) += double_product(term[0], term[1], r, m);
            }
          }
        }
      }
    }
  }
  return h;
}

HomLieSpace homlie_space(const SkewAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> kernel;
  if (n == 2) {
    for (std::size_t i = 0; i < n * n; ++i) kernel.push_back(unit_vec(n * n, i));
  } else {
    kernel = kernel_basis(build_HL(a));
  }
  auto basis = reshape_all(n, kernel);
  const std::size_t dim = basis.size();
  return {std::move(basis), dim};
}

bool is_homlie(const SkewAlgebra& a) { return homlie_space(a).dim >= 1; }

bool hom_check(const SkewAlgebra& a, const Endo& f) {
  check_endo(a, f);
  const std::size_t n = a.dim();
  std::vector<Vec> e, fe;
  for (std::size_t i = 0; i < n; ++i) {
    e.push_back(unit_vec(n, i));
    fe.push_back(f.col(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vec s = multiply(a, multiply(a, e[i], e[j]), fe[k]) +
                      multiply(a, multiply(a, e[j], e[k]), fe[i]) +
                      multiply(a, multiply(a, e[k], e[i]), fe[j]);
        if (!is_zero(s)) return false;
      }
  return true;
}

}  // namespace skewlie
