#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewlie/algebra.hpp"

namespace skewlie {

/// Normal-form families of 3-dimensional skew-symmetric algebras.
///
///   Abelian              mu = 0
///   HeisenbergNilpotent  mu(e1,e2) = e3
///   SolvableLieLine      mu(e1,e3) = e3
///   SolvableLiePlane     mu(e1,e2) = b1 e2 + g1 e3, mu(e1,e3) = b2 e2 + g2 e3, b1 g2 - b2 g1 != 0
///   SolvableNonLie       as SolvableLiePlane plus mu(e2,e3) = e3, (b1, b2) != 0
///   NonSolvableNS1       mu(e1,e2) = e3, mu(e1,e3) = b2 e2 + g2 e3,
///                        mu(e2,e3) = a3 e1 + b3 e2 + g3 e3, a3 b2 != 0
///   NonSolvableNS2       mu(e1,e2) = e3, mu(e1,e3) = a2 e1 + b2 e2 + g2 e3,
///                        mu(e2,e3) = b3 e2 + g3 e3, a2 b3 != 0
enum class FamilyTag {
  Abelian,
  HeisenbergNilpotent,
  SolvableLieLine,
  SolvableLiePlane,
  SolvableNonLie,
  NonSolvableNS1,
  NonSolvableNS2,
};

std::string_view to_string(FamilyTag tag);
std::optional<FamilyTag> family_from_string(std::string_view name);

/// Parameter names ("alpha2", "beta1", ...) used by a family, in display order.
const std::vector<std::string>& family_parameters(FamilyTag tag);

using Params = std::map<std::string, Rational>;

/// The normal-form algebra of a family. Missing parameters default to zero;
/// unknown names throw InvariantError. Constraints are not checked here.
SkewAlgebra normal_form(FamilyTag tag, const Params& params);

struct ClassificationResult {
  FamilyTag tag;
  Params params;
  Endo witness;  ///< invertible P with transport(input, P) == normal_form(tag, params)
  bool lie;
};

inline constexpr int kDefaultPairHeight = 4;

/// Throws UnsupportedDim unless dim == 3. `pair_height` bounds the regular
/// pair search used for non-solvable inputs.
///
/// Every non-solvable algebra over the rationals has an NS1 form (an NS2 form
/// with alpha2 b3 != 0 always admits a basis change to NS1), so the
/// non-solvable tag is always NonSolvableNS1; NS2 remains available through
/// normal_form.
ClassificationResult classify(const SkewAlgebra& a, int pair_height = kDefaultPairHeight);

struct RegularPair {
  Vec x;
  Vec y;
};

/// First pair (x, y) with det[x | y | mu(x,y)] != 0 among integer vectors of
/// max-norm height 1, 2, ..., max_height. Within a height, vectors are taken
/// up to sign (first nonzero coordinate positive) and ordered by support size,
/// then by descending coordinates, so e1, e2, e3 come first. Throws NotFound.
RegularPair find_regular_pair(const SkewAlgebra& a, int max_height = kDefaultPairHeight);

/// Constant-coefficient solutions (a, b) of
///   mu(mu(X,Y),Z) + a mu(mu(Y,Z),X) + b mu(mu(Z,X),Y) = 0   at (e1, e2, e3).
struct LieTypeSolution {
  std::optional<std::pair<Rational, Rational>> particular;  ///< nullopt: no solution
  std::vector<std::pair<Rational, Rational>> homogeneous;
  bool admissible = false;  ///< some solution has a != 0

  bool consistent() const { return particular.has_value(); }
};

LieTypeSolution lie_type_constants(const SkewAlgebra& a);

/// Residual of the Lie-type relation at (e1, e2, e3) for given (a, b).
Vec lie_type_residual(const SkewAlgebra& alg, const Rational& a, const Rational& b);

}  // namespace skewlie
