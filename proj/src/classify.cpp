#include "skewlie/classify.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

#include "skewlie/errors.hpp"
#include "skewlie/linalg.hpp"

namespace skewlie {

namespace {

constexpr std::array<std::pair<FamilyTag, std::string_view>, 7> kNames{{
    {FamilyTag::Abelian, "Abelian"},
    {FamilyTag::HeisenbergNilpotent, "HeisenbergNilpotent"},
    {FamilyTag::SolvableLieLine, "SolvableLieLine"},
    {FamilyTag::SolvableLiePlane, "SolvableLiePlane"},
    {FamilyTag::SolvableNonLie, "SolvableNonLie"},
    {FamilyTag::NonSolvableNS1, "NonSolvableNS1"},
    {FamilyTag::NonSolvableNS2, "NonSolvableNS2"},
}};

void require_dim3(const SkewAlgebra& a, const char* what) {
  if (a.dim() != 3) {
    throw UnsupportedDim(std::string(what) + " is defined for dimension 3 only, got " +
                         std::to_string(a.dim()));
  }
}

Rational param(const Params& p, const std::string& name) {
  auto it = p.find(name);
  return it == p.end() ? Rational() : it->second;
}

Matrix columns(std::initializer_list<Vec> cols) {
  std::vector<Vec> v(cols);
  return Matrix::from_columns(v, v.front().size());
}

/// Standard basis vectors, lowest index first, that extend `partial` to an
/// independent set of n vectors.
std::vector<Vec> completion(std::size_t n, std::vector<Vec> partial) {
  std::vector<Vec> added;
  for (std::size_t i = 0; i < n && partial.size() < n; ++i) {
    partial.push_back(unit_vec(n, i));
    if (rank(Matrix::from_rows(partial, n)) == partial.size()) {
      added.push_back(partial.back());
    } else {
      partial.pop_back();
    }
  }
  return added;
}

/// Index of the RREF pivot of a basis row (its first nonzero entry, equal to 1).
std::size_t pivot_of(const Vec& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (!row[i].is_zero()) return i;
  }
  throw std::logic_error("pivot_of: zero row");
}

Rational det3(const Vec& x, const Vec& y, const Vec& z) {
  return x[0] * (y[1] * z[2] - y[2] * z[1]) - x[1] * (y[0] * z[2] - y[2] * z[0]) +
         x[2] * (y[0] * z[1] - y[1] * z[0]);
}

ClassificationResult finish(const SkewAlgebra& a, FamilyTag tag, Endo witness, Params params) {
  ClassificationResult r{tag, std::move(params), std::move(witness), is_lie(a)};
  if (transport(a, r.witness) != normal_form(r.tag, r.params)) {
    throw std::logic_error("classify: witness does not reproduce the normal form");
  }
  return r;
}

ClassificationResult classify_nilpotent(const SkewAlgebra& a, const SeriesReport& central) {
  const Subspace& c1 = central.terms.at(1);
  if (c1.dim() != 1) throw std::logic_error("classify: nilpotent algebra with dim C^1 != 1");
  const auto extra = completion(3, {c1.basis_vector(0)});
  const Vec z = multiply(a, extra[0], extra[1]);
  return finish(a, FamilyTag::HeisenbergNilpotent, columns({extra[0], extra[1], z}), {});
}

ClassificationResult classify_line(const SkewAlgebra& a, const Subspace& d1) {
  // mu(x, y) = omega(x, y) d for a skew form omega of rank 2.
  const Vec d = d1.basis_vector(0);
  const std::size_t piv = pivot_of(d);
  auto omega = [&](const Vec& x, const Vec& y) { return multiply(a, x, y)[piv]; };

  Vec x;
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational w = omega(unit_vec(3, i), d);
    if (!w.is_zero()) {
      x = (Rational(1) / w) * unit_vec(3, i);
      break;
    }
  }
  if (x.empty()) throw std::logic_error("classify: derived line acts trivially");

  Matrix gram(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) gram(i, j) = omega(unit_vec(3, i), unit_vec(3, j));
  const auto radical = kernel_basis(gram);
  if (radical.size() != 1) throw std::logic_error("classify: skew form of unexpected rank");
  return finish(a, FamilyTag::SolvableLieLine, columns({x, radical[0], d}), {});
}

ClassificationResult classify_plane(const SkewAlgebra& a, const Subspace& d1,
                                    const Subspace& d2) {
  if (d2.dim() == 0) {
    const Vec u = completion(3, {d1.basis_vector(0), d1.basis_vector(1)}).at(0);
    const Endo p = columns({u, d1.basis_vector(0), d1.basis_vector(1)});
    const SkewAlgebra t = transport(a, p);
    return finish(a, FamilyTag::SolvableLiePlane, p,
                  {{"beta1", t.constants(0, 1)[1]},
                   {"gamma1", t.constants(0, 1)[2]},
                   {"beta2", t.constants(0, 2)[1]},
                   {"gamma2", t.constants(0, 2)[2]}});
  }

  // Flag A > D^1 > D^2 > 0 with D^2 = span(d); mu(w, d) = gamma3 d on D^1.
  const Vec d = d2.basis_vector(0);
  Vec w = d2.contains(d1.basis_vector(0)) ? d1.basis_vector(1) : d1.basis_vector(0);
  const Rational gamma3 = multiply(a, w, d)[pivot_of(d)];
  if (gamma3.is_zero()) throw std::logic_error("classify: derived flag with gamma3 = 0");
  w = (Rational(1) / gamma3) * w;
  const Vec u = completion(3, {w, d}).at(0);
  const Endo p = columns({u, w, d});
  const SkewAlgebra t = transport(a, p);
  return finish(a, FamilyTag::SolvableNonLie, p,
                {{"beta1", t.constants(0, 1)[1]},
                 {"gamma1", t.constants(0, 1)[2]},
                 {"beta2", t.constants(0, 2)[1]},
                 {"gamma2", t.constants(0, 2)[2]}});
}

/// Integer vectors of exact max-norm h, first nonzero coordinate positive.
std::vector<std::vector<int>> shell(std::size_t n, int h) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, -h);
  while (true) {
    int top = 0;
    int first = 0;
    for (int x : v) {
      top = std::max(top, std::abs(x));
      if (first == 0) first = x;
    }
    if (top == h && first > 0) out.push_back(v);
    std::size_t i = n;
    while (i > 0 && v[i - 1] == h) v[--i] = -h;
    if (i == 0) break;
    ++v[i - 1];
  }
  auto key = [](const std::vector<int>& v) {
    const auto support = std::count_if(v.begin(), v.end(), [](int x) { return x != 0; });
    std::vector<int> neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](int x) { return -x; });
    return std::make_tuple(support, neg);
  };
  std::sort(out.begin(), out.end(), [&](const auto& l, const auto& r) { return key(l) < key(r); });
  return out;
}

/// Searches pairs of integer vectors by increasing max-norm height; within a
/// height, y runs over the candidate list and x over the earlier candidates.
/// With `both_orders` the swapped pair (y, x) is tried right after (x, y).
template <class Pred>
std::optional<RegularPair> search_pairs(int max_height, bool both_orders, Pred&& accept) {
  std::vector<Vec> candidates;
  std::vector<int> heights;
  for (int h = 1; h <= max_height; ++h) {
    for (const auto& v : shell(3, h)) {
      candidates.push_back(Vec(v.begin(), v.end()));
      heights.push_back(h);
    }
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      for (std::size_t i = 0; i < b; ++i) {
        if (heights[b] < h && heights[i] < h) continue;
        if (accept(candidates[i], candidates[b])) return RegularPair{candidates[i], candidates[b]};
        if (both_orders && accept(candidates[b], candidates[i]))
          return RegularPair{candidates[b], candidates[i]};
      }
    }
  }
  return std::nullopt;
}

// det[x, y, mu(x,y)] * det[y, mu(x,y), mu(y, mu(x,y))] has degree <= 4 in each
// coordinate of x and <= 6 in each coordinate of y, so if it is not identically
// zero it is nonzero somewhere on the grid {-3..3}^6 (combinatorial
// Nullstellensatz). Both factors are invariant up to sign under sign flips of
// x or y, so sign-normalized candidates suffice.
constexpr int kNs1SearchHeight = 3;

bool ns1_pair(const SkewAlgebra& a, const Vec& x, const Vec& y) {
  const Vec z = multiply(a, x, y);
  return !det3(x, y, z).is_zero() && !det3(y, z, multiply(a, y, z)).is_zero();
}

ClassificationResult classify_nonsolvable(const SkewAlgebra& a, int pair_height) {
  // In the basis [x | y | mu(x,y)], alpha3 != 0 iff mu(y, mu(x,y)) leaves
  // span(y, mu(x,y)). Such a pair exists for every non-solvable algebra, so
  // the NS1 form is always reached and the tag is basis independent.
  RegularPair pair = find_regular_pair(a, pair_height);
  if (!ns1_pair(a, pair.x, pair.y)) {
    const auto found = search_pairs(kNs1SearchHeight, true, [&](const Vec& x, const Vec& y) {
      return ns1_pair(a, x, y);
    });
    if (!found) throw std::logic_error("classify: non-solvable algebra without an NS1 pair");
    pair = *found;
  }
  Endo p = columns({pair.x, pair.y, multiply(a, pair.x, pair.y)});
  SkewAlgebra t = transport(a, p);
  const Rational alpha2 = t.constants(0, 2)[0];
  const Rational alpha3 = t.constants(1, 2)[0];
  if (!alpha2.is_zero()) {
    // e1 -> e1 - (alpha2 / alpha3) e2 removes the e1 component of mu(e1, e3).
    Endo shear = Matrix::identity(3);
    shear(1, 0) = -(alpha2 / alpha3);
    p = p * shear;
    t = transport(a, p);
  }
  return finish(a, FamilyTag::NonSolvableNS1, p,
                {{"beta2", t.constants(0, 2)[1]},
                 {"gamma2", t.constants(0, 2)[2]},
                 {"alpha3", t.constants(1, 2)[0]},
                 {"beta3", t.constants(1, 2)[1]},
                 {"gamma3", t.constants(1, 2)[2]}});
}

}  // namespace

std::string_view to_string(FamilyTag tag) {
  for (const auto& [t, name] : kNames) {
    if (t == tag) return name;
  }
  return "?";
}

std::optional<FamilyTag> family_from_string(std::string_view name) {
  for (const auto& [t, n] : kNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

const std::vector<std::string>& family_parameters(FamilyTag tag) {
  static const std::vector<std::string> none;
  static const std::vector<std::string> plane{"beta1", "gamma1", "beta2", "gamma2"};
  static const std::vector<std::string> ns1{"beta2", "gamma2", "alpha3", "beta3", "gamma3"};
  static const std::vector<std::string> ns2{"alpha2", "beta2", "gamma2", "beta3", "gamma3"};
  switch (tag) {
    case FamilyTag::SolvableLiePlane:
    case FamilyTag::SolvableNonLie:
      return plane;
    case FamilyTag::NonSolvableNS1:
      return ns1;
    case FamilyTag::NonSolvableNS2:
      return ns2;
    default:
      return none;
  }
}

SkewAlgebra normal_form(FamilyTag tag, const Params& params) {
  const auto& allowed = family_parameters(tag);
  for (const auto& [name, value] : params) {
    if (std::find(allowed.begin(), allowed.end(), name) == allowed.end()) {
      throw InvariantError("family " + std::string(to_string(tag)) + " has no parameter " + name);
    }
  }
  auto p = [&](const char* n) { return param(params, n); };
  switch (tag) {
    case FamilyTag::Abelian:
      return SkewAlgebra(3);
    case FamilyTag::HeisenbergNilpotent:
      return SkewAlgebra::from_products(3, {{1, 2, {0, 0, 1}}});
    case FamilyTag::SolvableLieLine:
      return SkewAlgebra::from_products(3, {{1, 3, {0, 0, 1}}});
    case FamilyTag::SolvableLiePlane:
      return SkewAlgebra::from_products(
          3, {{1, 2, {0, p("beta1"), p("gamma1")}}, {1, 3, {0, p("beta2"), p("gamma2")}}});
    case FamilyTag::SolvableNonLie:
      return SkewAlgebra::from_products(3, {{1, 2, {0, p("beta1"), p("gamma1")}},
                                            {1, 3, {0, p("beta2"), p("gamma2")}},
                                            {2, 3, {0, 0, 1}}});
    case FamilyTag::NonSolvableNS1:
      return SkewAlgebra::from_products(3, {{1, 2, {0, 0, 1}},
                                            {1, 3, {0, p("beta2"), p("gamma2")}},
                                            {2, 3, {p("alpha3"), p("beta3"), p("gamma3")}}});
    case FamilyTag::NonSolvableNS2:
      return SkewAlgebra::from_products(3, {{1, 2, {0, 0, 1}},
                                            {1, 3, {p("alpha2"), p("beta2"), p("gamma2")}},
                                            {2, 3, {0, p("beta3"), p("gamma3")}}});
  }
  throw std::logic_error("normal_form: unknown tag");
}

ClassificationResult classify(const SkewAlgebra& a, int pair_height) {
  require_dim3(a, "classify");
  if (a.is_abelian()) return {FamilyTag::Abelian, {}, Matrix::identity(3), true};

  const SeriesReport central = central_series(a);
  if (central.dims.back() == 0) return classify_nilpotent(a, central);

  const SeriesReport derived = derived_series(a);
  const Subspace& d1 = derived.terms.at(1);
  switch (d1.dim()) {
    case 1:
      return classify_line(a, d1);
    case 2:
      return classify_plane(a, d1, derived.terms.at(2));
    default:
      return classify_nonsolvable(a, pair_height);
  }
}

RegularPair find_regular_pair(const SkewAlgebra& a, int max_height) {
  require_dim3(a, "find_regular_pair");
  const auto pair = search_pairs(max_height, false, [&](const Vec& x, const Vec& y) {
    return !det3(x, y, multiply(a, x, y)).is_zero();
  });
  if (!pair) {
    throw NotFound("no regular pair up to height " + std::to_string(max_height) +
                   " (solvable input, or raise the height bound)");
  }
  return *pair;
}

Vec lie_type_residual(const SkewAlgebra& alg, const Rational& a, const Rational& b) {
  require_dim3(alg, "lie_type_residual");
  const Vec e1 = unit_vec(3, 0), e2 = unit_vec(3, 1), e3 = unit_vec(3, 2);
  return multiply(alg, multiply(alg, e1, e2), e3) + a * multiply(alg, multiply(alg, e2, e3), e1) +
         b * multiply(alg, multiply(alg, e3, e1), e2);
}

LieTypeSolution lie_type_constants(const SkewAlgebra& alg) {
  require_dim3(alg, "lie_type_constants");
  const Vec e1 = unit_vec(3, 0), e2 = unit_vec(3, 1), e3 = unit_vec(3, 2);
  const Vec j1 = multiply(alg, multiply(alg, e1, e2), e3);
  const Vec j2 = multiply(alg, multiply(alg, e2, e3), e1);
  const Vec j3 = multiply(alg, multiply(alg, e3, e1), e2);

  const std::vector<Vec> cols{j2, j3};
  const AffineSolution s = solve_affine(Matrix::from_columns(cols, 3), Rational(-1) * j1);

  LieTypeSolution out;
  for (const auto& h : s.homogeneous) out.homogeneous.emplace_back(h[0], h[1]);
  if (s.particular) {
    out.particular.emplace((*s.particular)[0], (*s.particular)[1]);
    out.admissible = !out.particular->first.is_zero() ||
                     std::any_of(out.homogeneous.begin(), out.homogeneous.end(),
                                 [](const auto& h) { return !h.first.is_zero(); });
  }
  return out;
}

}  // namespace skewlie
