// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

using namespace skewlie;
using oracle::e;

namespace {

// Frozen tolerances.
constexpr std::size_t kSolDraws = 20;
constexpr std::size_t kNsDraws = 20;
constexpr std::size_t kHomLieTrials = 500;
constexpr std::size_t kDim2Trials = 50;
constexpr std::size_t kOracleTrials = 100;
constexpr std::size_t kWitnessTrials = 100;
constexpr std::size_t kGenericityTrials = 200;
constexpr std::uint64_t kGenericitySeed = 42;
constexpr long kGenericityHeight = 2;
// Calibrated from a pilot run at the seed above (observed 0.985 and 1.0).
const Rational kRank8Threshold(95, 100);
const Rational kNonHomLieThreshold(95, 100);

struct Verdict {
  std::ostringstream detail;
  std::map<std::string, std::size_t> failures;  ///< message -> occurrences

  bool pass() const { return failures.empty(); }
  void require(bool ok, const std::string& what) {
    if (!ok) ++failures[what];
  }
  std::string summary() const {
    std::string s = detail.str();
    for (const auto& [what, count] : failures) {
      s += "; FAILED " + what;
      if (count > 1) s += " (x" + std::to_string(count) + ")";
    }
    return s;
  }
};

using Criterion = std::function<void(Verdict&)>;

bool in_kernel(const Matrix& m, const Vec& v) { return oracle::is_zero(oracle::times(m, v)); }

/// Printed generators are adjudicated by evaluating delta_mu directly.
bool is_derivation(const SkewAlgebra& a, const Vec& v) {
  return oracle::is_zero(oracle::direct_delta(a, endo_of_vec(3, v)));
}

Endo unit(std::size_t r, std::size_t c) {
  Endo f(3, 3);
  f(r, c) = 1;
  return f;
}

std::vector<Vec> flatten(const std::vector<Endo>& maps) {
  std::vector<Vec> out;
  for (const auto& f : maps) out.push_back(vec_of_endo(f));
  return out;
}

void heisenberg(Verdict& v) {
  const auto h = SkewAlgebra::from_products(3, {{1, 2, {0, 0, 1}}});
  const std::size_t r = rank(build_M(h));
  const std::size_t d = derivation_space(h).dim;
  const auto tag = classify(h).tag;
  const std::size_t k = homlie_space(h).dim;
  v.detail << "rank " << r << ", derivations " << d << ", HL kernel " << k << ", "
           << to_string(tag);
  v.require(r == 3, "rank(M) == 3");
  v.require(d == 6, "derivation dim == 6");
  v.require(is_nilpotent(h), "nilpotent");
  v.require(tag == FamilyTag::HeisenbergNilpotent, "tag HeisenbergNilpotent");
  v.require(k == 9, "HL kernel dim == 9");
}

void rank8_example(Verdict& v) {
  const auto a = oracle::dim3({0, 1, 0}, {0, 0, 2}, {1, 0, 0});
  const auto der = derivation_space(a);
  const Vec expected = vec_of_endo(Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}});
  v.detail << "rank " << rank(build_M(a)) << ", derivation dim " << der.dim;
  v.require(rank(build_M(a)) == 8, "rank(M) == 8");
  v.require(der.dim == 1 && oracle::same_span(flatten(der.basis), {expected}, 9),
            "Der = span{diag(0,1,-1)}");
}

void gamma_family(Verdict& v) {
  auto alg = [](const Rational& g2) { return oracle::dim3({0, 1, 0}, {0, 0, g2}, {1, 0, 0}); };
  oracle::Rng rng(3);
  std::vector<Rational> values;
  for (int g = -5; g <= 5; ++g) values.emplace_back(g);
  for (int t = 0; t < 20; ++t) values.push_back(rng.rational(9, 7));
  for (const auto& g : values) v.require(is_lie(alg(g)) == (g == -1), "is_lie <=> g2 = -1 at g2 = " + g.str());

  const std::size_t r_minus = rank(build_M(alg(-1))), r_plus = rank(build_M(alg(1)));
  v.require(r_minus == 6, "rank 6 at g2 = -1");
  v.require(r_plus == 6, "rank 6 at g2 = 1");

  const auto ker = derivation_space(alg(1));
  const std::vector<Vec> pattern = {vec_of_endo(unit(1, 1) + Rational(-1) * unit(2, 2)),
                                    vec_of_endo(unit(1, 2)), vec_of_endo(unit(2, 1))};
  v.require(ker.dim == 3, "kernel dim 3 at g2 = 1");
  v.require(oracle::same_span(flatten(ker.basis), pattern, 9),
            "kernel at g2 = 1 is {[[0,0,0],[0,b2,c2],[0,b3,-b2]]}");

  const auto lie_ker = derivation_space(alg(-1));
  const std::vector<Vec> lie_pattern = {
      vec_of_endo(Rational(-1) * unit(1, 0) + unit(0, 2)),
      vec_of_endo(Rational(-1) * unit(0, 1) + unit(2, 0)),
      vec_of_endo(unit(1, 1) + Rational(-1) * unit(2, 2))};
  v.require(oracle::same_span(flatten(lie_ker.basis), lie_pattern, 9),
            "kernel at g2 = -1 is {[[0,-a3,a2],[-a2,b2,0],[a3,0,-b2]]}");
  v.detail << "Lie exactly at g2 = -1 over " << values.size() << " values, rank " << r_minus
           << " / " << r_plus << ", kernel at g2 = 1 of dim " << ker.dim << " with stated pattern";
}

void lie_line(Verdict& v) {
  const auto a = normal_form(FamilyTag::SolvableLieLine, {});
  v.detail << "rank " << rank(build_M(a)) << ", aut " << aut_dimension(a);
  v.require(rank(build_M(a)) == 5, "rank(M) == 5");
  v.require(aut_dimension(a) == 4, "aut_dimension == 4");
}

void two_ranks(Verdict& v) {
  const auto a = oracle::dim3({0, 0, 1}, {0, 1, 0}, {0, 0, 0});
  const auto b = oracle::dim3({0, 1, 0}, {0, 0, 1}, {0, 0, 0});
  v.detail << "ranks " << rank(build_M(a)) << " and " << rank(build_M(b));
  v.require(rank(build_M(a)) == 5, "rank 5 for mu(e1,e2)=e3, mu(e1,e3)=e2");
  v.require(rank(build_M(b)) == 3, "rank 3 for mu(e1,e2)=e2, mu(e1,e3)=e3");
}

void sol_family(Verdict& v) {
  oracle::Rng rng(606);
  std::size_t generic = 0, printed_ok = 0, corrected_ok = 0, boundary = 0;
  for (std::size_t t = 0; t < kSolDraws; ++t) {
    // Every fourth draw sits on the beta2 = 0 stratum.
    const bool zero_b2 = t % 4 == 3;
    const Rational b1 = zero_b2 ? rng.nonzero() : rng.rational();
    const Rational g1 = rng.rational(), g2 = rng.rational();
    const Rational b2 = zero_b2 ? Rational(0) : rng.nonzero();
    const auto a = oracle::sol(b1, g1, b2, g2);
    const Matrix m = build_M(a);
    v.require(killing_determinant(a) == Rational(-1) * b2 * b2, "Killing determinant == -beta2^2");
    if (zero_b2) {
      ++boundary;
      v.require(rank(m) == 7, "rank 7 when beta2 = 0");
      v.require(in_kernel(m, oracle::sol_beta2_zero_first(g1)) &&
                    in_kernel(m, oracle::sol_beta2_zero_second(b1, g2)),
                "both printed beta2 = 0 generators in kernel");
    } else {
      ++generic;
      v.require(rank(m) == 8, "rank 8 when beta2 != 0");
      const Vec printed = oracle::sol_generator_printed(b1, g1, b2, g2);
      const Vec corrected = oracle::sol_generator_corrected(b1, g1, b2, g2);
      if (in_kernel(m, printed)) ++printed_ok;
      if (in_kernel(m, corrected) && is_derivation(a, corrected)) ++corrected_ok;
    }
  }
  v.require(printed_ok == generic, "printed beta2 != 0 generator in kernel (" +
                                       std::to_string(printed_ok) + "/" + std::to_string(generic) +
                                       " draws)");
  v.detail << generic << " generic and " << boundary << " beta2 = 0 draws; second entry beta2*(beta1+gamma2) generator in kernel in " << corrected_ok << "/"
           << generic << " draws";
}

struct NsDraw {
  SkewAlgebra algebra;
  Vec printed;
  Vec corrected;
};

void ns_family(Verdict& v, const char* name, std::size_t& mismatches,
               const std::function<NsDraw(oracle::Rng&)>& draw, const SkewAlgebra& lie_case) {
  oracle::Rng rng(name[2] == '1' ? 701 : 702);
  std::size_t agree = 0;
  for (std::size_t t = 0; t < kNsDraws; ++t) {
    const NsDraw d = draw(rng);
    const Matrix m = build_M(d.algebra);
    v.require(rank(m) == 8, std::string(name) + " generic rank 8");
    // Matrix-vs-direct adjudication of the printed vector.
    const bool printed_in_kernel = in_kernel(m, d.printed);
    v.require(printed_in_kernel == is_derivation(d.algebra, d.printed),
              std::string(name) + " matrix and direct evaluation agree on printed vector");
    if (printed_in_kernel) ++agree;
    else ++mismatches;
    v.require(in_kernel(m, d.corrected) && is_derivation(d.algebra, d.corrected),
              std::string(name) + " adjudicated generator in kernel");
  }
  v.require(rank(build_M(lie_case)) == 6 && is_lie(lie_case), std::string(name) + " Lie sub-case rank 6");
  v.detail << name << ": printed generator in kernel " << agree << "/" << kNsDraws;
}

void ns_families(Verdict& v) {
  std::size_t ns1_mismatch = 0, ns2_mismatch = 0;
  ns_family(
      v, "ns1", ns1_mismatch,
      [](oracle::Rng& rng) {
        const Rational b2 = rng.nonzero(), g2 = rng.nonzero(), a3 = rng.nonzero(),
                       b3 = rng.nonzero(), g3 = rng.nonzero();
        return NsDraw{oracle::ns1(b2, g2, a3, b3, g3), oracle::ns1_generator_printed(b2, g2, a3, b3, g3),
                      oracle::ns1_generator_corrected(b2, g2, a3, b3, g3)};
      },
      oracle::ns1(3, 0, -2, 0, 0));
  v.detail << ", ";
  ns_family(
      v, "ns2", ns2_mismatch,
      [](oracle::Rng& rng) {
        const Rational a2 = rng.nonzero(), b2 = rng.nonzero(), g2 = rng.nonzero(),
                       b3 = rng.nonzero(), g3 = rng.nonzero();
        return NsDraw{oracle::ns2(a2, b2, g2, b3, g3), oracle::ns2_generator_printed(a2, b2, g2, b3, g3),
                      oracle::ns2_generator_corrected(a2, b2, g2, b3, g3)};
      },
      oracle::ns2(2, 5, 0, -2, 0));
  if (ns1_mismatch + ns2_mismatch > 0)
    v.detail << "; printed mismatches confirmed by direct evaluation, corrected generators in kernel";
}

void homlie3(Verdict& v) {
  std::size_t lie = 0, min_dim = 9;
  for (std::size_t t = 0; t < kHomLieTrials; ++t) {
    const SampleConfig cfg{3, kHomLieTrials, 8, 1 + static_cast<long>(t % 3)};
    const auto a = random_algebra(cfg, t);
    const auto h = homlie_space(a);
    min_dim = std::min(min_dim, h.dim);
    if (is_lie(a)) ++lie;
    v.require(h.dim >= 6, "HL kernel dim >= 6");
    v.require(is_homlie(a), "is_homlie");
    v.require(hom_check(a, Matrix::identity(3)) == is_lie(a), "hom_check(identity) <=> is_lie");
  }
  v.detail << kHomLieTrials << " algebras, min HL kernel dim " << min_dim << ", " << lie << " Lie";
}

void counterexample(Verdict& v) {
  const auto a = oracle::counterexample4();
  const Matrix hl = build_HL(a);
  const Rational det = determinant(hl);
  const auto g = oracle::generic4();
  v.detail << "rank HL " << rank(hl) << ", det " << det << ", generic rank M " << rank(build_M(g))
           << ", aut " << aut_dimension(g);
  v.require(rank(hl) == 16, "rank(HL) == 16");
  v.require(det == oracle::kCounterexampleHLDet, "det(HL) == frozen cofactor value");
  v.require(!is_homlie(a), "not Hom-Lie");
  v.require(rank(build_M(g)) == 16, "generic rank(M) == 16");
  v.require(aut_dimension(g) == 0, "generic aut_dimension == 0");
}

void dim2(Verdict& v) {
  const SampleConfig cfg{2, 1000, 2024, 2};
  std::size_t seen = 0;
  for (std::size_t i = 0; seen < kDim2Trials; ++i) {
    const auto a = random_algebra(cfg, i);
    if (a.is_abelian()) continue;
    ++seen;
    v.require(rank(build_M(a)) == 2, "rank(M) == 2");
    v.require(derivation_space(a).dim == 2, "derivation dim 2");
    v.require(is_lie(a), "is_lie");
  }
  v.detail << seen << " non-abelian algebras";
}

void filiform(Verdict& v) {
  const auto a = filiform5(1, 0, 0, 1), b = filiform5(1, 0, 1, 0);
  v.detail << "filiform5(1,0,0,1) HL kernel dim " << homlie_space(a).dim;
  v.require(!is_lie(a), "filiform5(1,0,0,1) not Lie");
  v.require(is_homlie(a), "filiform5(1,0,0,1) Hom-Lie");
  v.require(is_lie(b), "filiform5(1,0,1,0) Lie");
}

void oracle_equivalence(Verdict& v) {
  oracle::Rng rng(1212);
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t t = 0; t < kOracleTrials; ++t) {
      const auto a = rng.algebra(n);
      const Endo f = rng.endo(n);
      v.require(oracle::times(build_M(a), vec_of_endo(f)) == oracle::direct_delta(a, f),
                "M vec(f) == delta f in dim " + std::to_string(n));
      if (n >= 3) {
        v.require(oracle::times(build_HL(a), vec_of_endo(f)) == oracle::direct_cyclic(a, f),
                  "HL vec(f) == cyclic sum in dim " + std::to_string(n));
      } else {
        v.require(oracle::direct_cyclic(a, f).empty(), "no triples in dim 2");
      }
      ++checked;
    }
  }
  v.detail << checked << " (algebra, map) pairs over dims 2..5; dim 2 has no triples";
}

void witnesses(Verdict& v) {
  oracle::Rng rng(1313);
  std::map<FamilyTag, std::size_t> tags;
  for (std::size_t t = 0; t < kWitnessTrials; ++t) {
    const SampleConfig cfg{3, kWitnessTrials, 13, 1 + static_cast<long>(t % 2)};
    const auto a = random_algebra(cfg, t);
    const auto r = classify(a);
    ++tags[r.tag];
    v.require(transport(a, r.witness) == normal_form(r.tag, r.params), "witness reproduces normal form");
    const auto b = transport(a, rng.invertible(3));
    v.require(classify(b).tag == r.tag, "tag invariant under basis change");
    v.require(rank(build_M(b)) == rank(build_M(a)), "rank(M) invariant");
    v.require(homlie_space(b).dim == homlie_space(a).dim, "HL kernel dim invariant");
  }
  v.detail << kWitnessTrials << " algebras:";
  for (const auto& [tag, count] : tags) v.detail << " " << to_string(tag) << "=" << count;
}

void genericity(Verdict& v) {
  const auto r3 = run_experiment({3, kGenericityTrials, kGenericitySeed, kGenericityHeight});
  const auto r4 = run_experiment({4, kGenericityTrials, kGenericitySeed, kGenericityHeight});
  const auto it = r3.rank_histogram_M.find(8);
  const long rank8 = it == r3.rank_histogram_M.end() ? 0 : static_cast<long>(it->second);
  const Rational f3(rank8, static_cast<long>(r3.trials));
  const Rational f4(static_cast<long>(r4.trials - r4.homlie_count), static_cast<long>(r4.trials));
  v.detail << "dim-3 rank-8 fraction " << f3 << ", dim-4 non-Hom-Lie fraction " << f4
           << ", dim-3 Hom-Lie " << r3.homlie_count << "/" << r3.trials;
  v.require(f3 >= kRank8Threshold, "rank-8 fraction >= " + kRank8Threshold.str());
  v.require(f4 >= kNonHomLieThreshold, "non-Hom-Lie fraction >= " + kNonHomLieThreshold.str());
  v.require(r3.homlie_count == r3.trials, "every dim-3 trial Hom-Lie");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"Heisenberg", heisenberg},
      {"rank-8 example", rank8_example},
      {"gamma2 family", gamma_family},
      {"solvable Lie line", lie_line},
      {"rank 5 and rank 3 examples", two_ranks},
      {"sol family", sol_family},
      {"ns1 and ns2 families", ns_families},
      {"dim-3 Hom-Lie theorem", homlie3},
      {"dim-4 counterexample and generic example", counterexample},
      {"dim-2 algebras", dim2},
      {"filiform family", filiform},
      {"matrix vs direct evaluation", oracle_equivalence},
      {"witness soundness and invariance", witnesses},
      {"genericity statistics", genericity},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& ex) {
      v.require(false, std::string("exception: ") + ex.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (!v.pass()) ++failures;
    std::cout << (v.pass() ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << ": "
              << v.summary() << " (" << ms << " ms)" << std::endl;
  }
  std::cout << criteria.size() - failures << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
