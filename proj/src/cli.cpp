#include "skewlie/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "skewlie/document.hpp"
#include "skewlie/errors.hpp"
#include "skewlie/structmats.hpp"

namespace skewlie::cli {

using nlohmann::json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

SkewAlgebra load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

void print_matrix(std::ostream& os, const Matrix& m, const std::string& indent = "  ") {
  std::vector<std::size_t> width(m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], m(r, c).str().size());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const std::string s = m(r, c).str();
      os << (c ? " " : "") << std::string(width[c] - s.size(), ' ') << s;
    }
    os << "]\n";
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

void text_algebra(std::ostream& os, const SkewAlgebra& a) {
  os << "algebra of dimension " << a.dim() << "\n";
  bool any = false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Vec& c = a.constants(i, j);
      if (is_zero(c)) continue;
      any = true;
      os << "  mu(e" << i + 1 << ",e" << j + 1 << ") =";
      bool first = true;
      for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const Rational mag = abs(c[k]);
        if (first) os << (c[k].sign() < 0 ? " -" : " ");
        else os << (c[k].sign() < 0 ? " - " : " + ");
        if (mag != 1) os << mag << " ";
        os << "e" << k + 1;
        first = false;
      }
      os << "\n";
    }
  }
  if (!any) os << "  (abelian)\n";
}

void text_derivations(std::ostream& os, const SkewAlgebra& a) {
  const Matrix m = build_M(a);
  const DerivationSpace der = derivation_space(a);
  os << "M_mu: " << m.rows() << " x " << m.cols() << ", rank " << m.cols() - der.dim << "\n";
  os << "orbit dimension: " << m.cols() - der.dim << "\n";
  os << "derivations / aut dimension: " << der.dim << "\n";
  for (std::size_t i = 0; i < der.basis.size(); ++i) {
    os << " D" << i + 1 << ":\n";
    print_matrix(os, der.basis[i], "   ");
  }
}

void text_homlie(std::ostream& os, const SkewAlgebra& a) {
  const HomLieSpace space = homlie_space(a);
  if (a.dim() >= 3) {
    const Matrix hl = build_HL(a);
    os << "HL_mu: " << hl.rows() << " x " << hl.cols() << ", rank " << hl.cols() - space.dim << "\n";
    if (hl.is_square()) os << "det(HL_mu) = " << determinant(hl) << "\n";
  } else {
    os << "dimension 2: every endomorphism is a Hom-Lie twist\n";
  }
  os << "Hom-Lie twist space dimension: " << space.dim << "\n";
  os << (space.dim >= 1 ? "Hom-Lie" : "not Hom-Lie") << "\n";
  os << "identity twist (Lie): " << (hom_check(a, Matrix::identity(a.dim())) ? "yes" : "no")
     << "\n";
  for (std::size_t i = 0; i < space.basis.size(); ++i) {
    os << " f" << i + 1 << ":\n";
    print_matrix(os, space.basis[i], "   ");
  }
}

void text_classify(std::ostream& os, const ClassificationResult& r) {
  os << "family: " << to_string(r.tag) << "\n";
  os << "lie: " << (r.lie ? "yes" : "no") << "\n";
  if (!r.params.empty()) {
    os << "params:";
    for (const auto& name : family_parameters(r.tag)) os << " " << name << "=" << r.params.at(name);
    os << "\n";
  }
  os << "witness P (transport(mu, P) is the normal form):\n";
  print_matrix(os, r.witness);
}

void text_killing(std::ostream& os, const SkewAlgebra& a) {
  const Matrix k = killing_matrix(a);
  os << "Killing form K(x,y) = tr(L_x L_y):\n";
  print_matrix(os, k);
  os << "det = " << determinant(k) << "\n";
}

void text_lietype(std::ostream& os, const LieTypeSolution& s) {
  os << "relation mu(mu(X,Y),Z) + a mu(mu(Y,Z),X) + b mu(mu(Z,X),Y) = 0 at (e1,e2,e3)\n";
  if (!s.consistent()) {
    os << "no constant (a, b) satisfies the relation\nadmissible (a != 0): no\n";
    return;
  }
  os << "particular (a, b) = (" << s.particular->first << ", " << s.particular->second << ")\n";
  for (const auto& [ha, hb] : s.homogeneous) os << "  + t (" << ha << ", " << hb << ")\n";
  os << "admissible (a != 0): " << (s.admissible ? "yes" : "no") << "\n";
}

void text_series(std::ostream& os, const SkewAlgebra& a) {
  const auto central = central_series(a);
  const auto derived = derived_series(a);
  os << "lie: " << (is_lie(a) ? "yes" : "no") << "\n";
  os << "central series dims: " << join(central.dims)
     << (central.dims.back() == 0 ? " (nilpotent)" : "") << "\n";
  os << "derived series dims: " << join(derived.dims)
     << (derived.dims.back() == 0 ? " (solvable)" : "") << "\n";
}

void text_experiment(std::ostream& os, const GenericityReport& r) {
  os << "dim " << r.config.dim << ", trials " << r.trials << ", seed " << r.config.seed
     << ", height " << r.config.height << "\n";
  os << "rank(M_mu) histogram:\n";
  for (const auto& [rank, count] : r.rank_histogram_M) os << "  " << rank << ": " << count << "\n";
  os << "Hom-Lie twist dimension histogram:\n";
  for (const auto& [d, count] : r.homlie_dim_histogram) os << "  " << d << ": " << count << "\n";
  os << "Hom-Lie: " << r.homlie_count << "/" << r.trials << "\n";
  os << "Lie: " << r.lie_count << "/" << r.trials << "\n";
}

struct Options {
  std::string file;
  bool json = false;
  int pair_height = kDefaultPairHeight;
  SampleConfig sample;
  unsigned threads = 0;
};

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Analyze skew-symmetric algebras given by rational structure constants", "skewlie"};
  app.require_subcommand(1);
  Options opt;

  std::map<std::string, std::function<void()>> actions;
  auto with_file = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", opt.file, "algebra document (JSON)")->required();
    sub->add_flag("--json", opt.json, "emit a single JSON report");
    return sub;
  };

  with_file("analyze", "run every analysis");
  with_file("derivations", "derivation matrix M_mu, derivations, orbit and automorphism dimensions");
  with_file("homlie", "Hom-Lie matrix HL_mu and twist space");
  with_file("classify", "normal form and witness (dimension 3)")
      ->add_option("--pair-height", opt.pair_height, "regular pair search bound")
      ->check(CLI::PositiveNumber);
  with_file("killing", "Killing form matrix and determinant");
  with_file("lietype", "constant Lie-type coefficients (dimension 3)");
  app.get_subcommand("analyze")
      ->add_option("--pair-height", opt.pair_height, "regular pair search bound")
      ->check(CLI::PositiveNumber);

  auto* sample = app.add_subcommand("sample", "random genericity experiment");
  sample->add_option("--dim", opt.sample.dim, "algebra dimension")->check(CLI::Range(2, 6));
  sample->add_option("--trials", opt.sample.trials, "number of random algebras")
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", opt.sample.seed, "64-bit seed");
  sample->add_option("--height", opt.sample.height, "coefficients drawn from [-H, H]")
      ->check(CLI::PositiveNumber);
  sample->add_option("--threads", opt.threads, "worker threads (0 = all cores)");
  sample->add_flag("--json", opt.json, "emit a single JSON report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "sample") {
      const GenericityReport r = run_experiment(opt.sample, opt.threads);
      if (opt.json) {
        emit(out, {{"command", cmd}, {"report", experiment_to_json(r)}});
      } else {
        text_experiment(out, r);
      }
      return kExitOk;
    }

    const SkewAlgebra a = load(opt.file);
    json report{{"command", cmd}, {"algebra", algebra_to_json(a)}};
    std::ostringstream text;
    if (!opt.json) text_algebra(text, a);

    if (cmd == "derivations") {
      if (opt.json) report["derivations"] = derivations_report(a);
      else text_derivations(text, a);
    } else if (cmd == "homlie") {
      if (opt.json) report["homlie"] = homlie_report(a);
      else text_homlie(text, a);
    } else if (cmd == "classify") {
      const auto r = classify(a, opt.pair_height);
      if (opt.json) report["classification"] = classification_to_json(r);
      else text_classify(text, r);
    } else if (cmd == "killing") {
      if (opt.json) report["killing"] = killing_report(a);
      else text_killing(text, a);
    } else if (cmd == "lietype") {
      const auto s = lie_type_constants(a);
      if (opt.json) report["lietype"] = lietype_to_json(s);
      else text_lietype(text, s);
    } else if (cmd == "analyze") {
      if (opt.json) {
        report["series"] = series_report(a);
        report["derivations"] = derivations_report(a);
        report["homlie"] = homlie_report(a);
        report["killing"] = killing_report(a);
        if (a.dim() == 3) {
          report["classification"] = classification_to_json(classify(a, opt.pair_height));
          report["lietype"] = lietype_to_json(lie_type_constants(a));
        }
      } else {
        text_series(text, a);
        text << "\n";
        text_derivations(text, a);
        text << "\n";
        text_homlie(text, a);
        text << "\n";
        text_killing(text, a);
        if (a.dim() == 3) {
          text << "\n";
          text_classify(text, classify(a, opt.pair_height));
          text << "\n";
          text_lietype(text, lie_type_constants(a));
        }
      }
    }

    if (opt.json) emit(out, report);
    else out << text.str();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "skewlie: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "skewlie: parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "skewlie: invalid document: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "skewlie: " << e.what() << "\n";
    return kExitAnalysis;
  }
}

}  // namespace skewlie::cli
