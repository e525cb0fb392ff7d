#include "skewlie/document.hpp"

#include <set>
#include <utility>

#include "skewlie/errors.hpp"
#include "skewlie/structmats.hpp"

namespace skewlie {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* name, const std::string& path) {
  auto it = obj.find(name);
  if (it == obj.end()) throw ParseError(path + ": missing field \"" + name + "\"");
  return *it;
}

std::size_t index_field(const json& obj, const char* name, const std::string& path) {
  const json& v = field(obj, name, path);
  if (!v.is_number_integer()) throw ParseError(path + "." + name + ": expected an integer");
  const auto x = v.get<long long>();
  if (x < 1) throw ParseError(path + "." + name + ": index must be >= 1");
  return static_cast<std::size_t>(x);
}

Rational literal(const json& v, const std::string& path) {
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.what());
    }
  }
  if (v.is_number_integer()) return Rational::parse(v.dump());
  throw ParseError(path + ": expected a rational literal string");
}

}  // namespace

SkewAlgebra parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("document: expected a JSON object");

  const json& dim_field = field(doc, "dim", "document");
  if (!dim_field.is_number_integer()) throw ParseError("dim: expected an integer");
  const auto dim_value = dim_field.get<long long>();
  if (dim_value < static_cast<long long>(kMinDim) || dim_value > static_cast<long long>(kMaxDim)) {
    throw ParseError("dim: " + std::to_string(dim_value) + " outside supported range 2..6");
  }
  const auto dim = static_cast<std::size_t>(dim_value);

  const json& products = field(doc, "products", "document");
  if (!products.is_array()) throw ParseError("products: expected an array");

  std::vector<Product> records;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < products.size(); ++n) {
    const std::string path = "products[" + std::to_string(n) + "]";
    const json& p = products[n];
    if (!p.is_object()) throw ParseError(path + ": expected an object");
    const std::size_t i = index_field(p, "i", path);
    const std::size_t j = index_field(p, "j", path);
    if (i > dim || j > dim) {
      throw ParseError(path + ": index out of range 1.." + std::to_string(dim));
    }
    if (i >= j) {
      throw InvariantError(path + ": need i < j, got (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    }
    if (!seen.emplace(i, j).second) {
      throw InvariantError(path + ": duplicate pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    }
    const json& c = field(p, "c", path);
    if (!c.is_array() || c.size() != dim) {
      throw ParseError(path + ".c: expected an array of " + std::to_string(dim) + " rationals");
    }
    Vec coeffs;
    for (std::size_t k = 0; k < dim; ++k) {
      coeffs.push_back(literal(c[k], path + ".c[" + std::to_string(k) + "]"));
    }
    records.push_back({i, j, std::move(coeffs)});
  }
  return SkewAlgebra::from_products(dim, records);
}

json to_json(const Rational& r) { return r.str(); }

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

json algebra_to_json(const SkewAlgebra& a) {
  json products = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      const Vec& c = a.constants(i, j);
      if (is_zero(c)) continue;
      products.push_back({{"i", i + 1}, {"j", j + 1}, {"c", to_json(c)}});
    }
  }
  return {{"dim", a.dim()}, {"products", products}};
}

std::string serialize_algebra(const SkewAlgebra& a) { return algebra_to_json(a).dump(); }

json derivations_report(const SkewAlgebra& a) {
  const Matrix m = build_M(a);
  const DerivationSpace der = derivation_space(a);
  json basis = json::array();
  for (const auto& f : der.basis) basis.push_back(to_json(f));
  return {{"M_shape", {m.rows(), m.cols()}},
          {"rank_M", m.cols() - der.dim},
          {"orbit_dimension", m.cols() - der.dim},
          {"aut_dimension", der.dim},
          {"derivation_basis", basis}};
}

json homlie_report(const SkewAlgebra& a) {
  const HomLieSpace space = homlie_space(a);
  json basis = json::array();
  for (const auto& f : space.basis) basis.push_back(to_json(f));
  json out{{"kernel_dim", space.dim},
           {"is_homlie", space.dim >= 1},
           {"is_lie", is_lie(a)},
           {"identity_twist", hom_check(a, Matrix::identity(a.dim()))},
           {"basis", basis}};
  if (a.dim() >= 3) {
    const Matrix hl = build_HL(a);
    out["HL_shape"] = {hl.rows(), hl.cols()};
    out["rank_HL"] = hl.cols() - space.dim;
    if (hl.is_square()) out["determinant"] = determinant(hl).str();
  }
  return out;
}

json killing_report(const SkewAlgebra& a) {
  const Matrix k = killing_matrix(a);
  return {{"killing_matrix", to_json(k)}, {"determinant", determinant(k).str()}};
}

json series_report(const SkewAlgebra& a) {
  const bool lie = is_lie(a);
  const auto central = central_series(a);
  const auto derived = derived_series(a);
  return {{"is_lie", lie},
          {"central_dims", central.dims},
          {"derived_dims", derived.dims},
          {"nilpotent", central.dims.back() == 0},
          {"solvable", derived.dims.back() == 0}};
}

json classification_to_json(const ClassificationResult& r) {
  json params = json::object();
  for (const auto& [name, value] : r.params) params[name] = value.str();
  return {{"tag", std::string(to_string(r.tag))},
          {"params", params},
          {"witness", to_json(r.witness)},
          {"lie", r.lie}};
}

json lietype_to_json(const LieTypeSolution& s) {
  json homogeneous = json::array();
  for (const auto& [a, b] : s.homogeneous) homogeneous.push_back({a.str(), b.str()});
  json particular = nullptr;
  if (s.particular) particular = {s.particular->first.str(), s.particular->second.str()};
  return {{"consistent", s.consistent()},
          {"particular", particular},
          {"homogeneous", homogeneous},
          {"admissible", s.admissible}};
}

json experiment_to_json(const GenericityReport& r) {
  json ranks = json::object();
  for (const auto& [rank, count] : r.rank_histogram_M) ranks[std::to_string(rank)] = count;
  json dims = json::object();
  for (const auto& [d, count] : r.homlie_dim_histogram) dims[std::to_string(d)] = count;
  const auto n = static_cast<long>(r.trials);
  const std::size_t top_rank = r.rank_histogram_M.empty() ? 0 : r.rank_histogram_M.rbegin()->first;
  return {{"config",
           {{"dim", r.config.dim},
            {"trials", r.config.trials},
            {"seed", r.config.seed},
            {"height", r.config.height}}},
          {"trials", r.trials},
          {"rank_histogram_M", ranks},
          {"homlie_dim_histogram", dims},
          {"homlie_count", r.homlie_count},
          {"lie_count", r.lie_count},
          {"max_rank_M", top_rank},
          {"max_rank_fraction",
           Rational(static_cast<long>(r.rank_histogram_M.empty() ? 0 : r.rank_histogram_M.rbegin()->second), n).str()},
          {"non_homlie_fraction", Rational(static_cast<long>(r.trials - r.homlie_count), n).str()}};
}

}  // namespace skewlie
