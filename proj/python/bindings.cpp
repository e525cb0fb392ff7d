#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skewlie/skewlie.hpp"

namespace py = pybind11;
using namespace skewlie;

namespace {

py::object fraction_type() {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls;
}

py::object to_py(const Rational& r) { return fraction_type()(r.str()); }

/// Accepts int, Fraction or a rational literal string; floats are rejected.
Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::float_>(h)) throw ParseError("floats are not accepted; use Fraction or a string");
  return Rational::parse(py::str(h).cast<std::string>());
}

py::list to_py(const Vec& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

py::list to_py(const Matrix& m) {
  py::list out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.append(to_py(m.row(r)));
  return out;
}

py::list to_py(const std::vector<Endo>& maps) {
  py::list out;
  for (const auto& f : maps) out.append(to_py(f));
  return out;
}

Vec to_vec(const py::sequence& s) {
  Vec v;
  for (const auto& x : s) v.push_back(to_rational(x));
  return v;
}

Matrix to_matrix(const py::sequence& rows) {
  std::vector<Vec> vs;
  for (const auto& r : rows) vs.push_back(to_vec(r.cast<py::sequence>()));
  const std::size_t cols = vs.empty() ? 0 : vs.front().size();
  for (const auto& v : vs)
    if (v.size() != cols) throw DimensionMismatch("matrix rows have different lengths");
  return Matrix::from_rows(vs, cols);
}

SkewAlgebra make_algebra(std::size_t dim, const py::sequence& products) {
  std::vector<Product> records;
  for (const auto& item : products) {
    const auto t = item.cast<py::sequence>();
    if (py::len(t) != 3) throw ParseError("product records are (i, j, coefficients)");
    records.push_back({t[0].cast<std::size_t>(), t[1].cast<std::size_t>(), to_vec(t[2].cast<py::sequence>())});
  }
  return SkewAlgebra::from_products(dim, records);
}

py::dict to_py(const ClassificationResult& r) {
  py::dict params;
  for (const auto& [name, value] : r.params) params[py::str(name)] = to_py(value);
  py::dict out;
  out["tag"] = std::string(to_string(r.tag));
  out["params"] = params;
  out["witness"] = to_py(r.witness);
  out["lie"] = r.lie;
  return out;
}

py::object pair_to_py(const std::pair<Rational, Rational>& p) {
  return py::make_tuple(to_py(p.first), to_py(p.second));
}

py::dict to_py(const LieTypeSolution& s) {
  py::dict out;
  out["particular"] = s.particular ? pair_to_py(*s.particular) : py::none();
  py::list hom;
  for (const auto& h : s.homogeneous) hom.append(pair_to_py(h));
  out["homogeneous"] = hom;
  out["admissible"] = s.admissible;
  return out;
}

py::dict to_py(const GenericityReport& r) {
  py::dict ranks, dims;
  for (const auto& [k, v] : r.rank_histogram_M) ranks[py::int_(k)] = v;
  for (const auto& [k, v] : r.homlie_dim_histogram) dims[py::int_(k)] = v;
  py::dict out;
  out["trials"] = r.trials;
  out["rank_histogram_M"] = ranks;
  out["homlie_dim_histogram"] = dims;
  out["homlie_count"] = r.homlie_count;
  out["lie_count"] = r.lie_count;
  return out;
}

std::vector<std::size_t> dims(const SeriesReport& s) { return s.dims; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Skew-symmetric algebras over the rationals";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", error.ptr());
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error.ptr());
  py::register_exception<NonSquare>(m, "NonSquare", error.ptr());
  py::register_exception<SingularMap>(m, "SingularMap", error.ptr());
  py::register_exception<UnsupportedDim>(m, "UnsupportedDim", error.ptr());
  py::register_exception<NotFound>(m, "NotFound", error.ptr());

  py::class_<SkewAlgebra>(m, "Algebra")
      .def(py::init(&make_algebra), py::arg("dim"), py::arg("products") = py::list(),
           "Algebra from 1-based records (i, j, coefficients) meaning mu(e_i, e_j) = sum c_k e_k.")
      .def_static("from_json", &parse_algebra, py::arg("text"))
      .def("to_json", &serialize_algebra)
      .def_property_readonly("dim", &SkewAlgebra::dim)
      .def("constants", [](const SkewAlgebra& a, std::size_t i, std::size_t j) {
        if (i < 1 || j <= i || j > a.dim()) throw InvariantError("need 1 <= i < j <= dim");
        return to_py(a.constants(i - 1, j - 1));
      })
      .def("__eq__", [](const SkewAlgebra& a, const SkewAlgebra& b) { return a == b; })
      .def("__repr__", [](const SkewAlgebra& a) { return "Algebra.from_json('" + serialize_algebra(a) + "')"; })
      .def("multiply", [](const SkewAlgebra& a, const py::sequence& x, const py::sequence& y) {
        return to_py(multiply(a, to_vec(x), to_vec(y)));
      })
      .def("is_lie", &is_lie)
      .def("is_abelian", &SkewAlgebra::is_abelian)
      .def("transport", [](const SkewAlgebra& a, const py::sequence& p) { return transport(a, to_matrix(p)); })
      .def("central_series", [](const SkewAlgebra& a) { return dims(central_series(a)); })
      .def("derived_series", [](const SkewAlgebra& a) { return dims(derived_series(a)); })
      .def("is_nilpotent", &is_nilpotent)
      .def("is_solvable", &is_solvable)
      .def("killing_matrix", [](const SkewAlgebra& a) { return to_py(killing_matrix(a)); })
      .def("killing_determinant", [](const SkewAlgebra& a) { return to_py(killing_determinant(a)); })
      .def("derivation_matrix", [](const SkewAlgebra& a) { return to_py(build_M(a)); })
      .def("derivations", [](const SkewAlgebra& a) { return to_py(derivation_space(a).basis); })
      .def("aut_dimension", &aut_dimension)
      .def("orbit_dimension", &orbit_dimension)
      .def("homlie_matrix", [](const SkewAlgebra& a) { return to_py(build_HL(a)); })
      .def("homlie_space", [](const SkewAlgebra& a) { return to_py(homlie_space(a).basis); })
      .def("is_homlie", &is_homlie)
      .def("hom_check", [](const SkewAlgebra& a, const py::sequence& f) { return hom_check(a, to_matrix(f)); })
      .def("classify", [](const SkewAlgebra& a, int pair_height) { return to_py(classify(a, pair_height)); },
           py::arg("pair_height") = kDefaultPairHeight)
      .def("lie_type", [](const SkewAlgebra& a) { return to_py(lie_type_constants(a)); });

  m.def("rank", [](const py::sequence& rows) { return rank(to_matrix(rows)); });
  m.def("determinant", [](const py::sequence& rows) { return to_py(determinant(to_matrix(rows))); });
  m.def("kernel", [](const py::sequence& rows) {
    py::list out;
    for (const auto& v : kernel_basis(to_matrix(rows))) out.append(to_py(v));
    return out;
  });
  m.def("filiform5", [](const py::handle& a, const py::handle& b, const py::handle& c, const py::handle& d) {
    return filiform5(to_rational(a), to_rational(b), to_rational(c), to_rational(d));
  });
  m.def(
      "normal_form",
      [](const std::string& tag, const py::dict& params) {
        const auto t = family_from_string(tag);
        if (!t) throw InvariantError("unknown family " + tag);
        Params p;
        for (const auto& [k, v] : params) p[py::str(k).cast<std::string>()] = to_rational(v);
        return normal_form(*t, p);
      },
      py::arg("tag"), py::arg("params") = py::dict());
  m.def(
      "random_algebra",
      [](std::size_t dim, std::uint64_t seed, long height, std::size_t index) {
        const SampleConfig cfg{dim, index + 1, seed, height};
        cfg.validate();
        return random_algebra(cfg, index);
      },
      py::arg("dim"), py::arg("seed") = 42, py::arg("height") = 1, py::arg("index") = 0);
  m.def(
      "sample",
      [](std::size_t dim, std::size_t trials, std::uint64_t seed, long height, unsigned threads) {
        GenericityReport r;
        {
          py::gil_scoped_release release;
          r = run_experiment({dim, trials, seed, height}, threads);
        }
        return to_py(r);
      },
      py::arg("dim") = 3, py::arg("trials") = 100, py::arg("seed") = 42, py::arg("height") = 1,
      py::arg("threads") = 0);
}
