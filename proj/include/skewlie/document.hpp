#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "skewlie/algebra.hpp"
#include "skewlie/classify.hpp"
#include "skewlie/linalg.hpp"
#include "skewlie/sampler.hpp"

namespace skewlie {

/// Parses an algebra document:
///
///   {"dim": 3, "products": [{"i": 1, "j": 2, "c": ["0", "0", "1"]}]}
///
/// Indices are 1-based; coefficients are rational literals ("p" or "p/q",
/// integers also accepted as JSON numbers). Unlisted pairs are zero.
/// Throws ParseError (syntax, types, lengths, ranges) or InvariantError
/// (i >= j, duplicate pairs).
SkewAlgebra parse_algebra(std::string_view text);

/// Inverse of parse_algebra: lists every nonzero pair in lexicographic order.
nlohmann::json algebra_to_json(const SkewAlgebra& a);
std::string serialize_algebra(const SkewAlgebra& a);

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const Vec& v);
nlohmann::json to_json(const Matrix& m);

/// Report fragments shared by the CLI and the Python module. Every rational
/// is emitted as a string literal; counts are JSON integers.
nlohmann::json derivations_report(const SkewAlgebra& a);
nlohmann::json homlie_report(const SkewAlgebra& a);
nlohmann::json killing_report(const SkewAlgebra& a);
nlohmann::json series_report(const SkewAlgebra& a);
nlohmann::json classification_to_json(const ClassificationResult& r);
nlohmann::json lietype_to_json(const LieTypeSolution& s);
nlohmann::json experiment_to_json(const GenericityReport& r);

}  // namespace skewlie
