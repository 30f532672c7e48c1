#pragma once

#include <string>

#include <json.hpp>

#include "isolab/covers.hpp"
#include "isolab/matrix.hpp"
#include "isolab/poly.hpp"
#include "isolab/rational.hpp"

namespace isolab::io {

using json = nlohmann::ordered_json;

// Rationals are "p/q" strings ("p" when q = 1). Polynomials are arrays of
// coefficients, lowest degree first, [] for zero. Matrices are arrays of rows.
// Readers take a field path like "input.a2[3]" and put it in every
// ValidationError they raise.

json to_json(const Rational& r);
json to_json(const ZPoly& p);
json to_json(const CurvePoly& p);  // array of ZPoly arrays, indexed by η power
json to_json(const QMatrix& m);
json to_json(const ZMatrix& m);
json to_json(const covers::Divisor& d);
json to_json(const covers::FiberModel& f);
json to_json(const covers::PairFiber& f);
json to_json(const covers::SymFiber& f);

/// Required member of an object.
const json& field(const json& obj, const std::string& key, const std::string& path);
std::string join(const std::string& path, const std::string& key);
std::string join(const std::string& path, std::size_t index);

/// Accepts "p/q" strings and JSON integers.
Rational rational_from(const json& j, const std::string& path);
/// Array of coefficients; a bare scalar is read as a constant.
ZPoly zpoly_from(const json& j, const std::string& path);
QMatrix qmatrix_from(const json& j, const std::string& path);
ZMatrix zmatrix_from(const json& j, const std::string& path);
long long integer_from(const json& j, const std::string& path);
std::string string_from(const json& j, const std::string& path);
covers::Divisor divisor_from(const json& j, const std::string& path);
/// {base_label, kind, points:[{label, mult}], curve?}; validated.
covers::FiberModel fiber_from(const json& j, const std::string& path);

} // namespace isolab::io
