#pragma once

#include "qlp/enumerator.hpp"
#include "qlp/hompoly.hpp"
#include "qlp/lp.hpp"

#include <json.hpp>

#include <string>

namespace qlp {

using Json = nlohmann::ordered_json;

// {"degree": n, "coeffs": ["p/q", ...]}
Json poly_to_json(const HomPoly& p);
HomPoly poly_from_json(const Json& j);

// {"n": n, "K": "p/q", "A": [...], "B": [...], "S": [...]}
struct EnumeratorDocument {
    unsigned n = 0;
    Rational K;
    EnumeratorABS enumerator;
};

Json enumerator_to_json(unsigned n, const Rational& K, const EnumeratorABS& e);
// B and S are recomputed from A; if present in the document they must
// match exactly (parse_error otherwise).
EnumeratorDocument enumerator_from_json(const Json& j);

// {"status": "feasible"|"infeasible", "point"|"dual": [...], "lp_hash": hex}
Json certificate_to_json(const Certificate& cert, const std::string& lp_hash);
Certificate certificate_from_json(const Json& j, std::string* lp_hash = nullptr);

// Throws parse_error with the parser's diagnostic.
Json parse_json(const std::string& text);

// Compact single-line dump followed by a newline.
std::string dump(const Json& j);

} // namespace qlp
