#include "qlp/json_io.hpp"

#include "qlp/errors.hpp"

namespace qlp {

namespace {

Json rational_array(std::span<const Rational> values)
{
    Json arr = Json::array();
    for (const auto& v : values)
        arr.push_back(to_string(v));
    return arr;
}

Rational rational_from_json(const Json& j, const char* what)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(j.dump()));
    throw parse_error(std::string(what) + ": expected a rational string such as \"3/4\"");
}

std::vector<Rational> rational_vector(const Json& j, const char* what)
{
    if (!j.is_array())
        throw parse_error(std::string(what) + ": expected an array");
    std::vector<Rational> out;
    for (const auto& item : j)
        out.push_back(rational_from_json(item, what));
    return out;
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object())
        throw parse_error("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw parse_error(std::string("missing field \"") + key + "\"");
    return *it;
}

unsigned unsigned_field(const Json& j, const char* key)
{
    const Json& v = field(j, key);
    if (!v.is_number_unsigned())
        throw parse_error(std::string("field \"") + key + "\" must be a nonnegative integer");
    return v.get<unsigned>();
}

} // namespace

Json poly_to_json(const HomPoly& p)
{
    Json j;
    j["degree"] = p.degree();
    j["coeffs"] = rational_array(p.coeffs());
    return j;
}

HomPoly poly_from_json(const Json& j)
{
    const unsigned degree = unsigned_field(j, "degree");
    auto coeffs = rational_vector(field(j, "coeffs"), "coeffs");
    if (coeffs.size() != degree + 1)
        throw parse_error("polynomial of degree " + std::to_string(degree) + " needs " + std::to_string(degree + 1) +
                          " coefficients, got " + std::to_string(coeffs.size()));
    return HomPoly(std::move(coeffs));
}

Json enumerator_to_json(unsigned n, const Rational& K, const EnumeratorABS& e)
{
    Json j;
    j["n"] = n;
    j["K"] = to_string(K);
    j["A"] = rational_array(e.A.coeffs());
    j["B"] = rational_array(e.B.coeffs());
    j["S"] = rational_array(e.S.coeffs());
    return j;
}

EnumeratorDocument enumerator_from_json(const Json& j)
{
    EnumeratorDocument doc;
    doc.n = unsigned_field(j, "n");
    if (doc.n < 1)
        throw parse_error("n must be at least 1");
    doc.K = rational_from_json(field(j, "K"), "K");
    auto a = rational_vector(field(j, "A"), "A");
    if (a.size() != doc.n + 1)
        throw parse_error("A must have n+1 = " + std::to_string(doc.n + 1) + " coefficients");
    doc.enumerator = complete_enumerator(HomPoly(std::move(a)));
    for (const char* key : {"B", "S"}) {
        if (!j.contains(key))
            continue;
        HomPoly given(rational_vector(j.at(key), key));
        const HomPoly& expected = key[0] == 'B' ? doc.enumerator.B : doc.enumerator.S;
        if (given != expected)
            throw parse_error(std::string("field \"") + key + "\" is inconsistent with the transform of A");
    }
    return doc;
}

Json certificate_to_json(const Certificate& cert, const std::string& lp_hash)
{
    Json j;
    j["status"] = cert.feasible() ? "feasible" : "infeasible";
    j[cert.feasible() ? "point" : "dual"] = rational_array(cert.values);
    j["lp_hash"] = lp_hash;
    return j;
}

Certificate certificate_from_json(const Json& j, std::string* lp_hash)
{
    const Json& status = field(j, "status");
    if (!status.is_string())
        throw parse_error("field \"status\" must be a string");
    Certificate cert;
    const auto s = status.get<std::string>();
    if (s == "feasible") {
        cert.kind = Certificate::Kind::feasible;
        cert.values = rational_vector(field(j, "point"), "point");
    } else if (s == "infeasible") {
        cert.kind = Certificate::Kind::infeasible;
        cert.values = rational_vector(field(j, "dual"), "dual");
    } else {
        throw parse_error("status must be \"feasible\" or \"infeasible\"");
    }
    if (lp_hash) {
        const Json& h = field(j, "lp_hash");
        if (!h.is_string())
            throw parse_error("field \"lp_hash\" must be a string");
        *lp_hash = h.get<std::string>();
    }
    return cert;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

} // namespace qlp
