#pragma once

// JSON encodings of the library's values. Rationals travel as strings "p/q"
// or "p"; forms as term arrays sorted deglex descending.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jumpcon/errors.hpp"
#include "jumpcon/form.hpp"
#include "jumpcon/hulsbergen.hpp"
#include "jumpcon/jump_surface.hpp"
#include "jumpcon/matrix.hpp"
#include "jumpcon/poncelet.hpp"
#include "jumpcon/quadric.hpp"
#include "jumpcon/rational.hpp"

namespace jumpcon::io {

using nlohmann::json;

inline json encode(const Rational& r) { return to_string(r); }

inline json encode(const RatVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json encode(const RatMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(encode(m.row(i)));
    return a;
}

inline json encode(const QuadricPoint& p) { return {{"u", encode(p.u())}, {"v", encode(p.v())}}; }

inline json encode(const Plane& h) { return {{"y", encode(h.y)}}; }

inline json encode(const Form& f) {
    json a = json::array();
    for (const auto& [e, c] : f.terms()) a.push_back({{"exp", e}, {"coeff", to_string(c)}});
    return a;
}

inline json encode(const ConeData& c) {
    json j{{"gram", encode(c.gram)}, {"rank", c.rank}};
    j["vertex"] = c.vertex ? encode(c.vertex->y) : json(nullptr);
    return j;
}

inline json encode(const PlaneConic& c) { return {{"frame_id", c.frame.id}, {"gram", encode(c.gram)}}; }

inline json encode_instance(const HulsbergenData& d, std::optional<std::uint64_t> seed = std::nullopt) {
    json points = json::array();
    for (const auto& p : d.points()) points.push_back(encode(p));
    json j{{"points", points}, {"coeffs", encode(d.coeffs())}};
    if (seed) j["seed"] = *seed;
    return j;
}

/// Rational from a JSON string or integer; `where` names the field in errors.
inline Rational decode_rational(const json& j, const std::string& where) {
    try {
        if (j.is_string()) return parse_rational(j.get<std::string>());
        if (j.is_number_integer()) return parse_rational(std::to_string(j.get<long long>()));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected a rational string such as \"3/4\"");
}

inline RatVector decode_vector(const json& j, std::size_t len, const std::string& where) {
    if (!j.is_array() || j.size() != len)
        throw InputError(where + ": expected an array of " + std::to_string(len) + " rationals");
    RatVector v;
    for (std::size_t i = 0; i < len; ++i) v.push_back(decode_rational(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

inline QuadricPoint decode_point(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("u") || !j.contains("v"))
        throw InputError(where + ": expected an object with \"u\" and \"v\"");
    try {
        return QuadricPoint(decode_vector(j["u"], 2, where + ".u"), decode_vector(j["v"], 2, where + ".v"));
    } catch (const InputError& e) {
        const std::string msg = e.what();
        if (msg.rfind(where, 0) == 0) throw;
        throw InputError(where + ": " + msg);
    }
}

inline HulsbergenData decode_instance(const json& j) {
    if (!j.is_object()) throw InputError("instance: expected a JSON object");
    if (!j.contains("points") || !j["points"].is_array()) throw InputError("instance: missing array \"points\"");
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw InputError("instance: missing array \"coeffs\"");
    std::vector<QuadricPoint> points;
    for (std::size_t i = 0; i < j["points"].size(); ++i)
        points.push_back(decode_point(j["points"][i], "points[" + std::to_string(i) + "]"));
    RatVector coeffs;
    for (std::size_t i = 0; i < j["coeffs"].size(); ++i)
        coeffs.push_back(decode_rational(j["coeffs"][i], "coeffs[" + std::to_string(i) + "]"));
    return HulsbergenData(std::move(points), std::move(coeffs));
}

inline Form decode_form(const json& j, std::size_t nvars) {
    if (!j.is_array()) throw InputError("form: expected an array of terms");
    Form f(nvars);
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string where = "form[" + std::to_string(i) + "]";
        const json& t = j[i];
        if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
            throw InputError(where + ": expected {\"exp\": [...], \"coeff\": \"p/q\"}");
        if (!t["exp"].is_array() || t["exp"].size() != nvars)
            throw InputError(where + ".exp: expected " + std::to_string(nvars) + " exponents");
        Exponent e;
        for (const auto& x : t["exp"]) {
            if (!x.is_number_unsigned()) throw InputError(where + ".exp: exponents must be nonnegative integers");
            e.push_back(x.get<unsigned>());
        }
        try {
            f.add_term(e, decode_rational(t["coeff"], where + ".coeff"));
        } catch (const DomainError& err) {
            throw InputError(where + ": " + err.what());
        }
    }
    return f;
}

}  // namespace jumpcon::io
