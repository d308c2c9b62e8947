#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "nntrig/cone.hpp"
#include "nntrig/starlike.hpp"

namespace nntrig::io {

using json = nlohmann::json;

// Exact scalars travel as strings so nothing is lost; floats travel as numbers.

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (j.is_number_float()) throw InputError("float value " + j.dump() + " rejected in exact mode");
    throw InputError("expected a rational, got " + j.dump());
}

inline double double_from_json(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return to_double(parse_rational(j.get<std::string>()));
    throw InputError("expected a number, got " + j.dump());
}

/// {"re": "p/q", "im": "p/q"} or {"re": float, "im": float}.
inline json to_json(const GaussRational& w) {
    return {{"re", rational_to_json(w.real())}, {"im", rational_to_json(w.imag())}};
}
inline json to_json(const ComplexFloat& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

/// Report form of a scalar: bare real when the imaginary part vanishes.
inline json scalar_report(const GaussRational& w) { return w.is_real() ? rational_to_json(w.real()) : to_json(w); }
inline json scalar_report(const ComplexFloat& z) { return z.imag() == 0.0 ? json(z.real()) : to_json(z); }

template <Scalar S>
S scalar_from_json(const json& j) {
    if constexpr (is_exact_v<S>) {
        if (j.is_object()) {
            Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
            Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
            return GaussRational(re, im);
        }
        return GaussRational(rational_from_json(j));
    } else {
        ComplexFloat z;
        if (j.is_object())
            z = {j.contains("re") ? double_from_json(j.at("re")) : 0.0, j.contains("im") ? double_from_json(j.at("im")) : 0.0};
        else
            z = {double_from_json(j), 0.0};
        check_finite(z, "JSON scalar");
        return z;
    }
}

/// {"degree": n, "coeffs": [...]}, lowest index first.
template <Scalar S>
json to_json(const Poly<S>& p) {
    json c = json::array();
    for (const auto& a : p.coeffs()) c.push_back(to_json(a));
    return {{"degree", p.formal_degree()}, {"coeffs", c}};
}

inline std::vector<json> coeff_array(const json& j, const char* what) {
    if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
    const char* key = j.contains("coeffs") ? "coeffs" : (j.contains("y") ? "y" : nullptr);
    if (!key || !j.at(key).is_array() || j.at(key).empty())
        throw InputError(std::string(what) + ": missing non-empty \"coeffs\" array");
    auto c = j.at(key).get<std::vector<json>>();
    if (j.contains("degree")) {
        if (!j.at("degree").is_number_unsigned()) throw InputError(std::string(what) + ": \"degree\" must be a nonnegative integer");
        if (j.at("degree").get<std::size_t>() + 1 != c.size())
            throw InputError(std::string(what) + ": \"degree\" does not match the number of coefficients");
    }
    return c;
}

template <Scalar S>
Poly<S> poly_from_json(const json& j) {
    std::vector<S> v;
    for (const auto& c : coeff_array(j, "polynomial")) v.push_back(scalar_from_json<S>(c));
    return Poly<S>(std::move(v));
}

template <Scalar S>
json to_json(const TrigPoly<S>& y) {
    json c = json::array();
    for (const auto& a : y.coeffs()) c.push_back(to_json(a));
    return {{"degree", y.degree()}, {"coeffs", c}};
}

/// Same schema as a polynomial; {"y": [...]} is accepted as well.
template <Scalar S>
TrigPoly<S> trig_from_json(const json& j) {
    std::vector<S> v;
    for (const auto& c : coeff_array(j, "trigonometric polynomial")) v.push_back(scalar_from_json<S>(c));
    return TrigPoly<S>(std::move(v));
}

template <Scalar S>
json to_json(const ConeVerdict<S>& v) {
    json j{{"class", to_string(v.classification)},
           {"min", v.min_value},
           {"argmin", v.minimizer_t},
           {"rank_full", v.rank_certificate}};
    j["dis2"] = v.dis2_value ? scalar_report(*v.dis2_value) : json("degree_drop");
    j["factor"] = v.factor ? to_json(v.factor->poly()) : json(nullptr);
    return j;
}

template <Scalar S>
json to_json(const StarlikeReport<S>& r) {
    json j = to_json(r.cone_verdict);
    j["starlike"] = r.is_starlike;
    json inner = json::array();
    for (const auto& z : r.inner_roots) inner.push_back(to_json(z));
    j["inner_roots"] = inner;
    j["trig"] = to_json(r.trig);
    j["boundary_form"] = starlike_boundary_form;
    return j;
}

}  // namespace nntrig::io
