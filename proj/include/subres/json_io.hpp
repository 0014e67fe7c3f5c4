#pragma once

#include <nlohmann/json.hpp>

#include "subres/verify.hpp"

namespace subres {

/// Insertion-ordered JSON keeps emitted documents deterministic.
using json = nlohmann::ordered_json;

inline json rational_to_json(const Rational& r) { return json(r.str()); }

/// Accepts the "n" / "n/d" string grammar plus plain JSON integers.
/// Fractions and integers beyond 64 bits must be quoted.
inline Rational rational_from_json(const json& v) {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<int64_t>())));
    if (v.is_number_unsigned()) return Rational(mpz_class(std::to_string(v.get<uint64_t>())));
    throw std::invalid_argument("expected a rational as \"n\", \"n/d\", or an integer, got: " + v.dump());
}

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

inline Poly poly_from_json(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected a coefficient array, got: " + arr.dump());
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& v : arr) coeffs.push_back(rational_from_json(v));
    return Poly::from_coeffs(std::move(coeffs));
}

inline json roots_to_json(const RootList& roots) {
    json arr = json::array();
    for (const auto& r : roots) arr.push_back(r.str());
    return arr;
}

inline RootList roots_from_json(const json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("expected a root array, got: " + arr.dump());
    std::vector<Rational> elems;
    elems.reserve(arr.size());
    for (const auto& v : arr) elems.push_back(rational_from_json(v));
    return RootList(std::move(elems));
}

inline json matrix_to_json(const DMatrix<Rational>& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline json matrix_to_json(const DMatrix<Poly>& m) {
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m.at(i, j)));
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline json report_to_json(const CheckReport& report) {
    json j;
    if (report.instance) {
        j["instance"] = json{{"seed", report.instance->seed},
                             {"m", report.instance->m},
                             {"n", report.instance->n},
                             {"root_bound", report.instance->root_bound}};
    }
    j["A"] = roots_to_json(report.a);
    j["B"] = roots_to_json(report.b);
    j["all_pass"] = report.all_pass();
    json checks = json::array();
    for (const auto& c : report.checks) {
        json entry{{"name", c.name}, {"pass", c.pass}};
        if (!c.pass) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace subres
