#pragma once

#include <json.hpp>

#include "malmquist/blaschke.hpp"
#include "malmquist/taylor.hpp"

namespace malmquist {

/// TaylorSeries <-> JSON array of [re, im] pairs; plain numbers are accepted
/// on input as real coefficients.
inline nlohmann::json taylor_to_json(const TaylorSeries& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (const cplx& c : f.coef) arr.push_back({c.real(), c.imag()});
    return arr;
}

inline TaylorSeries taylor_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("taylor_from_json: array expected");
    std::vector<cplx> c;
    c.reserve(j.size());
    for (const nlohmann::json& e : j) {
        if (e.is_number()) {
            c.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            c.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw std::invalid_argument("taylor_from_json: entries must be numbers or [re, im]");
        }
    }
    if (c.empty()) c.push_back(cplx(0.0));
    return TaylorSeries{std::move(c)};
}

/// Sigma <-> JSON list of {"re":..., "im":..., "mult":...}; "im" and "mult"
/// are optional on input.
inline nlohmann::json sigma_to_json(const Sigma& sigma) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SigmaPoint& p : sigma.points()) {
        arr.push_back({{"re", p.lambda.real()}, {"im", p.lambda.imag()}, {"mult", p.mult}});
    }
    return arr;
}

inline Sigma sigma_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("sigma_from_json: array expected");
    std::vector<SigmaPoint> pts;
    for (const nlohmann::json& e : j) {
        if (!e.is_object() || !e.contains("re")) {
            throw std::invalid_argument("sigma_from_json: objects with re/im/mult expected");
        }
        SigmaPoint p;
        p.lambda = cplx(e.at("re").get<double>(), e.value("im", 0.0));
        p.mult = e.value("mult", 1);
        pts.push_back(p);
    }
    return Sigma(std::move(pts));
}

}  // namespace malmquist
