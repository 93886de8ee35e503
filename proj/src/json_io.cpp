#include "sympclif/json_io.hpp"

#include <nlohmann/json.hpp>

namespace sympclif {

using nlohmann::json;

json to_json(const Scalar& s) { return s.str(); }

json to_json(const Spinor& s) {
    json terms = json::array();
    for (const auto& [m, c] : s.terms) {
        json exp = json::array();
        for (Exp e : m) exp.push_back(e);
        terms.push_back({{"exp", exp}, {"c", c.str()}});
    }
    return {{"n", s.n}, {"terms", terms}};
}

json to_json(const WeylElement& w) {
    json terms = json::array();
    for (const auto& [m, c] : w.terms) {
        json exp = json::array();
        for (Exp e : m) exp.push_back(e);
        terms.push_back({{"exp", exp}, {"c", c.str()}});
    }
    return {{"n", w.n}, {"terms", terms}};
}

json to_json(const TwoPointKernel& k) {
    json terms = json::array();
    for (const auto& [xi, w] : k.terms)
        terms.push_back({{"xi", {xi.first, xi.second}}, {"op", to_json(w)}});
    return {{"terms", terms}};
}

json to_json(const PairingValue& v) {
    return {{"value", v.value.str()}, {"sqrt2", v.sqrt2}};
}

Scalar scalar_from_json(const json& j) { return Scalar::parse(j.get<std::string>()); }

Spinor spinor_from_json(const json& j) {
    Spinor s(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        SMono m;
        for (const auto& e : t.at("exp")) m.push_back(e.get<Exp>());
        if (static_cast<int>(m.size()) != 3 * s.n)
            throw std::invalid_argument("spinor_from_json: bad exponent vector length");
        s.add_term(m, Scalar::parse(t.at("c").get<std::string>()));
    }
    return s;
}

WeylElement weyl_from_json(const json& j) {
    WeylElement w(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
        Mono m;
        for (const auto& e : t.at("exp")) m.push_back(e.get<Exp>());
        if (static_cast<int>(m.size()) != 6 * w.n)
            throw std::invalid_argument("weyl_from_json: bad exponent vector length");
        w.add_term(m, Scalar::parse(t.at("c").get<std::string>()));
    }
    return w;
}

}  // namespace sympclif
