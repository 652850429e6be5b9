#pragma once

#include "g2sc/errors.hpp"
#include "g2sc/mpoly.hpp"

#include "json.hpp"

namespace g2sc {

/** [{"coeff": "p/q", "exps": {var: e}}] in graded-lex order. */
inline nlohmann::json terms_json(const MPoly& f) {
    auto out = nlohmann::json::array();
    for (const auto& [m, c] : f.terms()) {
        nlohmann::json exps = nlohmann::json::object();
        for (int i = 0; i < kNumVars; ++i)
            if (m.e[i]) exps[std::string(var_name(static_cast<Var>(i)))] = m.e[i];
        out.push_back({{"coeff", to_string(c)}, {"exps", exps}});
    }
    return out;
}

/** Inverse of terms_json. Throws UnknownVariable or std::invalid_argument. */
inline MPoly poly_from_terms(const nlohmann::json& terms) {
    MPoly out;
    for (const auto& t : terms) {
        Monomial m;
        for (const auto& [name, e] : t.at("exps").items()) {
            auto x = var_from_name(name);
            if (!x) throw UnknownVariable("unknown variable " + name);
            m.e[idx(*x)] = e.get<std::uint16_t>();
        }
        out.add_term(m, parse_rat(t.at("coeff").get<std::string>()));
    }
    return out;
}

}  // namespace g2sc
