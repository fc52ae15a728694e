#include "invoser/json_io.hpp"

namespace invoser {

using nlohmann::json;

json poly_to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        terms.push_back({{"coef", c.str()}, {"exps", m.exponents()}});
    }
    return json{{"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw JsonFormatError("polynomial JSON needs a \"terms\" array");
    LaurentPoly p;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coef") || !t.contains("exps") ||
            !t["coef"].is_string() || !t["exps"].is_array())
            throw JsonFormatError("polynomial term needs \"coef\" string and \"exps\" array");
        std::vector<int> exps;
        for (const auto& e : t["exps"]) {
            if (!e.is_number_integer()) throw JsonFormatError("exponent must be an integer");
            exps.push_back(e.get<int>());
        }
        Rational coef = Rational::from_string(t["coef"].get<std::string>());
        p += LaurentPoly::term(coef, Monomial(std::move(exps)));
    }
    return p;
}

json series_to_json(const Series& f) {
    json coeffs = json::array();
    for (int n = 0; n <= f.order(); ++n) coeffs.push_back(f.coeff(n).str());
    return json{{"convention", "exponential"}, {"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const json& j) {
    if (!j.is_object() || !j.contains("convention") || !j.contains("order") ||
        !j.contains("coeffs"))
        throw JsonFormatError("series JSON needs \"convention\", \"order\" and \"coeffs\"");
    if (j["convention"] != "exponential")
        throw JsonFormatError("unsupported series convention (want \"exponential\")");
    if (!j["order"].is_number_integer() || !j["coeffs"].is_array())
        throw JsonFormatError("malformed series JSON");
    int order = j["order"].get<int>();
    if (order < 0) throw JsonFormatError("series order must be >= 0");
    const auto& arr = j["coeffs"];
    if (static_cast<int>(arr.size()) != order + 1)
        throw JsonFormatError("series coefficient count does not match order");
    std::vector<Rational> c;
    c.reserve(arr.size());
    for (const auto& s : arr) {
        if (!s.is_string()) throw JsonFormatError("series coefficients must be fraction strings");
        c.push_back(Rational::from_string(s.get<std::string>()));
    }
    return Series(order, std::move(c));
}

json series_to_json_ordinary(const Series& f) {
    json coeffs = json::array();
    for (const Rational& q : to_ordinary(f)) coeffs.push_back(q.str());
    return json{{"convention", "ordinary"}, {"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

}  // namespace invoser
