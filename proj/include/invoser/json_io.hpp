#pragma once

#include <json.hpp>

#include "invoser/laurent.hpp"
#include "invoser/series.hpp"

namespace invoser {

// Wire formats shared by the CLI, the fixtures and the golden tests.
//
// Polynomial: {"terms":[{"coef":"p/q","exps":[e1,...,em]}]} with terms in
// canonical (graded-lex) order and exps listing X1..Xm exponents, trailing
// zeros trimmed.
//
// Series: {"convention":"exponential","order":N,"coeffs":["p/q",...]} with
// index 0 first.

nlohmann::json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json series_to_json(const Series& f);
Series series_from_json(const nlohmann::json& j);

nlohmann::json series_to_json_ordinary(const Series& f);

}  // namespace invoser
