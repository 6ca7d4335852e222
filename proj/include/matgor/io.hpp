#pragma once

#include <string>

#include <json.hpp>

#include "matgor/matroid.hpp"

namespace matgor {

/// Builds a matroid from its JSON spec; see README for the accepted types.
Matroid matroid_from_json(const nlohmann::json& spec);
Matroid load_matroid(const std::string& path);
/// m22, m23, fivevec, boolean:N, fano.
Matroid builtin_matroid(const std::string& name);
nlohmann::json builtin_spec(const std::string& name);

/// {"type":"bases","ground":[...],"bases":[[...]]} with bases in lex order.
nlohmann::json matroid_to_json(const Matroid& m);
/// A label as JSON: an integer when it is a plain decimal number.
nlohmann::json label_json(const std::string& label);
nlohmann::json subset_json(const Matroid& m, Subset s);

}  // namespace matgor
