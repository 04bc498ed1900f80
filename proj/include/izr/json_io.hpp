#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "izr/algebra.hpp"

namespace izr {

// Algebra document: {"size": n, "table": [[...], ...]} with table[a][b] = a -> b.
nlohmann::ordered_json algebra_to_json(const FiniteAlgebra& alg);
FiniteAlgebra algebra_from_json(const nlohmann::json& j);

// Accepts either a JSON document or plain-text Cayley form (first line n,
// then n lines of n space-separated entries).
FiniteAlgebra parse_algebra_text(std::string_view text);
FiniteAlgebra load_algebra_file(const std::string& path);

nlohmann::ordered_json witness_to_json(const Witness& w);

}  // namespace izr
