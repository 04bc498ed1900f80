#include "izr/json_io.hpp"

#include <fstream>
#include <sstream>

namespace izr {

nlohmann::ordered_json algebra_to_json(const FiniteAlgebra& alg) {
    nlohmann::ordered_json j;
    j["size"] = alg.size();
    j["table"] = alg.rows();
    return j;
}

FiniteAlgebra algebra_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("size") || !j.contains("table"))
        throw std::invalid_argument("algebra document must contain \"size\" and \"table\"");
    int n = j.at("size").get<int>();
    auto rows = j.at("table").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("algebra table does not match declared size");
    return FiniteAlgebra::from_rows(rows);
}

FiniteAlgebra parse_algebra_text(std::string_view text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        throw std::invalid_argument("empty algebra document");
    if (text[first] == '{')
        return algebra_from_json(nlohmann::json::parse(text));

    // Cayley form.
    std::istringstream in{std::string(text)};
    int n = 0;
    if (!(in >> n) || n < 1) throw std::invalid_argument("Cayley format: bad size line");
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!(in >> rows[a][b]))
                throw std::invalid_argument("Cayley format: table is truncated");
    int trailing;
    if (in >> trailing) throw std::invalid_argument("Cayley format: trailing entries");
    return FiniteAlgebra::from_rows(rows);
}

FiniteAlgebra load_algebra_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open algebra file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_algebra_text(buf.str());
}

nlohmann::ordered_json witness_to_json(const Witness& w) {
    nlohmann::ordered_json j;
    j["assignment"] = w.assignment;
    j["lhs"] = w.lhs_value;
    j["rhs"] = w.rhs_value;
    return j;
}

}  // namespace izr
