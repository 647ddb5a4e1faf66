#include "mfkit/json_io.hpp"

namespace mfkit {

namespace {

using nlohmann::json;

std::vector<std::string> read_variables(const json& j) {
    if (!j.contains("variables") || !j["variables"].is_array())
        throw std::invalid_argument("JSON: missing 'variables' array");
    std::vector<std::string> vars;
    for (const json& v : j["variables"]) {
        if (!v.is_string()) throw std::invalid_argument("JSON: variable names must be strings");
        vars.push_back(v.get<std::string>());
    }
    if (vars.empty()) throw std::invalid_argument("JSON: variable list must not be empty");
    return vars;
}

}  // namespace

json matrix_to_json(const PolyMatrix& m, std::span<const std::string> variables) {
    json entries = json::array();
    for (int i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).to_string(variables));
        entries.push_back(std::move(row));
    }
    return json{{"size", m.size()},
                {"variables", std::vector<std::string>(variables.begin(), variables.end())},
                {"entries", std::move(entries)}};
}

PolyMatrix matrix_from_json(const json& j, std::vector<std::string>* variables_out) {
    if (!j.is_object()) throw std::invalid_argument("JSON: matrix must be an object");
    if (!j.contains("size") || !j["size"].is_number_integer())
        throw std::invalid_argument("JSON: missing integer 'size'");
    const int size = j["size"].get<int>();
    if (size <= 0) throw std::invalid_argument("JSON: matrix size must be positive");
    std::vector<std::string> vars = read_variables(j);
    if (!j.contains("entries") || !j["entries"].is_array() ||
        static_cast<int>(j["entries"].size()) != size)
        throw std::invalid_argument("JSON: 'entries' must be an array of 'size' rows");

    PolyMatrix m(size, vars.size());
    for (int i = 0; i < size; ++i) {
        const json& row = j["entries"][static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != size)
            throw std::invalid_argument("JSON: each row must be an array of 'size' strings");
        for (int k = 0; k < size; ++k) {
            const json& cell = row[static_cast<std::size_t>(k)];
            if (!cell.is_string())
                throw std::invalid_argument("JSON: matrix entries must be polynomial strings");
            m.at(i, k) = Polynomial::parse(cell.get<std::string>(), vars);
        }
    }
    if (variables_out) *variables_out = std::move(vars);
    return m;
}

json factorization_to_json(const Factorization& fac,
                           std::span<const std::string> variables) {
    json factors = json::array();
    for (const PolyMatrix& f : fac.factors()) factors.push_back(matrix_to_json(f, variables));
    return json{{"target", fac.target().to_string(variables)},
                {"variables", std::vector<std::string>(variables.begin(), variables.end())},
                {"factors", std::move(factors)},
                {"verified", fac.is_verified()}};
}

Factorization factorization_from_json(const json& j,
                                      std::vector<std::string>* variables_out) {
    if (!j.is_object()) throw std::invalid_argument("JSON: factorization must be an object");
    std::vector<std::string> vars = read_variables(j);
    if (!j.contains("target") || !j["target"].is_string())
        throw std::invalid_argument("JSON: missing 'target' polynomial string");
    Polynomial target = Polynomial::parse(j["target"].get<std::string>(), vars);

    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty())
        throw std::invalid_argument("JSON: 'factors' must be a non-empty array");
    std::vector<PolyMatrix> factors;
    for (const json& fj : j["factors"]) {
        std::vector<std::string> factor_vars;
        factors.push_back(matrix_from_json(fj, &factor_vars));
        if (factor_vars != vars)
            throw std::invalid_argument("JSON: factor variable lists must match the factorization");
    }

    Factorization fac(std::move(target), std::move(factors));
    if (j.contains("verified") && j["verified"].is_boolean() && j["verified"].get<bool>())
        fac.verify();  // never trust a stored claim
    if (variables_out) *variables_out = std::move(vars);
    return fac;
}

}  // namespace mfkit
