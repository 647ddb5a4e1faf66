#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "mfkit/factorization.hpp"

namespace mfkit {

/// {"size": m, "variables": [names], "entries": [[text, ...], ...]},
/// row-major, entries in canonical polynomial text.
nlohmann::json matrix_to_json(const PolyMatrix& m,
                              std::span<const std::string> variables);

/// Inverse of matrix_to_json; validates the schema and reports the declared
/// variable names through variables_out when non-null.
PolyMatrix matrix_from_json(const nlohmann::json& j,
                            std::vector<std::string>* variables_out = nullptr);

/// {"target": text, "variables": [names], "factors": [matrix, ...],
///  "verified": bool}. Factor matrices repeat the variable list.
nlohmann::json factorization_to_json(const Factorization& fac,
                                     std::span<const std::string> variables);

/// Inverse of factorization_to_json. A factorization claiming verified: true
/// is re-verified on load, so a corrupted file fails here with the offending
/// entry.
Factorization factorization_from_json(const nlohmann::json& j,
                                      std::vector<std::string>* variables_out = nullptr);

}  // namespace mfkit
