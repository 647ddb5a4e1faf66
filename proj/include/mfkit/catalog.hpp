#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mfkit/factorization.hpp"

namespace mfkit {

/// A named built-in factorization, verified at catalog construction.
struct CatalogEntry {
    std::string name;
    std::vector<std::string> variables;
    Polynomial target;
    Factorization factorization;
    std::string provenance;
};

/// The sum-of-squares polynomial x1^2 + ... + xn^2 over n variables.
Polynomial sums_of_squares(int n);

/// The minimal 8x8 pair (A, A^t) for the sum of 8 squares, assembled from
/// the four quaternion-style quadrant blocks kept as literal data.
Factorization f8_minimal();

/// The minimal 4x4 pair (A1, A1^t) for the sum of 4 squares, reusing the
/// upper-left 8x8 block over four variables.
Factorization f4_minimal();

/// All built-in entries; every factorization is verified on first access.
const std::vector<CatalogEntry>& catalog();

/// Entry lookup by name; nullptr when absent.
const CatalogEntry* catalog_find(std::string_view name);

}  // namespace mfkit
