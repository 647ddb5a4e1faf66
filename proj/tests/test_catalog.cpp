#include <doctest.h>

#include "mfkit/catalog.hpp"
#include "test_util.hpp"

using namespace mfkit;
using namespace mfkit::testing;

TEST_CASE("sums_of_squares") {
    const std::vector<std::string> x2 = positional_variable_names(2);
    CHECK(sums_of_squares(2) == P("x1^2 + x2^2", x2));
    CHECK(sums_of_squares(1) == P("x1^2", positional_variable_names(1)));
    Polynomial f8 = sums_of_squares(8);
    CHECK(f8.terms().size() == 8);
    CHECK(f8.degree() == 2);
    CHECK_THROWS_AS(sums_of_squares(0), std::invalid_argument);
}

TEST_CASE("f8_minimal") {
    Factorization f8 = f8_minimal();
    CHECK(f8.is_verified());
    CHECK(f8.size() == 8);
    CHECK(f8.target() == sums_of_squares(8));
    CHECK(f8.factors()[1] == f8.factors()[0].transposed());
    CHECK(f8.factors()[0] * f8.factors()[1] == PolyMatrix::scalar(sums_of_squares(8), 8));
    CHECK(blocks_commute(partition(f8.factors()[0])).ok);
}

TEST_CASE("f4_minimal") {
    Factorization f4 = f4_minimal();
    CHECK(f4.is_verified());
    CHECK(f4.size() == 4);
    CHECK(f4.target() == sums_of_squares(4));
    CHECK(f4.factors()[1] == f4.factors()[0].transposed());
    // the 4x4 factor is the upper-left quadrant of the 8x8 one, read over 4 variables
    const std::vector<std::string> v8 = positional_variable_names(8);
    const std::vector<std::string> v4 = positional_variable_names(4);
    PolyMatrix upper_left = partition(f8_minimal().factors()[0]).b1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(upper_left.at(i, j).to_string(v8) == f4.factors()[0].at(i, j).to_string(v4));
}

TEST_CASE("catalog entries verify and resolve by name") {
    CHECK(catalog().size() == 6);
    for (const CatalogEntry& entry : catalog()) {
        CHECK(entry.factorization.is_verified());
        CHECK(entry.factorization.target() == entry.target);
        CHECK_FALSE(entry.provenance.empty());
        CHECK(catalog_find(entry.name) == &entry);
    }
    CHECK(catalog_find("no_such_entry") == nullptr);

    const CatalogEntry* grouped = catalog_find("g_grouped");
    REQUIRE(grouped != nullptr);
    CHECK(grouped->factorization.size() == 2);
    CHECK(grouped->factorization.factors()[0] ==
          M(kXYZ, {{"x^2", "-y"}, {"z^2", "y + z"}}));
    CHECK(grouped->factorization.factors()[1] ==
          M(kXYZ, {{"y + z", "y"}, {"-z^2", "x^2"}}));

    const CatalogEntry* intro = catalog_find("intro");
    REQUIRE(intro != nullptr);
    CHECK(intro->target.to_string(intro->variables) == "z^2 + y^2");
}
