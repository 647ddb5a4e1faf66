#include "mfkit/catalog.hpp"

namespace mfkit {

namespace {

using BlockText = const char* const[4][4];

// Quadrant blocks of the 8x8 matrix A with A*A^t = (x1^2 + ... + x8^2)*I.
// Kept as literal data so a typo is caught by the product test, not hidden
// behind a generator.
constexpr BlockText kA1 = {
    {"x1", "-x2", "x3", "x4"},
    {"x2", "x1", "-x4", "x3"},
    {"-x3", "x4", "x1", "x2"},
    {"-x4", "-x3", "-x2", "x1"},
};
constexpr BlockText kA2 = {
    {"x5", "x6", "-x7", "-x8"},
    {"-x6", "x5", "-x8", "x7"},
    {"x7", "x8", "x5", "x6"},
    {"x8", "-x7", "-x6", "x5"},
};
constexpr BlockText kA3 = {
    {"-x5", "x6", "-x7", "-x8"},
    {"-x6", "-x5", "-x8", "x7"},
    {"x7", "x8", "-x5", "x6"},
    {"x8", "-x7", "-x6", "-x5"},
};
constexpr BlockText kA4 = {
    {"x1", "x2", "-x3", "-x4"},
    {"-x2", "x1", "x4", "-x3"},
    {"x3", "-x4", "x1", "-x2"},
    {"x4", "x3", "x2", "x1"},
};

// Quadrant blocks of B = A^t, kept verbatim as a cross-check on the A data.
constexpr BlockText kB1 = {
    {"x1", "x2", "-x3", "-x4"},
    {"-x2", "x1", "x4", "-x3"},
    {"x3", "-x4", "x1", "-x2"},
    {"x4", "x3", "x2", "x1"},
};
constexpr BlockText kB2 = {
    {"-x5", "-x6", "x7", "x8"},
    {"x6", "-x5", "x8", "-x7"},
    {"-x7", "-x8", "-x5", "-x6"},
    {"-x8", "x7", "x6", "-x5"},
};
constexpr BlockText kB3 = {
    {"x5", "-x6", "x7", "x8"},
    {"x6", "x5", "x8", "-x7"},
    {"-x7", "-x8", "x5", "-x6"},
    {"-x8", "x7", "x6", "x5"},
};
constexpr BlockText kB4 = {
    {"x1", "-x2", "x3", "x4"},
    {"x2", "x1", "-x4", "x3"},
    {"-x3", "x4", "x1", "x2"},
    {"-x4", "-x3", "-x2", "x1"},
};

PolyMatrix block_matrix(BlockText text, std::span<const std::string> variables) {
    std::vector<std::vector<std::string>> rows(4, std::vector<std::string>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows[i][j] = text[i][j];
    return PolyMatrix::parse(variables, rows);
}

Polynomial poly(const std::string& text, std::span<const std::string> variables) {
    return Polynomial::parse(text, variables);
}

TermList term_list(std::span<const std::string> variables,
                   const std::vector<std::pair<std::string, std::string>>& pairs) {
    TermList t;
    for (const auto& [g, h] : pairs)
        t.pairs.emplace_back(poly(g, variables), poly(h, variables));
    return t;
}

}  // namespace

Polynomial sums_of_squares(int n) {
    if (n < 1) throw std::invalid_argument("sums_of_squares: n must be positive");
    Polynomial f(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Monomial m(static_cast<std::size_t>(n));
        m.raise(static_cast<std::size_t>(i), 2);
        f += Polynomial::term(std::move(m), Rational(1));
    }
    return f;
}

Factorization f8_minimal() {
    const std::vector<std::string> vars = positional_variable_names(8);
    PolyMatrix a = assemble({4, block_matrix(kA1, vars), block_matrix(kA2, vars),
                             block_matrix(kA3, vars), block_matrix(kA4, vars)});
    PolyMatrix b = a.transposed();
    BlockQuad bq = partition(b);
    if (!(bq.b1 == block_matrix(kB1, vars)) || !(bq.b2 == block_matrix(kB2, vars)) ||
        !(bq.b3 == block_matrix(kB3, vars)) || !(bq.b4 == block_matrix(kB4, vars)))
        throw std::logic_error("f8 catalog data: transpose blocks disagree with the stored B blocks");
    Factorization fac(sums_of_squares(8), {std::move(a), std::move(b)});
    fac.verify();
    return fac;
}

Factorization f4_minimal() {
    const std::vector<std::string> vars = positional_variable_names(4);
    PolyMatrix a = block_matrix(kA1, vars);
    PolyMatrix b = block_matrix(kA4, vars);
    if (!(b == a.transposed()))
        throw std::logic_error("f4 catalog data: second factor is not the transpose of the first");
    Factorization fac(sums_of_squares(4), {std::move(a), std::move(b)});
    fac.verify();
    return fac;
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;

    {
        const std::vector<std::string> vars{"z", "y"};
        PolyMatrix p = PolyMatrix::parse(vars, {{"z", "-y"}, {"y", "z"}});
        PolyMatrix q = PolyMatrix::parse(vars, {{"z", "y"}, {"-y", "z"}});
        Factorization fac(poly("z^2 + y^2", vars), {std::move(p), std::move(q)});
        fac.verify();
        entries.push_back({"intro", vars, fac.target(), std::move(fac),
                           "rotation-style 2x2 pair for z^2 + y^2"});
    }

    const std::vector<std::string> xyz{"x", "y", "z"};
    {
        Factorization fac = standard_method(term_list(xyz, {{"x^2", "y"}, {"x^2", "z"}}));
        entries.push_back({"g_partial", xyz, fac.target(), std::move(fac),
                           "standard method on the first two terms of x^2*y + x^2*z + y*z^2"});
    }
    {
        Factorization fac =
            standard_method(term_list(xyz, {{"x^2", "y"}, {"x^2", "z"}, {"y", "z^2"}}));
        entries.push_back({"g_standard", xyz, fac.target(), std::move(fac),
                           "standard method on x^2*y + x^2*z + y*z^2, term by term"});
    }
    {
        Factorization fac = standard_method(term_list(xyz, {{"x^2", "y + z"}, {"y", "z^2"}}));
        entries.push_back({"g_grouped", xyz, fac.target(), std::move(fac),
                           "2x2 pair for x^2*y + x^2*z + y*z^2 via the grouping x^2*(y+z) + y*z^2"});
    }
    {
        Factorization fac = f4_minimal();
        entries.push_back({"f4", positional_variable_names(4), fac.target(), std::move(fac),
                           "minimal 4x4 pair for the sum of 4 squares, quaternion-style blocks"});
    }
    {
        Factorization fac = f8_minimal();
        entries.push_back({"f8", positional_variable_names(8), fac.target(), std::move(fac),
                           "minimal 8x8 pair for the sum of 8 squares, octonion-style blocks"});
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* catalog_find(std::string_view name) {
    for (const CatalogEntry& entry : catalog())
        if (entry.name == name) return &entry;
    return nullptr;
}

}  // namespace mfkit
