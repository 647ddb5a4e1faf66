#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mfkit {

// Exact rational coefficient type. GMP keeps values canonical (lowest terms,
// positive denominator) through all arithmetic.
using Rational = mpq_class;

/// Thrown by Polynomial::parse on malformed input; position is a byte offset
/// into the input text.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

  private:
    std::size_t position_;
};

/// Power product of the ambient variables, stored as an exponent vector whose
/// length equals the ambient variable count.
class Monomial {
  public:
    explicit Monomial(std::size_t variable_count)
        : exponents_(variable_count, 0) {}

    static Monomial variable(std::size_t variable_count, std::size_t index,
                             std::uint32_t power = 1);

    std::size_t variable_count() const noexcept { return exponents_.size(); }
    std::uint32_t exponent(std::size_t i) const { return exponents_.at(i); }
    std::uint32_t total_degree() const noexcept { return degree_; }
    bool is_unit() const noexcept { return degree_ == 0; }

    void raise(std::size_t index, std::uint32_t by);

    Monomial operator*(const Monomial& rhs) const;
    bool divides(const Monomial& other) const;
    Monomial divided_by(const Monomial& divisor) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents_ == b.exponents_;
    }

  private:
    std::vector<std::uint32_t> exponents_;
    std::uint32_t degree_ = 0;
};

/// Graded lexicographic comparison: total degree first, then lexicographic on
/// the exponent vector in declared variable order. Returns <0, 0, >0.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_compare(a, b) > 0;
    }
};

/// Multivariate polynomial with exact rational coefficients, always kept in
/// canonical form: no stored coefficient is zero and terms are ordered
/// graded-lexicographically with the leading term first. The zero polynomial
/// has an empty term map.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit Polynomial(std::size_t variable_count)
        : variable_count_(variable_count) {}

    static Polynomial constant(std::size_t variable_count, Rational value);
    static Polynomial variable(std::size_t variable_count, std::size_t index);
    static Polynomial term(Monomial monomial, Rational coefficient);

    /// Parses the textual grammar
    ///   expr   := ['+'|'-'] term (('+'|'-') term)*
    ///   term   := coeff | [coeff '*'] factor ('*' factor)*
    ///   factor := var ['^' uint]
    ///   coeff  := uint | uint '/' uint
    /// with insignificant whitespace; variable names resolve against the
    /// given ordered list. The result is canonical, so repeated variables and
    /// like terms are merged.
    static Polynomial parse(std::string_view text,
                            std::span<const std::string> variables);

    /// Canonical printing: graded-lex term order, explicit '*' and '^',
    /// signs folded into the coefficients and rendered as ' + ' / ' - '
    /// separators, unit coefficients omitted. parse(to_string(p)) == p.
    std::string to_string(std::span<const std::string> variables) const;

    std::size_t variable_count() const noexcept { return variable_count_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Value of a constant polynomial; throws std::logic_error otherwise.
    Rational constant_value() const;
    /// Total degree; the zero polynomial reports -1.
    int degree() const noexcept;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        a += b;
        return a;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        a -= b;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial pow(std::uint32_t k) const;

    /// Exact single-divisor division: returns q with *this == q * divisor
    /// when the division leaves no remainder under the graded-lex order,
    /// std::nullopt otherwise. Throws on a zero divisor.
    std::optional<Polynomial> try_divide(const Polynomial& divisor) const;

    Rational evaluate(std::span<const Rational> point) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.variable_count_ == b.variable_count_ && a.terms_ == b.terms_;
    }

  private:
    void add_term(const Monomial& monomial, const Rational& coefficient);
    void require_same_variables(const Polynomial& other) const;

    std::size_t variable_count_;
    TermMap terms_;
};

/// Positional variable names x1, x2, ..., xn; used for diagnostics and
/// canonical serialization where no user-facing names are in scope.
std::vector<std::string> positional_variable_names(std::size_t count);

}  // namespace mfkit
