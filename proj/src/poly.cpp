#include "mfkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace mfkit {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

Monomial Monomial::variable(std::size_t variable_count, std::size_t index,
                            std::uint32_t power) {
    Monomial m(variable_count);
    m.raise(index, power);
    return m;
}

void Monomial::raise(std::size_t index, std::uint32_t by) {
    exponents_.at(index) += by;
    degree_ += by;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    if (variable_count() != rhs.variable_count())
        throw std::invalid_argument("monomial product: variable count mismatch");
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        out.exponents_[i] += rhs.exponents_[i];
    out.degree_ += rhs.degree_;
    return out;
}

bool Monomial::divides(const Monomial& other) const {
    if (variable_count() != other.variable_count()) return false;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
    if (!divisor.divides(*this))
        throw std::invalid_argument("monomial quotient: not divisible");
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents_.size(); ++i)
        out.exponents_[i] -= divisor.exponents_[i];
    out.degree_ -= divisor.degree_;
    return out;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
    if (a.variable_count() != b.variable_count())
        throw std::invalid_argument("grlex_compare: variable count mismatch");
    if (a.total_degree() != b.total_degree())
        return a.total_degree() < b.total_degree() ? -1 : 1;
    for (std::size_t i = 0; i < a.variable_count(); ++i) {
        if (a.exponent(i) != b.exponent(i))
            return a.exponent(i) < b.exponent(i) ? -1 : 1;
    }
    return 0;
}

Polynomial Polynomial::constant(std::size_t variable_count, Rational value) {
    Polynomial p(variable_count);
    p.add_term(Monomial(variable_count), value);
    return p;
}

Polynomial Polynomial::variable(std::size_t variable_count, std::size_t index) {
    return term(Monomial::variable(variable_count, index), Rational(1));
}

Polynomial Polynomial::term(Monomial monomial, Rational coefficient) {
    Polynomial p(monomial.variable_count());
    p.add_term(monomial, coefficient);
    return p;
}

bool Polynomial::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw std::logic_error("constant_value of a non-constant polynomial");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int Polynomial::degree() const noexcept {
    // Graded order puts a maximal-degree term first.
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.total_degree());
}

void Polynomial::add_term(const Monomial& monomial, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto it = terms_.find(monomial);
    if (it == terms_.end()) {
        terms_.emplace(monomial, coefficient);
    } else {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::require_same_variables(const Polynomial& other) const {
    if (variable_count_ != other.variable_count_)
        throw std::invalid_argument("polynomial operation: variable count mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(variable_count_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_variables(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_variables(rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, Rational(-c));
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_variables(b);
    Polynomial out(a.variable_count_);
    if (a.is_zero() || b.is_zero()) return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, Rational(ca * cb));
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial Polynomial::pow(std::uint32_t k) const {
    Polynomial result = constant(variable_count_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

std::optional<Polynomial> Polynomial::try_divide(const Polynomial& divisor) const {
    require_same_variables(divisor);
    if (divisor.is_zero())
        throw std::invalid_argument("division by the zero polynomial");
    Polynomial quotient(variable_count_);
    Polynomial rest = *this;
    const auto& lead = *divisor.terms_.begin();
    while (!rest.is_zero()) {
        const auto& top = *rest.terms_.begin();
        // Once a leading term escapes the divisor's leading monomial the
        // remainder is nonzero, so exact division has already failed.
        if (!lead.first.divides(top.first)) return std::nullopt;
        Polynomial t = term(top.first.divided_by(lead.first), Rational(top.second / lead.second));
        quotient += t;
        rest -= t * divisor;
    }
    return quotient;
}

namespace {

Rational rational_pow(const Rational& base, std::uint32_t e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;  // canonical because gcd(n, d) = 1 implies gcd(n^e, d^e) = 1
}

}  // namespace

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != variable_count_)
        throw std::invalid_argument("evaluate: point length must equal the variable count");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational prod(c);
        for (std::size_t i = 0; i < variable_count_; ++i)
            if (m.exponent(i) > 0) prod *= rational_pow(point[i], m.exponent(i));
        total += prod;
    }
    return total;
}

std::string Polynomial::to_string(std::span<const std::string> variables) const {
    if (variables.size() != variable_count_)
        throw std::invalid_argument("to_string: variable name list has the wrong length");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        Rational magnitude = negative ? Rational(-c) : c;
        std::string factors;
        for (std::size_t i = 0; i < variable_count_; ++i) {
            const std::uint32_t e = m.exponent(i);
            if (e == 0) continue;
            if (!factors.empty()) factors += "*";
            factors += variables[i];
            if (e >= 2) {
                factors += "^";
                factors += std::to_string(e);
            }
        }
        if (factors.empty()) {
            out += magnitude.get_str();
        } else {
            if (magnitude != 1) {
                out += magnitude.get_str();
                out += "*";
            }
            out += factors;
        }
    }
    return out;
}

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class PolyParser {
  public:
    PolyParser(std::string_view text, std::span<const std::string> variables)
        : text_(text), variables_(variables) {
        for (std::size_t i = 0; i < variables.size(); ++i) {
            if (variables[i].empty() || !is_ident_start(variables[i][0]) ||
                !std::all_of(variables[i].begin(), variables[i].end(), is_ident_char))
                throw std::invalid_argument("invalid variable name: '" + variables[i] + "'");
            if (!index_.emplace(variables[i], i).second)
                throw std::invalid_argument("duplicate variable name: '" + variables[i] + "'");
        }
    }

    Polynomial run() {
        Polynomial out(variables_.size());
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial text", pos_);
        int sign = consume_sign().value_or(+1);
        out += parse_term(sign);
        while (skip_ws(), !at_end()) {
            auto s = consume_sign();
            if (!s) throw ParseError("expected '+' or '-'", pos_);
            skip_ws();
            out += parse_term(*s);
        }
        return out;
    }

  private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::optional<int> consume_sign() {
        if (at_end()) return std::nullopt;
        if (peek() == '+') {
            ++pos_;
            return +1;
        }
        if (peek() == '-') {
            ++pos_;
            return -1;
        }
        return std::nullopt;
    }

    std::string parse_digits() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return std::string(text_.substr(start, pos_ - start));
    }

    Rational parse_coefficient() {
        mpz_class num(parse_digits());
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_pos = pos_;
            mpz_class den(parse_digits());
            if (den == 0) throw ParseError("zero denominator", den_pos);
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    void parse_factor(Monomial& m) {
        skip_ws();
        if (at_end() || !is_ident_start(peek()))
            throw ParseError("expected a variable name", pos_);
        std::size_t start = pos_;
        while (!at_end() && is_ident_char(peek())) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto it = index_.find(name);
        if (it == index_.end())
            throw ParseError("unknown variable '" + std::string(name) + "'", start);
        std::uint32_t exponent = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t exp_pos = pos_;
            std::string digits = parse_digits();
            if (digits.size() > 9) throw ParseError("exponent too large", exp_pos);
            exponent = static_cast<std::uint32_t>(std::stoul(digits));
        }
        m.raise(it->second, exponent);
    }

    Polynomial parse_term(int sign) {
        skip_ws();
        if (at_end()) throw ParseError("expected a term", pos_);
        Rational coeff(sign);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_coefficient();
            skip_ws();
            if (at_end() || peek() != '*')
                return Polynomial::constant(variables_.size(), coeff);
            ++pos_;  // '*' between coefficient and first factor
        }
        Monomial m(variables_.size());
        parse_factor(m);
        while (skip_ws(), !at_end() && peek() == '*') {
            ++pos_;
            parse_factor(m);
        }
        return Polynomial::term(std::move(m), std::move(coeff));
    }

    std::string_view text_;
    std::span<const std::string> variables_;
    std::map<std::string_view, std::size_t> index_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text,
                             std::span<const std::string> variables) {
    return PolyParser(text, variables).run();
}

std::vector<std::string> positional_variable_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

}  // namespace mfkit
