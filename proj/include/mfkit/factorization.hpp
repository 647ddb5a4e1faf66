#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfkit/polymat.hpp"

namespace mfkit {

/// Thrown when a claimed factorization fails its product check. row/col point
/// at the offending product entry when the product is not a scalar identity;
/// they are -1 for a scalar-vs-target mismatch.
class VerifyError : public std::runtime_error {
  public:
    enum class Kind { NotScalarIdentity, ScalarMismatch };

    VerifyError(Kind kind, int row, int col, const std::string& message)
        : std::runtime_error(message), kind_(kind), row_(row), col_(col) {}

    Kind kind() const noexcept { return kind_; }
    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

  private:
    Kind kind_;
    int row_;
    int col_;
};

/// Thrown when a construction's commutation precondition fails; carries the
/// violating pair and the difference of the two products.
class CommutationError : public std::runtime_error {
  public:
    CommutationError(int lhs, int rhs, PolyMatrix difference, const std::string& message)
        : std::runtime_error(message), lhs_(lhs), rhs_(rhs),
          difference_(std::move(difference)) {}

    int lhs() const noexcept { return lhs_; }
    int rhs() const noexcept { return rhs_; }
    const PolyMatrix& difference() const noexcept { return difference_; }

  private:
    int lhs_;
    int rhs_;
    PolyMatrix difference_;
};

/// Thrown when a determinant certificate cannot be established.
class CertificateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An ordered tuple (A_1, ..., A_n) of m x m matrices together with the
/// target polynomial f it factors: verified means the product
/// A_1 * A_2 * ... * A_n has been checked to equal f * I_m exactly.
class Factorization {
  public:
    Factorization(Polynomial target, std::vector<PolyMatrix> factors);

    const Polynomial& target() const noexcept { return target_; }
    const std::vector<PolyMatrix>& factors() const noexcept { return factors_; }
    int factor_count() const noexcept { return static_cast<int>(factors_.size()); }
    int size() const noexcept { return factors_.front().size(); }
    std::size_t variable_count() const noexcept { return target_.variable_count(); }
    bool is_verified() const noexcept { return verified_; }

    /// Multiplies the factors left to right and checks the product against
    /// target * I; returns the target and marks the value verified. Throws
    /// VerifyError otherwise.
    const Polynomial& verify();

  private:
    Polynomial target_;
    std::vector<PolyMatrix> factors_;
    bool verified_ = false;
};

/// The decomposition f = g_1*h_1 + ... + g_k*h_k driving the standard method.
struct TermList {
    std::vector<std::pair<Polynomial, Polynomial>> pairs;

    Polynomial sum() const;
};

/// Builds the 2^(k-1)-size pair for sum(g_i * h_i): base ([g1], [h1]), then
/// each step maps (C, D) to ([[C, -gI], [hI, D]], [[D, gI], [-hI, C]]).
/// The result is verified against the term sum.
Factorization standard_method(const TermList& terms);

/// Combines pairs for f1 and f2 into a doubled-size pair for f1 + f2,
/// provided the cross factors commute (C1 with D2, C2 with D1); throws
/// CommutationError with the violating pair otherwise.
Factorization combine_prop21(const Factorization& f1, const Factorization& f2);

/// Extends a verified pair for f into a doubled-size pair for f + g*h.
Factorization extend_cor21(const Factorization& fac, const Polynomial& g,
                           const Polynomial& h);

/// All n cyclic rearrangements (A_i, ..., A_n, A_1, ..., A_{i-1}), each
/// re-verified by direct multiplication; index 0 is the input order.
std::vector<Factorization> cyclic_rotations(const Factorization& fac);

/// The reversed-transpose tuple (A_n^t, ..., A_1^t), re-verified.
Factorization transpose_reversal(const Factorization& fac);

struct FactorCertificate {
    Polynomial determinant;
    Polynomial quotient;  // target^m / determinant
    // Present when the power decomposition det = unit * target^k was
    // requested and established.
    std::optional<std::uint32_t> power;
    std::optional<Rational> unit;
};

struct DetCertificate {
    Polynomial target_power;  // target^m
    std::vector<FactorCertificate> factors;
};

/// Certifies, for each factor, a nonzero determinant dividing target^m (so
/// each factor is invertible over the fraction field) and checks that the
/// determinants multiply to target^m exactly. With irreducible_hint the
/// determinants are additionally decomposed as unit * target^k, 0 <= k <= m.
DetCertificate det_certificate(const Factorization& fac, bool irreducible_hint,
                               int det_cap = kDefaultDetCap);

enum class Thm32Variant { A, B };

/// The block equality/sign pattern a pair quadrant split satisfies:
///   variant A: A2 = B2, A3 = B3, A1 = -B4, A4 = -B1
///   variant B: A1 = B4, A4 = B1, A2 = -B2, A3 = -B3
struct Hypothesis32 {
    Thm32Variant variant;
    std::string pattern;
};

struct Thm32HypothesisResult {
    std::optional<Hypothesis32> match;
    std::string failure;  // why no variant matched, empty on success
};

/// Checks the block-generation hypothesis on quadrant splits of a pair:
/// one of the two sign patterns above plus pairwise commutation of the four
/// A-blocks.
Thm32HypothesisResult thm32_hypothesis(const BlockQuad& a, const BlockQuad& b);

/// Emits the 14 block-rearranged pairs derived from a quadrant-split
/// factorization satisfying thm32_hypothesis; every output is re-verified by
/// direct multiplication. Item 1 is the input pair itself.
std::vector<Factorization> thm32_generate(const BlockQuad& a, const BlockQuad& b);

/// Deterministic order-sensitive serialization of a factor tuple: factor
/// count and size, then each factor's entries in row-major canonical text
/// over positional variable names. Equal tuples have equal keys.
std::string canonical_key(const Factorization& fac);

struct OrbitOptions {
    int depth_cap = 4;
    std::size_t set_cap = 10000;
};

struct OrbitResult {
    std::vector<Factorization> members;  // insertion order, seed first
    bool complete;                       // false when a cap cut exploration short
};

/// Closes a verified seed under cyclic rotation, transpose reversal and
/// (for even-sized pairs whose quadrants satisfy the hypothesis) the 14-way
/// block generation, deduplicating by canonical_key. The member count is a
/// lower bound on the number of distinct factorizations of the target.
OrbitResult orbit(const Factorization& seed, const OrbitOptions& options = {});

}  // namespace mfkit
