#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfkit/poly.hpp"

namespace mfkit {

/// Largest matrix size accepted by determinant() unless the caller raises the
/// cap; the subset-sum Laplace expansion costs O(2^m * m) polynomial ops.
inline constexpr int kDefaultDetCap = 12;

/// Dense square matrix over Polynomial. All entries share one variable count.
class PolyMatrix {
  public:
    PolyMatrix(int size, std::size_t variable_count);

    static PolyMatrix identity(int size, std::size_t variable_count);
    /// value * I, a scalar matrix.
    static PolyMatrix scalar(const Polynomial& value, int size);
    /// Builds a matrix from per-entry polynomial text in the given variables.
    static PolyMatrix parse(std::span<const std::string> variables,
                            const std::vector<std::vector<std::string>>& rows);

    int size() const noexcept { return size_; }
    std::size_t variable_count() const noexcept { return variable_count_; }

    Polynomial& at(int row, int col);
    const Polynomial& at(int row, int col) const;

    PolyMatrix transposed() const;
    PolyMatrix operator-() const;
    PolyMatrix operator+(const PolyMatrix& rhs) const;
    PolyMatrix operator-(const PolyMatrix& rhs) const;
    PolyMatrix operator*(const PolyMatrix& rhs) const;

    /// Returns f when the matrix equals f * I (equal diagonal, zero
    /// off-diagonal), std::nullopt otherwise.
    std::optional<Polynomial> scalar_identity() const;

    /// Exact determinant by dynamic-programming Laplace expansion over column
    /// subsets; throws when size exceeds size_cap.
    Polynomial determinant(int size_cap = kDefaultDetCap) const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.size_ == b.size_ && a.variable_count_ == b.variable_count_ &&
               a.entries_ == b.entries_;
    }

  private:
    void require_compatible(const PolyMatrix& other) const;

    int size_;
    std::size_t variable_count_;
    std::vector<Polynomial> entries_;  // row-major, size_*size_
};

/// A 2n x 2n matrix seen as four contiguous n x n quadrants
/// [[b1, b2], [b3, b4]].
struct BlockQuad {
    int half;
    PolyMatrix b1, b2, b3, b4;

    const PolyMatrix& block(int index) const;  // 1-based
};

/// Splits an even-sized matrix into its four quadrants; throws on odd size.
BlockQuad partition(const PolyMatrix& m);
/// Inverse of partition; validates the quadrant invariants.
PolyMatrix assemble(const BlockQuad& q);

struct BlockCommuteResult {
    bool ok;
    // First violating pair (1-based block indices) and b_i*b_j - b_j*b_i,
    // present only when !ok.
    int lhs = 0;
    int rhs = 0;
    std::optional<PolyMatrix> difference;
};

/// Checks all six unordered quadrant pairs for commutativity.
BlockCommuteResult blocks_commute(const BlockQuad& q);

}  // namespace mfkit
