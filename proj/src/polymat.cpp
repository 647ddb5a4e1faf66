#include "mfkit/polymat.hpp"

#include <bit>
#include <utility>

namespace mfkit {

PolyMatrix::PolyMatrix(int size, std::size_t variable_count)
    : size_(size), variable_count_(variable_count) {
    if (size <= 0) throw std::invalid_argument("matrix size must be positive");
    entries_.assign(static_cast<std::size_t>(size) * size, Polynomial(variable_count));
}

PolyMatrix PolyMatrix::identity(int size, std::size_t variable_count) {
    PolyMatrix m(size, variable_count);
    for (int i = 0; i < size; ++i)
        m.at(i, i) = Polynomial::constant(variable_count, 1);
    return m;
}

PolyMatrix PolyMatrix::scalar(const Polynomial& value, int size) {
    PolyMatrix m(size, value.variable_count());
    for (int i = 0; i < size; ++i) m.at(i, i) = value;
    return m;
}

PolyMatrix PolyMatrix::parse(std::span<const std::string> variables,
                             const std::vector<std::vector<std::string>>& rows) {
    const int n = static_cast<int>(rows.size());
    PolyMatrix m(n, variables.size());
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix rows must all have length equal to the row count");
        for (int j = 0; j < n; ++j)
            m.at(i, j) = Polynomial::parse(rows[i][j], variables);
    }
    return m;
}

Polynomial& PolyMatrix::at(int row, int col) {
    if (row < 0 || row >= size_ || col < 0 || col >= size_)
        throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<std::size_t>(row) * size_ + col];
}

const Polynomial& PolyMatrix::at(int row, int col) const {
    if (row < 0 || row >= size_ || col < 0 || col >= size_)
        throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<std::size_t>(row) * size_ + col];
}

void PolyMatrix::require_compatible(const PolyMatrix& other) const {
    if (size_ != other.size_)
        throw std::invalid_argument("matrix size mismatch");
    if (variable_count_ != other.variable_count_)
        throw std::invalid_argument("matrix variable count mismatch");
}

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix out(size_, variable_count_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) out.at(j, i) = at(i, j);
    return out;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix out(size_, variable_count_);
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) out.at(i, j) = -at(i, j);
    return out;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& rhs) const {
    require_compatible(rhs);
    PolyMatrix out = *this;
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) out.at(i, j) += rhs.at(i, j);
    return out;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& rhs) const {
    require_compatible(rhs);
    PolyMatrix out = *this;
    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) out.at(i, j) -= rhs.at(i, j);
    return out;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& rhs) const {
    require_compatible(rhs);
    PolyMatrix out(size_, variable_count_);
    for (int i = 0; i < size_; ++i) {
        for (int k = 0; k < size_; ++k) {
            const Polynomial& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < size_; ++j) {
                const Polynomial& bkj = rhs.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

std::optional<Polynomial> PolyMatrix::scalar_identity() const {
    const Polynomial& pivot = at(0, 0);
    for (int i = 0; i < size_; ++i) {
        for (int j = 0; j < size_; ++j) {
            if (i == j) {
                if (at(i, i) != pivot) return std::nullopt;
            } else if (!at(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    }
    return pivot;
}

Polynomial PolyMatrix::determinant(int size_cap) const {
    if (size_ > size_cap)
        throw std::invalid_argument("determinant: size " + std::to_string(size_) +
                                    " exceeds the cap " + std::to_string(size_cap));
    // minor[s] = determinant of the submatrix on rows 0..k-1 and the column
    // subset s, k = popcount(s); expansion runs along the last of those rows.
    const std::size_t full = (std::size_t{1} << size_) - 1;
    std::vector<Polynomial> minor(full + 1, Polynomial(variable_count_));
    minor[0] = Polynomial::constant(variable_count_, 1);
    for (std::size_t s = 1; s <= full; ++s) {
        const int k = std::popcount(s);
        const int row = k - 1;
        Polynomial acc(variable_count_);
        bool positive = (row % 2) == 0;  // sign of the first column position
        for (int col = 0; col < size_; ++col) {
            const std::size_t bit = std::size_t{1} << col;
            if (!(s & bit)) continue;
            const Polynomial& entry = at(row, col);
            if (!entry.is_zero()) {
                if (positive)
                    acc += entry * minor[s ^ bit];
                else
                    acc -= entry * minor[s ^ bit];
            }
            positive = !positive;
        }
        minor[s] = std::move(acc);
    }
    return minor[full];
}

const PolyMatrix& BlockQuad::block(int index) const {
    switch (index) {
        case 1: return b1;
        case 2: return b2;
        case 3: return b3;
        case 4: return b4;
        default: throw std::out_of_range("block index must be 1..4");
    }
}

namespace {

void validate_quad(const BlockQuad& q) {
    if (q.half <= 0) throw std::invalid_argument("block size must be positive");
    for (int i = 1; i <= 4; ++i) {
        if (q.block(i).size() != q.half)
            throw std::invalid_argument("quadrant blocks must all be half-size");
        if (q.block(i).variable_count() != q.b1.variable_count())
            throw std::invalid_argument("quadrant blocks must share one variable count");
    }
}

}  // namespace

BlockQuad partition(const PolyMatrix& m) {
    if (m.size() % 2 != 0)
        throw std::invalid_argument("partition requires an even matrix size");
    const int n = m.size() / 2;
    BlockQuad q{n, PolyMatrix(n, m.variable_count()), PolyMatrix(n, m.variable_count()),
                PolyMatrix(n, m.variable_count()), PolyMatrix(n, m.variable_count())};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            q.b1.at(i, j) = m.at(i, j);
            q.b2.at(i, j) = m.at(i, j + n);
            q.b3.at(i, j) = m.at(i + n, j);
            q.b4.at(i, j) = m.at(i + n, j + n);
        }
    }
    return q;
}

PolyMatrix assemble(const BlockQuad& q) {
    validate_quad(q);
    const int n = q.half;
    PolyMatrix m(2 * n, q.b1.variable_count());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m.at(i, j) = q.b1.at(i, j);
            m.at(i, j + n) = q.b2.at(i, j);
            m.at(i + n, j) = q.b3.at(i, j);
            m.at(i + n, j + n) = q.b4.at(i, j);
        }
    }
    return m;
}

BlockCommuteResult blocks_commute(const BlockQuad& q) {
    validate_quad(q);
    for (int i = 1; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            PolyMatrix forward = q.block(i) * q.block(j);
            PolyMatrix backward = q.block(j) * q.block(i);
            if (!(forward == backward))
                return {false, i, j, forward - backward};
        }
    }
    return {true, 0, 0, std::nullopt};
}

}  // namespace mfkit
