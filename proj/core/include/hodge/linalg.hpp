#pragma once

#include "hodge/rational.hpp"

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace hodge {

/// Sparse vector as (column, value) pairs sorted by column with no zero values.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

/// Incrementally built row echelon basis of a subspace of Q^ncols.
///
/// Rows are kept with primitive integer entries and a positive leading
/// coefficient; elimination is fraction-free (row <- p*row - a*pivot_row,
/// followed by removal of the content). The pivot of a row is its leftmost
/// nonzero column, so the non-pivot columns form the lexicographically first
/// complement of the subspace and normal forms are canonical.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t ncols);

    std::size_t cols() const noexcept { return ncols_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool is_full() const noexcept { return rows_.size() == ncols_; }
    bool is_pivot(std::size_t col) const { return pivot_row_.at(col) >= 0; }

    /// Adds a vector to the span. Returns true when the rank grew.
    bool insert(std::span<const std::pair<std::size_t, Rational>> v);

    /// Normal form of v modulo the span: the unique vector congruent to v
    /// that is supported on non-pivot columns.
    SparseVector reduce(std::span<const std::pair<std::size_t, Rational>> v) const;

    bool contains(std::span<const std::pair<std::size_t, Rational>> v) const {
        return reduce(v).empty();
    }

    /// The stored rows (primitive integer entries) as rational vectors.
    std::vector<SparseVector> basis_vectors() const;

    /// Non-pivot columns in increasing order.
    std::vector<std::size_t> non_pivots() const;

private:
    struct Row {
        std::vector<std::pair<std::size_t, Integer>> entries;  // entries.front() is the pivot
    };

    std::size_t ncols_;
    std::vector<Row> rows_;
    std::vector<long> pivot_row_;
};

/// Dense rational matrix, row major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;
    bool operator==(const RationalMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Rank by Bareiss fraction-free elimination. Each row is first scaled to
/// integers; every subsequent division is exact.
std::size_t bareiss_rank(const RationalMatrix& m);

}  // namespace hodge
