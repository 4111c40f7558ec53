#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gradsw {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Determinant by fraction-free elimination.
    BigInt determinant() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

/// U * M * V = diag, with U and V unimodular. The cokernel Z^rows / M Z^cols
/// is the direct sum of Z/d_i for the nonzero diagonal entries d_i (including
/// trivial d_i = 1) and Z^free_rank.
struct SNFResult {
    std::vector<BigInt> invariant_factors;
    std::size_t rank = 0;
    std::size_t free_rank = 0;
    IntMatrix U, V, diagonal;

    /// Invariant factors greater than one.
    std::vector<BigInt> torsion() const;
};

/// Pivoting by smallest nonzero absolute value.
SNFResult smith_normal_form(const IntMatrix& m);

/// Incrementally maintained echelon basis of a sublattice of Z^n. Keeps at
/// most n generators regardless of how many vectors are inserted.
class LatticeBasis {
public:
    explicit LatticeBasis(std::size_t n) : n_(n), rows_(n) {}
    void insert(std::vector<BigInt> v);
    std::size_t ambient() const noexcept { return n_; }
    /// Generators as columns of an n x k matrix.
    IntMatrix as_columns() const;

private:
    std::size_t n_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[c] has pivot at column c, or is empty
};

}  // namespace gradsw
