// GF(2) machinery for unitrades: the line constraint matrix A (one row per
// line, ones at the four cells), rank via word-level elimination, the kernel
// basis D_a, and the bijection between unitrades and their cores in {1,2,3}^n.

#pragma once

#include <cstdint>
#include <vector>

#include "freqcube/codeset.hpp"

namespace freqcube {

class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const {
        return (w_[r * stride_ + (c >> 6)] >> (63 - (c & 63))) & 1u;
    }
    void set(size_t r, size_t c) { w_[r * stride_ + (c >> 6)] |= 1ull << (63 - (c & 63)); }

    const uint64_t* row(size_t r) const { return &w_[r * stride_]; }
    uint64_t* row(size_t r) { return &w_[r * stride_]; }
    size_t stride() const { return stride_; }

    // multiply by a column bit vector (cols bits, same packing as CodeSet)
    std::vector<uint64_t> mul(std::span<const uint64_t> x) const;

private:
    size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> w_;
};

// Rank by row reduction on a private copy.
size_t gf2_rank(const Gf2Matrix& m);

// Incremental echelon basis over `cols` bit columns; rows are word vectors.
class Gf2Basis {
public:
    explicit Gf2Basis(size_t cols);
    // Returns true (and keeps the reduced row) when the row extends the span.
    bool add(std::span<const uint64_t> row);
    size_t rank() const { return rows_.size(); }
    // Reduces a copy of `row` against the basis (in place).
    void reduce(std::span<uint64_t> row) const;
    const std::vector<std::vector<uint64_t>>& rows() const { return rows_; }

private:
    size_t cols_, stride_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<int> pivot_;  // pivot bit per stored row
};

// The n*4^(n-1) x 4^n line incidence matrix; row (direction, base) has ones at
// the four cells of that line, rows ordered as enumerate_lines.
Gf2Matrix build_A(int n);

// Same matrix from the Kronecker-product definition
// A_i = I_{4^(i-1)} (x) (1,1,1,1) (x) I_{4^(n-i)}; test oracle for build_A.
Gf2Matrix build_A_kronecker(int n);

// The 3^n independent unitrades D_a, a in {1,2,3}^n: all points obtained from
// a by zeroing some coordinates.  Ordered by a lexicographically.
std::vector<CodeSet> kernel_basis(int n);

CodeSet basis_unitrade(int n, const Point& a);

// The unique unitrade whose intersection with {1,2,3}^n equals core.
CodeSet unitrade_from_core(int n, const CodeSet& core);

// Intersection with {1,2,3}^n.
CodeSet unitrade_core(const CodeSet& u);

// A * X_S over GF(2); zero iff S is a unitrade.
std::vector<uint64_t> line_parities(const CodeSet& s);
bool unitrade_by_matrix(const CodeSet& s);

}  // namespace freqcube
