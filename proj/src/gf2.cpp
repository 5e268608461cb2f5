#include "freqcube/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace freqcube {

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), w_(rows * stride_, 0) {}

std::vector<uint64_t> Gf2Matrix::mul(std::span<const uint64_t> x) const {
    if (x.size() != stride_) throw std::invalid_argument("mul: bad vector width");
    std::vector<uint64_t> out((rows_ + 63) / 64, 0);
    for (size_t r = 0; r < rows_; r++) {
        uint64_t acc = 0;
        const uint64_t* rw = row(r);
        for (size_t i = 0; i < stride_; i++) acc ^= rw[i] & x[i];
        if (std::popcount(acc) & 1) out[r >> 6] |= 1ull << (63 - (r & 63));
    }
    return out;
}

size_t gf2_rank(const Gf2Matrix& m) {
    Gf2Basis basis(m.cols());
    std::vector<uint64_t> row(m.stride());
    for (size_t r = 0; r < m.rows(); r++) {
        std::copy(m.row(r), m.row(r) + m.stride(), row.begin());
        basis.add(row);
    }
    return basis.rank();
}

Gf2Basis::Gf2Basis(size_t cols) : cols_(cols), stride_((cols + 63) / 64) {}

void Gf2Basis::reduce(std::span<uint64_t> row) const {
    for (size_t k = 0; k < rows_.size(); k++) {
        int p = pivot_[k];
        if ((row[p >> 6] >> (63 - (p & 63))) & 1) {
            const auto& b = rows_[k];
            for (size_t i = 0; i < stride_; i++) row[i] ^= b[i];
        }
    }
}

bool Gf2Basis::add(std::span<const uint64_t> row) {
    std::vector<uint64_t> r(row.begin(), row.end());
    reduce(r);
    int p = -1;
    for (size_t i = 0; i < stride_; i++) {
        if (r[i]) {
            p = static_cast<int>(i * 64 + std::countl_zero(r[i]));
            break;
        }
    }
    if (p < 0) return false;
    rows_.push_back(std::move(r));
    pivot_.push_back(p);
    return true;
}

Gf2Matrix build_A(int n) {
    const LineTable& t = line_table(n);
    Gf2Matrix a(t.lines.size(), cell_count(n));
    for (size_t r = 0; r < t.cells.size(); r++) {
        for (uint32_t c : t.cells[r]) a.set(r, c);
    }
    return a;
}

Gf2Matrix build_A_kronecker(int n) {
    if (n < 1 || n > 4) throw std::invalid_argument("kronecker oracle supports n <= 4");
    size_t cells = cell_count(n);
    Gf2Matrix a(static_cast<size_t>(n) * (cells / 4), cells);
    size_t row = 0;
    for (int i = 1; i <= n; i++) {
        size_t left = 1ull << (2 * (i - 1));   // 4^(i-1)
        size_t right = 1ull << (2 * (n - i));  // 4^(n-i)
        for (size_t p = 0; p < left; p++) {
            for (size_t s = 0; s < right; s++) {
                for (size_t t = 0; t < 4; t++) a.set(row, (p * 4 + t) * right + s);
                row++;
            }
        }
    }
    return a;
}

CodeSet basis_unitrade(int n, const Point& a) {
    if (a.n != n) throw std::invalid_argument("basis_unitrade: dimension mismatch");
    for (int i = 0; i < n; i++) {
        if (a.c[i] < 1 || a.c[i] > 3) throw std::invalid_argument("basis point must lie in {1,2,3}^n");
    }
    CodeSet d(n);
    for (uint32_t mask = 0; mask < (1u << n); mask++) {
        Point p = a;
        for (int i = 0; i < n; i++) {
            if ((mask >> i) & 1) p.c[i] = 0;
        }
        d.set(p.index());
    }
    return d;
}

std::vector<CodeSet> kernel_basis(int n) {
    if (n < 1 || n > 6) throw std::invalid_argument("kernel_basis: n out of range [1,6]");
    std::vector<CodeSet> out;
    size_t total = 1;
    for (int i = 0; i < n; i++) total *= 3;
    out.reserve(total);
    Point a;
    a.n = n;
    for (int i = 0; i < n; i++) a.c[i] = 1;
    for (size_t k = 0; k < total; k++) {
        out.push_back(basis_unitrade(n, a));
        for (int i = n - 1; i >= 0; i--) {  // next a in lexicographic order
            if (a.c[i] < 3) {
                a.c[i]++;
                break;
            }
            a.c[i] = 1;
        }
    }
    return out;
}

CodeSet unitrade_core(const CodeSet& u) {
    int n = u.dim();
    CodeSet core(n);
    for (uint32_t p : u.points()) {
        bool nonzero = true;
        for (int i = 0; i < n; i++) {
            if (point_coord(n, p, i) == 0) {
                nonzero = false;
                break;
            }
        }
        if (nonzero) core.set(p);
    }
    return core;
}

CodeSet unitrade_from_core(int n, const CodeSet& core) {
    if (core.dim() != n) throw std::invalid_argument("core dimension mismatch");
    CodeSet u(n);
    for (uint32_t p : core.points()) {
        Point a = Point::from_index(n, p);
        for (int i = 0; i < n; i++) {
            if (a.c[i] == 0) throw std::invalid_argument("core contains a point with a zero coordinate");
        }
        u = u.sym_diff(basis_unitrade(n, a));
    }
    return u;
}

std::vector<uint64_t> line_parities(const CodeSet& s) {
    Gf2Matrix a = build_A(s.dim());
    return a.mul(s.words());
}

bool unitrade_by_matrix(const CodeSet& s) {
    for (uint64_t w : line_parities(s)) {
        if (w) return false;
    }
    return true;
}

}  // namespace freqcube
