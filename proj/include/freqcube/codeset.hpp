// Points, lines and code sets of the Hamming graph H(n,4), n <= 8.
// A code set is a bit vector over the 4^n cells, indexed lexicographically:
// idx(t1..tn) = sum_i t_i * 4^(n-i).  Bit of point p lives in word p/64 at
// bit position 63-(p%64), so comparing word vectors numerically compares the
// bit strings lexicographically and matches the hex serialization below.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace freqcube {

inline constexpr int kQ = 4;
inline constexpr int kMaxDim = 8;

constexpr uint64_t cell_count(int n) { return 1ull << (2 * n); }

constexpr int word_count(int n) {
    uint64_t cells = cell_count(n);
    return cells <= 64 ? 1 : static_cast<int>(cells / 64);
}

// Coordinates are 0-based here; coordinate c has stride 4^(n-1-c).
constexpr uint32_t coord_stride(int n, int c) { return 1u << (2 * (n - 1 - c)); }

constexpr int point_coord(int n, uint32_t p, int c) {
    return static_cast<int>((p >> (2 * (n - 1 - c))) & 3u);
}

constexpr uint32_t with_coord(int n, uint32_t p, int c, int v) {
    uint32_t stride = coord_stride(n, c);
    return (p & ~(3u * stride)) | static_cast<uint32_t>(v) * stride;
}

struct Point {
    int n = 0;
    std::array<uint8_t, kMaxDim> c{};

    uint32_t index() const {
        uint32_t idx = 0;
        for (int i = 0; i < n; i++) idx = idx * 4 + c[i];
        return idx;
    }
    static Point from_index(int n, uint32_t idx) {
        Point p;
        p.n = n;
        for (int i = n - 1; i >= 0; i--) {
            p.c[i] = idx & 3u;
            idx >>= 2;
        }
        return p;
    }
    bool operator==(const Point&) const = default;
};

class CodeSet {
public:
    CodeSet() = default;
    explicit CodeSet(int n);

    static CodeSet full(int n);
    static CodeSet of(int n, std::initializer_list<uint32_t> points);

    int dim() const { return n_; }
    uint64_t cells() const { return cell_count(n_); }

    bool test(uint32_t p) const { return (w_[p >> 6] >> (63 - (p & 63))) & 1u; }
    void set(uint32_t p) { w_[p >> 6] |= 1ull << (63 - (p & 63)); }
    void reset(uint32_t p) { w_[p >> 6] &= ~(1ull << (63 - (p & 63))); }
    void assign(uint32_t p, bool v) { v ? set(p) : reset(p); }
    void flip(uint32_t p) { w_[p >> 6] ^= 1ull << (63 - (p & 63)); }

    size_t size() const;  // number of points
    bool empty() const;

    CodeSet complement() const;
    CodeSet sym_diff(const CodeSet& o) const;
    CodeSet intersect(const CodeSet& o) const;
    bool subset_of(const CodeSet& o) const;

    // Layer in `direction` at `value`, as a set of dimension n-1.
    CodeSet layer(int direction, int value) const;

    std::span<const uint64_t> words() const { return w_; }
    std::span<uint64_t> words() { return w_; }

    std::string to_hex() const;
    static CodeSet from_hex(std::string_view hex);

    auto operator<=>(const CodeSet& o) const { return w_ <=> o.w_; }
    bool operator==(const CodeSet& o) const = default;

    std::vector<uint32_t> points() const;

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

struct CodeSetHash {
    size_t operator()(const CodeSet& s) const {
        uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(s.dim());
        for (uint64_t w : s.words()) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

// A line: the 4 cells differing only in `direction`; base has that coordinate 0.
struct Line {
    int direction = 0;   // 0-based
    uint32_t base = 0;

    uint32_t cell(int n, int v) const { return base + static_cast<uint32_t>(v) * coord_stride(n, direction); }
};

// All n*4^(n-1) lines, direction-major, bases in lexicographic order.
std::vector<Line> enumerate_lines(int n);

// Shared per-dimension line data; dims <= 3 also carry one-word cell masks.
struct LineTable {
    int n = 0;
    std::vector<Line> lines;
    std::vector<std::array<uint32_t, 4>> cells;  // cell indices per line
    std::vector<uint64_t> masks;                 // only for n <= 3
};
const LineTable& line_table(int n);

struct SetKind {
    bool is_unitrade = false;
    bool is_double_code = false;
    bool is_double_mds = false;
};

// Per-line diagnostics for classify_set(.., diag). Filled completely (no
// short-circuit) when requested.
struct LineCountStats {
    std::array<uint64_t, 5> histogram{};  // lines by |S cap L|
    int64_t first_odd_line = -1;
    int64_t first_non_double_line = -1;   // count not in {0,2}
    int64_t first_non_mds_line = -1;      // count != 2
};

SetKind classify_set(const CodeSet& s, LineCountStats* diag = nullptr);

// Classification families handled by the classifier and catalogs.  The
// double-code family here is closed under complement: it contains the sets
// whose lines all meet in {0,2} elements together with their complements
// (lines all meeting in {2,4}).
enum class Kind { double_mds, unitrade, double_code };

const char* kind_name(Kind k);
Kind kind_from_name(std::string_view name);

bool in_family(const CodeSet& s, Kind kind);

}  // namespace freqcube
