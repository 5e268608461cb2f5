#include "freqcube/codeset.hpp"

#include <bit>
#include <mutex>
#include <stdexcept>

namespace freqcube {

namespace {

void check_dim(int n) {
    if (n < 1 || n > kMaxDim) {
        throw std::invalid_argument("dimension out of range [1," + std::to_string(kMaxDim) +
                                    "]: " + std::to_string(n));
    }
}

// Bits beyond the 4^n cells in the (single) word stay zero for n < 3.
uint64_t tail_mask(int n) {
    uint64_t cells = cell_count(n);
    return cells >= 64 ? ~0ull : ~0ull << (64 - cells);
}

}  // namespace

CodeSet::CodeSet(int n) : n_(n) {
    check_dim(n);
    w_.assign(word_count(n), 0);
}

CodeSet CodeSet::full(int n) {
    CodeSet s(n);
    for (auto& w : s.w_) w = ~0ull;
    s.w_[0] &= ~0ull;  // all words full
    s.w_.back() &= tail_mask(n);
    return s;
}

CodeSet CodeSet::of(int n, std::initializer_list<uint32_t> points) {
    CodeSet s(n);
    for (uint32_t p : points) s.set(p);
    return s;
}

size_t CodeSet::size() const {
    size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

bool CodeSet::empty() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

CodeSet CodeSet::complement() const {
    CodeSet r(n_);
    for (size_t i = 0; i < w_.size(); i++) r.w_[i] = ~w_[i];
    r.w_.back() &= tail_mask(n_);
    return r;
}

CodeSet CodeSet::sym_diff(const CodeSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("sym_diff: dimension mismatch");
    CodeSet r(n_);
    for (size_t i = 0; i < w_.size(); i++) r.w_[i] = w_[i] ^ o.w_[i];
    return r;
}

CodeSet CodeSet::intersect(const CodeSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("intersect: dimension mismatch");
    CodeSet r(n_);
    for (size_t i = 0; i < w_.size(); i++) r.w_[i] = w_[i] & o.w_[i];
    return r;
}

bool CodeSet::subset_of(const CodeSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("subset_of: dimension mismatch");
    for (size_t i = 0; i < w_.size(); i++)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

CodeSet CodeSet::layer(int direction, int value) const {
    if (n_ < 2) throw std::invalid_argument("layer: dimension must be >= 2");
    if (direction < 0 || direction >= n_ || value < 0 || value > 3) {
        throw std::invalid_argument("layer: bad direction or value");
    }
    CodeSet r(n_ - 1);
    uint32_t stride = coord_stride(n_, direction);
    uint64_t sub = cell_count(n_ - 1);
    for (uint32_t q = 0; q < sub; q++) {
        uint32_t hi = q / stride, lo = q % stride;
        uint32_t p = (hi * 4 + static_cast<uint32_t>(value)) * stride + lo;
        if (test(p)) r.set(q);
    }
    return r;
}

std::vector<uint32_t> CodeSet::points() const {
    std::vector<uint32_t> out;
    out.reserve(size());
    for (size_t wi = 0; wi < w_.size(); wi++) {
        uint64_t w = w_[wi];
        while (w) {
            int b = std::countl_zero(w);
            out.push_back(static_cast<uint32_t>(wi * 64 + b));
            w &= ~(1ull << (63 - b));
        }
    }
    return out;
}

std::string CodeSet::to_hex() const {
    static const char* digits = "0123456789abcdef";
    size_t ndigits = cell_count(n_) / 4;
    std::string out;
    out.reserve(ndigits);
    for (size_t d = 0; d < ndigits; d++) {
        uint64_t w = w_[d / 16];
        out.push_back(digits[(w >> (60 - 4 * (d % 16))) & 0xf]);
    }
    return out;
}

CodeSet CodeSet::from_hex(std::string_view hex) {
    int n = -1;
    for (int k = 1; k <= kMaxDim; k++) {
        if (hex.size() == cell_count(k) / 4) {
            n = k;
            break;
        }
    }
    if (n < 0) throw std::runtime_error("bad hex length " + std::to_string(hex.size()));
    CodeSet s(n);
    for (size_t d = 0; d < hex.size(); d++) {
        char c = hex[d];
        uint64_t v;
        if (c >= '0' && c <= '9') v = static_cast<uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f') v = static_cast<uint64_t>(c - 'a' + 10);
        else throw std::runtime_error(std::string("bad hex digit '") + c + "'");
        s.w_[d / 16] |= v << (60 - 4 * (d % 16));
    }
    return s;
}

std::vector<Line> enumerate_lines(int n) {
    check_dim(n);
    std::vector<Line> out;
    out.reserve(static_cast<size_t>(n) << (2 * (n - 1)));
    uint64_t cells = cell_count(n);
    for (int d = 0; d < n; d++) {
        for (uint32_t p = 0; p < cells; p++) {
            if (point_coord(n, p, d) == 0) out.push_back({d, p});
        }
    }
    return out;
}

const LineTable& line_table(int n) {
    check_dim(n);
    static LineTable tables[kMaxDim + 1];
    static std::once_flag flags[kMaxDim + 1];
    std::call_once(flags[n], [n] {
        LineTable& t = tables[n];
        t.n = n;
        t.lines = enumerate_lines(n);
        t.cells.reserve(t.lines.size());
        for (const Line& ln : t.lines) {
            std::array<uint32_t, 4> cs;
            for (int v = 0; v < 4; v++) cs[v] = ln.cell(n, v);
            t.cells.push_back(cs);
        }
        if (n <= 3) {
            t.masks.reserve(t.lines.size());
            for (const auto& cs : t.cells) {
                uint64_t m = 0;
                for (uint32_t c : cs) m |= 1ull << (63 - c);
                t.masks.push_back(m);
            }
        }
    });
    return tables[n];
}

SetKind classify_set(const CodeSet& s, LineCountStats* diag) {
    const LineTable& t = line_table(s.dim());
    SetKind k{true, true, true};
    if (s.dim() <= 3) {
        uint64_t w = s.words()[0];
        for (size_t i = 0; i < t.masks.size(); i++) {
            int c = std::popcount(w & t.masks[i]);
            if (c != 2) k.is_double_mds = false;
            if (c != 0 && c != 2) k.is_double_code = false;
            if (c & 1) k.is_unitrade = false;
            if (diag) {
                diag->histogram[c]++;
                if ((c & 1) && diag->first_odd_line < 0) diag->first_odd_line = static_cast<int64_t>(i);
                if (c != 0 && c != 2 && diag->first_non_double_line < 0)
                    diag->first_non_double_line = static_cast<int64_t>(i);
                if (c != 2 && diag->first_non_mds_line < 0) diag->first_non_mds_line = static_cast<int64_t>(i);
            } else if (!k.is_unitrade) {
                break;
            }
        }
        return k;
    }
    for (size_t i = 0; i < t.cells.size(); i++) {
        const auto& cs = t.cells[i];
        int c = s.test(cs[0]) + s.test(cs[1]) + s.test(cs[2]) + s.test(cs[3]);
        if (c != 2) k.is_double_mds = false;
        if (c != 0 && c != 2) k.is_double_code = false;
        if (c & 1) k.is_unitrade = false;
        if (diag) {
            diag->histogram[c]++;
            if ((c & 1) && diag->first_odd_line < 0) diag->first_odd_line = static_cast<int64_t>(i);
            if (c != 0 && c != 2 && diag->first_non_double_line < 0)
                diag->first_non_double_line = static_cast<int64_t>(i);
            if (c != 2 && diag->first_non_mds_line < 0) diag->first_non_mds_line = static_cast<int64_t>(i);
        } else if (!k.is_unitrade) {
            break;
        }
    }
    return k;
}

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::double_mds: return "dmds";
        case Kind::unitrade: return "unitrade";
        case Kind::double_code: return "doublecode";
    }
    return "?";
}

Kind kind_from_name(std::string_view name) {
    if (name == "dmds") return Kind::double_mds;
    if (name == "unitrade") return Kind::unitrade;
    if (name == "doublecode") return Kind::double_code;
    throw std::invalid_argument("unknown kind: " + std::string(name));
}

bool in_family(const CodeSet& s, Kind kind) {
    const LineTable& t = line_table(s.dim());
    if (s.dim() <= 3) {
        uint64_t w = s.words()[0];
        switch (kind) {
            case Kind::double_mds:
                for (uint64_t m : t.masks)
                    if (std::popcount(w & m) != 2) return false;
                return true;
            case Kind::unitrade:
                for (uint64_t m : t.masks)
                    if (std::popcount(w & m) & 1) return false;
                return true;
            case Kind::double_code: {
                bool low = true, high = true;
                for (uint64_t m : t.masks) {
                    int c = std::popcount(w & m);
                    if (c & 1) return false;
                    if (c == 4) low = false;
                    if (c == 0) high = false;
                    if (!low && !high) return false;
                }
                return true;
            }
        }
    }
    bool low = true, high = true;
    for (const auto& cs : t.cells) {
        int c = s.test(cs[0]) + s.test(cs[1]) + s.test(cs[2]) + s.test(cs[3]);
        switch (kind) {
            case Kind::double_mds:
                if (c != 2) return false;
                break;
            case Kind::unitrade:
                if (c & 1) return false;
                break;
            case Kind::double_code:
                if (c & 1) return false;
                if (c == 4) low = false;
                if (c == 0) high = false;
                if (!low && !high) return false;
                break;
        }
    }
    return true;
}

}  // namespace freqcube
