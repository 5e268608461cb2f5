#include "freqcube/testsets.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "freqcube/gf2.hpp"
#include "freqcube/parallel.hpp"

namespace freqcube {

namespace {

// Reduced row echelon solve of an affine system over `cols` variables; each
// row carries cols coefficient bits (CodeSet packing) plus one rhs bit.
struct AffineSolution {
    bool feasible = false;
    std::vector<uint64_t> particular;            // cols bits
    std::vector<std::vector<uint64_t>> kernel;   // basis of the homogeneous part
};

AffineSolution solve_affine(size_t cols, std::vector<std::vector<uint64_t>> rows,
                            std::vector<uint8_t> rhs) {
    size_t stride = (cols + 63) / 64;
    std::vector<int> pivot_of_row;
    std::vector<int> row_of_col(cols, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows.size(); c++) {
        size_t w = c >> 6;
        uint64_t bit = 1ull << (63 - (c & 63));
        size_t pr = rank;
        while (pr < rows.size() && !(rows[pr][w] & bit)) pr++;
        if (pr == rows.size()) continue;
        std::swap(rows[pr], rows[rank]);
        std::swap(rhs[pr], rhs[rank]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && (rows[r][w] & bit)) {
                for (size_t i = 0; i < stride; i++) rows[r][i] ^= rows[rank][i];
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_of_row.push_back(static_cast<int>(c));
        row_of_col[c] = static_cast<int>(rank);
        rank++;
    }
    AffineSolution sol;
    for (size_t r = rank; r < rows.size(); r++) {
        if (rhs[r]) return sol;  // 0 = 1
    }
    sol.feasible = true;
    sol.particular.assign(stride, 0);
    for (size_t r = 0; r < rank; r++) {
        if (rhs[r]) {
            size_t c = static_cast<size_t>(pivot_of_row[r]);
            sol.particular[c >> 6] |= 1ull << (63 - (c & 63));
        }
    }
    for (size_t f = 0; f < cols; f++) {
        if (row_of_col[f] >= 0) continue;
        std::vector<uint64_t> v(stride, 0);
        v[f >> 6] |= 1ull << (63 - (f & 63));
        for (size_t r = 0; r < rank; r++) {
            if ((rows[r][f >> 6] >> (63 - (f & 63))) & 1) {
                size_t c = static_cast<size_t>(pivot_of_row[r]);
                v[c >> 6] |= 1ull << (63 - (c & 63));
            }
        }
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

CodeSet codeset_from_words(int n, const std::vector<uint64_t>& words) {
    CodeSet s(n);
    std::copy(words.begin(), words.end(), s.words().begin());
    return s;
}

// Kernel of A restricted to the points of D, lifted back to code sets.
std::vector<CodeSet> restricted_kernel(const CodeSet& d) {
    int n = d.dim();
    std::vector<uint32_t> pts = d.points();
    size_t m = pts.size();
    const LineTable& t = line_table(n);
    std::vector<std::vector<uint64_t>> rows;
    std::vector<uint8_t> rhs;
    size_t stride = (m + 63) / 64;
    for (const auto& cs : t.cells) {
        std::vector<uint64_t> row(stride, 0);
        bool any = false;
        for (uint32_t c : cs) {
            auto it = std::lower_bound(pts.begin(), pts.end(), c);
            if (it != pts.end() && *it == c) {
                size_t k = static_cast<size_t>(it - pts.begin());
                row[k >> 6] |= 1ull << (63 - (k & 63));
                any = true;
            }
        }
        if (any) {
            rows.push_back(std::move(row));
            rhs.push_back(0);
        }
    }
    AffineSolution sol = solve_affine(m, std::move(rows), std::move(rhs));
    std::vector<CodeSet> out;
    out.reserve(sol.kernel.size());
    for (const auto& v : sol.kernel) {
        CodeSet u(n);
        for (size_t k = 0; k < m; k++) {
            if ((v[k >> 6] >> (63 - (k & 63))) & 1) u.set(pts[k]);
        }
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace

const char* provenance_tag(Provenance p) {
    switch (p) {
        case Provenance::trivial: return "trivial";
        case Provenance::derived: return "derived-from-D";
        case Provenance::product: return "product";
    }
    return "?";
}

TestingSet trivial_testing_set(int n) {
    TestingSet t;
    t.n = n;
    t.points = CodeSet(n);
    t.provenance = Provenance::trivial;
    uint64_t cells = cell_count(n);
    for (uint32_t p = 0; p < cells; p++) {
        bool ok = true;
        for (int i = 0; i < n; i++) {
            if (point_coord(n, p, i) == 3) {
                ok = false;
                break;
            }
        }
        if (ok) t.points.set(p);
    }
    return t;
}

int compute_kD(const CodeSet& d) {
    if (!in_family(d, Kind::unitrade)) throw std::invalid_argument("compute_kD requires a unitrade");
    if (d.empty()) return 0;
    std::vector<uint32_t> pts = d.points();
    size_t m = pts.size();
    Gf2Basis basis(m);
    const LineTable& t = line_table(d.dim());
    std::vector<uint64_t> row((m + 63) / 64);
    for (const auto& cs : t.cells) {
        std::fill(row.begin(), row.end(), 0);
        bool any = false;
        for (uint32_t c : cs) {
            auto it = std::lower_bound(pts.begin(), pts.end(), c);
            if (it != pts.end() && *it == c) {
                size_t k = static_cast<size_t>(it - pts.begin());
                row[k >> 6] |= 1ull << (63 - (k & 63));
                any = true;
            }
        }
        if (any) basis.add(row);
    }
    return static_cast<int>(m - basis.rank());
}

std::vector<CodeSet> unitrade_subsets(const CodeSet& d) {
    std::vector<CodeSet> basis = restricted_kernel(d);
    if (basis.size() > 20) throw std::invalid_argument("unitrade subspace too large to enumerate");
    std::vector<CodeSet> out;
    out.reserve(1ull << basis.size());
    out.push_back(CodeSet(d.dim()));
    for (const CodeSet& b : basis) {
        size_t sz = out.size();
        for (size_t i = 0; i < sz; i++) out.push_back(out[i].sym_diff(b));
    }
    return out;
}

std::vector<SpecialUnitrade> find_special_unitrades(const std::vector<CodeSet>& unitrade_reps,
                                                    const std::vector<CodeSet>& codes) {
    std::vector<uint8_t> special(unitrade_reps.size(), 0);
    std::vector<int> kd(unitrade_reps.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(unitrade_reps.size()); i++) {
        const CodeSet& d = unitrade_reps[static_cast<size_t>(i)];
        int k = compute_kD(d);
        kd[static_cast<size_t>(i)] = k;
        if (k < 2) continue;
        std::vector<CodeSet> subs = unitrade_subsets(d);
        bool ok = true;
        for (size_t u = 1; u < subs.size() && ok; u++) {  // skip the empty set
            for (const CodeSet& c : codes) {
                if (in_family(c.sym_diff(subs[u]), Kind::double_mds)) {
                    ok = false;
                    break;
                }
            }
        }
        special[static_cast<size_t>(i)] = ok ? 1 : 0;
    }
    std::vector<SpecialUnitrade> out;
    for (size_t i = 0; i < unitrade_reps.size(); i++) {
        if (special[i]) out.push_back({unitrade_reps[i], kd[i]});
    }
    return out;
}

TestingSet derive_testing_set(const CodeSet& d) {
    int n = d.dim();
    int kd = compute_kD(d);
    uint64_t cells = cell_count(n);
    size_t pow3 = 1;
    for (int i = 0; i < n; i++) pow3 *= 3;

    Gf2Basis basis(cells);
    std::vector<uint64_t> row(word_count(n));
    const LineTable& lt = line_table(n);
    for (const auto& cs : lt.cells) {
        std::fill(row.begin(), row.end(), 0);
        for (uint32_t c : cs) row[c >> 6] |= 1ull << (63 - (c & 63));
        basis.add(row);
    }
    if (basis.rank() != cells - pow3) throw std::runtime_error("rank of A is not 4^n - 3^n");

    TestingSet t;
    t.n = n;
    t.points = CodeSet(n);
    t.provenance = Provenance::derived;
    for (uint32_t p = 0; p < cells; p++) {
        if (d.test(p)) continue;
        std::fill(row.begin(), row.end(), 0);
        row[p >> 6] |= 1ull << (63 - (p & 63));
        if (basis.add(row)) t.points.set(p);
    }
    if (basis.rank() != cells - static_cast<size_t>(kd) ||
        t.points.size() != pow3 - static_cast<size_t>(kd)) {
        throw std::runtime_error("rank extension failed; input was not a unitrade");
    }
    return t;
}

bool verify_testing_set(const TestingSet& t, const std::vector<CodeSet>& codes) {
    std::vector<std::array<uint64_t, 4>> fps(codes.size());
    auto tw = t.points.words();
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(codes.size()); i++) {
        std::array<uint64_t, 4> fp{};
        auto cw = codes[static_cast<size_t>(i)].words();
        for (size_t k = 0; k < cw.size() && k < 4; k++) fp[k] = cw[k] & tw[k];
        fps[static_cast<size_t>(i)] = fp;
    }
    std::sort(fps.begin(), fps.end());
    return std::adjacent_find(fps.begin(), fps.end()) == fps.end();
}

std::optional<CodeSet> reconstruct(const TestingSet& t, const CodeSet& values) {
    int n = t.n;
    if (values.dim() != n || !values.subset_of(t.points)) {
        throw std::invalid_argument("values must be a subset of the testing set");
    }
    uint64_t cells = cell_count(n);
    std::vector<std::vector<uint64_t>> rows;
    std::vector<uint8_t> rhs;
    const LineTable& lt = line_table(n);
    for (const auto& cs : lt.cells) {
        std::vector<uint64_t> row(word_count(n), 0);
        for (uint32_t c : cs) row[c >> 6] |= 1ull << (63 - (c & 63));
        rows.push_back(std::move(row));
        rhs.push_back(0);
    }
    for (uint32_t p : t.points.points()) {
        std::vector<uint64_t> row(word_count(n), 0);
        row[p >> 6] |= 1ull << (63 - (p & 63));
        rows.push_back(std::move(row));
        rhs.push_back(values.test(p) ? 1 : 0);
    }
    AffineSolution sol = solve_affine(cells, std::move(rows), std::move(rhs));
    if (!sol.feasible) return std::nullopt;
    if (sol.kernel.size() > 24) throw std::runtime_error("solution space too large; not a testing set");
    std::optional<CodeSet> found;
    size_t combos = 1ull << sol.kernel.size();
    for (size_t mask = 0; mask < combos; mask++) {
        CodeSet x = codeset_from_words(n, sol.particular);
        for (size_t b = 0; b < sol.kernel.size(); b++) {
            if ((mask >> b) & 1) x = x.sym_diff(codeset_from_words(n, sol.kernel[b]));
        }
        if (in_family(x, Kind::double_mds)) {
            if (found) throw std::runtime_error("two codes share the testing-set values");
            found = std::move(x);
        }
    }
    return found;
}

bool propagate_line_reconstruction(const TestingSet& t, const CodeSet& values, CodeSet& out) {
    int n = t.n;
    uint64_t cells = cell_count(n);
    std::vector<int8_t> val(cells, -1);
    for (uint32_t p = 0; p < cells; p++) {
        if (t.points.test(p)) val[p] = values.test(p) ? 1 : 0;
    }
    const LineTable& lt = line_table(n);
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& cs : lt.cells) {
            int unknown = -1, sum = 0, missing = 0;
            for (int v = 0; v < 4; v++) {
                if (val[cs[v]] < 0) {
                    missing++;
                    unknown = v;
                } else {
                    sum += val[cs[v]];
                }
            }
            if (missing == 1) {
                int rest = 2 - sum;
                if (rest < 0 || rest > 1) return false;
                val[cs[static_cast<size_t>(unknown)]] = static_cast<int8_t>(rest);
                progress = true;
            }
        }
    }
    out = CodeSet(n);
    for (uint32_t p = 0; p < cells; p++) {
        if (val[p] < 0) return false;
        if (val[p] == 1) out.set(p);
    }
    return true;
}

TestingSet product_testing_set(const TestingSet& t, int l) {
    if (t.n != 3) throw std::invalid_argument("product testing sets start from dimension 3");
    if (l < 1 || 3 * l > kMaxDim) throw std::invalid_argument("product exponent out of range");
    TestingSet out;
    out.n = 3 * l;
    out.points = CodeSet(out.n);
    out.provenance = l == 1 ? t.provenance : Provenance::product;
    std::vector<uint32_t> base = t.points.points();
    std::vector<size_t> pick(static_cast<size_t>(l), 0);
    while (true) {
        uint64_t idx = 0;
        for (int i = 0; i < l; i++) idx = (idx << 6) | base[pick[static_cast<size_t>(i)]];
        out.points.set(static_cast<uint32_t>(idx));
        int i = l - 1;
        while (i >= 0 && ++pick[static_cast<size_t>(i)] == base.size()) pick[static_cast<size_t>(i--)] = 0;
        if (i < 0) break;
    }
    return out;
}

UpperBound upper_bound(int n) {
    if (n < 3) throw std::invalid_argument("upper bound holds for n >= 3");
    int l = n / 3, r = n % 3;
    UpperBound b;
    double log_size = l * std::log(25.0) + r * std::log(3.0);
    b.bound_bits = std::exp(log_size);
    b.alpha = std::exp(log_size / n);
    return b;
}

std::string testing_set_to_string(const TestingSet& t) {
    std::ostringstream os;
    os << "n=" << t.n << " size=" << t.points.size() << " provenance=" << provenance_tag(t.provenance)
       << "\n";
    for (uint32_t p : t.points.points()) {
        for (int i = 0; i < t.n; i++) {
            if (i) os << ' ';
            os << point_coord(t.n, p, i);
        }
        os << "\n";
    }
    return os.str();
}

TestingSet testing_set_from_string(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string header;
    if (!std::getline(is, header)) throw std::runtime_error("empty testing-set text");
    TestingSet t;
    size_t expect = 0;
    {
        std::istringstream hs(header);
        std::string field;
        while (hs >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos) throw std::runtime_error("bad testing-set header");
            std::string key = field.substr(0, eq), val = field.substr(eq + 1);
            if (key == "n") t.n = std::stoi(val);
            else if (key == "size") expect = static_cast<size_t>(std::stoull(val));
            else if (key == "provenance") {
                if (val == "trivial") t.provenance = Provenance::trivial;
                else if (val == "derived-from-D") t.provenance = Provenance::derived;
                else if (val == "product") t.provenance = Provenance::product;
                else throw std::runtime_error("bad provenance tag " + val);
            }
        }
    }
    if (t.n < 1 || t.n > kMaxDim) throw std::runtime_error("bad testing-set dimension");
    t.points = CodeSet(t.n);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Point p;
        p.n = t.n;
        for (int i = 0; i < t.n; i++) {
            int v;
            if (!(ls >> v) || v < 0 || v > 3) throw std::runtime_error("bad point line: " + line);
            p.c[i] = static_cast<uint8_t>(v);
        }
        t.points.set(p.index());
    }
    if (t.points.size() != expect) throw std::runtime_error("testing-set size mismatch");
    return t;
}

}  // namespace freqcube
