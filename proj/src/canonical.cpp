#include "freqcube/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstring>
#include <stdexcept>
#include <unordered_set>

namespace freqcube {

namespace {

// nib4_tbl[x] packs bits 15,11,7,3 of x into a nibble (bit 15 -> nibble MSB).
const std::array<uint8_t, 65536>& nib4_tbl() {
    static const std::array<uint8_t, 65536> tbl = [] {
        std::array<uint8_t, 65536> t{};
        for (uint32_t x = 0; x < 65536; x++) {
            t[x] = static_cast<uint8_t>(((x >> 15) & 1) << 3 | ((x >> 11) & 1) << 2 |
                                        ((x >> 7) & 1) << 1 | ((x >> 3) & 1));
        }
        return t;
    }();
    return tbl;
}

// nib_img[tau][nib]: image of a 4-bit layer stack under symbol permutation tau,
// where output value b takes the bit of input value tau(b).
const std::array<std::array<uint8_t, 16>, 24>& nib_img_tbl();

// Layer extraction, sets packed in the top 4^d bits of a word.
inline uint64_t extract2(uint64_t w, int j, int v) {
    if (j == 0) return (w << (4 * v)) & 0xF000000000000000ull;
    uint64_t y = (w << v) & 0x8888000000000000ull;
    return static_cast<uint64_t>(nib4_tbl()[(y >> 48) & 0xFFFF]) << 60;
}

inline uint64_t extract3(uint64_t w, int j, int v) {
    if (j == 0) return (w << (16 * v)) & 0xFFFF000000000000ull;
    if (j == 1) {
        uint64_t out = 0;
        for (int t0 = 0; t0 < 4; t0++) {
            uint64_t nib = (w >> (60 - 16 * t0 - 4 * v)) & 0xF;
            out |= nib << (60 - 4 * t0);
        }
        return out;
    }
    uint64_t y = (w << v) & 0x8888888888888888ull;
    uint64_t out = 0;
    for (int t0 = 0; t0 < 4; t0++) {
        uint64_t nib = nib4_tbl()[(y >> (48 - 16 * t0)) & 0xFFFF];
        out |= nib << (60 - 4 * t0);
    }
    return out;
}

inline uint64_t extract_single(uint64_t w, int dim, int j, int v) {
    return dim == 3 ? extract3(w, j, v) : extract2(w, j, v);
}

inline uint64_t extract4(const uint64_t* w4, int j, int v) {
    if (j == 0) return w4[v];
    uint64_t out = 0;
    for (int t0 = 0; t0 < 4; t0++) out |= extract3(w4[t0], j - 1, v) >> (16 * t0);
    return out;
}

uint64_t dim1_canon_word(int pc) {
    static const uint64_t nib[5] = {0x0, 0x1, 0x3, 0x7, 0xF};
    return nib[pc] << 60;
}

struct BitWriter {
    uint64_t* w;
    int cursor = 0;
    void append_bits(uint64_t bits, int len) {
        // bits right-aligned in `len` low bits, emitted MSB-first
        while (len > 0) {
            int wi = cursor >> 6, off = cursor & 63;
            int room = 64 - off;
            int take = len < room ? len : room;
            uint64_t chunk = (bits >> (len - take)) & (take == 64 ? ~0ull : ((1ull << take) - 1));
            w[wi] |= chunk << (room - take);
            cursor += take;
            len -= take;
        }
    }
};

class MinImageSearch {
public:
    MinImageSearch(int d0, int m0, const SearchOptions& opt)
        : d0_(d0), m0_(m0), opt_(opt) {
        if (d0 < 1 || d0 > 4) throw std::invalid_argument("canonical search supports dims 1..4");
        int out_bits = m0 << (2 * d0);
        if (out_bits > 256) throw std::invalid_argument("canonical search tuple too large");
        out_words_ = (out_bits + 63) / 64;
        int max_sets = m0 << (2 * (d0 - 1));
        for (auto& lv : lv_) {
            lv.sets.resize(static_cast<size_t>(max_sets));
            lv.pc.resize(static_cast<size_t>(max_sets));
            for (auto& lj : lv.layers) lj.resize(static_cast<size_t>(max_sets) * 4);
            for (auto& lj : lv.lpc) lj.resize(static_cast<size_t>(max_sets) * 4);
        }
    }

    // May be called repeatedly; best/stabilizer state accumulates across runs.
    void run(const std::vector<const uint64_t*>& tuple) {
        assert(static_cast<int>(tuple.size()) == m0_);
        if (d0_ == 4) {
            roots_ = tuple;
            descend4();
        } else {
            for (int s = 0; s < m0_; s++) {
                lv_[0].sets[s] = tuple[s][0];
                lv_[0].pc[s] = static_cast<uint16_t>(std::popcount(tuple[s][0]));
            }
            rem_init(d0_);
            descend(0, d0_, m0_);
        }
    }

    bool have_best = false;
    std::array<uint64_t, 4> best{};
    int out_words() const { return out_words_; }
    uint64_t stab = 0;
    std::vector<CoordPerm> rhos;

private:
    struct Level {
        std::vector<uint64_t> sets;
        std::vector<uint16_t> pc;
        std::array<std::vector<uint64_t>, 4> layers;  // per candidate j
        std::array<std::vector<uint16_t>, 4> lpc;
    };

    int d0_, m0_, out_words_;
    SearchOptions opt_;
    CanonCache local_;
    std::vector<const uint64_t*> roots_;
    Level lv_[4];
    std::array<std::array<uint8_t, kMaxDim>, 5> rem_{};  // remaining original coords per depth
    std::array<uint8_t, 5> remn_{};
    CoordPerm rho_{};  // rho[output coord] = original input coord

    void rem_init(int d) {
        for (int i = 0; i < d; i++) rem_[0][i] = static_cast<uint8_t>(i);
        remn_[0] = static_cast<uint8_t>(d);
    }

    struct Child {
        uint8_t j, tau;
        uint32_t key_off;
    };

    // depth-0 handling for 4-word sets; afterwards everything is single-word
    void descend4() {
        rem_init(4);
        const auto& perms = all_symbol_perms();
        int m = m0_;
        // layers for each j into lv_[0].layers
        std::array<std::array<uint16_t, 16>, 4> lpc;  // [j][s*4+v], m<=? m0<=1 for dim4
        for (int j = 0; j < 4; j++) {
            for (int s = 0; s < m; s++) {
                for (int v = 0; v < 4; v++) {
                    uint64_t L = extract4(roots_[s], j, v);
                    lv_[0].layers[j][static_cast<size_t>(s) * 4 + v] = L;
                    lpc[j][s * 4 + v] = static_cast<uint16_t>(std::popcount(L));
                }
            }
        }
        std::vector<Child> children;
        std::vector<uint8_t> keys;
        int klen = 4 * m;
        for (int j = 0; j < (opt_.isotopy_only ? 1 : 4); j++) {
            for (uint8_t tau = 0; tau < 24; tau++) {
                Child c{static_cast<uint8_t>(j), tau, static_cast<uint32_t>(keys.size())};
                for (int s = 0; s < m; s++)
                    for (int b = 0; b < 4; b++)
                        keys.push_back(static_cast<uint8_t>(lpc[j][s * 4 + perms[tau][b]]));
                children.push_back(c);
            }
        }
        sort_children(children, keys, klen);
        for (const Child& c : children) {
            int cmp = cmp_popcount_opt(&keys[c.key_off], klen, 3);
            if (cmp > 0) break;
            if (cmp == 0 && !opt_.count_stabilizers && have_best) continue;
            int mm = m * 4;
            for (int s = 0; s < m; s++) {
                for (int b = 0; b < 4; b++) {
                    uint64_t L = lv_[0].layers[c.j][static_cast<size_t>(s) * 4 + all_symbol_perms()[c.tau][b]];
                    lv_[1].sets[static_cast<size_t>(s) * 4 + b] = L;
                    lv_[1].pc[static_cast<size_t>(s) * 4 + b] = static_cast<uint16_t>(std::popcount(L));
                }
            }
            if (!solo_ok(lv_[1].sets.data(), mm, 3)) continue;
            consume_coord(0, c.j);
            descend(1, 3, mm);
        }
    }

    void descend(int depth, int dim, int m) {
        if (dim == 1) {
            finalize(depth, m);
            return;
        }
        Level& lv = lv_[depth];
        const auto& perms = all_symbol_perms();
        int numj = opt_.isotopy_only ? 1 : dim;
        for (int j = 0; j < numj; j++) {
            for (int s = 0; s < m; s++) {
                uint64_t w = lv.sets[s];
                for (int v = 0; v < 4; v++) {
                    uint64_t L = extract_single(w, dim, j, v);
                    lv.layers[j][static_cast<size_t>(s) * 4 + v] = L;
                    lv.lpc[j][static_cast<size_t>(s) * 4 + v] = static_cast<uint16_t>(std::popcount(L));
                }
            }
        }
        std::vector<Child> children;
        std::vector<uint8_t> keys;
        children.reserve(static_cast<size_t>(numj) * 24);
        keys.reserve(static_cast<size_t>(numj) * 24 * 4 * m);
        int klen = 4 * m;
        for (int j = 0; j < numj; j++) {
            for (uint8_t tau = 0; tau < 24; tau++) {
                Child c{static_cast<uint8_t>(j), tau, static_cast<uint32_t>(keys.size())};
                for (int s = 0; s < m; s++)
                    for (int b = 0; b < 4; b++)
                        keys.push_back(
                            static_cast<uint8_t>(lv.lpc[j][static_cast<size_t>(s) * 4 + perms[tau][b]]));
                children.push_back(c);
            }
        }
        sort_children(children, keys, klen);
        for (const Child& c : children) {
            int cmp = cmp_popcount_opt(&keys[c.key_off], klen, dim - 1);
            if (cmp > 0) break;
            if (cmp == 0 && !opt_.count_stabilizers && have_best) continue;
            int mm = m * 4;
            Level& nx = lv_[depth + 1];
            for (int s = 0; s < m; s++)
                for (int b = 0; b < 4; b++)
                    nx.sets[static_cast<size_t>(s) * 4 + b] =
                        lv.layers[c.j][static_cast<size_t>(s) * 4 + perms[c.tau][b]];
            if (dim - 1 >= 2 && !solo_ok(nx.sets.data(), mm, dim - 1)) continue;
            consume_coord(depth, c.j);
            descend(depth + 1, dim - 1, mm);
        }
    }

    void consume_coord(int depth, int j) {
        rho_[depth] = rem_[depth][j];
        int k = 0;
        for (int i = 0; i < remn_[depth]; i++) {
            if (i != j) rem_[depth + 1][k++] = rem_[depth][i];
        }
        remn_[depth + 1] = static_cast<uint8_t>(k);
    }

    // Last coordinate: evaluate all 24 symbol permutations directly.
    void finalize(int depth, int m) {
        rho_[depth] = rem_[depth][0];
        const auto& imgs = nib_img_tbl();
        Level& lv = lv_[depth];
        for (uint8_t tau = 0; tau < 24; tau++) {
            std::array<uint64_t, 4> out{};
            for (int s = 0; s < m; s++) {
                uint64_t nib = imgs[tau][(lv.sets[s] >> 60) & 0xF];
                int bitpos = s * 4;
                out[bitpos >> 6] |= nib << (60 - (bitpos & 63));
            }
            if (!have_best) {
                best = out;
                have_best = true;
                stab = 1;
                note_rho();
                continue;
            }
            int cmp = 0;
            for (int i = 0; i < out_words_; i++) {
                if (out[i] != best[i]) {
                    cmp = out[i] < best[i] ? -1 : 1;
                    break;
                }
            }
            if (cmp > 0) continue;
            if (cmp < 0) {
                best = out;
                stab = 1;
                rhos.clear();
                note_rho();
            } else {
                stab++;
                note_rho();
            }
        }
    }

    void note_rho() {
        if (opt_.collect_sigmas) rhos.push_back(rho_);
    }

    void sort_children(std::vector<Child>& children, const std::vector<uint8_t>& keys, int klen) {
        std::sort(children.begin(), children.end(), [&](const Child& a, const Child& b) {
            int c = std::memcmp(&keys[a.key_off], &keys[b.key_off], static_cast<size_t>(klen));
            if (c) return c < 0;
            if (a.j != b.j) return a.j < b.j;
            return a.tau < b.tau;
        });
    }

    // Least possible output vs current best given only segment popcounts.
    int cmp_popcount_opt(const uint8_t* key, int klen, int segdim) {
        if (!have_best) return -1;
        std::array<uint64_t, 4> opt{};
        BitWriter bw{opt.data()};
        int seglen = 1 << (2 * segdim);
        for (int i = 0; i < klen; i++) {
            int c = key[i];
            bw.append_bits(0, seglen - c);
            bw.append_bits(c == 64 ? ~0ull : ((1ull << c) - 1), c);
        }
        for (int i = 0; i < out_words_; i++) {
            if (opt[i] != best[i]) return opt[i] < best[i] ? -1 : 1;
        }
        return 0;
    }

    // Tighter bound: concatenation of the solo canonical forms of the child
    // tuple.  Returns false when the branch is prunable.
    bool solo_ok(const uint64_t* sets, int m, int dim) {
        if (!have_best) return true;
        std::array<uint64_t, 4> opt{};
        BitWriter bw{opt.data()};
        int seglen = 1 << (2 * dim);
        for (int s = 0; s < m; s++) {
            uint64_t canon = solo_canon(sets[s], dim);
            bw.append_bits(canon >> (64 - seglen), seglen);
        }
        for (int i = 0; i < out_words_; i++) {
            if (opt[i] != best[i]) {
                if (opt[i] < best[i]) return true;
                return false;
            }
        }
        return opt_.count_stabilizers;  // tie: only useful when counting
    }

    uint64_t solo_canon(uint64_t w, int dim) {
        if (dim == 1) return dim1_canon_word(std::popcount(w));
        if (opt_.cache) {
            auto it = opt_.cache->by_dim[dim].find(w);
            if (it != opt_.cache->by_dim[dim].end()) return it->second;
        }
        auto it = local_.by_dim[dim].find(w);
        if (it != local_.by_dim[dim].end()) return it->second;
        SearchOptions sub;
        sub.cache = opt_.cache;
        MinImageSearch s(dim, 1, sub);
        std::vector<const uint64_t*> tup{&w};
        s.run(tup);
        local_.by_dim[dim].emplace(w, s.best[0]);
        return s.best[0];
    }
};

const std::array<std::array<uint8_t, 16>, 24>& nib_img_tbl() {
    static const std::array<std::array<uint8_t, 16>, 24> tbl = [] {
        std::array<std::array<uint8_t, 16>, 24> t{};
        const auto& perms = all_symbol_perms();
        for (int p = 0; p < 24; p++) {
            for (int x = 0; x < 16; x++) {
                uint8_t out = 0;
                for (int b = 0; b < 4; b++) out |= ((x >> (3 - perms[p][b])) & 1) << (3 - b);
                t[p][x] = out;
            }
        }
        return t;
    }();
    return tbl;
}

CodeSet codeset_from_bits(int n, const uint64_t* words, int bit_offset) {
    CodeSet out(n);
    uint64_t cells = cell_count(n);
    for (uint64_t p = 0; p < cells; p++) {
        uint64_t bit = static_cast<uint64_t>(bit_offset) + p;
        if ((words[bit >> 6] >> (63 - (bit & 63))) & 1) out.set(static_cast<uint32_t>(p));
    }
    return out;
}

CoordPerm invert_perm(const CoordPerm& p, int n) {
    CoordPerm inv{};
    for (int i = 0; i < n; i++) inv[p[i]] = static_cast<uint8_t>(i);
    return inv;
}

CoordPerm compose_perm(const CoordPerm& a, const CoordPerm& b, int n) {
    CoordPerm r{};  // r(j) = a(b(j))
    for (int j = 0; j < n; j++) r[j] = a[b[j]];
    return r;
}

}  // namespace

const std::array<SymbolPerm, 24>& all_symbol_perms() {
    static const std::array<SymbolPerm, 24> perms = [] {
        std::array<SymbolPerm, 24> out{};
        SymbolPerm p{0, 1, 2, 3};
        int i = 0;
        do {
            out[i++] = p;
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return perms;
}

Transform Transform::identity(int n) {
    Transform t;
    t.n = n;
    for (int i = 0; i < n; i++) t.sigma[i] = static_cast<uint8_t>(i);
    for (int i = 0; i < n; i++) t.thetas[i] = {0, 1, 2, 3};
    return t;
}

Transform Transform::inverse() const {
    Transform r;
    r.n = n;
    CoordPerm inv{};
    for (int j = 0; j < n; j++) inv[sigma[j]] = static_cast<uint8_t>(j);
    r.sigma = inv;
    for (int i = 0; i < n; i++) {
        const SymbolPerm& th = thetas[inv[i]];
        SymbolPerm thi{};
        for (int v = 0; v < 4; v++) thi[th[v]] = static_cast<uint8_t>(v);
        r.thetas[i] = thi;
    }
    return r;
}

Transform compose(const Transform& a, const Transform& b) {
    if (a.n != b.n) throw std::invalid_argument("compose: dimension mismatch");
    Transform r;
    r.n = a.n;
    for (int j = 0; j < a.n; j++) {
        r.sigma[j] = a.sigma[b.sigma[j]];
        const SymbolPerm& t2 = a.thetas[b.sigma[j]];
        const SymbolPerm& t1 = b.thetas[j];
        for (int v = 0; v < 4; v++) r.thetas[j][v] = t2[t1[v]];
    }
    return r;
}

CodeSet apply(const Transform& t, const CodeSet& s) {
    int n = s.dim();
    if (t.n != n) throw std::invalid_argument("apply: dimension mismatch");
    std::array<uint8_t, kMaxDim> inv{};
    for (int j = 0; j < n; j++) inv[t.sigma[j]] = static_cast<uint8_t>(j);
    CodeSet r(n);
    auto words = s.words();
    for (size_t wi = 0; wi < words.size(); wi++) {
        uint64_t w = words[wi];
        while (w) {
            int b = std::countl_zero(w);
            w &= ~(1ull << (63 - b));
            uint32_t p = static_cast<uint32_t>(wi * 64 + b);
            uint32_t y = 0;
            for (int i = 0; i < n; i++) {
                int j = inv[i];
                y = y * 4 + t.thetas[j][point_coord(n, p, j)];
            }
            r.set(y);
        }
    }
    return r;
}

Transform random_transform(int n, std::mt19937_64& rng) {
    Transform t = Transform::identity(n);
    for (int i = n - 1; i > 0; i--) {
        std::swap(t.sigma[i], t.sigma[std::uniform_int_distribution<int>(0, i)(rng)]);
    }
    for (int j = 0; j < n; j++) {
        t.thetas[j] = all_symbol_perms()[std::uniform_int_distribution<int>(0, 23)(rng)];
    }
    return t;
}

Transform random_isotopy(int n, std::mt19937_64& rng) {
    Transform t = Transform::identity(n);
    for (int j = 0; j < n; j++) {
        t.thetas[j] = all_symbol_perms()[std::uniform_int_distribution<int>(0, 23)(rng)];
    }
    return t;
}

uint64_t full_group_order(int n) {
    uint64_t ord = 1;
    for (int i = 0; i < n; i++) ord *= 24;
    for (int i = 2; i <= n; i++) ord *= static_cast<uint64_t>(i);
    return ord;
}

uint64_t isotopy_group_order(int n) {
    uint64_t ord = 1;
    for (int i = 0; i < n; i++) ord *= 24;
    return ord;
}

SearchResult canonical_search(const CodeSet& s, const SearchOptions& opt) {
    int n = s.dim();
    MinImageSearch engine(n, 1, opt);
    std::vector<const uint64_t*> tup{s.words().data()};
    engine.run(tup);
    SearchResult out{codeset_from_bits(n, engine.best.data(), 0), engine.stab, {}};
    if (opt.collect_sigmas) {
        // Leaves give transforms g with g*S = canon (a coset of Aut); the image
        // of Aut in S_n is {sigma0^-1 sigma_g}.
        std::vector<CoordPerm> sigmas;
        sigmas.reserve(engine.rhos.size());
        for (const CoordPerm& rho : engine.rhos) sigmas.push_back(invert_perm(rho, n));
        CoordPerm inv0 = invert_perm(sigmas.front(), n);
        std::unordered_set<uint32_t> seen;
        for (const CoordPerm& sg : sigmas) {
            CoordPerm g = compose_perm(inv0, sg, n);
            uint32_t code = 0;
            for (int i = 0; i < n; i++) code = code * 8 + g[i];
            if (seen.insert(code).second) out.aut_sigmas.push_back(g);
        }
    }
    return out;
}

PairSearchResult canonical_search_pair(const CodeSet& l1, const CodeSet& l2,
                                       const SearchOptions& opt) {
    if (l1.dim() != l2.dim()) throw std::invalid_argument("pair: dimension mismatch");
    int d = l1.dim();
    MinImageSearch engine(d, 2, opt);
    std::vector<const uint64_t*> t1{l1.words().data(), l2.words().data()};
    std::vector<const uint64_t*> t2{l2.words().data(), l1.words().data()};
    engine.run(t1);
    if (l1 != l2) engine.run(t2);
    else engine.stab *= 2;  // the swap fixes equal layers elementwise
    PairSearchResult out{codeset_from_bits(d, engine.best.data(), 0),
                         codeset_from_bits(d, engine.best.data(), 1 << (2 * d)), engine.stab};
    return out;
}

std::vector<CodeSet> expand_orbit(const CodeSet& s) {
    int n = s.dim();
    std::vector<Transform> gens;
    for (int i = 0; i + 1 < n; i++) {
        Transform t = Transform::identity(n);
        std::swap(t.sigma[i], t.sigma[i + 1]);
        gens.push_back(t);
    }
    for (int j = 0; j < n; j++) {
        for (int v = 0; v < 3; v++) {
            Transform t = Transform::identity(n);
            std::swap(t.thetas[j][v], t.thetas[j][v + 1]);
            gens.push_back(t);
        }
    }
    std::unordered_set<CodeSet, CodeSetHash> seen{s};
    std::vector<CodeSet> queue{s};
    for (size_t h = 0; h < queue.size(); h++) {
        CodeSet cur = queue[h];
        for (const Transform& g : gens) {
            CodeSet img = apply(g, cur);
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    return queue;
}

std::string perm_group_type_label(PermGroupType t) {
    switch (t) {
        case PermGroupType::t1: return "1";
        case PermGroupType::t2p: return "2'";
        case PermGroupType::t2pp: return "2''";
        case PermGroupType::t3: return "3";
        case PermGroupType::t4p: return "4'";
        case PermGroupType::t4pp: return "4''";
        case PermGroupType::t4c: return "4o";
        case PermGroupType::t6: return "6";
        case PermGroupType::t8: return "8";
        case PermGroupType::t12: return "12";
        case PermGroupType::t24: return "24";
    }
    return "?";
}

PermGroupType perm_group_type_from_label(std::string_view label) {
    if (label == "1") return PermGroupType::t1;
    if (label == "2'") return PermGroupType::t2p;
    if (label == "2''") return PermGroupType::t2pp;
    if (label == "3") return PermGroupType::t3;
    if (label == "4'") return PermGroupType::t4p;
    if (label == "4''") return PermGroupType::t4pp;
    if (label == "4o") return PermGroupType::t4c;
    if (label == "6") return PermGroupType::t6;
    if (label == "8") return PermGroupType::t8;
    if (label == "12") return PermGroupType::t12;
    if (label == "24") return PermGroupType::t24;
    throw std::runtime_error("bad perm group label: " + std::string(label));
}

PermGroupType classify_perm_group(const std::vector<CoordPerm>& group, int n) {
    size_t ord = group.size();
    auto moved = [n](const CoordPerm& p) {
        int c = 0;
        for (int i = 0; i < n; i++)
            if (p[i] != i) c++;
        return c;
    };
    bool transposition = false, four_cycle = false;
    for (const CoordPerm& p : group) {
        int mv = moved(p);
        if (mv == 2) transposition = true;
        if (mv == 4) {
            CoordPerm sq = compose_perm(p, p, n);
            if (moved(sq) != 0) four_cycle = true;
        }
    }
    switch (ord) {
        case 1: return PermGroupType::t1;
        case 2: return transposition ? PermGroupType::t2p : PermGroupType::t2pp;
        case 3: return PermGroupType::t3;
        case 4:
            if (transposition) return PermGroupType::t4p;
            return four_cycle ? PermGroupType::t4c : PermGroupType::t4pp;
        case 6: return PermGroupType::t6;
        case 8: return PermGroupType::t8;
        case 12: return PermGroupType::t12;
        case 24: return PermGroupType::t24;
    }
    throw std::runtime_error("unexpected coordinate group order " + std::to_string(ord));
}

std::pair<CodeSet, GroupSummary> canonical_form(const CodeSet& s, const CanonCache* cache) {
    SearchOptions full;
    full.count_stabilizers = true;
    full.collect_sigmas = true;
    full.cache = cache;
    SearchResult fr = canonical_search(s, full);

    SearchOptions iso;
    iso.isotopy_only = true;
    iso.count_stabilizers = true;
    iso.cache = cache;
    SearchResult ir = canonical_search(s, iso);

    GroupSummary g;
    g.aut_order = fr.stabilizer_order;
    g.atop_order = ir.stabilizer_order;
    if (g.atop_order == 0 || g.aut_order % g.atop_order != 0) {
        throw std::runtime_error("autotopy order does not divide automorphism order");
    }
    g.perm_group_order = g.aut_order / g.atop_order;
    if (fr.aut_sigmas.size() != g.perm_group_order) {
        throw std::runtime_error("coordinate group size mismatch");
    }
    g.perm_group_type = classify_perm_group(fr.aut_sigmas, s.dim());
    return {fr.canon, g};
}

CodeSet isotopy_canonical_form(const CodeSet& s, const CanonCache* cache) {
    SearchOptions iso;
    iso.isotopy_only = true;
    iso.cache = cache;
    return canonical_search(s, iso).canon;
}

std::pair<bool, bool> complement_flags(const CodeSet& s, const CanonCache* cache) {
    CodeSet comp = s.complement();
    SearchOptions opt;
    opt.cache = cache;
    bool equiv = canonical_search(s, opt).canon == canonical_search(comp, opt).canon;
    bool isot = false;
    if (equiv) {
        SearchOptions iso;
        iso.isotopy_only = true;
        iso.cache = cache;
        isot = canonical_search(s, iso).canon == canonical_search(comp, iso).canon;
    }
    return {equiv, isot};
}

}  // namespace freqcube
