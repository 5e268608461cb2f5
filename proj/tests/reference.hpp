// Test-only reference implementations: brute-force sweeps kept independent of
// the optimized search paths, plus shared fixtures.

#pragma once

#include <random>
#include <vector>

#include "freqcube/canonical.hpp"
#include "freqcube/codeset.hpp"

namespace freqcube::testref {

// Every transform of the full group; n <= 3 (82944 elements at n=3).
inline std::vector<Transform> all_transforms(int n) {
    std::vector<CoordPerm> sigmas;
    CoordPerm s{};
    for (int i = 0; i < n; i++) s[i] = static_cast<uint8_t>(i);
    do {
        sigmas.push_back(s);
    } while (std::next_permutation(s.begin(), s.begin() + n));
    std::vector<Transform> out;
    const auto& perms = all_symbol_perms();
    std::vector<int> pick(static_cast<size_t>(n), 0);
    for (const CoordPerm& sg : sigmas) {
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            Transform t = Transform::identity(n);
            t.sigma = sg;
            for (int j = 0; j < n; j++) t.thetas[j] = perms[static_cast<size_t>(pick[j])];
            out.push_back(t);
            int i = n - 1;
            while (i >= 0 && ++pick[i] == 24) pick[i--] = 0;
            if (i < 0) break;
        }
    }
    return out;
}

struct RefCanon {
    CodeSet canon;
    uint64_t stab = 0;
};

// Full-sweep minimum image; the independent oracle for the search engine.
inline RefCanon reference_canonical(const CodeSet& s) {
    RefCanon r{s, 0};
    bool first = true;
    for (const Transform& t : all_transforms(s.dim())) {
        CodeSet img = apply(t, s);
        if (first || img < r.canon) {
            r.canon = img;
            r.stab = 1;
            first = false;
        } else if (img == r.canon) {
            r.stab++;
        }
    }
    return r;
}

inline RefCanon reference_isotopy_canonical(const CodeSet& s) {
    int n = s.dim();
    RefCanon r{s, 0};
    bool first = true;
    const auto& perms = all_symbol_perms();
    std::vector<int> pick(static_cast<size_t>(n), 0);
    while (true) {
        Transform t = Transform::identity(n);
        for (int j = 0; j < n; j++) t.thetas[j] = perms[static_cast<size_t>(pick[j])];
        CodeSet img = apply(t, s);
        if (first || img < r.canon) {
            r.canon = img;
            r.stab = 1;
            first = false;
        } else if (img == r.canon) {
            r.stab++;
        }
        int i = n - 1;
        while (i >= 0 && ++pick[i] == 24) pick[i--] = 0;
        if (i < 0) break;
    }
    return r;
}

// All 2^16 subsets of Sigma^2 that satisfy the family predicate.
inline std::vector<CodeSet> brute_force_family_n2(Kind kind) {
    std::vector<CodeSet> out;
    for (uint32_t bits = 0; bits < (1u << 16); bits++) {
        CodeSet s(2);
        for (uint32_t p = 0; p < 16; p++) {
            if ((bits >> p) & 1) s.set(p);
        }
        if (in_family(s, kind)) out.push_back(std::move(s));
    }
    return out;
}

inline CodeSet random_set(int n, std::mt19937_64& rng) {
    CodeSet s(n);
    for (uint64_t& w : s.words()) w = rng();
    uint64_t cells = cell_count(n);
    if (cells < 64) s.words()[0] &= ~0ull << (64 - cells);
    return s;
}

// 4x4 pictures: marked cells of the example diagrams, points (row, col).
inline CodeSet picture(int which) {
    auto mk = [](std::initializer_list<std::pair<int, int>> cells) {
        CodeSet s(2);
        for (auto [r, c] : cells) s.set(static_cast<uint32_t>(r * 4 + c));
        return s;
    };
    switch (which) {
        case 1: return CodeSet(2);
        case 2: return mk({{0, 0}, {0, 1}, {1, 0}, {1, 1}});
        case 3: return mk({{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
        case 4: return mk({{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 3}});
        case 5:
            return mk({{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 0}, {2, 3}, {3, 0}, {3, 1}, {3, 2}, {3, 3}});
    }
    throw std::invalid_argument("no such picture");
}

// Splittable parts of picture 3 as drawn (circles and bullets).
inline std::pair<CodeSet, CodeSet> picture3_parts() {
    CodeSet circles(2), bullets(2);
    for (auto [r, c] : {std::pair{0, 0}, {1, 1}, {2, 3}, {3, 2}}) circles.set(static_cast<uint32_t>(r * 4 + c));
    for (auto [r, c] : {std::pair{0, 1}, {1, 0}, {2, 2}, {3, 3}}) bullets.set(static_cast<uint32_t>(r * 4 + c));
    return {circles, bullets};
}

}  // namespace freqcube::testref
