#include "doctest.h"

#include <random>

#include "freqcube/codeset.hpp"
#include "reference.hpp"

using namespace freqcube;

TEST_CASE("point index round trip") {
    for (int n = 1; n <= 4; n++) {
        uint64_t cells = cell_count(n);
        for (uint32_t p = 0; p < cells; p++) {
            Point pt = Point::from_index(n, p);
            CHECK(pt.index() == p);
            for (int i = 0; i < n; i++) CHECK(point_coord(n, p, i) == pt.c[i]);
        }
    }
    // spot checks at the dimension cap
    Point p = Point::from_index(8, 65535);
    CHECK(p.index() == 65535);
    CHECK(Point::from_index(8, 12345).index() == 12345);
}

TEST_CASE("line enumeration counts and structure") {
    CHECK(enumerate_lines(1).size() == 1);
    CHECK(enumerate_lines(2).size() == 8);
    CHECK(enumerate_lines(3).size() == 48);
    CHECK_THROWS_AS(enumerate_lines(0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_lines(9), std::invalid_argument);

    for (int n = 1; n <= 4; n++) {
        auto lines = enumerate_lines(n);
        CHECK(lines.size() == static_cast<size_t>(n) << (2 * (n - 1)));
        // direction-major, bases lexicographic, no duplicates
        std::vector<uint64_t> incidence(cell_count(n), 0);
        for (size_t i = 1; i < lines.size(); i++) {
            bool ordered = lines[i - 1].direction < lines[i].direction ||
                           (lines[i - 1].direction == lines[i].direction &&
                            lines[i - 1].base < lines[i].base);
            CHECK(ordered);
        }
        for (const Line& l : lines) {
            CHECK(point_coord(n, l.base, l.direction) == 0);
            for (int v = 0; v < 4; v++) incidence[l.cell(n, v)]++;
        }
        for (uint64_t c : incidence) CHECK(c == static_cast<uint64_t>(n));
    }
}

TEST_CASE("classify_set on the example pictures") {
    // a 2-subset of Sigma^1 meets the single line twice
    SetKind k1 = classify_set(CodeSet::of(1, {0, 1}));
    CHECK(k1.is_unitrade);
    CHECK(k1.is_double_code);
    CHECK(k1.is_double_mds);

    SetKind k2 = classify_set(testref::picture(2));
    CHECK(k2.is_double_code);
    CHECK_FALSE(k2.is_double_mds);

    SetKind k3 = classify_set(testref::picture(3));
    CHECK(k3.is_double_mds);
    SetKind k4 = classify_set(testref::picture(4));
    CHECK(k4.is_double_mds);

    SetKind k5 = classify_set(testref::picture(5));
    CHECK(k5.is_unitrade);
    CHECK_FALSE(k5.is_double_code);
    SetKind k5c = classify_set(testref::picture(5).complement());
    CHECK(k5c.is_double_code);
    CHECK_FALSE(k5c.is_double_mds);

    SetKind kf = classify_set(CodeSet::full(2));
    CHECK(kf.is_unitrade);
    CHECK_FALSE(kf.is_double_code);

    // kind implications on random sets
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; i++) {
        CodeSet s = testref::random_set(3, rng);
        SetKind k = classify_set(s);
        if (k.is_double_mds) CHECK(k.is_double_code);
        if (k.is_double_code) CHECK(k.is_unitrade);
    }
}

TEST_CASE("classify_set diagnostics") {
    LineCountStats diag;
    classify_set(testref::picture(5), &diag);
    CHECK(diag.histogram[2] == 6);
    CHECK(diag.histogram[4] == 2);
    CHECK(diag.first_odd_line == -1);
    CHECK(diag.first_non_double_line >= 0);
    uint64_t total = 0;
    for (uint64_t h : diag.histogram) total += h;
    CHECK(total == 8);
}

TEST_CASE("complement involution and flag preservation") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 3; n++) {
        for (int i = 0; i < 50; i++) {
            CodeSet s = testref::random_set(n, rng);
            CHECK(s.complement().complement() == s);
            SetKind a = classify_set(s), b = classify_set(s.complement());
            CHECK(a.is_unitrade == b.is_unitrade);
            CHECK(a.is_double_mds == b.is_double_mds);
        }
    }
    CHECK(CodeSet(1).complement() == CodeSet::full(1));
    // complement of a double-code need not be a double-code
    CodeSet dc = testref::picture(5).complement();
    CHECK(classify_set(dc).is_double_code);
    CHECK_FALSE(classify_set(dc.complement()).is_double_code);
}

TEST_CASE("layers") {
    CHECK(CodeSet::full(2).layer(0, 1) == CodeSet::full(1));
    for (int d = 0; d < 2; d++) {
        for (int v = 0; v < 4; v++) {
            CodeSet l = testref::picture(3).layer(d, v);
            CHECK(l.size() == 2);  // rows and columns of a 4x4 double-MDS-code
            CHECK(classify_set(l).is_double_mds);
        }
    }
    CHECK_THROWS_AS(CodeSet::of(1, {0}).layer(0, 0), std::invalid_argument);

    // layer-based and line-based membership agree
    std::mt19937_64 rng(13);
    for (int n = 2; n <= 3; n++) {
        for (int i = 0; i < 100; i++) {
            CodeSet s = testref::random_set(n, rng);
            bool lines_say = classify_set(s).is_double_mds;
            bool layers_say = true;
            for (int d = 0; d < n && layers_say; d++) {
                for (int v = 0; v < 4; v++) {
                    const CodeSet l = s.layer(d, v);
                    bool ok = n == 2 ? l.size() == 2 : classify_set(l).is_double_mds;
                    if (!ok) {
                        layers_say = false;
                        break;
                    }
                }
            }
            CHECK(lines_say == layers_say);
        }
    }
}

TEST_CASE("hex round trip") {
    std::mt19937_64 rng(17);
    for (int n = 1; n <= 4; n++) {
        for (int i = 0; i < 30; i++) {
            CodeSet s = testref::random_set(n, rng);
            std::string h = s.to_hex();
            CHECK(h.size() == cell_count(n) / 4);
            CHECK(CodeSet::from_hex(h) == s);
        }
    }
    CHECK(CodeSet::of(1, {0}).to_hex() == "8");
    CHECK(CodeSet::of(2, {0, 15}).to_hex() == "8001");
    CHECK_THROWS(CodeSet::from_hex("123"));
    CHECK_THROWS(CodeSet::from_hex("zzzz"));
}

TEST_CASE("set algebra") {
    std::mt19937_64 rng(19);
    CodeSet a = testref::random_set(3, rng), b = testref::random_set(3, rng);
    CHECK(a.sym_diff(b).sym_diff(b) == a);
    CHECK(a.intersect(b).subset_of(a));
    CHECK(a.intersect(b).subset_of(b));
    CHECK(a.sym_diff(a).empty());
    CHECK(CodeSet::full(3).size() == 64);
    auto pts = a.points();
    CHECK(pts.size() == a.size());
    for (uint32_t p : pts) CHECK(a.test(p));
}
