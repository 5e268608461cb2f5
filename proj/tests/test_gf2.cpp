#include "doctest.h"

#include <random>

#include "freqcube/gf2.hpp"
#include "reference.hpp"

using namespace freqcube;

TEST_CASE("build_A matches the Kronecker definition") {
    for (int n = 1; n <= 3; n++) {
        Gf2Matrix a = build_A(n);
        Gf2Matrix k = build_A_kronecker(n);
        REQUIRE(a.rows() == k.rows());
        REQUIRE(a.cols() == k.cols());
        for (size_t r = 0; r < a.rows(); r++) {
            for (size_t c = 0; c < a.cols(); c++) CHECK(a.get(r, c) == k.get(r, c));
        }
    }
    Gf2Matrix a1 = build_A(1);
    CHECK(a1.rows() == 1);
    CHECK(a1.cols() == 4);
    for (size_t c = 0; c < 4; c++) CHECK(a1.get(0, c));
}

TEST_CASE("rank") {
    Gf2Matrix zero(5, 9);
    CHECK(gf2_rank(zero) == 0);
    Gf2Matrix eye(70, 70);
    for (size_t i = 0; i < 70; i++) eye.set(i, i);
    CHECK(gf2_rank(eye) == 70);
    CHECK(gf2_rank(build_A(1)) == 1);
    CHECK(gf2_rank(build_A(2)) == 7);
    CHECK(gf2_rank(build_A(3)) == 37);
    CHECK(gf2_rank(build_A(4)) == 175);
}

TEST_CASE("kernel basis") {
    Point a1;
    a1.n = 1;
    a1.c[0] = 2;
    CHECK(basis_unitrade(1, a1) == CodeSet::of(1, {0, 2}));

    Point a2;
    a2.n = 2;
    a2.c[0] = 1;
    a2.c[1] = 3;
    CodeSet d = basis_unitrade(2, a2);
    CHECK(d.size() == 4);
    CHECK(d.test(Point{2, {1, 3}}.index()));
    CHECK(d.test(Point{2, {0, 3}}.index()));
    CHECK(d.test(Point{2, {1, 0}}.index()));
    CHECK(d.test(Point{2, {0, 0}}.index()));
    CHECK(in_family(d, Kind::unitrade));

    for (int n = 1; n <= 4; n++) {
        auto basis = kernel_basis(n);
        size_t pow3 = 1;
        for (int i = 0; i < n; i++) pow3 *= 3;
        REQUIRE(basis.size() == pow3);
        Gf2Matrix a = build_A(n);
        Gf2Basis span(cell_count(n));
        for (const CodeSet& b : basis) {
            CHECK(b.size() == (1u << n));
            CHECK(in_family(b, Kind::unitrade));
            for (uint64_t w : a.mul(b.words())) CHECK(w == 0);
            CHECK(span.add(std::vector<uint64_t>(b.words().begin(), b.words().end())));
        }
        // nullity equals 3^n: the basis spans the whole kernel
        CHECK(gf2_rank(a) == cell_count(n) - pow3);
        CHECK(span.rank() == pow3);
    }
}

TEST_CASE("unitrade core bijection") {
    CHECK(unitrade_from_core(3, CodeSet(3)).empty());
    Point a;
    a.n = 3;
    a.c = {1, 2, 3};
    CodeSet single(3);
    single.set(a.index());
    CHECK(unitrade_from_core(3, single) == basis_unitrade(3, a));

    std::mt19937_64 rng(67);
    for (int i = 0; i < 1000; i++) {
        CodeSet core(3);
        for (uint32_t p = 0; p < 64; p++) {
            bool nonzero = true;
            for (int k = 0; k < 3; k++) {
                if (point_coord(3, p, k) == 0) nonzero = false;
            }
            if (nonzero && (rng() & 1)) core.set(p);
        }
        CodeSet u = unitrade_from_core(3, core);
        CHECK(in_family(u, Kind::unitrade));
        CHECK(unitrade_core(u) == core);
    }
    CHECK_THROWS_AS(unitrade_from_core(2, CodeSet::of(2, {0})), std::invalid_argument);
}

TEST_CASE("unitrades are closed under symmetric difference") {
    std::mt19937_64 rng(71);
    auto random_unitrade = [&rng](int n) {
        CodeSet core(n);
        uint64_t cells = cell_count(n);
        for (uint32_t p = 0; p < cells; p++) {
            bool nonzero = true;
            for (int k = 0; k < n; k++) {
                if (point_coord(n, p, k) == 0) nonzero = false;
            }
            if (nonzero && (rng() & 1)) core.set(p);
        }
        return unitrade_from_core(n, core);
    };
    for (int i = 0; i < 100; i++) {
        CodeSet u = random_unitrade(3), v = random_unitrade(3);
        CHECK(in_family(u.sym_diff(v), Kind::unitrade));
    }
}

TEST_CASE("matrix test agrees with the line counts") {
    std::mt19937_64 rng(73);
    for (int n = 1; n <= 3; n++) {
        for (int i = 0; i < 60; i++) {
            CodeSet s = testref::random_set(n, rng);
            CHECK(unitrade_by_matrix(s) == in_family(s, Kind::unitrade));
        }
    }
}
