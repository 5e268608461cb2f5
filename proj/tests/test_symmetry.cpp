#include "doctest.h"

#include <random>

#include "freqcube/canonical.hpp"
#include "freqcube/parallel.hpp"
#include "reference.hpp"

using namespace freqcube;

TEST_CASE("apply basics") {
    CodeSet s = testref::picture(4);
    CHECK(apply(Transform::identity(2), s) == s);

    // n=1 symbol swap 0<->1 sends {0,2} to {1,2}
    Transform t = Transform::identity(1);
    std::swap(t.thetas[0][0], t.thetas[0][1]);
    CHECK(apply(t, CodeSet::of(1, {0, 2})) == CodeSet::of(1, {1, 2}));

    // coordinate swap transposes the 4x4 array
    Transform swap = Transform::identity(2);
    std::swap(swap.sigma[0], swap.sigma[1]);
    CodeSet st = apply(swap, s);
    for (uint32_t r = 0; r < 4; r++) {
        for (uint32_t c = 0; c < 4; c++) CHECK(st.test(c * 4 + r) == s.test(r * 4 + c));
    }
}

TEST_CASE("transform algebra") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 4; n++) {
        for (int i = 0; i < 25; i++) {
            Transform a = random_transform(n, rng), b = random_transform(n, rng);
            CodeSet s = testref::random_set(n, rng);
            CHECK(apply(compose(a, b), s) == apply(a, apply(b, s)));
            CHECK(apply(compose(a.inverse(), a), s) == s);
            CHECK(apply(a.inverse(), apply(a, s)) == s);
        }
    }
}

TEST_CASE("apply preserves kinds and size") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 40; i++) {
        CodeSet s = testref::random_set(3, rng);
        Transform t = random_transform(3, rng);
        CodeSet img = apply(t, s);
        CHECK(img.size() == s.size());
        SetKind a = classify_set(s), b = classify_set(img);
        CHECK(a.is_unitrade == b.is_unitrade);
        CHECK(a.is_double_code == b.is_double_code);
        CHECK(a.is_double_mds == b.is_double_mds);
    }
    CHECK(classify_set(apply(random_transform(2, rng), testref::picture(3))).is_double_mds);
}

TEST_CASE("search equals full-sweep reference in dimensions 1 and 2") {
    std::mt19937_64 rng(31);
    std::vector<CodeSet> cases;
    for (uint32_t bits = 0; bits < 16; bits++) {
        CodeSet s(1);
        for (int v = 0; v < 4; v++) {
            if ((bits >> v) & 1) s.set(static_cast<uint32_t>(v));
        }
        cases.push_back(s);
    }
    for (int i = 0; i < 40; i++) cases.push_back(testref::random_set(2, rng));
    cases.push_back(testref::picture(3));
    cases.push_back(testref::picture(4));
    cases.push_back(testref::picture(5));
    cases.push_back(CodeSet(2));
    cases.push_back(CodeSet::full(2));

    for (const CodeSet& s : cases) {
        testref::RefCanon ref = testref::reference_canonical(s);
        SearchOptions opt;
        opt.count_stabilizers = true;
        SearchResult got = canonical_search(s, opt);
        CHECK(got.canon == ref.canon);
        CHECK(got.stabilizer_order == ref.stab);

        testref::RefCanon iref = testref::reference_isotopy_canonical(s);
        SearchOptions iopt;
        iopt.isotopy_only = true;
        iopt.count_stabilizers = true;
        SearchResult igot = canonical_search(s, iopt);
        CHECK(igot.canon == iref.canon);
        CHECK(igot.stabilizer_order == iref.stab);
    }
}

TEST_CASE("search equals full-sweep reference in dimension 3") {
    std::mt19937_64 rng(37);
    std::vector<CodeSet> cases;
    for (int i = 0; i < 6; i++) cases.push_back(testref::random_set(3, rng));
    // a structured case: block pattern with every line count even
    CodeSet blocks(3);
    for (uint32_t p = 0; p < 64; p++) {
        if (((p >> 4) & 2) == ((p >> 2) & 2)) blocks.set(p);
    }
    cases.push_back(blocks);
    for (const CodeSet& s : cases) {
        testref::RefCanon ref = testref::reference_canonical(s);
        SearchOptions opt;
        opt.count_stabilizers = true;
        SearchResult got = canonical_search(s, opt);
        CHECK(got.canon == ref.canon);
        CHECK(got.stabilizer_order == ref.stab);
    }
}

TEST_CASE("canonical form orbit invariance and idempotence") {
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 3; n++) {
        for (int i = 0; i < 20; i++) {
            CodeSet s = testref::random_set(n, rng);
            CodeSet canon = canonical_search(s).canon;
            CHECK(canonical_search(canon).canon == canon);
            for (int k = 0; k < 10; k++) {
                Transform t = random_transform(n, rng);
                CHECK(canonical_search(apply(t, s)).canon == canon);
            }
            CHECK(canon <= s);
        }
    }
}

TEST_CASE("isotopy canonical form is isotopy-invariant only") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 20; i++) {
        CodeSet s = testref::random_set(3, rng);
        CodeSet canon = isotopy_canonical_form(s);
        Transform iso = random_isotopy(3, rng);
        CHECK(isotopy_canonical_form(apply(iso, s)) == canon);
    }
}

TEST_CASE("group summary consistency") {
    std::mt19937_64 rng(47);
    uint64_t fact3 = 6;
    for (int i = 0; i < 15; i++) {
        CodeSet s = testref::random_set(3, rng);
        auto [canon, g] = canonical_form(s);
        CHECK(g.aut_order % g.atop_order == 0);
        CHECK(g.perm_group_order == g.aut_order / g.atop_order);
        CHECK(fact3 % g.perm_group_order == 0);
        CHECK(full_group_order(3) % g.aut_order == 0);
    }
    // orbit sizes match 24^n n!/|Aut| (brute force at n=2)
    for (const CodeSet& s : {testref::picture(3), testref::picture(4), testref::picture(5)}) {
        auto [canon, g] = canonical_form(s);
        CHECK(expand_orbit(s).size() == g.class_size(2));
    }
}

TEST_CASE("pair search agrees with a brute-force semi-code sweep") {
    // reference: min over sigma x theta^2 x swap of the concatenated pair
    std::mt19937_64 rng(53);
    auto transforms = testref::all_transforms(2);
    for (int i = 0; i < 12; i++) {
        CodeSet a = testref::random_set(2, rng), b = testref::random_set(2, rng);
        std::pair<CodeSet, CodeSet> best;
        uint64_t stab = 0;
        bool first = true;
        for (const Transform& t : transforms) {
            for (int sw = 0; sw < 2; sw++) {
                std::pair<CodeSet, CodeSet> img{apply(t, sw ? b : a), apply(t, sw ? a : b)};
                if (first || img < best) {
                    best = img;
                    stab = 1;
                    first = false;
                } else if (img == best) {
                    stab++;
                }
            }
        }
        SearchOptions opt;
        opt.count_stabilizers = true;
        PairSearchResult got = canonical_search_pair(a, b, opt);
        CHECK(got.first == best.first);
        CHECK(got.second == best.second);
        CHECK(got.stabilizer_order == stab);
    }
}

TEST_CASE("perm group type labeling") {
    auto perm = [](std::initializer_list<int> v) {
        CoordPerm p{};
        int i = 0;
        for (int x : v) p[i++] = static_cast<uint8_t>(x);
        return p;
    };
    CoordPerm id4 = perm({0, 1, 2, 3});
    CHECK(classify_perm_group({id4}, 4) == PermGroupType::t1);
    CHECK(classify_perm_group({id4, perm({1, 0, 2, 3})}, 4) == PermGroupType::t2p);
    CHECK(classify_perm_group({id4, perm({1, 0, 3, 2})}, 4) == PermGroupType::t2pp);
    CHECK(classify_perm_group({id4, perm({1, 2, 0, 3}), perm({2, 0, 1, 3})}, 4) == PermGroupType::t3);
    CHECK(classify_perm_group(
              {id4, perm({1, 0, 2, 3}), perm({0, 1, 3, 2}), perm({1, 0, 3, 2})}, 4) ==
          PermGroupType::t4p);
    CHECK(classify_perm_group(
              {id4, perm({1, 0, 3, 2}), perm({2, 3, 0, 1}), perm({3, 2, 1, 0})}, 4) ==
          PermGroupType::t4pp);
    CHECK(classify_perm_group(
              {id4, perm({1, 2, 3, 0}), perm({2, 3, 0, 1}), perm({3, 0, 1, 2})}, 4) ==
          PermGroupType::t4c);
    CHECK(perm_group_type_label(PermGroupType::t4c) == "4o");
    CHECK(perm_group_type_from_label("2''") == PermGroupType::t2pp);
}

TEST_CASE("complement flags") {
    auto [equiv, isot] = complement_flags(CodeSet::of(1, {0, 1}));
    CHECK(equiv);
    CHECK(isot);
    // isotopic-to-complement implies equivalent-to-complement
    std::mt19937_64 rng(59);
    for (int i = 0; i < 20; i++) {
        CodeSet s = testref::random_set(2, rng);
        auto [e, it] = complement_flags(s);
        if (it) CHECK(e);
    }
}

TEST_CASE("parallel batch kernels match the serial reference") {
    std::mt19937_64 rng(61);
    std::vector<CodeSet> sets;
    for (int i = 0; i < 200; i++) sets.push_back(testref::random_set(3, rng));
    auto serial = canonicalize_batch_serial(sets);
    auto parallel = canonicalize_batch(sets);
    CHECK(serial == parallel);
    auto ks = classify_batch_serial(sets);
    auto kp = classify_batch(sets);
    for (size_t i = 0; i < sets.size(); i++) {
        CHECK(ks[i].is_unitrade == kp[i].is_unitrade);
        CHECK(ks[i].is_double_code == kp[i].is_double_code);
        CHECK(ks[i].is_double_mds == kp[i].is_double_mds);
    }
}
