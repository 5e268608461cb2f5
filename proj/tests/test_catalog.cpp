#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "freqcube/catalog.hpp"

using namespace freqcube;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/freqcube_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("catalog round trip") {
    Classification c = classify(2, Kind::double_mds);
    CatalogFile f = catalog_from_classification(c);
    TempFile tmp("roundtrip.cat");
    write_catalog(f, tmp.path);
    std::string first = slurp(tmp.path);
    CatalogFile g = read_catalog(tmp.path);
    CHECK(g.n == f.n);
    CHECK(g.kind == f.kind);
    CHECK(g.total == f.total);
    REQUIRE(g.records.size() == f.records.size());
    for (size_t i = 0; i < g.records.size(); i++) {
        CHECK(g.records[i].representative == f.records[i].representative);
        CHECK(g.records[i].group.aut_order == f.records[i].group.aut_order);
        CHECK(g.records[i].group.atop_order == f.records[i].group.atop_order);
        CHECK(g.records[i].class_size == f.records[i].class_size);
        CHECK(g.records[i].equiv_to_complement == f.records[i].equiv_to_complement);
        CHECK(g.records[i].splittable == f.records[i].splittable);
    }
    write_catalog(g, tmp.path);
    CHECK(slurp(tmp.path) == first);  // byte-exact
}

TEST_CASE("catalog load errors name the line") {
    TempFile tmp("bad.cat");
    auto write = [&](const std::string& text) {
        std::ofstream out(tmp.path, std::ios::trunc);
        out << text;
    };

    write("");
    CHECK_THROWS_WITH_AS(read_catalog(tmp.path), doctest::Contains(":1:"), std::runtime_error);

    write("# n=2 kind=dmds total=90\n");  // missing classes field
    CHECK_THROWS_WITH_AS(read_catalog(tmp.path), doctest::Contains("incomplete header"),
                         std::runtime_error);

    write("# n=2 kind=dmds total=90 classes=1\nnot-a-record\n");
    CHECK_THROWS_WITH_AS(read_catalog(tmp.path), doctest::Contains(":2:"), std::runtime_error);

    // valid-looking record whose totals mismatch the header
    Classification c = classify(2, Kind::double_mds);
    CatalogFile f = catalog_from_classification(c);
    {
        std::ofstream out(tmp.path, std::ios::trunc);
        out << "# n=2 kind=dmds total=91 classes=" << f.records.size() << "\n";
        for (const ClassRecord& r : f.records) {
            out << r.representative.to_hex() << " " << r.group.aut_order << " "
                << r.group.atop_order << " " << perm_group_type_label(r.group.perm_group_type)
                << " " << r.class_size << " 1 1 1\n";
        }
    }
    CHECK_THROWS_WITH_AS(read_catalog(tmp.path), doctest::Contains("header says 91"),
                         std::runtime_error);

    // non-canonical representative: the block pattern contains point 0, the
    // canonical member of its class does not (leading zeros win)
    {
        CodeSet s(2);
        for (uint32_t p : {0u, 1u, 4u, 5u, 10u, 11u, 14u, 15u}) s.set(p);
        std::ofstream out(tmp.path, std::ios::trunc);
        uint64_t aut = full_group_order(2) / 36;
        out << "# n=2 kind=dmds total=36 classes=1\n";
        out << s.to_hex() << " " << aut << " " << aut / 2 << " 2' 36 1 1 1\n";
    }
    CHECK_THROWS_WITH_AS(read_catalog(tmp.path), doctest::Contains("non-canonical"),
                         std::runtime_error);
}

TEST_CASE("aut table rows and frequency counts at n=2") {
    Classification c = classify(2, Kind::double_mds);
    CatalogFile f = catalog_from_classification(c);
    auto rows = aut_table_rows(f);
    uint64_t total = 0;
    for (const auto& r : rows) total += r.n_classes;
    CHECK(total == 2);
    // both classes are splittable and equivalent to their complement at n=2
    FrequencyCubeReport rep = frequency_cube_counts(f);
    CHECK(rep.code_classes == 2);
    CHECK(rep.cube_classes == (2 + rep.equiv_to_complement) / 2);
    CHECK(rep.code_isotopy_classes >= rep.code_classes / 2);

    std::string table = render_aut_table(f);
    CHECK(table.find("total:") != std::string::npos);
}

TEST_CASE("size table pairs complementary sizes") {
    Classification uni = classify(2, Kind::unitrade);
    Classification dc = classify(2, Kind::double_code);
    std::string table = render_size_table(catalog_from_classification(uni),
                                          catalog_from_classification(dc));
    CHECK(table.find("0 or 16") != std::string::npos);
    CHECK(table.find("total:") != std::string::npos);
    CHECK_THROWS(render_size_table(catalog_from_classification(dc),
                                   catalog_from_classification(uni)));

    auto sizes = size_class_counts(catalog_from_classification(uni));
    uint64_t total = 0;
    for (auto& [s, cnt] : sizes) total += cnt;
    CHECK(total == 10);
    CHECK(sizes[0] == 1);
    CHECK(sizes[16] == 1);
    CHECK(sizes[8] >= 2);  // the two double-MDS classes have size 8
}
