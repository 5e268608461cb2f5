#include "freqcube/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "freqcube/parallel.hpp"
#include "freqcube/split.hpp"

namespace freqcube {

namespace {

int accent_rank(PermGroupType t) {
    switch (t) {
        case PermGroupType::t2p:
        case PermGroupType::t4p: return 0;
        case PermGroupType::t4c: return 1;
        case PermGroupType::t2pp:
        case PermGroupType::t4pp: return 2;
        default: return 0;
    }
}

[[noreturn]] void load_error(const std::string& path, size_t lineno, const std::string& what) {
    throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + what);
}

}  // namespace

CatalogFile catalog_from_classification(const Classification& c) {
    CatalogFile f;
    f.n = c.n;
    f.kind = c.kind;
    f.total = c.total;
    f.records = c.classes;
    return f;
}

void write_catalog(const CatalogFile& c, const std::string& path) {
    for (size_t i = 1; i < c.records.size(); i++) {
        if (!(c.records[i - 1].representative < c.records[i].representative)) {
            throw std::runtime_error("catalog records not strictly increasing");
        }
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "# n=" << c.n << " kind=" << kind_name(c.kind) << " total=" << c.total
        << " classes=" << c.records.size() << "\n";
    for (const ClassRecord& r : c.records) {
        out << r.representative.to_hex() << " " << r.group.aut_order << " " << r.group.atop_order
            << " " << perm_group_type_label(r.group.perm_group_type) << " " << r.class_size << " "
            << (r.equiv_to_complement ? 1 : 0) << " " << (r.isotopic_to_complement ? 1 : 0) << " "
            << (r.splittable ? 1 : 0) << "\n";
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

CatalogFile read_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) load_error(path, 1, "empty catalog");
    CatalogFile c;
    size_t expect_classes = 0;
    {
        std::istringstream hs(line);
        std::string hash, field;
        hs >> hash;
        if (hash != "#") load_error(path, 1, "missing header");
        bool have_n = false, have_kind = false, have_total = false, have_classes = false;
        while (hs >> field) {
            auto eq = field.find('=');
            if (eq == std::string::npos) load_error(path, 1, "bad header field " + field);
            std::string key = field.substr(0, eq), val = field.substr(eq + 1);
            try {
                if (key == "n") {
                    c.n = std::stoi(val);
                    have_n = true;
                } else if (key == "kind") {
                    c.kind = kind_from_name(val);
                    have_kind = true;
                } else if (key == "total") {
                    c.total = std::stoull(val);
                    have_total = true;
                } else if (key == "classes") {
                    expect_classes = std::stoull(val);
                    have_classes = true;
                }
            } catch (const std::exception&) {
                load_error(path, 1, "bad header value " + field);
            }
        }
        if (!have_n || !have_kind || !have_total || !have_classes) {
            load_error(path, 1, "incomplete header");
        }
        if (c.n < 1 || c.n > kMaxDim) load_error(path, 1, "dimension out of range");
    }
    size_t lineno = 1;
    while (std::getline(in, line)) {
        lineno++;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string hex, type;
        uint64_t aut = 0, atop = 0, size = 0;
        int equiv = -1, isot = -1, split = -1;
        if (!(ls >> hex >> aut >> atop >> type >> size >> equiv >> isot >> split)) {
            load_error(path, lineno, "malformed record");
        }
        ClassRecord r;
        r.n = c.n;
        try {
            r.representative = CodeSet::from_hex(hex);
            r.group.perm_group_type = perm_group_type_from_label(type);
        } catch (const std::exception& e) {
            load_error(path, lineno, e.what());
        }
        if (r.representative.dim() != c.n) load_error(path, lineno, "record dimension mismatch");
        if (aut == 0 || atop == 0 || aut % atop != 0) load_error(path, lineno, "bad group orders");
        r.group.aut_order = aut;
        r.group.atop_order = atop;
        r.group.perm_group_order = aut / atop;
        r.class_size = size;
        if (full_group_order(c.n) % aut != 0 || r.group.class_size(c.n) != size) {
            load_error(path, lineno, "class size disagrees with 24^n n!/|Aut|");
        }
        if (equiv < 0 || equiv > 1 || isot < 0 || isot > 1 || split < 0 || split > 1) {
            load_error(path, lineno, "bad flags");
        }
        r.equiv_to_complement = equiv;
        r.isotopic_to_complement = isot;
        r.splittable = split;
        if (!c.records.empty() && !(c.records.back().representative < r.representative)) {
            load_error(path, lineno, "records not strictly increasing");
        }
        c.records.push_back(std::move(r));
    }
    if (c.records.size() != expect_classes) {
        throw std::runtime_error(path + ": class count " + std::to_string(c.records.size()) +
                                 " disagrees with header " + std::to_string(expect_classes));
    }
    uint64_t total = 0;
    for (const ClassRecord& r : c.records) total += r.class_size;
    if (total != c.total) {
        throw std::runtime_error(path + ": class sizes sum to " + std::to_string(total) +
                                 ", header says " + std::to_string(c.total));
    }
    std::vector<std::string> errors(c.records.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(c.records.size()); i++) {
        const ClassRecord& r = c.records[static_cast<size_t>(i)];
        if (!in_family(r.representative, c.kind)) {
            errors[static_cast<size_t>(i)] = "representative fails the membership test";
            continue;
        }
        if (canonical_search(r.representative).canon != r.representative) {
            errors[static_cast<size_t>(i)] = "non-canonical representative";
        }
    }
    for (size_t i = 0; i < errors.size(); i++) {
        if (!errors[i].empty()) load_error(path, i + 2, errors[i]);
    }
    return c;
}

std::map<uint64_t, uint64_t> size_class_counts(const CatalogFile& c) {
    std::map<uint64_t, uint64_t> out;
    for (const ClassRecord& r : c.records) out[r.representative.size()]++;
    return out;
}

std::vector<AutTableRow> aut_table_rows(const CatalogFile& c) {
    std::map<std::tuple<uint64_t, uint64_t, int>, AutTableRow> rows;  // (T, P, accent)
    for (const ClassRecord& r : c.records) {
        auto key = std::make_tuple(r.group.atop_order, r.group.perm_group_order,
                                   accent_rank(r.group.perm_group_type));
        AutTableRow& row = rows[key];
        row.perm_order = r.group.perm_group_order;
        row.perm_type = r.group.perm_group_type;
        row.atop = r.group.atop_order;
        row.n_classes++;
        if (r.equiv_to_complement) row.n_equiv_compl++;
        if (r.isotopic_to_complement) row.n_isotopic_compl++;
        if (r.splittable) row.n_splittable++;
    }
    std::vector<AutTableRow> out;
    out.reserve(rows.size());
    for (auto& [key, row] : rows) out.push_back(row);
    std::sort(out.begin(), out.end(), [](const AutTableRow& a, const AutTableRow& b) {
        if (a.atop != b.atop) return a.atop > b.atop;
        if (a.perm_order != b.perm_order) return a.perm_order > b.perm_order;
        return accent_rank(a.perm_type) < accent_rank(b.perm_type);
    });
    return out;
}

FrequencyCubeReport frequency_cube_counts(const CatalogFile& c) {
    FrequencyCubeReport rep;
    uint64_t fact = 1;
    for (int i = 2; i <= c.n; i++) fact *= static_cast<uint64_t>(i);
    for (const ClassRecord& r : c.records) {
        if (r.isotopic_to_complement && !r.equiv_to_complement) {
            throw std::runtime_error("isotopic-to-complement record not equivalent to complement");
        }
        uint64_t p = r.group.perm_group_order;
        if (fact % p != 0) throw std::runtime_error("P does not divide n!");
        rep.code_classes++;
        rep.code_isotopy_classes += fact / p;
        if (r.equiv_to_complement) rep.equiv_to_complement++;
        if (r.isotopic_to_complement) rep.isotopic_to_complement++;
        if (r.splittable) rep.splittable_classes++;
    }
    for (const AutTableRow& row : aut_table_rows(c)) {
        uint64_t n = row.n_classes, np = row.n_equiv_compl;
        if (np > n) throw std::runtime_error("row has N' > N");
        if ((n + np) % 2 != 0) throw std::runtime_error("row has odd N + N'");
        rep.cube_classes += (n + np) / 2;
        uint64_t iso_num = (n + np) * fact;
        if (iso_num % (2 * row.perm_order) != 0) throw std::runtime_error("fractional cube isotopy count");
        rep.cube_isotopy_classes += iso_num / (2 * row.perm_order);
    }
    return rep;
}

namespace {

// Table labels match the catalog's ASCII conventions except that n <= 3
// coordinate groups carry no accents (orders determine them there).
std::string row_label(const AutTableRow& row, int n) {
    std::string p = perm_group_type_label(row.perm_type);
    if (n <= 3) {
        auto cut = p.find_first_of("'o");
        if (cut != std::string::npos) p = p.substr(0, cut);
    }
    return p + "*" + std::to_string(row.atop);
}

}  // namespace

std::string render_aut_table(const CatalogFile& c) {
    std::ostringstream os;
    os << "double-MDS-codes in H(" << c.n << ",4) by automorphism group |Aut| = P*T\n";
    os << std::setw(12) << "|Aut|" << std::setw(8) << "N" << std::setw(8) << "N'" << std::setw(8)
       << "N''" << std::setw(8) << "N*" << "\n";
    FrequencyCubeReport rep = frequency_cube_counts(c);
    for (const AutTableRow& row : aut_table_rows(c)) {
        os << std::setw(12) << row_label(row, c.n) << std::setw(8) << row.n_classes << std::setw(8)
           << row.n_equiv_compl << std::setw(8) << row.n_isotopic_compl << std::setw(8)
           << row.n_splittable << "\n";
    }
    os << std::setw(12) << "total:" << std::setw(8) << rep.code_classes << std::setw(8)
       << rep.equiv_to_complement << std::setw(8) << rep.isotopic_to_complement << std::setw(8)
       << rep.splittable_classes << "\n";
    os << "code isotopy classes:            " << rep.code_isotopy_classes << "\n";
    os << "frequency cube classes:          " << rep.cube_classes << "\n";
    os << "frequency cube isotopy classes:  " << rep.cube_isotopy_classes << "\n";
    return os.str();
}

std::string render_size_table(const CatalogFile& unitrades, const CatalogFile& doublecodes) {
    if (unitrades.kind != Kind::unitrade || doublecodes.kind != Kind::double_code ||
        unitrades.n != doublecodes.n) {
        throw std::runtime_error("size table needs unitrade and double-code catalogs of one dimension");
    }
    uint64_t cells = cell_count(unitrades.n);
    auto uni = size_class_counts(unitrades);
    auto dc = size_class_counts(doublecodes);
    // complementary sizes must pair up class-for-class
    for (auto& [size, count] : uni) {
        if (uni[cells - size] != count) throw std::runtime_error("unpaired unitrade size row");
    }
    for (auto& [size, count] : dc) {
        if (dc[cells - size] != count) throw std::runtime_error("unpaired double-code size row");
    }
    std::ostringstream os;
    os << "unitrades in H(" << unitrades.n << ",4): equivalence classes by size\n";
    os << std::setw(10) << "size" << std::setw(12) << "unitrades" << std::setw(14) << "double-codes"
       << "\n";
    std::set<uint64_t> sizes;
    for (auto& [s, cnt] : uni) sizes.insert(std::min(s, cells - s));
    for (auto& [s, cnt] : dc) sizes.insert(std::min(s, cells - s));
    for (uint64_t s : sizes) {
        std::string label = (s == cells - s) ? std::to_string(s)
                                             : std::to_string(s) + " or " + std::to_string(cells - s);
        uint64_t u = uni.count(s) ? uni[s] : 0;
        uint64_t d = dc.count(s) ? dc[s] : 0;
        os << std::setw(10) << label << std::setw(12) << u << std::setw(14) << d << "\n";
    }
    os << std::setw(10) << "total:" << std::setw(12) << unitrades.records.size() << std::setw(14)
       << doublecodes.records.size() << "\n";
    return os.str();
}

}  // namespace freqcube
