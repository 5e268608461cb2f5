// Catalog files (one line per equivalence class), the automorphism and
// unitrade-size tables, and the derived frequency-cube counts.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "freqcube/classifier.hpp"

namespace freqcube {

struct CatalogFile {
    int n = 0;
    Kind kind = Kind::double_mds;
    uint64_t total = 0;
    std::vector<ClassRecord> records;  // canonical, strictly increasing
};

CatalogFile catalog_from_classification(const Classification& c);

void write_catalog(const CatalogFile& c, const std::string& path);

// Validates the header totals, record order, group arithmetic, membership and
// canonical fixed points; load errors name the offending line.
CatalogFile read_catalog(const std::string& path);

// Classes per set size (|representative|).
std::map<uint64_t, uint64_t> size_class_counts(const CatalogFile& c);

struct AutTableRow {
    uint64_t perm_order = 0;  // P
    PermGroupType perm_type = PermGroupType::t1;
    uint64_t atop = 0;        // T
    uint64_t n_classes = 0;   // N
    uint64_t n_equiv_compl = 0;     // N'
    uint64_t n_isotopic_compl = 0;  // N''
    uint64_t n_splittable = 0;      // N*
};

// Rows keyed by |Aut| = P*T, sorted by T descending then P descending.
std::vector<AutTableRow> aut_table_rows(const CatalogFile& c);

struct FrequencyCubeReport {
    uint64_t code_classes = 0;            // N
    uint64_t code_isotopy_classes = 0;    // sum of n!/P
    uint64_t equiv_to_complement = 0;     // N'
    uint64_t isotopic_to_complement = 0;  // N''
    uint64_t splittable_classes = 0;      // N*
    uint64_t cube_classes = 0;            // (N+N')/2
    uint64_t cube_isotopy_classes = 0;    // sum of (N+N') n!/(2P)
};

FrequencyCubeReport frequency_cube_counts(const CatalogFile& c);

// The per-|Aut| table (with N, N', N'', N* columns) plus the derived
// frequency-cube quantities from its caption.
std::string render_aut_table(const CatalogFile& c);

// The unitrade-size table: class counts by size, unitrade and double-code
// columns side by side.
std::string render_size_table(const CatalogFile& unitrades, const CatalogFile& doublecodes);

}  // namespace freqcube
