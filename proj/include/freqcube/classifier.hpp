// Layer-extension classification of double-MDS-codes, unitrades and
// double-codes with isomorph rejection, plus the double-counting validation:
// step 1 picks first layers from the previous level's class representatives,
// step 2 reduces (first,second)-layer pairs to semi-code classes, step 3
// extends every semi-code representative by all third layers, completes the
// fourth layer, and deduplicates by canonical form.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "freqcube/canonical.hpp"
#include "freqcube/codeset.hpp"

namespace freqcube {

struct ClassRecord {
    int n = 0;
    CodeSet representative;
    GroupSummary group;
    uint64_t class_size = 0;
    bool equiv_to_complement = false;
    bool isotopic_to_complement = false;
    bool splittable = false;  // computed when the representative is a plain double-code
};

struct SemiCodeClass {
    CodeSet layer1, layer2;  // canonical pair representative
    uint64_t count = 0;       // M_i: semi-codes in the class
    uint64_t completions = 0; // R_i: continuations to a full member
};

struct Classification {
    int n = 0;
    Kind kind = Kind::double_mds;
    uint64_t total = 0;  // sum of class sizes, Eq.(2)
    std::vector<ClassRecord> classes;         // sorted by representative
    std::vector<SemiCodeClass> semi_classes;  // empty for n == 1
    uint64_t total_via_semis = 0;             // Eq.(1)
    uint64_t isotopy_classes = 0;             // sum over classes of n!/P
};

struct ClassifyOptions {
    int shards = 1;
    std::string journal_path;  // checkpoint journal for long runs; empty = none
    bool resume = false;
    bool verbose = false;
};

// Semi-code equivalence group: permutations of the first n-1 coordinates,
// symbol permutations in those coordinates, and the layer swap.
uint64_t semi_group_order(int n);

Classification classify(int n, Kind kind, const ClassifyOptions& opt = {});

// Every member of the family (orbit expansion of the classes), sorted.
// Validates orbit sizes against class sizes.
std::vector<CodeSet> expand_all(const Classification& c);

// Canonical-form lookup for every family member, usable as search cache.
// Only for n <= 3.
void populate_cache(CanonCache& cache, const Classification& c);

struct DoubleCountCheck {
    uint64_t via_semis = 0;    // Eq.(1): sum of M_i * R_i
    uint64_t via_classes = 0;  // Eq.(2): sum of 24^n n!/|Aut|
    bool equal = false;
};
DoubleCountCheck validate_double_count(const Classification& c);

// Fourth layer of a double-MDS-code from the first three (per-cell 2 - sum);
// nullopt when some cell forces a value outside {0,1}.  Inputs must be
// double-MDS; the assembled code is checked before returning.
std::optional<CodeSet> complete_fourth_layer(const CodeSet& l1, const CodeSet& l2,
                                             const CodeSet& l3);

// Stacks four (n-1)-dimensional layers along a new last coordinate.
CodeSet assemble_layers(const std::array<CodeSet, 4>& layers);

}  // namespace freqcube
