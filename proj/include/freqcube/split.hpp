// Splittability of double-codes: bipartiteness of the induced subgraph of
// H(n,4), odd-cycle witnesses and their edge-color structure, and the
// construction of non-splittable double-MDS-codes whose layers all split.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freqcube/codeset.hpp"

namespace freqcube {

// Edge colors by the unordered value pair in the differing coordinate:
// {0,1},{2,3} -> 1;  {0,2},{1,3} -> 2;  {0,3},{1,2} -> 3.
int edge_color(int a, int b);

struct SplitResult {
    bool splittable = false;
    std::optional<std::pair<CodeSet, CodeSet>> parts;
    std::vector<uint32_t> witness_cycle;  // odd cycle when not splittable
};

// Requires a double-code (lines meet in 0 or 2 points).
SplitResult is_splittable(const CodeSet& s);

// True iff some direction contributes edges of all three colors.
// Throws when the sequence is not a cycle of H(n,4).
bool odd_cycle_color_check(int n, const std::vector<uint32_t>& cycle);

// Non-splittable double-MDS-code of dimension n >= 3 whose 4n layers are all
// splittable; built from the sector functions alpha/beta/gamma.
CodeSet construct_nonsplittable(int n);

// The embedded odd cycle of length 2n+1 used by the construction.
std::vector<uint32_t> construction_cycle(int n);

struct LayerCensusRow {
    bool code_splittable = false;
    bool all_layers_splittable = false;
};

struct LayerCensus {
    std::vector<LayerCensusRow> rows;
    uint64_t exceptional = 0;        // all layers splittable, code not
    uint64_t bad_layer_violations = 0;  // some layer non-splittable but code splittable
};

// Census over representatives (each must be a double-code).
LayerCensus layer_splittability_census(const std::vector<CodeSet>& reps);

}  // namespace freqcube
