// Equivalence transforms of H(n,4) and exact minimum-image canonical forms.
//
// A transform is a coordinate permutation sigma together with one symbol
// permutation per coordinate.  (sigma, thetas) maps x to y with
// y_i = theta_{sigma^-1(i)}(x_{sigma^-1(i)}), i.e. symbol permutations act
// first, then coordinates move.  The canonical form of a set is the
// lexicographically least bit vector in its orbit; the search is an exact
// branch-and-bound over the 24^n * n! transforms with two lower bounds per
// branch (segment popcounts, and memoized canonical forms of the layers).

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "freqcube/codeset.hpp"

namespace freqcube {

using SymbolPerm = std::array<uint8_t, 4>;
using CoordPerm = std::array<uint8_t, kMaxDim>;

struct Transform {
    int n = 0;
    CoordPerm sigma{};                  // sigma[j] = output coordinate of input coordinate j
    std::array<SymbolPerm, kMaxDim> thetas{};

    static Transform identity(int n);
    Transform inverse() const;
};

// compose(a, b) applies b first: apply(compose(a,b), S) == apply(a, apply(b, S)).
Transform compose(const Transform& a, const Transform& b);
CodeSet apply(const Transform& t, const CodeSet& s);
Transform random_transform(int n, std::mt19937_64& rng);
Transform random_isotopy(int n, std::mt19937_64& rng);

// All 24 permutations of {0,1,2,3}, in lexicographic order.
const std::array<SymbolPerm, 24>& all_symbol_perms();

// Memoized solo canonical forms of low-dimensional sets (dims 1..3), used as
// branch lower bounds.  Read-only during parallel phases once prepopulated.
struct CanonCache {
    std::unordered_map<uint64_t, uint64_t> by_dim[4];  // index = dim (1..3)
};

struct SearchOptions {
    bool isotopy_only = false;      // restrict to identity coordinate permutation
    bool count_stabilizers = false; // exact |Aut| (or |Atop|) of the input
    bool collect_sigmas = false;    // also collect coordinate perms of Aut
    const CanonCache* cache = nullptr;
};

struct SearchResult {
    CodeSet canon;
    uint64_t stabilizer_order = 0;           // valid when count_stabilizers
    std::vector<CoordPerm> aut_sigmas;       // image of Aut in S_n (deduped), when collected
};

// Exact minimum image over the full group (or isotopies only).  dim <= 4.
SearchResult canonical_search(const CodeSet& s, const SearchOptions& opt = {});

// Minimum image of an ordered pair of (n-1)-dimensional layers under
// coordinate permutations, per-coordinate symbol permutations and the layer
// swap; this is the semi-code equivalence group of the classifier.
struct PairSearchResult {
    CodeSet first, second;
    uint64_t stabilizer_order = 0;
};
PairSearchResult canonical_search_pair(const CodeSet& l1, const CodeSet& l2,
                                       const SearchOptions& opt = {});

// Orbit of a set under the full group (breadth-first closure over generators).
std::vector<CodeSet> expand_orbit(const CodeSet& s);

// Group order 24^n * n!.
uint64_t full_group_order(int n);
uint64_t isotopy_group_order(int n);

enum class PermGroupType { t1, t2p, t2pp, t3, t4p, t4pp, t4c, t6, t8, t12, t24 };

// ASCII label: 1, 2', 2'', 3, 4', 4'', 4o, 6, 8, 12, 24.
std::string perm_group_type_label(PermGroupType t);
PermGroupType perm_group_type_from_label(std::string_view label);

// Classifies the projection of Aut to S_n from the actual permutations:
// accented types need the group elements, not just the order.
PermGroupType classify_perm_group(const std::vector<CoordPerm>& group, int n);

struct GroupSummary {
    uint64_t aut_order = 0;
    uint64_t atop_order = 0;
    uint64_t perm_group_order = 0;  // aut/atop
    PermGroupType perm_group_type = PermGroupType::t1;

    uint64_t class_size(int n) const { return full_group_order(n) / aut_order; }
};

// Canonical representative plus exact group data.
std::pair<CodeSet, GroupSummary> canonical_form(const CodeSet& s, const CanonCache* cache = nullptr);

CodeSet isotopy_canonical_form(const CodeSet& s, const CanonCache* cache = nullptr);

// (equivalent to complement, isotopic to complement).
std::pair<bool, bool> complement_flags(const CodeSet& s, const CanonCache* cache = nullptr);

}  // namespace freqcube
