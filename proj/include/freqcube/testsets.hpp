// Testing sets for double-MDS-codes: the trivial set {0,1,2}^n, sets derived
// from special unitrades via GF(2) rank extension, exhaustive verification,
// reconstruction from testing-set values, Cartesian-product sets, and the
// resulting upper bound on the number of codes.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "freqcube/codeset.hpp"

namespace freqcube {

enum class Provenance { trivial, derived, product };

const char* provenance_tag(Provenance p);

struct TestingSet {
    int n = 0;
    CodeSet points;
    Provenance provenance = Provenance::trivial;
};

// {0,1,2}^n, size 3^n.
TestingSet trivial_testing_set(int n);

// Dimension of the space of unitrades contained in D (2^kD unitrade subsets).
// Requires D to be a unitrade.
int compute_kD(const CodeSet& d);

// All 2^kD unitrades contained in D (kD <= 20 guard); includes the empty set.
std::vector<CodeSet> unitrade_subsets(const CodeSet& d);

struct SpecialUnitrade {
    CodeSet d;
    int k_d = 0;
};

// Scans unitrade class representatives with kD >= 2 for the hypothesis that
// no two distinct codes C1, C2 satisfy {} != C1 xor C2 subset of D, by testing
// C xor U for double-MDS-ness over all codes C and nonempty unitrades U in D.
std::vector<SpecialUnitrade> find_special_unitrades(const std::vector<CodeSet>& unitrade_reps,
                                                    const std::vector<CodeSet>& codes);

// Greedy rank extension over the complement of D (lexicographic point order);
// yields a testing set of size 3^n - kD disjoint from D.
TestingSet derive_testing_set(const CodeSet& d);

// True iff the fingerprints C cap T are pairwise distinct over `codes`.
bool verify_testing_set(const TestingSet& t, const std::vector<CodeSet>& codes);

// Solves A X = 0 with X restricted to T equal to `values` (a subset of T) and
// returns the unique double-MDS solution; nullopt when no candidate matches.
std::optional<CodeSet> reconstruct(const TestingSet& t, const CodeSet& values);

// Reconstruction by repeated line completion (each line of a double-MDS-code
// sums to 2); returns false if propagation stalls before covering all cells.
bool propagate_line_reconstruction(const TestingSet& t, const CodeSet& values, CodeSet& out);

// T^l in dimension 3l for a testing set T of dimension 3.
TestingSet product_testing_set(const TestingSet& t, int l);

struct UpperBound {
    double alpha = 0;       // alpha_n
    double bound_bits = 0;  // testing-set size; the count bound is 2^bound_bits
};

// n = 3l: 25^(l/n); n = 3l+1: (25^l*3)^(1/n); n = 3l+2: (25^l*9)^(1/n).
UpperBound upper_bound(int n);

// Serialization: header "n=<n> size=<size> provenance=<tag>" then one point
// per line, symbols space-separated, sorted.
std::string testing_set_to_string(const TestingSet& t);
TestingSet testing_set_from_string(std::string_view text);

}  // namespace freqcube
