// OpenMP helpers and data-parallel batch kernels.  Each kernel has a serial
// twin used as the reference in tests and in the benchmark tool.

#pragma once

#include <cstdlib>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "freqcube/canonical.hpp"
#include "freqcube/codeset.hpp"

namespace freqcube {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline int thread_index() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

// Honors FREQCUBE_THREADS when set.
inline void set_threads_from_env() {
#ifdef _OPENMP
    if (const char* env = std::getenv("FREQCUBE_THREADS")) {
        int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
#endif
}

inline std::vector<CodeSet> canonicalize_batch_serial(std::span<const CodeSet> sets,
                                                      const CanonCache* cache = nullptr) {
    std::vector<CodeSet> out(sets.size());
    SearchOptions opt;
    opt.cache = cache;
    for (size_t i = 0; i < sets.size(); i++) out[i] = canonical_search(sets[i], opt).canon;
    return out;
}

inline std::vector<CodeSet> canonicalize_batch(std::span<const CodeSet> sets,
                                               const CanonCache* cache = nullptr) {
    std::vector<CodeSet> out(sets.size());
    SearchOptions opt;
    opt.cache = cache;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(sets.size()); i++) {
        out[static_cast<size_t>(i)] = canonical_search(sets[static_cast<size_t>(i)], opt).canon;
    }
    return out;
}

inline std::vector<SetKind> classify_batch_serial(std::span<const CodeSet> sets) {
    std::vector<SetKind> out(sets.size());
    for (size_t i = 0; i < sets.size(); i++) out[i] = classify_set(sets[i]);
    return out;
}

inline std::vector<SetKind> classify_batch(std::span<const CodeSet> sets) {
    std::vector<SetKind> out(sets.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(sets.size()); i++) {
        out[static_cast<size_t>(i)] = classify_set(sets[static_cast<size_t>(i)]);
    }
    return out;
}

}  // namespace freqcube
