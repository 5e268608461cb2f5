#include "freqcube/classifier.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "freqcube/parallel.hpp"
#include "freqcube/split.hpp"

namespace freqcube {

namespace {

constexpr uint64_t kMaxExpandable = 1u << 22;  // previous-level family size cap

uint64_t tail_mask_bits(int n) {
    uint64_t cells = cell_count(n);
    return cells >= 64 ? ~0ull : ~0ull << (64 - cells);
}

struct PairKey {
    CodeSet a, b;
    bool operator<(const PairKey& o) const {
        if (auto c = a <=> o.a; c != 0) return c < 0;
        return b < o.b;
    }
    bool operator==(const PairKey& o) const = default;
};

ClassRecord finalize_record(const CodeSet& rep, Kind kind, const CanonCache* cache) {
    auto [canon, summary] = canonical_form(rep, cache);
    if (canon != rep) throw std::runtime_error("representative is not a canonical fixed point");
    if (!in_family(rep, kind)) throw std::runtime_error("representative fails its membership test");
    ClassRecord r;
    r.n = rep.dim();
    r.representative = rep;
    r.group = summary;
    r.class_size = summary.class_size(rep.dim());
    auto [equiv, isot] = complement_flags(rep, cache);
    r.equiv_to_complement = equiv;
    r.isotopic_to_complement = isot;
    r.splittable = classify_set(rep).is_double_code && is_splittable(rep).splittable;
    return r;
}

void finish_classification(Classification& c, std::vector<CodeSet> reps, const CanonCache* cache) {
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    c.classes.resize(reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(reps.size()); i++) {
        c.classes[static_cast<size_t>(i)] = finalize_record(reps[static_cast<size_t>(i)], c.kind, cache);
    }
    uint64_t fact = 1;
    for (int i = 2; i <= c.n; i++) fact *= static_cast<uint64_t>(i);
    c.total = 0;
    c.isotopy_classes = 0;
    for (const ClassRecord& r : c.classes) {
        c.total += r.class_size;
        if (fact % r.group.perm_group_order != 0) {
            throw std::runtime_error("coordinate group order does not divide n!");
        }
        c.isotopy_classes += fact / r.group.perm_group_order;
    }
}

Classification classify_base(Kind kind) {
    Classification c;
    c.n = 1;
    c.kind = kind;
    std::vector<CodeSet> reps;
    uint64_t members = 0;
    for (uint32_t bits = 0; bits < 16; bits++) {
        CodeSet s(1);
        for (int v = 0; v < 4; v++) {
            if ((bits >> v) & 1) s.set(static_cast<uint32_t>(v));
        }
        if (!in_family(s, kind)) continue;
        members++;
        reps.push_back(canonical_search(s).canon);
    }
    finish_classification(c, std::move(reps), nullptr);
    if (c.total != members) throw std::runtime_error("base case class sizes disagree with enumeration");
    c.total_via_semis = c.total;  // no semi-code stage at the recursion floor
    return c;
}

// Journal: "meta ..." header, then "semi <hex1> <hex2> <M>" lines closed by
// "semis_done", then per completed shard "R <i> <Ri>" / "rec <hex>" lines
// closed by "shard_done <s>".  Lines after the last shard_done belong to an
// interrupted shard and are discarded on resume.
struct Journal {
    std::string meta;
    bool semis_done = false;
    std::vector<SemiCodeClass> semis;
    std::vector<bool> shard_done;
    std::vector<std::pair<uint64_t, uint64_t>> r_values;  // class index -> R
    std::vector<CodeSet> recs;

    static std::string meta_line(int n, Kind kind, int shards, uint64_t prev_total) {
        std::ostringstream os;
        os << "meta n=" << n << " kind=" << kind_name(kind) << " shards=" << shards
           << " prev_total=" << prev_total;
        return os.str();
    }

    static Journal load(const std::string& path, const std::string& expect_meta, int shards) {
        Journal j;
        j.shard_done.assign(static_cast<size_t>(shards), false);
        std::ifstream in(path);
        if (!in) return j;
        std::string line;
        std::vector<std::pair<uint64_t, uint64_t>> pend_r;
        std::vector<CodeSet> pend_recs;
        bool meta_ok = false;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            std::istringstream is(line);
            std::string tag;
            is >> tag;
            if (tag == "meta") {
                meta_ok = (line == expect_meta);
                if (!meta_ok) {
                    std::cerr << "journal meta mismatch; ignoring journal\n";
                    return Journal{};
                }
            } else if (!meta_ok) {
                return Journal{};
            } else if (tag == "semi") {
                std::string h1, h2;
                uint64_t m;
                is >> h1 >> h2 >> m;
                SemiCodeClass sc;
                sc.layer1 = CodeSet::from_hex(h1);
                sc.layer2 = CodeSet::from_hex(h2);
                sc.count = m;
                j.semis.push_back(std::move(sc));
            } else if (tag == "semis_done") {
                j.semis_done = true;
            } else if (tag == "R") {
                uint64_t i, r;
                is >> i >> r;
                pend_r.emplace_back(i, r);
            } else if (tag == "rec") {
                std::string h;
                is >> h;
                pend_recs.push_back(CodeSet::from_hex(h));
            } else if (tag == "shard_done") {
                int s;
                is >> s;
                if (s >= 0 && s < shards) j.shard_done[static_cast<size_t>(s)] = true;
                j.r_values.insert(j.r_values.end(), pend_r.begin(), pend_r.end());
                j.recs.insert(j.recs.end(), pend_recs.begin(), pend_recs.end());
                pend_r.clear();
                pend_recs.clear();
            }
        }
        if (!j.semis_done) {
            Journal fresh;
            fresh.shard_done.assign(static_cast<size_t>(shards), false);
            return fresh;
        }
        return j;
    }
};

CodeSet xor3(const CodeSet& a, const CodeSet& b, const CodeSet& c) {
    return a.sym_diff(b).sym_diff(c);
}

}  // namespace

uint64_t semi_group_order(int n) {
    uint64_t ord = 2;  // layer swap
    for (int i = 0; i < n - 1; i++) ord *= 24;
    for (int i = 2; i <= n - 1; i++) ord *= static_cast<uint64_t>(i);
    return ord;
}

std::optional<CodeSet> complete_fourth_layer(const CodeSet& l1, const CodeSet& l2,
                                             const CodeSet& l3) {
    if (l1.dim() != l2.dim() || l1.dim() != l3.dim()) {
        throw std::invalid_argument("layers must share a dimension");
    }
    if (!in_family(l1, Kind::double_mds) || !in_family(l2, Kind::double_mds) ||
        !in_family(l3, Kind::double_mds)) {
        throw std::invalid_argument("complete_fourth_layer expects double-MDS layers");
    }
    int d = l1.dim();
    auto w1 = l1.words(), w2 = l2.words(), w3 = l3.words();
    uint64_t tail = tail_mask_bits(d);
    for (size_t i = 0; i < w1.size(); i++) {
        uint64_t t = (i + 1 == w1.size()) ? tail : ~0ull;
        uint64_t all3 = w1[i] & w2[i] & w3[i];
        uint64_t none = ~(w1[i] | w2[i] | w3[i]) & t;
        if (all3 | none) return std::nullopt;  // some cell sums to 3 or 0
    }
    CodeSet l4 = xor3(l1, l2, l3);  // 2 - s == s mod 2 on cells with s in {1,2}
    CodeSet full = assemble_layers({l1, l2, l3, l4});
    if (!in_family(full, Kind::double_mds)) {
        throw std::runtime_error("completed code failed the double-MDS check");
    }
    return l4;
}

CodeSet assemble_layers(const std::array<CodeSet, 4>& layers) {
    int d = layers[0].dim();
    for (const CodeSet& l : layers) {
        if (l.dim() != d) throw std::invalid_argument("layers must share a dimension");
    }
    CodeSet s(d + 1);
    uint64_t sub = cell_count(d);
    for (int v = 0; v < 4; v++) {
        for (uint32_t q = 0; q < sub; q++) {
            if (layers[static_cast<size_t>(v)].test(q)) s.set(q * 4 + static_cast<uint32_t>(v));
        }
    }
    return s;
}

std::vector<CodeSet> expand_all(const Classification& c) {
    if (c.total > kMaxExpandable) {
        throw std::runtime_error("family too large to expand (" + std::to_string(c.total) + " members)");
    }
    std::vector<CodeSet> all;
    all.reserve(c.total);
    for (const ClassRecord& r : c.classes) {
        std::vector<CodeSet> orbit = expand_orbit(r.representative);
        if (orbit.size() != r.class_size) {
            throw std::runtime_error("orbit size disagrees with 24^n n!/|Aut|");
        }
        all.insert(all.end(), orbit.begin(), orbit.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::runtime_error("classes overlap");
    }
    return all;
}

void populate_cache(CanonCache& cache, const Classification& c) {
    if (c.n > 3) throw std::invalid_argument("cache covers dimensions 1..3 only");
    auto& m = cache.by_dim[c.n];
    m.reserve(c.total);
    for (const ClassRecord& r : c.classes) {
        uint64_t rep = r.representative.words()[0];
        for (const CodeSet& s : expand_orbit(r.representative)) m.emplace(s.words()[0], rep);
    }
}

DoubleCountCheck validate_double_count(const Classification& c) {
    DoubleCountCheck d;
    d.via_classes = 0;
    for (const ClassRecord& r : c.classes) d.via_classes += r.class_size;
    d.via_semis = 0;
    if (c.n == 1) {
        d.via_semis = d.via_classes;
    } else {
        for (const SemiCodeClass& s : c.semi_classes) d.via_semis += s.count * s.completions;
    }
    d.equal = d.via_semis == d.via_classes;
    return d;
}

Classification classify(int n, Kind kind, const ClassifyOptions& opt) {
    if (n < 1 || n > 4) throw std::invalid_argument("classification supports n in [1,4]");
    if (n == 1) return classify_base(kind);

    Classification prev = classify(n - 1, kind, ClassifyOptions{});
    std::vector<CodeSet> members = expand_all(prev);

    // canonical forms of every lower level back the search lower bounds
    CanonCache cache;
    populate_cache(cache, prev);
    for (int d = n - 2; d >= 2; d--) populate_cache(cache, classify(d, kind, ClassifyOptions{}));

    Classification c;
    c.n = n;
    c.kind = kind;

    int shards = std::max(1, opt.shards);
    std::string meta = Journal::meta_line(n, kind, shards, prev.total);
    Journal journal;
    if (!opt.journal_path.empty() && opt.resume) {
        journal = Journal::load(opt.journal_path, meta, shards);
    }
    if (journal.shard_done.size() != static_cast<size_t>(shards)) {
        journal.shard_done.assign(static_cast<size_t>(shards), false);
    }

    std::ofstream jout;
    if (!opt.journal_path.empty()) {
        bool fresh = !journal.semis_done;
        jout.open(opt.journal_path, fresh ? std::ios::trunc : std::ios::app);
        if (!jout) throw std::runtime_error("cannot open journal " + opt.journal_path);
        if (fresh) jout << meta << "\n";
    }

    // Steps 1-2: semi-code classes over (class representative, any member).
    if (journal.semis_done) {
        c.semi_classes = std::move(journal.semis);
        if (opt.verbose) std::cerr << "resumed " << c.semi_classes.size() << " semi-code classes\n";
    } else {
        size_t a = prev.classes.size(), nmem = members.size();
        size_t total_pairs = a * nmem;
        int nthreads = max_threads();
        std::vector<std::map<PairKey, uint64_t>> locals(static_cast<size_t>(nthreads));
        uint64_t group = semi_group_order(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64)
#endif
        for (int64_t k = 0; k < static_cast<int64_t>(total_pairs); k++) {
            const CodeSet& first = prev.classes[static_cast<size_t>(k) / nmem].representative;
            const CodeSet& second = members[static_cast<size_t>(k) % nmem];
            SearchOptions sopt;
            sopt.count_stabilizers = true;
            sopt.cache = &cache;
            PairSearchResult pr = canonical_search_pair(first, second, sopt);
            auto& local = locals[static_cast<size_t>(thread_index())];
            local.emplace(PairKey{pr.first, pr.second}, group / pr.stabilizer_order);
        }
        std::map<PairKey, uint64_t> merged;
        for (auto& local : locals) merged.merge(local);
        c.semi_classes.reserve(merged.size());
        for (auto& [key, m] : merged) {
            SemiCodeClass sc;
            sc.layer1 = key.a;
            sc.layer2 = key.b;
            sc.count = m;
            c.semi_classes.push_back(std::move(sc));
        }
        uint64_t msum = 0;
        for (const auto& sc : c.semi_classes) msum += sc.count;
        if (msum != prev.total * prev.total) {
            throw std::runtime_error("semi-code class sizes do not sum to N^2");
        }
        if (jout) {
            for (const auto& sc : c.semi_classes) {
                jout << "semi " << sc.layer1.to_hex() << " " << sc.layer2.to_hex() << " " << sc.count
                     << "\n";
            }
            jout << "semis_done\n" << std::flush;
        }
    }
    if (opt.verbose) {
        std::cerr << "n=" << n << " " << kind_name(kind) << ": " << prev.classes.size()
                  << " first layers, " << members.size() << " members, " << c.semi_classes.size()
                  << " semi-code classes\n";
    }

    // Step 3: extend every semi-code representative by all third layers.
    std::vector<CodeSet> reps(journal.recs.begin(), journal.recs.end());
    for (auto [i, r] : journal.r_values) {
        if (i < c.semi_classes.size()) c.semi_classes[i].completions = r;
    }
    bool dmds = kind == Kind::double_mds;
    uint64_t tail = tail_mask_bits(n - 1);
    for (int shard = 0; shard < shards; shard++) {
        if (journal.shard_done[static_cast<size_t>(shard)]) continue;
        std::vector<size_t> idx;
        for (size_t i = static_cast<size_t>(shard); i < c.semi_classes.size();
             i += static_cast<size_t>(shards)) {
            idx.push_back(i);
        }
        int nthreads = max_threads();
        std::vector<std::vector<CodeSet>> found(static_cast<size_t>(nthreads));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (int64_t ii = 0; ii < static_cast<int64_t>(idx.size()); ii++) {
            SemiCodeClass& sc = c.semi_classes[idx[static_cast<size_t>(ii)]];
            auto& local = found[static_cast<size_t>(thread_index())];
            std::unordered_set<CodeSet, CodeSetHash> seen;
            uint64_t r = 0;
            const uint64_t* w1 = sc.layer1.words().data();
            const uint64_t* w2 = sc.layer2.words().data();
            size_t nw = sc.layer1.words().size();
            for (const CodeSet& third : members) {
                if (dmds) {
                    const uint64_t* w3 = third.words().data();
                    bool bad = false;
                    for (size_t i = 0; i < nw && !bad; i++) {
                        uint64_t t = (i + 1 == nw) ? tail : ~0ull;
                        if ((w1[i] & w2[i] & w3[i]) | (~(w1[i] | w2[i] | w3[i]) & t)) bad = true;
                    }
                    if (bad) continue;
                }
                CodeSet fourth = xor3(sc.layer1, sc.layer2, third);
                CodeSet full = assemble_layers({sc.layer1, sc.layer2, third, fourth});
                if (!in_family(full, kind)) continue;
                r++;
                SearchOptions sopt;
                sopt.cache = &cache;
                CodeSet canon = canonical_search(full, sopt).canon;
                if (seen.insert(canon).second) local.push_back(std::move(canon));
            }
            sc.completions = r;
        }
        std::vector<CodeSet> shard_finds;
        for (auto& local : found) shard_finds.insert(shard_finds.end(), local.begin(), local.end());
        std::sort(shard_finds.begin(), shard_finds.end());
        shard_finds.erase(std::unique(shard_finds.begin(), shard_finds.end()), shard_finds.end());
        if (jout) {
            for (size_t i : idx) jout << "R " << i << " " << c.semi_classes[i].completions << "\n";
            for (const CodeSet& s : shard_finds) jout << "rec " << s.to_hex() << "\n";
            jout << "shard_done " << shard << "\n" << std::flush;
        }
        reps.insert(reps.end(), shard_finds.begin(), shard_finds.end());
        if (opt.verbose) {
            std::cerr << "shard " << shard + 1 << "/" << shards << " done, " << reps.size()
                      << " reps so far\n";
        }
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    finish_classification(c, std::move(reps), &cache);
    c.total_via_semis = 0;
    for (const SemiCodeClass& sc : c.semi_classes) c.total_via_semis += sc.count * sc.completions;
    return c;
}

}  // namespace freqcube
