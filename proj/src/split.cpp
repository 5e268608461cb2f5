#include "freqcube/split.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace freqcube {

int edge_color(int a, int b) {
    if (a == b || a < 0 || a > 3 || b < 0 || b > 3) throw std::invalid_argument("bad edge values");
    int x = a ^ b;  // 1 -> {0,1}/{2,3}, 2 -> {0,2}/{1,3}, 3 -> {0,3}/{1,2}
    return x;
}

namespace {

// Neighbors of p inside s (same line, differing coordinate).
void neighbors(const CodeSet& s, uint32_t p, std::vector<uint32_t>& out) {
    out.clear();
    int n = s.dim();
    for (int d = 0; d < n; d++) {
        int pv = point_coord(n, p, d);
        uint32_t stride = coord_stride(n, d);
        uint32_t base = p - static_cast<uint32_t>(pv) * stride;
        for (int v = 0; v < 4; v++) {
            if (v == pv) continue;
            uint32_t q = base + static_cast<uint32_t>(v) * stride;
            if (s.test(q)) out.push_back(q);
        }
    }
}

}  // namespace

SplitResult is_splittable(const CodeSet& s) {
    if (!classify_set(s).is_double_code) {
        throw std::invalid_argument("is_splittable requires a double-code");
    }
    int n = s.dim();
    uint64_t cells = s.cells();
    std::vector<int8_t> color(cells, -1);
    std::vector<int32_t> parent(cells, -1);
    std::vector<int32_t> depth(cells, 0);
    std::vector<uint32_t> queue;
    std::vector<uint32_t> nbr;

    SplitResult res;
    for (uint32_t start = 0; start < cells; start++) {
        if (!s.test(start) || color[start] >= 0) continue;
        color[start] = 0;
        queue.clear();
        queue.push_back(start);
        for (size_t h = 0; h < queue.size(); h++) {
            uint32_t u = queue[h];
            neighbors(s, u, nbr);
            for (uint32_t v : nbr) {
                if (color[v] < 0) {
                    color[v] = static_cast<int8_t>(1 - color[u]);
                    parent[v] = static_cast<int32_t>(u);
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // odd cycle: splice the two tree paths at their meeting point
                    std::vector<uint32_t> pu, pv;  // u,v upward, excluding the meet
                    uint32_t a = u, b = v;
                    while (depth[a] > depth[b]) {
                        pu.push_back(a);
                        a = static_cast<uint32_t>(parent[a]);
                    }
                    while (depth[b] > depth[a]) {
                        pv.push_back(b);
                        b = static_cast<uint32_t>(parent[b]);
                    }
                    while (a != b) {
                        pu.push_back(a);
                        pv.push_back(b);
                        a = static_cast<uint32_t>(parent[a]);
                        b = static_cast<uint32_t>(parent[b]);
                    }
                    // meet, down to u, across the conflict edge, up from v
                    res.splittable = false;
                    res.witness_cycle.clear();
                    res.witness_cycle.push_back(a);
                    for (auto it = pu.rbegin(); it != pu.rend(); ++it) res.witness_cycle.push_back(*it);
                    for (uint32_t x : pv) res.witness_cycle.push_back(x);
                    assert(res.witness_cycle.size() % 2 == 1);
                    return res;
                }
            }
        }
    }
    res.splittable = true;
    CodeSet p0(n), p1(n);
    for (uint32_t p = 0; p < cells; p++) {
        if (!s.test(p)) continue;
        (color[p] == 0 ? p0 : p1).set(p);
    }
    res.parts = {p0, p1};
    return res;
}

bool odd_cycle_color_check(int n, const std::vector<uint32_t>& cycle) {
    size_t len = cycle.size();
    if (len < 3) throw std::invalid_argument("cycle too short");
    std::unordered_set<uint32_t> seen(cycle.begin(), cycle.end());
    if (seen.size() != len) throw std::invalid_argument("repeated vertex; not a cycle");
    std::vector<std::array<bool, 4>> colors(static_cast<size_t>(n), {false, false, false, false});
    for (size_t i = 0; i < len; i++) {
        uint32_t a = cycle[i], b = cycle[(i + 1) % len];
        int dir = -1;
        for (int d = 0; d < n; d++) {
            if (point_coord(n, a, d) != point_coord(n, b, d)) {
                if (dir >= 0) throw std::invalid_argument("consecutive points differ in two coordinates");
                dir = d;
            }
        }
        if (dir < 0) throw std::invalid_argument("repeated consecutive point");
        colors[dir][edge_color(point_coord(n, a, dir), point_coord(n, b, dir))] = true;
    }
    for (int d = 0; d < n; d++) {
        if (colors[d][1] && colors[d][2] && colors[d][3]) return true;
    }
    return false;
}

CodeSet construct_nonsplittable(int n) {
    if (n < 3 || n > kMaxDim) throw std::invalid_argument("construction requires 3 <= n <= 8");
    static const int alpha[4] = {1, 1, 0, 0};
    static const int beta[4] = {1, 0, 1, 0};
    static const int gamma[4] = {0, 1, 1, 0};
    CodeSet m(n);
    uint64_t cells = cell_count(n);
    for (uint32_t p = 0; p < cells; p++) {
        int sum = 0;
        int twos_prefix = 0;
        bool prefix_form = true;  // sector of shape 2^k 0^(n-1-k)
        bool in_prefix = true;
        bool all_zero = true, all_two = true;
        for (int i = 0; i < n - 1; i++) {
            int x = point_coord(n, p, i);
            sum += x;
            int sec = x & 2;
            if (sec == 2) {
                all_zero = false;
                if (in_prefix) twos_prefix++;
                else prefix_form = false;
            } else {
                all_two = false;
                in_prefix = false;
            }
        }
        int xn = point_coord(n, p, n - 1);
        int f;
        if (all_zero) f = (sum + alpha[xn]) & 1;
        else if (all_two) f = (sum + gamma[xn]) & 1;
        else if (prefix_form && twos_prefix >= 1 && twos_prefix <= n - 2) f = (sum + beta[xn] + 1) & 1;
        else f = (sum + beta[xn]) & 1;
        if (f) m.set(p);
    }
    return m;
}

std::vector<uint32_t> construction_cycle(int n) {
    if (n < 3) throw std::invalid_argument("construction cycle requires n >= 3");
    auto pt = [n](const std::vector<int>& coords) {
        uint32_t idx = 0;
        for (int c : coords) idx = idx * 4 + static_cast<uint32_t>(c);
        return idx;
    };
    std::vector<uint32_t> cyc;
    std::vector<int> v(static_cast<size_t>(n), 0);
    cyc.push_back(pt(v));  // (0,...,0,0)
    v[n - 1] = 1;
    cyc.push_back(pt(v));  // (0,...,0,1)
    for (int k = 1; k <= n - 2; k++) {  // (2..2,0..0,1), k twos
        v[k - 1] = 2;
        cyc.push_back(pt(v));
    }
    for (int i = 0; i < n - 1; i++) v[i] = 2;
    cyc.push_back(pt(v));  // (2,...,2,1)
    v[n - 1] = 2;
    cyc.push_back(pt(v));  // (2,...,2,2)
    v[0] = 0;
    cyc.push_back(pt(v));  // (0,2,...,2,2)
    v[n - 1] = 0;
    cyc.push_back(pt(v));  // (0,2,...,2,0)
    for (int k = 2; k <= n - 2; k++) {  // (0^k,2...,2,0)
        v[k - 1] = 0;
        cyc.push_back(pt(v));
    }
    assert(cyc.size() == static_cast<size_t>(2 * n + 1));
    return cyc;
}

LayerCensus layer_splittability_census(const std::vector<CodeSet>& reps) {
    LayerCensus census;
    census.rows.resize(reps.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int64_t i = 0; i < static_cast<int64_t>(reps.size()); i++) {
        const CodeSet& s = reps[static_cast<size_t>(i)];
        LayerCensusRow row;
        row.code_splittable = is_splittable(s).splittable;
        row.all_layers_splittable = true;
        for (int d = 0; d < s.dim() && row.all_layers_splittable; d++) {
            for (int v = 0; v < 4; v++) {
                if (!is_splittable(s.layer(d, v)).splittable) {
                    row.all_layers_splittable = false;
                    break;
                }
            }
        }
        census.rows[static_cast<size_t>(i)] = row;
    }
    for (const auto& row : census.rows) {
        if (row.all_layers_splittable && !row.code_splittable) census.exceptional++;
        if (!row.all_layers_splittable && row.code_splittable) census.bad_layer_violations++;
    }
    return census;
}

}  // namespace freqcube
