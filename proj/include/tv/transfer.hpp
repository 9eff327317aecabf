// Column transfer-matrix engine for the triangle path model.
//
// The triangle is swept column by column, x = 1-m .. 0; the cut between
// columns carries the horizontal and diagonal crossing edges jointly.  Within
// a column, vertices are processed top to bottom and the vertical edge is
// threaded through the micro-state, so transitions are generated cell by cell
// instead of enumerating 4^m column transitions at once.  Only states
// reachable from the boundary are materialized.
//
// State key packing (m <= 12): bits [0,16) west horizontal edges by row,
// [16,32) west diagonal edges by row, [32,48) east horizontal edges emitted
// so far, [48,63) east diagonal edges, bit 63 the threaded vertical edge.
// Row y uses bit y of its field.  West bits of rows whose source vertex lies
// outside the domain hold the fixed boundary value.
#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "tv/lattice.hpp"

namespace tv {

constexpr int kTransferMaxM = 15;

struct TransferStep {
    int x, y;
    bool last_in_column;
};

inline std::vector<TransferStep> transfer_steps(int m) {
    std::vector<TransferStep> steps;
    for (int x = 1 - m; x <= 0; ++x)
        for (int y = m - 1; y >= -x; --y) steps.push_back({x, y, y == -x});
    return steps;
}

inline uint64_t pack_state(uint64_t wH, uint64_t wD, uint64_t eH, uint64_t eD, uint64_t v) {
    return wH | (wD << 16) | (eH << 32) | (eD << 48) | (v << 63);
}

inline int fixed_or_throw(const TriangleDomain& dom, Family f, int x, int y) {
    auto fv = dom.fixed_value(f, x, y);
    if (!fv) throw DomainMismatch("missing fixed boundary edge");
    return *fv;
}

inline uint64_t transfer_initial_key(const TriangleDomain& dom) {
    int m = dom.m;
    int x0 = 1 - m;
    uint64_t wH = static_cast<uint64_t>(fixed_or_throw(dom, Family::H, x0 - 1, m - 1)) << (m - 1);
    uint64_t wD = static_cast<uint64_t>(fixed_or_throw(dom, Family::D, x0 - 1, m)) << (m - 1);
    uint64_t v = static_cast<uint64_t>(fixed_or_throw(dom, Family::V, x0, m));
    return pack_state(wH, wD, 0, 0, v);
}

// Enumerates the admissible transitions of one vertex step.  The callback
// receives (next_key, vertex_class, out_mask).
template <class CB>
void vertex_transitions(const TriangleDomain& dom, const TransferStep& st, uint64_t key, CB cb) {
    int m = dom.m, x = st.x, y = st.y;
    uint64_t wH = key & 0xffffu, wD = (key >> 16) & 0xffffu;
    uint64_t eH = (key >> 32) & 0xffffu, eD = (key >> 48) & 0x7fffu;
    int v = static_cast<int>(key >> 63);
    int W = static_cast<int>((wH >> y) & 1), NW = static_cast<int>((wD >> y) & 1);
    int in = (W << 2) | (NW << 1) | v;
    const auto& cls_tab = vertex_class_table();
    auto fE = x == 0 ? dom.fixed_value(Family::H, 0, y) : std::nullopt;
    auto fSE = x == 0 ? dom.fixed_value(Family::D, 0, y) : std::nullopt;
    auto fS = st.last_in_column ? dom.fixed_value(Family::V, x, y) : std::nullopt;
    uint64_t wH2 = wH & ~(1ull << y), wD2 = wD & ~(1ull << y);
    for (int out = 0; out < 8; ++out) {
        int cls = cls_tab[static_cast<size_t>(in)][static_cast<size_t>(out)];
        if (cls < 0) continue;
        int E = (out >> 2) & 1, SE = (out >> 1) & 1, S = out & 1;
        if (fE && *fE != E) continue;
        if (fSE && *fSE != SE) continue;
        if (fS && *fS != S) continue;
        uint64_t eH2 = eH | (static_cast<uint64_t>(E) << y);
        uint64_t eD2 = eD;
        if (y > 0) eD2 |= static_cast<uint64_t>(SE) << (y - 1);
        uint64_t next;
        if (!st.last_in_column) {
            next = pack_state(wH2, wD2, eH2, eD2, static_cast<uint64_t>(S));
        } else if (x == 0) {
            next = 0;  // accepting state
        } else {
            // Re-key for column x+1: west edges = emitted east edges plus the
            // fixed boundary bits of the new bottom row and the top diagonal.
            uint64_t nwH = eH2 |
                (static_cast<uint64_t>(fixed_or_throw(dom, Family::H, x, -x - 1)) << (-x - 1));
            uint64_t nwD = eD2 |
                (static_cast<uint64_t>(fixed_or_throw(dom, Family::D, x, m)) << (m - 1));
            uint64_t nv = static_cast<uint64_t>(fixed_or_throw(dom, Family::V, x + 1, m));
            next = pack_state(nwH, nwD, 0, 0, nv);
        }
        cb(next, cls, out);
    }
}

// Full sweep; WeightFn(x, y, cls) -> Ring.  Returns the partition function.
template <class Ring, class WeightFn>
Ring transfer_sum(const TriangleDomain& dom, WeightFn weight) {
    if (dom.m > kTransferMaxM) throw SizeCapExceeded("transfer state exceeds key capacity");
    auto steps = transfer_steps(dom.m);
    std::unordered_map<uint64_t, Ring> layer;
    layer.emplace(transfer_initial_key(dom), Ring(1));
    for (const auto& st : steps) {
        std::unordered_map<uint64_t, Ring> next;
        for (const auto& [key, wgt] : layer) {
            vertex_transitions(dom, st, key, [&](uint64_t nk, int cls, int) {
                Ring contrib = wgt * weight(st.x, st.y, cls);
                auto it = next.find(nk);
                if (it == next.end())
                    next.emplace(nk, std::move(contrib));
                else
                    it->second += contrib;
            });
        }
        layer = std::move(next);
    }
    auto it = layer.find(0);
    return it == layer.end() ? Ring(0) : it->second;
}

}  // namespace tv
