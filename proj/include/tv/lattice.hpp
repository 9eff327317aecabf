// Triangular domain, boundary conditions, path configurations, vertex
// classification and lattice transformations for the twenty-vertex model.
//
// Geometry: the triangle of size m has vertices (x, y) with 0 <= y <= m-1 and
// max(1-m, -y) <= x <= 0; the origin is the bottom-right corner, (0, m-1) the
// top-right corner and (1-m, m-1) the top-left one.  Edge families:
//   H(x, y): (x, y) -> (x+1, y)      horizontal step
//   D(x, y): (x, y) -> (x+1, y-1)    diagonal step
//   V(x, y): (x, y) -> (x, y-1)      vertical step
// A configuration assigns an occupancy 0/1 to every edge; the ice rule says
// that at each vertex the number of occupied incoming edges (W, NW, N) equals
// the number of occupied outgoing edges (E, SE, S).
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "tv/errors.hpp"

namespace tv {

enum class Bc { Dwbc1, Dwbc2, Dwbc3 };

enum class Family : int { H = 0, D = 1, V = 2 };

// Edge key used in the fixed-boundary tables.
using EdgeKey = std::tuple<int, int, int>;  // (family, x, y)

inline EdgeKey edge_key(Family f, int x, int y) {
    return {static_cast<int>(f), x, y};
}

struct TriangleDomain {
    int m = 0;
    Bc bc = Bc::Dwbc3;
    // Fixed external edge occupancies (boundary conditions).
    std::map<EdgeKey, int> fixed;

    // Vertices in raster order: rows y = m-1 .. 0, x ascending.
    std::vector<std::pair<int, int>> vertices() const;
    bool contains(int x, int y) const {
        return y >= 0 && y <= m - 1 && x <= 0 && x >= std::max(1 - m, -y);
    }
    std::optional<int> fixed_value(Family f, int x, int y) const;
};

// Builds the domain with its boundary table.  DWBC2 and DWBC1 boundaries are
// generated by transforming the DWBC3 boundary through the composite maps
// (single source of truth).
TriangleDomain build_domain(int m, Bc bc);

struct PathConfig {
    int m = 0;
    Bc bc = Bc::Dwbc3;
    // Dense occupancy grids over x in [-m, 0], y in [0, m]; index (x, y) at
    // y*(m+1) + (x+m).  Slots outside the meaningful edge set stay zero.
    std::vector<uint8_t> h, d, v;

    explicit PathConfig(int m_ = 0, Bc bc_ = Bc::Dwbc3)
        : m(m_), bc(bc_),
          h(static_cast<size_t>((m_ + 1) * (m_ + 1)), 0),
          d(static_cast<size_t>((m_ + 1) * (m_ + 1)), 0),
          v(static_cast<size_t>((m_ + 1) * (m_ + 1)), 0) {}

    size_t idx(int x, int y) const { return static_cast<size_t>(y * (m + 1) + x + m); }
    uint8_t& at(Family f, int x, int y) {
        return (f == Family::H ? h : f == Family::D ? d : v)[idx(x, y)];
    }
    uint8_t at(Family f, int x, int y) const {
        return (f == Family::H ? h : f == Family::D ? d : v)[idx(x, y)];
    }
    bool operator==(const PathConfig& o) const { return h == o.h && d == o.d && v == o.v; }
    bool operator<(const PathConfig& o) const {
        return std::tie(h, d, v) < std::tie(o.h, o.d, o.v);
    }
};

// The canonical list of meaningful edge slots of the size-m triangle
// (external boundary edges plus the out-edges of every vertex).
std::vector<EdgeKey> edge_slots(int m);

// Incoming / outgoing occupancy triples at a vertex, encoded as 3-bit masks
// in = W<<2 | NW<<1 | N, out = E<<2 | SE<<1 | S.
int in_mask(const PathConfig& c, int x, int y);
int out_mask(const PathConfig& c, int x, int y);

// Class table: vertex_class_table()[in][out] is the class 0..6, or -1 when
// the pair violates path conservation.
const std::array<std::array<int, 8>, 8>& vertex_class_table();

// Classifies the vertex (throws IceRuleViolation on an inadmissible pair).
int classify_vertex(const PathConfig& c, int x, int y);

enum class Transform {
    VF,         // flip all vertical edges (involution)
    HF,         // flip all horizontal edges (involution)
    TotalFlip,  // flip every edge (involution)
    Srvf,       // composite S.R.VF: DWBC3 <-> DWBC2 (involution)
    Rstar,      // diagonal reflection: DWBC2 -> DWBC1
    RstarInv,   // inverse reflection: DWBC1 -> DWBC2
    R,          // shear/reflection factors of the composites; only valid
    Rbar,       // mid-composite, not supported standalone
    S,
    Sbar,
};

// Applies a transformation, returning the image configuration (with its bc
// label updated for Srvf / Rstar / RstarInv / TotalFlip).  The standalone
// factors R, Rbar, S, Sbar do not map the triangle to itself and throw
// DomainMismatch.
PathConfig transform(const PathConfig& c, Transform which);

// Refined statistic: k = height of the topmost vertex of the last column
// with an occupied incoming edge, counted from the bottom (1..m).  For
// DWBC1 configurations the statistic is transported through RstarInv.
int first_hit_position(const PathConfig& c);

enum class StepType { Horizontal, Diagonal };

// Whether the first-hit vertex is entered horizontally or diagonally.
StepType last_step_type(const PathConfig& c);

enum class PhaseLabel { F0, F1, F2, F3, F4, F5, F6, Liquid };

// Exact-pattern frozen-phase label of the square window of side `window`
// whose top-left vertex is (x, y).
PhaseLabel phase_label(const PathConfig& c, int x, int y, int window);

}  // namespace tv
