#include "tv/lattice.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace tv {

std::vector<std::pair<int, int>> TriangleDomain::vertices() const {
    std::vector<std::pair<int, int>> vs;
    for (int y = m - 1; y >= 0; --y)
        for (int x = std::max(1 - m, -y); x <= 0; ++x) vs.emplace_back(x, y);
    return vs;
}

std::optional<int> TriangleDomain::fixed_value(Family f, int x, int y) const {
    auto it = fixed.find(edge_key(f, x, y));
    if (it == fixed.end()) return std::nullopt;
    return it->second;
}

namespace {

// DWBC3 boundary: N and NW externals empty, E and SE externals empty, and on
// the diagonal boundary (vertex j at (1-j, j-1), j = 1..m) the W-in / S-out
// pattern depends on the parity of m.
std::map<EdgeKey, int> dwbc3_fixed(int m) {
    std::map<EdgeKey, int> f;
    int n = (m + 1) / 2;
    for (int x = 1 - m; x <= 0; ++x) {
        f[edge_key(Family::V, x, m)] = 0;      // N external
        f[edge_key(Family::D, x - 1, m)] = 0;  // NW external
    }
    for (int y = 0; y < m; ++y) {
        f[edge_key(Family::H, 0, y)] = 0;  // E external
        f[edge_key(Family::D, 0, y)] = 0;  // SE external
    }
    for (int j = 1; j <= m; ++j) {
        int x = 1 - j, y = j - 1;
        int w_in, s_out;
        if (m % 2 == 0) {
            w_in = j > n ? 1 : 0;
            s_out = j <= n ? 1 : 0;
        } else {
            w_in = j >= n ? 1 : 0;
            s_out = j <= n ? 1 : 0;
        }
        f[edge_key(Family::H, x - 1, y)] = w_in;
        f[edge_key(Family::V, x, y)] = s_out;
    }
    return f;
}

EdgeKey srvf_key(int m, const EdgeKey& k) {
    auto [f, x, y] = k;
    switch (static_cast<Family>(f)) {
        case Family::H: return edge_key(Family::D, x, m - 1 - x - y);
        case Family::D: return edge_key(Family::H, x, m - 1 - x - y);
        default: return edge_key(Family::V, x, m - x - y);
    }
}

EdgeKey rstar_key(int m, const EdgeKey& k) {
    auto [f, x, y] = k;
    switch (static_cast<Family>(f)) {
        case Family::H: return edge_key(Family::V, y - m + 1, x + m);
        case Family::D: return edge_key(Family::D, y - m, x + m);
        default: return edge_key(Family::H, y - m, x + m - 1);
    }
}

std::map<EdgeKey, int> map_fixed(int m, const std::map<EdgeKey, int>& f,
                                 EdgeKey (*keymap)(int, const EdgeKey&), bool flip_v) {
    std::map<EdgeKey, int> out;
    for (const auto& [k, v] : f) {
        int val = v;
        if (flip_v && std::get<0>(k) == static_cast<int>(Family::V)) val = 1 - v;
        out[keymap(m, k)] = val;
    }
    return out;
}

}  // namespace

TriangleDomain build_domain(int m, Bc bc) {
    if (m < 1) throw InvalidSize("domain size must be >= 1");
    TriangleDomain dom;
    dom.m = m;
    dom.bc = bc;
    auto f3 = dwbc3_fixed(m);
    if (bc == Bc::Dwbc3) {
        dom.fixed = std::move(f3);
    } else {
        auto f2 = map_fixed(m, f3, srvf_key, /*flip_v=*/true);
        if (bc == Bc::Dwbc2)
            dom.fixed = std::move(f2);
        else
            dom.fixed = map_fixed(m, f2, rstar_key, /*flip_v=*/false);
    }
    return dom;
}

std::vector<EdgeKey> edge_slots(int m) {
    std::set<EdgeKey> s;
    for (const auto& [k, v] : dwbc3_fixed(m)) s.insert(k);
    TriangleDomain dom;
    dom.m = m;
    for (auto [x, y] : dom.vertices()) {
        s.insert(edge_key(Family::H, x, y));
        s.insert(edge_key(Family::D, x, y));
        s.insert(edge_key(Family::V, x, y));
    }
    return {s.begin(), s.end()};
}

int in_mask(const PathConfig& c, int x, int y) {
    return (c.at(Family::H, x - 1, y) << 2) | (c.at(Family::D, x - 1, y + 1) << 1) |
           c.at(Family::V, x, y + 1);
}

int out_mask(const PathConfig& c, int x, int y) {
    return (c.at(Family::H, x, y) << 2) | (c.at(Family::D, x, y) << 1) | c.at(Family::V, x, y);
}

const std::array<std::array<int, 8>, 8>& vertex_class_table() {
    static const auto table = [] {
        std::array<std::array<int, 8>, 8> t{};
        for (auto& row : t) row.fill(-1);
        auto put = [&](int i, int o, int cls) { t[static_cast<size_t>(i)][static_cast<size_t>(o)] = cls; };
        // masks: W<<2 | NW<<1 | N  and  E<<2 | SE<<1 | S
        put(0b000, 0b000, 0); put(0b111, 0b111, 0);
        put(0b001, 0b001, 1); put(0b110, 0b110, 1);
        put(0b100, 0b100, 6); put(0b011, 0b011, 6);
        put(0b010, 0b010, 3); put(0b101, 0b101, 3);
        put(0b010, 0b001, 2); put(0b001, 0b010, 2); put(0b110, 0b101, 2); put(0b101, 0b110, 2);
        put(0b100, 0b010, 5); put(0b010, 0b100, 5); put(0b101, 0b011, 5); put(0b011, 0b101, 5);
        put(0b100, 0b001, 4); put(0b001, 0b100, 4); put(0b110, 0b011, 4); put(0b011, 0b110, 4);
        return t;
    }();
    return table;
}

int classify_vertex(const PathConfig& c, int x, int y) {
    int cls = vertex_class_table()[static_cast<size_t>(in_mask(c, x, y))]
                                  [static_cast<size_t>(out_mask(c, x, y))];
    if (cls < 0) throw IceRuleViolation("in/out occupancies violate path conservation");
    return cls;
}

PathConfig transform(const PathConfig& c, Transform which) {
    int m = c.m;
    auto slots = edge_slots(m);
    PathConfig out(m, c.bc);
    switch (which) {
        case Transform::VF:
        case Transform::HF:
        case Transform::TotalFlip: {
            Family flip = which == Transform::VF ? Family::V : Family::H;
            for (const auto& k : slots) {
                auto [f, x, y] = k;
                auto fam = static_cast<Family>(f);
                uint8_t val = c.at(fam, x, y);
                if (which == Transform::TotalFlip || fam == flip) val = 1 - val;
                out.at(fam, x, y) = val;
            }
            if (which == Transform::TotalFlip) out.bc = c.bc;  // flipped-bc variant, same label set
            return out;
        }
        case Transform::Srvf: {
            for (const auto& k : slots) {
                auto [f, x, y] = k;
                auto fam = static_cast<Family>(f);
                uint8_t val = c.at(fam, x, y);
                if (fam == Family::V) val = 1 - val;
                auto [nf, nx, ny] = srvf_key(m, k);
                out.at(static_cast<Family>(nf), nx, ny) = val;
            }
            out.bc = c.bc == Bc::Dwbc3 ? Bc::Dwbc2 : Bc::Dwbc3;
            return out;
        }
        case Transform::Rstar: {
            if (c.bc != Bc::Dwbc2) throw DomainMismatch("Rstar expects a DWBC2 configuration");
            for (const auto& k : slots) {
                auto [f, x, y] = k;
                auto [nf, nx, ny] = rstar_key(m, k);
                out.at(static_cast<Family>(nf), nx, ny) = c.at(static_cast<Family>(f), x, y);
            }
            out.bc = Bc::Dwbc1;
            return out;
        }
        case Transform::RstarInv: {
            if (c.bc != Bc::Dwbc1) throw DomainMismatch("RstarInv expects a DWBC1 configuration");
            for (const auto& k : slots) {
                auto [f, x, y] = k;
                auto [nf, nx, ny] = rstar_key(m, k);
                out.at(static_cast<Family>(f), x, y) = c.at(static_cast<Family>(nf), nx, ny);
            }
            out.bc = Bc::Dwbc2;
            return out;
        }
        default:
            throw DomainMismatch(
                "shear/reflection factors are only valid inside the stated composites; "
                "use Srvf, Rstar or RstarInv");
    }
}

namespace {
int first_hit_direct(const PathConfig& c) {
    for (int y = c.m - 1; y >= 0; --y)
        if (in_mask(c, 0, y) != 0) return y + 1;
    throw IceRuleViolation("no path reaches the last column");
}
}  // namespace

int first_hit_position(const PathConfig& c) {
    if (c.bc == Bc::Dwbc1) return first_hit_direct(transform(c, Transform::RstarInv));
    return first_hit_direct(c);
}

StepType last_step_type(const PathConfig& c) {
    const PathConfig* p = &c;
    PathConfig tmp;
    if (c.bc == Bc::Dwbc1) {
        tmp = transform(c, Transform::RstarInv);
        p = &tmp;
    }
    int k = first_hit_direct(*p);
    if (p->at(Family::H, -1, k - 1)) return StepType::Horizontal;
    if (p->at(Family::D, -1, k)) return StepType::Diagonal;
    throw IceRuleViolation("first-hit vertex entered vertically");
}

PhaseLabel phase_label(const PathConfig& c, int x, int y, int window) {
    if (window < 1) throw OutOfDomain("window must be >= 1");
    TriangleDomain dom;
    dom.m = c.m;
    for (int i = 0; i < window; ++i)
        for (int j = 0; j < window; ++j)
            if (!dom.contains(x + i, y - j)) throw OutOfDomain("window leaves the domain");
    bool allH = true, someH = false, allD = true, someD = false, allV = true, someV = false;
    for (int i = 0; i < window; ++i)
        for (int j = 0; j < window; ++j) {
            if (i < window - 1) {
                bool b = c.at(Family::H, x + i, y - j);
                allH &= b;
                someH |= b;
            }
            if (j < window - 1) {
                bool b = c.at(Family::V, x + i, y - j);
                allV &= b;
                someV |= b;
            }
            if (i < window - 1 && j < window - 1) {
                bool b = c.at(Family::D, x + i, y - j);
                allD &= b;
                someD |= b;
            }
        }
    // Exact saturation patterns (H, D, V occupancy) of the frozen phases.
    struct Pat { bool h, d, v; PhaseLabel lab; };
    static const Pat pats[] = {
        {false, false, false, PhaseLabel::F0}, {true, false, false, PhaseLabel::F1},
        {false, false, true, PhaseLabel::F2},  {true, true, false, PhaseLabel::F3},
        {false, true, true, PhaseLabel::F4},   {true, true, true, PhaseLabel::F5},
        {false, true, false, PhaseLabel::F6},
    };
    for (const auto& p : pats) {
        bool okH = p.h ? allH : !someH;
        bool okD = p.d ? allD : !someD;
        bool okV = p.v ? allV : !someV;
        if (okH && okD && okV) return p.lab;
    }
    return PhaseLabel::Liquid;
}

}  // namespace tv
