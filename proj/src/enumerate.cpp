#include "tv/enumerate.hpp"

#include <algorithm>
#include <cmath>

#include "tv/exact6v.hpp"
#include "tv/poly.hpp"
#include "tv/transfer.hpp"

namespace tv {

namespace {

void check_cap(int m, int cap, const char* route) {
    if (m > cap) throw SizeCapExceeded(std::string(route) + ": size exceeds configured cap");
}

// Loads all fixed boundary edges into a fresh configuration.
PathConfig seeded_config(const TriangleDomain& dom) {
    PathConfig c(dom.m, dom.bc);
    for (const auto& [k, v] : dom.fixed) {
        auto [f, x, y] = k;
        c.at(static_cast<Family>(f), x, y) = static_cast<uint8_t>(v);
    }
    return c;
}

}  // namespace

void for_each_config(const TriangleDomain& dom,
                     const std::function<void(const PathConfig&)>& visit) {
    auto vs = dom.vertices();
    PathConfig c = seeded_config(dom);
    const auto& cls_tab = vertex_class_table();
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == vs.size()) {
            visit(c);
            return;
        }
        auto [x, y] = vs[i];
        int in = in_mask(c, x, y);
        auto fE = dom.fixed_value(Family::H, x, y);
        auto fSE = dom.fixed_value(Family::D, x, y);
        auto fS = dom.fixed_value(Family::V, x, y);
        for (int out = 0; out < 8; ++out) {
            if (cls_tab[static_cast<size_t>(in)][static_cast<size_t>(out)] < 0) continue;
            int E = (out >> 2) & 1, SE = (out >> 1) & 1, S = out & 1;
            if (fE && *fE != E) continue;
            if (fSE && *fSE != SE) continue;
            if (fS && *fS != S) continue;
            c.at(Family::H, x, y) = static_cast<uint8_t>(E);
            c.at(Family::D, x, y) = static_cast<uint8_t>(SE);
            c.at(Family::V, x, y) = static_cast<uint8_t>(S);
            rec(i + 1);
        }
        // restore fixed out-edges for backtracking consistency
        c.at(Family::H, x, y) = static_cast<uint8_t>(fE.value_or(0));
        c.at(Family::D, x, y) = static_cast<uint8_t>(fSE.value_or(0));
        c.at(Family::V, x, y) = static_cast<uint8_t>(fS.value_or(0));
    };
    rec(0);
}

CountResult count_brute(const TriangleDomain& dom, int cap) {
    check_cap(dom.m, cap, "count_brute");
    CountResult r;
    r.total = 0;
    r.refined.assign(static_cast<size_t>(dom.m), 0);
    r.split_h.assign(static_cast<size_t>(dom.m), 0);
    r.split_d.assign(static_cast<size_t>(dom.m), 0);
    for_each_config(dom, [&](const PathConfig& c) {
        int k = first_hit_position(c);
        auto ch = last_step_type(c);
        r.total += 1;
        r.refined[static_cast<size_t>(k - 1)] += 1;
        (ch == StepType::Horizontal ? r.split_h : r.split_d)[static_cast<size_t>(k - 1)] += 1;
    });
    return r;
}

namespace {

// Transfer-route refined polynomial.  Uses the forced structure of the last
// column: k-1 class-1 vertices below the exit, a class-2 (diagonal entry) or
// class-4 (horizontal entry) vertex at the exit, class-0 above.  A factor tau
// marks class 1 and gamma marks class 4, so the result collects
// (Z^diag_{m,k} + gamma Z^horiz_{m,k}) tau^{k-1} with the class weights w.
template <class R>
std::vector<R> refined_transfer(const TriangleDomain& dom, const std::array<R, 7>& w,
                                const R& gamma, int cap) {
    check_cap(dom.m, cap, "count_transfer");
    // Refined DWBC1 counting is transported through the diagonal reflection,
    // under which the statistic is preserved and the polynomial equals the
    // DWBC2 one.
    const TriangleDomain* d = &dom;
    TriangleDomain alt;
    if (dom.bc == Bc::Dwbc1) {
        alt = build_domain(dom.m, Bc::Dwbc2);
        d = &alt;
    }
    auto weight = [&](int x, int, int cls) -> Poly<R> {
        if (x == 0 && cls == 1) return Poly<R>::monomial(w[1], 1);
        if (x == 0 && cls == 4) return Poly<R>(w[4] * gamma);
        return Poly<R>(w[static_cast<size_t>(cls)]);
    };
    Poly<R> z = transfer_sum<Poly<R>>(*d, weight);
    std::vector<R> out(static_cast<size_t>(dom.m), R(0));
    for (size_t i = 0; i < out.size(); ++i) out[i] = z.coeff(i);
    return out;
}

}  // namespace

CountResult count_transfer(const TriangleDomain& dom, int cap) {
    std::array<bigint, 7> ones;
    ones.fill(1);
    auto with_h = refined_transfer<bigint>(dom, ones, bigint(1), cap);
    auto without_h = refined_transfer<bigint>(dom, ones, bigint(0), cap);
    CountResult r;
    r.total = 0;
    r.refined = with_h;
    r.split_d = without_h;
    r.split_h.resize(with_h.size());
    for (size_t i = 0; i < with_h.size(); ++i) {
        r.split_h[i] = with_h[i] - without_h[i];
        r.total += with_h[i];
    }
    return r;
}

bigrat partition_function(const TriangleDomain& dom, const std::array<bigrat, 7>& w, int cap) {
    check_cap(dom.m, cap, "partition_function");
    return transfer_sum<bigrat>(dom, [&](int, int, int cls) { return w[static_cast<size_t>(cls)]; });
}

bigrat partition_function_brute(const TriangleDomain& dom, const std::array<bigrat, 7>& w,
                                int cap) {
    check_cap(dom.m, cap, "partition_function_brute");
    bigrat total = 0;
    for_each_config(dom, [&](const PathConfig& c) {
        bigrat p = 1;
        for (auto [x, y] : dom.vertices()) p *= w[static_cast<size_t>(classify_vertex(c, x, y))];
        total += p;
    });
    return total;
}

cplx partition_function(const TriangleDomain& dom,
                        const std::function<cplx(int, int, int)>& w, int cap) {
    check_cap(dom.m, cap, "partition_function");
    return transfer_sum<cplx>(dom, [&](int x, int y, int cls) { return w(x, y, cls); });
}

cplx partition_function_brute(const TriangleDomain& dom,
                              const std::function<cplx(int, int, int)>& w, int cap) {
    check_cap(dom.m, cap, "partition_function_brute");
    cplx total = 0;
    for_each_config(dom, [&](const PathConfig& c) {
        cplx p = 1;
        for (auto [x, y] : dom.vertices()) p *= w(x, y, classify_vertex(c, x, y));
        total += p;
    });
    return total;
}

std::vector<bigrat> refined_poly(const TriangleDomain& dom, const std::array<bigrat, 7>& w,
                                 const bigrat& gamma, int cap) {
    return refined_transfer<bigrat>(dom, w, gamma, cap);
}

std::vector<double> refined_poly(const TriangleDomain& dom, const std::array<double, 7>& w,
                                 double gamma, int cap) {
    return refined_transfer<double>(dom, w, gamma, cap);
}

double one_point(const TriangleDomain& dom, const TwentyVWeights& w, int k, int cap) {
    if (k < 1 || k > dom.m) throw IndexOutOfRange("one_point: k out of [1, m]");
    std::array<double, 7> wa{};
    for (int i = 0; i < 7; ++i) wa[static_cast<size_t>(i)] = w[i];
    auto poly = refined_poly(dom, wa, 1.0, cap);
    double z = 0;
    for (double c : poly) z += c;
    return std::pow(w[0] / w[1], k - 1) * poly[static_cast<size_t>(k - 1)] / z;
}

ExactSampler::ExactSampler(const TriangleDomain& dom, const std::array<double, 7>& weights,
                           int cap)
    : dom_(dom), w_(weights) {
    check_cap(dom.m, cap, "sample_exact");
    auto steps = transfer_steps(dom_.m);
    size_t T = steps.size();
    // forward reachable key sets
    std::vector<std::unordered_map<uint64_t, double>> f(T + 1);
    f[0].emplace(transfer_initial_key(dom_), 1.0);
    for (size_t t = 0; t < T; ++t) {
        for (const auto& [key, wgt] : f[t]) {
            vertex_transitions(dom_, steps[t], key, [&](uint64_t nk, int cls, int) {
                f[t + 1][nk] += wgt * w_[static_cast<size_t>(cls)];
            });
        }
    }
    // backward suffix weights on the reachable sets
    g_.assign(T + 1, {});
    g_[T].emplace(0, 1.0);
    for (size_t t = T; t-- > 0;) {
        for (const auto& [key, unused] : f[t]) {
            double acc = 0;
            vertex_transitions(dom_, steps[t], key, [&](uint64_t nk, int cls, int) {
                auto it = g_[t + 1].find(nk);
                if (it != g_[t + 1].end()) acc += w_[static_cast<size_t>(cls)] * it->second;
            });
            if (acc != 0) g_[t].emplace(key, acc);
        }
    }
    auto it = g_[0].find(transfer_initial_key(dom_));
    z_ = it == g_[0].end() ? 0.0 : it->second;
}

PathConfig ExactSampler::sample(std::mt19937_64& rng) const {
    auto steps = transfer_steps(dom_.m);
    PathConfig c = seeded_config(dom_);
    uint64_t key = transfer_initial_key(dom_);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (size_t t = 0; t < steps.size(); ++t) {
        struct Choice { uint64_t nk; int out; double w; };
        std::vector<Choice> choices;
        double total = 0;
        vertex_transitions(dom_, steps[t], key, [&](uint64_t nk, int cls, int out) {
            auto it = g_[t + 1].find(nk);
            if (it == g_[t + 1].end()) return;
            double wgt = w_[static_cast<size_t>(cls)] * it->second;
            if (wgt <= 0) return;
            choices.push_back({nk, out, wgt});
            total += wgt;
        });
        if (choices.empty()) throw NoConvergence("sampler reached a dead state");
        double r = unif(rng) * total;
        size_t pick = 0;
        for (; pick + 1 < choices.size(); ++pick) {
            r -= choices[pick].w;
            if (r <= 0) break;
        }
        int out = choices[pick].out;
        int x = steps[t].x, y = steps[t].y;
        c.at(Family::H, x, y) = static_cast<uint8_t>((out >> 2) & 1);
        c.at(Family::D, x, y) = static_cast<uint8_t>((out >> 1) & 1);
        c.at(Family::V, x, y) = static_cast<uint8_t>(out & 1);
        key = choices[pick].nk;
    }
    return c;
}

PathConfig sample_exact(const TriangleDomain& dom, const std::array<double, 7>& weights,
                        uint64_t seed, int cap) {
    ExactSampler s(dom, weights, cap);
    std::mt19937_64 rng(seed);
    return s.sample(rng);
}

namespace {

cplx checked_factor(cplx v, double scale) {
    if (std::abs(v) < 1e-12 * scale)
        throw DegenerateSpectral("a boundary-product factor vanishes for these parameters");
    return v;
}

}  // namespace

double verify_inhom_relation(int m, cplx q, const std::vector<cplx>& Zs,
                             const std::vector<cplx>& Ts, const std::vector<cplx>& Ws) {
    if (m > 5) throw SizeCapExceeded("verify_inhom_relation: both sides are brute-forced, m <= 5");
    int n = (m + 1) / 2;
    TriangleDomain dom = build_domain(m, Bc::Dwbc3);
    // LHS: fully inhomogeneous 20V partition function; line indices at vertex
    // (x, y): z_{m-y}, t_{m-x-y}, w_{1-x}.
    cplx lhs = 0;
    for_each_config(dom, [&](const PathConfig& c) {
        cplx p = 1;
        for (auto [x, y] : dom.vertices()) {
            int cls = classify_vertex(c, x, y);
            p *= spec_omega(cls, q, Zs[static_cast<size_t>(m - y)],
                            Ts[static_cast<size_t>(m - x - y)], Ws[static_cast<size_t>(1 - x)]);
        }
        lhs += p;
    });
    // RHS: boundary products over the geometric line-crossing sets, times the
    // n x n 6V-DWBC partition function on the surviving lines z_1..z_n /
    // w_1..w_n.
    double scale = 1.0;
    cplx prod = 1;
    auto zf = [&](size_t i) { return Zs[i] * Zs[i]; };
    auto tf = [&](size_t i) { return Ts[i] * Ts[i]; };
    auto wf = [&](size_t i) { return Ws[i] * Ws[i]; };
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j)
            prod *= checked_factor(spec_a2(q, zf(static_cast<size_t>(i)), tf(static_cast<size_t>(j))), scale);
    for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= j; ++k)
            prod *= checked_factor(spec_a3(q, tf(static_cast<size_t>(j)), wf(static_cast<size_t>(k))), scale);
    for (int i = 1; i <= m; ++i)
        for (int k = 1; k <= m + 1 - i; ++k) {
            if (i <= n && k <= n) continue;
            prod *= checked_factor(spec_b1(q, zf(static_cast<size_t>(i)), wf(static_cast<size_t>(k))), scale);
        }
    cplx z6 = brute_6v_dwbc(n, [&](int r, int col) {
        cplx Z = Zs[static_cast<size_t>(r)], W = Ws[static_cast<size_t>(col)];
        return std::array<cplx, 3>{spec_a1(q, Z * Z, W * W), spec_b1(q, Z * Z, W * W),
                                   spec_c1(q, Z, W)};
    });
    cplx rhs = prod * z6;
    return std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-300);
}

double verify_inhom_relation(int m, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.05, 0.9);
    auto unit = [&](double a) { return std::polar(1.0, a); };
    cplx q = std::polar(1.0, 0.2 + 0.3 * std::uniform_real_distribution<double>(0, 1)(rng));
    std::vector<cplx> Zs(static_cast<size_t>(m + 1)), Ts(static_cast<size_t>(m + 1)),
        Ws(static_cast<size_t>(m + 1));
    for (int i = 1; i <= m; ++i) {
        Zs[static_cast<size_t>(i)] = unit(u(rng));
        Ts[static_cast<size_t>(i)] = unit(u(rng));
        Ws[static_cast<size_t>(i)] = unit(u(rng));
    }
    return verify_inhom_relation(m, q, Zs, Ts, Ws);
}

}  // namespace tv
