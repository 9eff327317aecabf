// Command-line surface of the twenty-vertex toolkit: exact counting,
// identity verification, arctic-curve computation, and exact sampling.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "tv/arctic.hpp"
#include "tv/enumerate.hpp"
#include "tv/exact6v.hpp"
#include "tv/lattice.hpp"

using json = nlohmann::ordered_json;
using namespace tv;

namespace {

// ---------------------------------------------------------------------------
// helpers
// ---------------------------------------------------------------------------

// Parses an angle given as a rational multiple of pi ("5/8", "-1/4", "0"),
// or as a plain decimal in radians when radians=true.
double parse_angle(const std::string& s, bool radians) {
    if (radians) return std::stod(s);
    auto slash = s.find('/');
    double num, den = 1;
    if (slash == std::string::npos) {
        num = std::stod(s);
    } else {
        num = std::stod(s.substr(0, slash));
        den = std::stod(s.substr(slash + 1));
    }
    if (den == 0) throw CLI::ValidationError("angle denominator is zero");
    return num / den * M_PI;
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void emit(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CLI::ValidationError("cannot open output file: " + path);
    f << content;
}

Bc parse_bc(const std::string& s) {
    if (s == "dwbc1") return Bc::Dwbc1;
    if (s == "dwbc2") return Bc::Dwbc2;
    if (s == "dwbc3") return Bc::Dwbc3;
    throw CLI::ValidationError("unknown boundary condition: " + s);
}

json counts_json(int m, const std::string& bc, const CountResult& r) {
    json j;
    j["m"] = m;
    j["bc"] = bc;
    j["total"] = r.total.get_str();
    for (const auto& c : r.refined) j["refined"].push_back(c.get_str());
    for (const auto& c : r.split_h) j["refinedSplit"]["H"].push_back(c.get_str());
    for (const auto& c : r.split_d) j["refinedSplit"]["D"].push_back(c.get_str());
    return j;
}

// ---------------------------------------------------------------------------
// count
// ---------------------------------------------------------------------------

int cmd_count(int m, const std::string& bc_name, const std::string& route,
              const std::string& format, const std::string& output, int brute_cap,
              int transfer_cap) {
    Bc bc = parse_bc(bc_name);
    TriangleDomain dom = build_domain(m, bc);
    std::vector<std::pair<std::string, CountResult>> results;
    bool want_brute = route == "brute" || (route == "auto" && m <= brute_cap);
    bool want_transfer = route == "transfer" || route == "auto";
    bool want_det = route == "det" || route == "auto";
    if (want_brute) results.emplace_back("brute", count_brute(dom, brute_cap));
    if (want_transfer) results.emplace_back("transfer", count_transfer(dom, transfer_cap));
    if (want_det) {
        CountResult r;
        r.total = count_det(m);
        r.refined = refined_det(m, bc);
        results.emplace_back("det", r);
    }
    if (results.empty()) throw CLI::ValidationError("no applicable route for these arguments");
    // cross-check all routes that ran
    for (size_t i = 1; i < results.size(); ++i) {
        const auto& a = results[0].second;
        const auto& b = results[i].second;
        bool ok = a.total == b.total && a.refined == b.refined;
        if (ok && !b.split_h.empty() && !results[0].second.split_h.empty())
            ok = a.split_h == b.split_h && a.split_d == b.split_d;
        if (!ok) {
            json fail;
            fail["error"] = "route disagreement";
            fail["routes"] = {results[0].first, results[i].first};
            fail["a"] = counts_json(m, bc_name, a);
            fail["b"] = counts_json(m, bc_name, b);
            std::cerr << fail.dump(2) << "\n";
            return 2;
        }
    }
    const auto& r = results[0].second;
    if (format == "json") {
        json j = counts_json(m, bc_name, r);
        j["routes"] = json::array();
        for (const auto& [name, unused] : results) j["routes"].push_back(name);
        emit(output, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "m=" << m << " bc=" << bc_name << " total=" << r.total.get_str() << "\nrefined=";
        for (size_t i = 0; i < r.refined.size(); ++i)
            os << (i ? "," : "") << r.refined[i].get_str();
        os << "\n";
        emit(output, os.str());
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct IdentityReport {
    std::string name;
    bool pass;
    std::string detail;
};

void run_identity(std::vector<IdentityReport>& out, const std::string& name,
                  const std::function<std::string()>& body) {
    IdentityReport r{name, true, ""};
    try {
        r.detail = body();  // empty string = pass; nonempty = failure detail
        r.pass = r.detail.empty();
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    out.push_back(r);
}

std::string check_counts(int cap) {
    static const char* seq[] = {"1", "2", "6", "24", "184", "1472", "27712",
                                "443392", "20177920", "645693440"};
    for (int m = 1; m <= cap; ++m) {
        mpz_class expect(seq[m - 1]);
        if (count_transfer(build_domain(m, Bc::Dwbc3)).total != expect)
            return "transfer count mismatch at m=" + std::to_string(m);
        if (count_det(m) != expect) return "determinant count mismatch at m=" + std::to_string(m);
    }
    return "";
}

std::string check_refined(int cap) {
    for (int m = 1; m <= cap; ++m)
        for (Bc bc : {Bc::Dwbc3, Bc::Dwbc2, Bc::Dwbc1}) {
            auto t = count_transfer(build_domain(m, bc));
            if (t.refined != refined_det(m, bc))
                return "refined route mismatch at m=" + std::to_string(m);
        }
    return "";
}

std::string check_evenodd(int ncap) {
    for (int n = 1; n <= ncap; ++n) {
        mpz_class even = count_det(2 * n), odd = count_det(2 * n - 1);
        if (even != (mpz_class(1) << n) * odd)
            return "even/odd total relation fails at n=" + std::to_string(n);
    }
    for (int n = 2; n <= std::min(ncap, 4); ++n) {
        auto pe = refined_det(2 * n), po = refined_det(2 * n - 1);
        // Z_{2n}(tau) = 2^{n-1} (1+tau) Z_{2n-1}(tau)
        std::vector<mpz_class> rhs(po.size() + 1, 0);
        mpz_class f = mpz_class(1) << (n - 1);
        for (size_t i = 0; i < po.size(); ++i) {
            rhs[i] += f * po[i];
            rhs[i + 1] += f * po[i];
        }
        if (pe != rhs) return "even/odd refined relation fails at n=" + std::to_string(n);
    }
    return "";
}

std::string check_reversal(int cap) {
    for (int m = 2; m <= cap; ++m) {
        auto p3 = refined_det(m, Bc::Dwbc3), p2 = refined_det(m, Bc::Dwbc2);
        auto rev = p3;
        std::reverse(rev.begin(), rev.end());
        if (p2 != rev) return "reversal fails at m=" + std::to_string(m);
        if (refined_det(m, Bc::Dwbc1) != p2)
            return "dwbc1 != dwbc2 at m=" + std::to_string(m);
        // Z_{m,m-1} = Z_{m-2}(1)
        if (m >= 3) {
            mpz_class zt = 0;
            if (m - 2 >= 1)
                for (const auto& c : refined_det(m - 2)) zt += c;
            else
                zt = 1;
            if (p3.back() != zt)
                return "Z_{m,m-1} = Z_{m-2} fails at m=" + std::to_string(m);
        }
    }
    return "";
}

std::string check_bijection(int cap) {
    // The reflection maps DWBC3 -> DWBC2 with k -> m+1-k; the rotation maps
    // DWBC2 -> DWBC1 preserving k.
    for (int m = 2; m <= cap; ++m) {
        TriangleDomain dom = build_domain(m, Bc::Dwbc3);
        std::string err;
        for_each_config(dom, [&](const PathConfig& c) {
            if (!err.empty()) return;
            int k = first_hit_position(c);
            PathConfig c2 = transform(c, Transform::Srvf);
            if (first_hit_position(c2) != m + 1 - k) {
                err = "reflection k-image fails at m=" + std::to_string(m);
                return;
            }
            PathConfig c1 = transform(c2, Transform::Rstar);
            if (first_hit_position(c1) != m + 1 - k)
                err = "rotation k-image fails at m=" + std::to_string(m);
        });
        if (!err.empty()) return err;
    }
    return "";
}

std::string check_inhom(int m, uint64_t seed, int draws) {
    for (int d = 0; d < draws; ++d) {
        double rel = verify_inhom_relation(m, seed + static_cast<uint64_t>(d));
        if (rel > 1e-10)
            return "residual " + fmt(rel) + " at draw " + std::to_string(d);
    }
    return "";
}

std::string check_symmetry(uint64_t seed, int draws) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    for (int d = 0; d < draws; ++d) {
        WeightParams p;
        p.eta = 0.05 + 0.6 * u(rng);
        p.lambda = p.eta + 0.05 + (M_PI - 2 * p.eta - 0.1) * u(rng);
        double span = p.lambda - p.eta;
        p.mu = -span + 2 * span * u(rng);
        if (!disorder_phase_violation(p).empty()) {
            --d;
            continue;
        }
        auto w = twenty_v_weights(p);
        auto wh = twenty_v_weights(hat_params(p));
        auto ws = twenty_v_weights(star_params(p));
        auto wb = twenty_v_weights(bar_params(p));
        for (int i = 0; i < 7; ++i) {
            if (std::abs(wh[i] - w[kPermHat[static_cast<size_t>(i)]]) > 1e-12)
                return "hat permutation fails";
            if (ws[i] != w[kPermBar[static_cast<size_t>(i)]]) return "star permutation not exact";
            if (std::abs(wb[i] - ws[kPermHat[static_cast<size_t>(i)]]) > 1e-12)
                return "bar permutation fails";
        }
    }
    return "";
}

std::string check_combpoint() {
    WeightParams p = combinatorial_point();
    for (int i = 1; i < 40; ++i) {
        double xi = i * (M_PI / 4) / 40;
        if (std::abs(tau_xi(p, xi) - std::tan(xi + M_PI / 4)) > 1e-12)
            return "tau[xi] != tan(xi+pi/4) at xi=" + fmt(xi);
        if (std::abs(sigma_xi(p, xi) - (tau_xi(p, xi) + 1) / 2) > 1e-12)
            return "sigma != (tau+1)/2 at xi=" + fmt(xi);
    }
    return "";
}

std::string check_saddle(uint64_t seed, int triples, int grid) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 1);
    for (int d = 0; d < triples; ++d) {
        WeightParams p;
        p.eta = 0.1 + 0.5 * u(rng);
        p.lambda = p.eta + 0.05 + (M_PI - 2 * p.eta - 0.1) * u(rng);
        double span = p.lambda - p.eta;
        p.mu = 0.9 * (-span + 2 * span * u(rng));
        if (!disorder_phase_violation(p).empty()) {
            --d;
            continue;
        }
        double hi = M_PI - p.eta - p.lambda;
        for (int i = 1; i <= grid; ++i) {
            double xi = hi * i / (grid + 1);
            double A = slope_A(p, xi);
            auto st = saddle_solve(p, xi);
            if (std::abs(st.s * A - 1) > 1e-8)
                return "saddle s mismatch: |sA-1|=" + fmt(std::abs(st.s * A - 1));
            if (std::abs(action_stationarity(p, xi)) > 1e-8)
                return "stationarity residual " + fmt(action_stationarity(p, xi));
        }
    }
    return "";
}

int cmd_verify(const std::string& identity, int m, uint64_t seed, const std::string& output) {
    std::vector<IdentityReport> reports;
    auto want = [&](const std::string& n) { return identity == "all" || identity == n; };
    if (want("counts")) run_identity(reports, "counts", [&] { return check_counts(10); });
    if (want("refined")) run_identity(reports, "refined", [&] { return check_refined(8); });
    if (want("evenodd")) run_identity(reports, "evenodd", [&] { return check_evenodd(5); });
    if (want("reversal")) run_identity(reports, "reversal", [&] { return check_reversal(8); });
    if (want("bijection")) run_identity(reports, "bijection", [&] { return check_bijection(5); });
    if (want("inhom"))
        run_identity(reports, "inhom",
                     [&] { return check_inhom(m > 0 ? std::min(m, 4) : 3, seed, 5); });
    if (want("symmetry"))
        run_identity(reports, "symmetry", [&] { return check_symmetry(seed, 1000); });
    if (want("combpoint")) run_identity(reports, "combpoint", [&] { return check_combpoint(); });
    if (want("saddle")) run_identity(reports, "saddle", [&] { return check_saddle(seed, 5, 12); });
    if (reports.empty()) throw CLI::ValidationError("unknown identity: " + identity);
    json j;
    bool all = true;
    for (const auto& r : reports) {
        json e;
        e["identity"] = r.name;
        e["pass"] = r.pass;
        if (!r.detail.empty()) e["detail"] = r.detail;
        j["identities"].push_back(e);
        all = all && r.pass;
    }
    j["pass"] = all;
    emit(output, j.dump(2) + "\n");
    return all ? 0 : 1;
}

// ---------------------------------------------------------------------------
// curve
// ---------------------------------------------------------------------------

std::string svg_header(double x0, double y0, double x1, double y1, int px) {
    double w = x1 - x0, h = y1 - y0;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << px
       << "\" height=\"" << fmt(px * h / w) << "\" viewBox=\"" << fmt(x0) << " " << fmt(-y1)
       << " " << fmt(w) << " " << fmt(h) << "\">\n";
    return os.str();
}

std::string svg_polyline(const std::vector<std::array<double, 2>>& pts, const std::string& color,
                         double width) {
    std::ostringstream os;
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"" << fmt(width)
       << "\" points=\"";
    for (size_t i = 0; i < pts.size(); ++i)
        os << (i ? " " : "") << fmt(pts[i][0]) << "," << fmt(-pts[i][1]);
    os << "\"/>\n";
    return os.str();
}

int cmd_curve(const WeightParams& p, int num_points, const std::string& format,
              const std::string& output) {
    if (!curve_params_admissible(p)) {
        json j;
        j["error"] = "parameters outside the disordered phase";
        j["violated"] = disorder_phase_violation(p);
        std::cerr << j.dump(2) << "\n";
        return 1;
    }
    std::vector<CurveBranch> branches;
    for (BranchId id : {BranchId::NE, BranchId::SE, BranchId::NW})
        branches.push_back(branch(p, id, num_points));
    // tangency gate before any output
    for (const auto& cb : branches)
        for (const auto& pt : cb.points)
            if (tangency_residual(pt, cb.branch) > 1e-9) {
                std::cerr << "{\"error\": \"tangency residual gate failed\"}\n";
                return 1;
            }
    static const char* names[] = {"NE", "SE", "NW"};
    bool uniform = std::abs(p.eta - M_PI / 8) < 1e-12 &&
                   std::abs(p.lambda - 5 * M_PI / 8) < 1e-12 && std::abs(p.mu) < 1e-12;
    if (format == "csv") {
        std::ostringstream os;
        os << "branch,xi,X,Y,A,kappa\r\n";
        for (const auto& cb : branches)
            for (const auto& pt : cb.points)
                os << names[static_cast<int>(cb.branch)] << "," << fmt(pt.xi) << "," << fmt(pt.X)
                   << "," << fmt(pt.Y) << "," << fmt(pt.A) << "," << fmt(pt.kappa) << "\r\n";
        emit(output, os.str());
    } else if (format == "json") {
        json j;
        j["eta"] = p.eta;
        j["lambda"] = p.lambda;
        j["mu"] = p.mu;
        for (const auto& cb : branches) {
            json b;
            b["branch"] = names[static_cast<int>(cb.branch)];
            b["xiRange"] = {cb.xi_lo, cb.xi_hi};
            for (const auto& pt : cb.points)
                b["points"].push_back({pt.xi, pt.X, pt.Y, pt.A, pt.kappa});
            j["branches"].push_back(b);
        }
        if (uniform) {
            double worst = 0;
            for (const auto& pt : branches[0].points)
                worst = std::max(worst, degree10_residual(pt.X, pt.Y));
            j["degree10MaxResidual"] = worst;
        }
        emit(output, j.dump(2) + "\n");
    } else if (format == "svg") {
        std::ostringstream os;
        os << svg_header(-2.1, -0.1, 0.1, 2.1, 600);
        // rescaled triangle boundary and the phase rays from (-1, 1)
        os << svg_polyline({{0, 0}, {0, 2}, {-2, 2}, {0, 0}}, "black", 0.01);
        for (auto corner : std::vector<std::array<double, 2>>{{0, 0}, {0, 2}, {-2, 2}})
            os << svg_polyline({{-1, 1}, corner}, "blue", 0.005);
        static const char* colors[] = {"red", "green", "purple"};
        for (const auto& cb : branches) {
            std::vector<std::array<double, 2>> pts;
            for (const auto& pt : cb.points) pts.push_back({pt.X, pt.Y});
            os << svg_polyline(pts, colors[static_cast<int>(cb.branch)], 0.015);
        }
        os << "</svg>\n";
        emit(output, os.str());
    } else {
        throw CLI::ValidationError("unknown format: " + format);
    }
    if (uniform && format != "json") {
        double worst = 0;
        for (const auto& pt : branches[0].points)
            worst = std::max(worst, degree10_residual(pt.X, pt.Y));
        std::cerr << "degree-10 max normalized residual: " << fmt(worst) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// sample
// ---------------------------------------------------------------------------

int cmd_sample(int m, uint64_t seed, int nsamples, bool histogram, bool phases,
               const std::string& output) {
    TriangleDomain dom = build_domain(m, Bc::Dwbc3);
    std::array<double, 7> w;
    w.fill(1.0);
    ExactSampler sampler(dom, w);
    std::mt19937_64 rng(seed);
    if (histogram) {
        std::vector<long> hist(static_cast<size_t>(m), 0);
        for (int i = 0; i < nsamples; ++i)
            hist[static_cast<size_t>(first_hit_position(sampler.sample(rng)) - 1)] += 1;
        auto exact = count_transfer(dom);
        json j;
        j["m"] = m;
        j["seed"] = seed;
        j["n"] = nsamples;
        for (long h : hist) j["hist"].push_back(h);
        for (const auto& c : exact.refined) j["exactRefined"].push_back(c.get_str());
        j["exactTotal"] = exact.total.get_str();
        emit(output, j.dump(2) + "\n");
        return 0;
    }
    PathConfig c = sampler.sample(rng);
    // lattice render: x in [-m, 0], y in [0, m]
    std::ostringstream os;
    os << svg_header(-m - 0.6, -0.6, 0.6, m + 0.6, 700);
    if (phases) {
        static const char* pal[] = {"#dddddd", "#ffd0d0", "#d0ffd0", "#d0d0ff",
                                    "#ffffc0", "#ffc0ff", "#c0ffff", "#ffffff"};
        for (auto [x, y] : dom.vertices()) {
            PhaseLabel l;
            try {
                l = phase_label(c, x, y, std::min(2, m));
            } catch (const OutOfDomain&) {
                continue;  // window does not fit near the boundary
            }
            os << "<rect x=\"" << fmt(x - 0.5) << "\" y=\"" << fmt(-y - 0.5)
               << "\" width=\"1\" height=\"1\" fill=\"" << pal[static_cast<int>(l)] << "\"/>\n";
        }
    }
    for (auto [x, y] : dom.vertices()) {
        if (c.at(Family::H, x, y))
            os << svg_polyline({{double(x), double(y)}, {double(x + 1), double(y)}}, "black", 0.06);
        if (c.at(Family::D, x, y))
            os << svg_polyline({{double(x), double(y)}, {double(x + 1), double(y - 1)}}, "black",
                               0.06);
        if (c.at(Family::V, x, y))
            os << svg_polyline({{double(x), double(y)}, {double(x), double(y - 1)}}, "black", 0.06);
    }
    os << "</svg>\n";
    emit(output, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twenty-vertex model toolkit: exact counts, identities, arctic curves"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "exact configuration counts");
    int c_m = 4;
    std::string c_bc = "dwbc3", c_route = "auto", c_format = "text", c_output;
    int brute_cap = 7, transfer_cap = 12;
    count->add_option("--m", c_m, "triangle size")->required();
    count->add_option("--bc", c_bc, "boundary condition: dwbc1|dwbc2|dwbc3");
    count->add_option("--route", c_route, "auto|brute|transfer|det");
    count->add_option("--format", c_format, "text|json");
    count->add_option("--output,-o", c_output, "output path (default stdout)");
    count->add_option("--brute-cap", brute_cap, "max size for brute-force route");
    count->add_option("--transfer-cap", transfer_cap, "max size for transfer route");

    // verify
    auto* verify = app.add_subcommand("verify", "identity verification suite");
    std::string v_identity = "all", v_output;
    int v_m = 0;
    uint64_t v_seed = 1;
    verify->add_option("--identity", v_identity,
                       "all|counts|refined|evenodd|reversal|bijection|inhom|symmetry|combpoint|saddle");
    verify->add_option("--m", v_m, "size for the size-dependent identities");
    verify->add_option("--seed", v_seed, "rng seed for randomized identities");
    verify->add_option("--output,-o", v_output, "output path (default stdout)");

    // curve
    auto* curve = app.add_subcommand("curve", "arctic-curve branches");
    std::string eta_s = "1/8", lambda_s = "5/8", mu_s = "0", k_format = "csv", k_output;
    bool radians = false;
    int k_points = 65;
    curve->add_option("--eta", eta_s, "eta as a rational multiple of pi")->required();
    curve->add_option("--lambda", lambda_s, "lambda as a rational multiple of pi")->required();
    curve->add_option("--mu", mu_s, "mu as a rational multiple of pi");
    curve->add_flag("--radians", radians, "interpret angles as radians");
    curve->add_option("--points", k_points, "points per branch");
    curve->add_option("--format", k_format, "csv|json|svg");
    curve->add_option("--output,-o", k_output, "output path (default stdout)");

    // sample
    auto* sample = app.add_subcommand("sample", "exact Boltzmann sampling");
    int s_m = 8, s_n = 1;
    uint64_t s_seed = 1;
    bool s_hist = false, s_phases = false;
    std::string s_output;
    sample->add_option("--m", s_m, "triangle size")->required();
    sample->add_option("--seed", s_seed, "rng seed");
    sample->add_option("--n", s_n, "number of samples (histogram mode)");
    sample->add_flag("--histogram", s_hist, "emit the first-hit histogram as JSON");
    sample->add_flag("--phases", s_phases, "color the render by local frozen phase");
    sample->add_option("--output,-o", s_output, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);
    try {
        if (*count)
            return cmd_count(c_m, c_bc, c_route, c_format, c_output, brute_cap, transfer_cap);
        if (*verify) return cmd_verify(v_identity, v_m, v_seed, v_output);
        if (*curve) {
            WeightParams p;
            p.eta = parse_angle(eta_s, radians);
            p.lambda = parse_angle(lambda_s, radians);
            p.mu = parse_angle(mu_s, radians);
            return cmd_curve(p, k_points, k_format, k_output);
        }
        if (*sample) return cmd_sample(s_m, s_seed, s_n, s_hist, s_phases, s_output);
    } catch (const tv::Error& e) {
        json j;
        j["error"] = e.what();
        std::cerr << j.dump(2) << "\n";
        return 1;
    }
    return 0;
}
