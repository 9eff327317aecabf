#include "tv/weights.hpp"

#include <sstream>

namespace tv {

namespace {
constexpr double kPoleTol = 1e-13;

double checked_sin(double x, const char* what) {
    double s = std::sin(x);
    if (std::abs(s) < kPoleTol) {
        std::ostringstream os;
        os << "pole: sin factor '" << what << "' vanishes";
        throw PoleError(os.str());
    }
    return s;
}
}  // namespace

WeightParams combinatorial_point() {
    WeightParams p;
    p.eta = M_PI / 8.0;
    p.lambda = 5.0 * M_PI / 8.0;
    p.mu = 0.0;
    p.nu = std::sqrt(2.0);
    return p;
}

std::string disorder_phase_violation(const WeightParams& p) {
    if (!(p.eta > 0.0)) return "eta > 0";
    if (!(p.eta < p.lambda)) return "eta < lambda";
    if (!(p.mu > p.eta - p.lambda)) return "mu > eta - lambda";
    if (!(p.mu < p.lambda - p.eta)) return "mu < lambda - eta";
    if (!(p.lambda + p.eta < M_PI)) return "lambda + eta < pi";
    if (!(p.eta < M_PI / 2.0)) return "eta < pi/2";
    return "";
}

bool curve_params_admissible(const WeightParams& p) {
    if (disorder_phase_violation(p).empty()) return true;
    // Free-fermion family: eta = pi/4, |lambda| <= pi/4; the arctic-curve
    // formulas continue analytically even though some omegas change sign.
    if (std::abs(p.eta - M_PI / 4.0) < 1e-12 && std::abs(p.lambda) <= M_PI / 4.0 + 1e-12)
        return true;
    return false;
}

SixVWeights six_vertex_weights(const WeightParams& p) {
    double beta = std::cbrt(p.nu);
    double e = p.eta, l = p.lambda, m = p.mu;
    SixVWeights w;
    w.a = {beta * std::sin(l + e), beta * std::sin((l + 3 * e - m) / 2),
           beta * std::sin((l + 3 * e + m) / 2)};
    w.b = {beta * std::sin(l - e), beta * std::sin((l - e - m) / 2),
           beta * std::sin((l - e + m) / 2)};
    w.c = {beta * std::sin(2 * e), beta * std::sin(2 * e), beta * std::sin(2 * e)};
    return w;
}

TwentyVWeights twenty_v_weights(const WeightParams& p) {
    double s2e = std::sin(2 * p.eta);
    double e = p.eta, l = p.lambda, m = p.mu, nu = p.nu;
    auto s = [](double x) { return std::sin(x); };
    TwentyVWeights w;
    // The mu -> -mu reflection swaps the two sine factors within each
    // mu-conjugate pair; keeping each pair grouped makes omega_0, omega_3 and
    // omega_4 bit-for-bit invariant under the reflection.
    w.omega = {
        nu * s(l + e) * (s((l + 3 * e - m) / 2) * s((l + 3 * e + m) / 2)),
        nu * s(l - e) * s((l + 3 * e - m) / 2) * s((l - e + m) / 2),
        nu * s2e * s(l - e) * s((l + 3 * e - m) / 2),
        nu * s2e * s2e * s2e + nu * s(l + e) * (s((l - e + m) / 2) * s((l - e - m) / 2)),
        nu * s2e * (s((l + 3 * e + m) / 2) * s((l + 3 * e - m) / 2)),
        nu * s2e * s(l - e) * s((l + 3 * e + m) / 2),
        nu * s(l - e) * s((l + 3 * e + m) / 2) * s((l - e - m) / 2),
    };
    return w;
}

WeightParams hat_params(const WeightParams& p) {
    WeightParams q = p;
    q.lambda = M_PI - (p.lambda + p.eta + p.mu) / 2;
    q.mu = M_PI - (3 * p.lambda + p.eta - p.mu) / 2;
    return q;
}

WeightParams bar_params(const WeightParams& p) {
    WeightParams q = p;
    q.lambda = M_PI - (p.lambda + p.eta - p.mu) / 2;
    q.mu = M_PI - (3 * p.lambda + p.eta + p.mu) / 2;
    return q;
}

WeightParams star_params(const WeightParams& p) {
    WeightParams q = p;
    q.mu = -p.mu;
    return q;
}

const std::array<int, 7> kPermHat = {1, 0, 4, 3, 2, 5, 6};
const std::array<int, 7> kPermBar = {0, 6, 5, 3, 4, 2, 1};

double tau_xi(const WeightParams& p, double xi) {
    double e = p.eta, l = p.lambda, m = p.mu;
    auto s = [](double x) { return std::sin(x); };
    double den = checked_sin(xi + l + e, "xi+lambda+eta") *
                 checked_sin(l - e, "lambda-eta") *
                 checked_sin(xi + (l + 3 * e + m) / 2, "xi+(lambda+3eta+mu)/2") *
                 checked_sin((l - e + m) / 2, "(lambda-eta+mu)/2");
    return s(xi + l - e) * s(l + e) * s(xi + (l - e + m) / 2) * s((l + 3 * e + m) / 2) / den;
}

double sigma_xi(const WeightParams& p, double xi) {
    double e = p.eta, l = p.lambda;
    double den = checked_sin(xi + l + e, "xi+lambda+eta") * checked_sin(l - e, "lambda-eta");
    return std::sin(xi + l - e) * std::sin(l + e) / den;
}

double gamma_xi(const WeightParams& p, double xi) {
    double e = p.eta, l = p.lambda, m = p.mu;
    double den = checked_sin(xi + l - e, "xi+lambda-eta") *
                 checked_sin((l + 3 * e + m) / 2, "(lambda+3eta+mu)/2");
    return std::sin(l - e) * std::sin(xi + (l + 3 * e + m) / 2) / den;
}

PathAlphas path_alphas(const TwentyVWeights& w) {
    double o0 = w[0], o1 = w[1], o2 = w[2], o3 = w[3], o4 = w[4], o5 = w[5], o6 = w[6];
    if (std::abs(o0) < 1e-300) throw ZeroOmegaZero("omega_0 vanishes; path weights undefined");
    PathAlphas a;
    a.alpha[0] = 0.0;
    a.alpha[1] = o1 / o0;
    a.alpha[2] = o6 / o0;
    a.alpha[3] = (o0 * o3 + o4 * o4 - o1 * o6) / (o0 * o0);
    a.alpha[4] = (o2 * o2 - o1 * o3) / (o0 * o0);
    a.alpha[5] = (o5 * o5 - o6 * o3) / (o0 * o0);
    a.alpha[6] = (2 * o2 * o4 * o5 + o1 * o6 * o3 - o3 * o4 * o4 - o1 * o5 * o5 - o6 * o2 * o2) /
                 (o0 * o0 * o0);
    return a;
}

cplx spec_a1(cplx q, cplx z, cplx w) { return z - w; }
cplx spec_b1(cplx q, cplx z, cplx w) { return z / (q * q) - q * q * w; }
cplx spec_c1(cplx q, cplx Z, cplx W) { return (q * q - 1.0 / (q * q)) * Z * W; }
cplx spec_a2(cplx q, cplx z, cplx t) { return q * z - t / q; }
cplx spec_b2(cplx q, cplx z, cplx t) { return z / q - q * t; }
cplx spec_c2(cplx q, cplx Z, cplx T) { return (q * q - 1.0 / (q * q)) * Z * T; }
cplx spec_a3(cplx q, cplx t, cplx w) { return q * t - w / q; }
cplx spec_b3(cplx q, cplx t, cplx w) { return t / q - q * w; }
cplx spec_c3(cplx q, cplx T, cplx W) { return (q * q - 1.0 / (q * q)) * T * W; }

cplx spec_omega(int cls, cplx q, cplx Z, cplx T, cplx W) {
    cplx z = Z * Z, t = T * T, w = W * W;
    switch (cls) {
        case 0: return spec_a1(q, z, w) * spec_a2(q, z, t) * spec_a3(q, t, w);
        case 1: return spec_b1(q, z, w) * spec_a2(q, z, t) * spec_b3(q, t, w);
        case 2: return spec_b1(q, z, w) * spec_a2(q, z, t) * spec_c3(q, T, W);
        case 3: {
            cplx c123 = spec_c1(q, Z, W) * spec_c2(q, Z, T) * spec_c3(q, T, W);
            return c123 + spec_a1(q, z, w) * spec_b2(q, z, t) * spec_b3(q, t, w);
        }
        case 4: return spec_c1(q, Z, W) * spec_a2(q, z, t) * spec_a3(q, t, w);
        case 5: return spec_b1(q, z, w) * spec_c2(q, Z, T) * spec_a3(q, t, w);
        case 6: return spec_b1(q, z, w) * spec_b2(q, z, t) * spec_a3(q, t, w);
        default: throw IndexOutOfRange("vertex class out of range 0..6");
    }
}

}  // namespace tv
