#include "tv/arctic.hpp"

#include <algorithm>
#include <cmath>

#include "tv/errors.hpp"

namespace tv {

namespace {

constexpr double kPi = M_PI;

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

double derivative(const std::function<double(double)>& fn, double xi) {
    double h = 1e-6 * std::max(1.0, std::abs(xi));
    double d = (fn(xi - 2 * h) - 8 * fn(xi - h) + 8 * fn(xi + h) - fn(xi + 2 * h)) / (12 * h);
    if (!std::isfinite(d)) throw NonFiniteValue("derivative is not finite");
    return d;
}

double kappa_of_xi(const WeightParams& p, double xi) {
    double eta = p.eta, lam = p.lambda, mu = p.mu;
    double alpha = p.alpha_ff();
    double s2eta = std::sin(2 * eta);
    if (std::abs(std::sin(xi)) < 1e-300 || std::abs(std::sin(alpha * xi)) < 1e-300)
        throw PoleError("kappa: xi at a pole of the cot bracket");
    double br = 2 * cot(xi + lam - eta) - cot(xi) - cot(xi + lam + eta) +
                alpha * cot(alpha * xi) - alpha * cot(alpha * (xi + lam - eta));
    double pprod = std::sin(xi + (lam - eta + mu) / 2) * std::sin(xi + (lam + 3 * eta + mu) / 2);
    double zz = std::sin(xi + lam + eta) * std::sin(xi + lam - eta);
    double den = s2eta * (zz + pprod);
    if (std::abs(den) < 1e-300) throw PoleError("kappa: vanishing denominator");
    return br * zz * pprod / den;
}

double slope_A(const WeightParams& p, double xi) {
    double eta = p.eta, lam = p.lambda, mu = p.mu;
    double pprod = std::sin(xi + (lam - eta + mu) / 2) * std::sin(xi + (lam + 3 * eta + mu) / 2);
    double num = std::sin(xi + lam + eta) * std::sin(xi + lam - eta);
    double d1 = std::sin(xi) * std::sin(xi + 2 * eta);
    if (std::abs(d1) < 1e-300 || std::abs(num + pprod) < 1e-300)
        throw PoleError("slope: vanishing denominator");
    return (num / d1) * (d1 + pprod) / (num + pprod);
}

double f_sigma(const WeightParams& p, double xi) {
    double eta = p.eta, lam = p.lambda;
    double alpha = p.alpha_ff();
    double arg = std::sin(alpha * (lam - eta)) * std::sin(xi + lam - eta) * std::sin(alpha * xi) /
                 (alpha * std::sin(lam - eta) * std::sin(alpha * (xi + lam - eta)) * std::sin(xi));
    if (!(arg > 0)) throw InvalidRegion("f(sigma): non-positive log argument");
    return std::log(arg);
}

double action_stationarity(const WeightParams& p, double xi) {
    double e = p.eta, l = p.lambda, m = p.mu;
    double alpha = p.alpha_ff();
    double kappa = kappa_of_xi(p, xi);
    auto ct = [](double x) { return std::cos(x) / std::sin(x); };
    // Logarithmic derivatives of f(sigma[xi]), sigma[xi] and tau[xi]; every
    // factor is a sine of an affine function of xi, so each contributes a
    // cotangent term.
    double fp = ct(xi + l - e) + alpha * ct(alpha * xi) - alpha * ct(alpha * (xi + l - e)) - ct(xi);
    double slog = ct(xi + l - e) - ct(xi + l + e);
    double tlog = ct(xi + l - e) + ct(xi + (l - e + m) / 2) - ct(xi + l + e) -
                  ct(xi + (l + 3 * e + m) / 2);
    return fp + slog - kappa * tlog;
}

SaddleState saddle_solve(const PathAlphas& al, double tau) {
    double a1 = al[1], a2 = al[2], a3 = al[3], a4 = al[4], a5 = al[5], a6 = al[6];
    if (a1 == 0 || a2 == 0 || tau == 0) throw InvalidRegion("saddle: degenerate step weights");
    double c1 = a3 / (a1 * a2 * tau) + 2 * a4 / (a1 * a1 * a2 * tau * tau);
    double c2 = a5 / (a1 * a2 * a2 * tau * tau) + 2 * a6 / (a1 * a1 * a2 * a2 * tau * tau * tau);
    double d1 = 1 + a3 / (a1 * a2 * tau) + a4 / (a1 * a1 * a2 * tau * tau);
    double d2 = a5 / (a1 * a2 * a2 * tau * tau) + a6 / (a1 * a1 * a2 * a2 * tau * tau * tau);
    double den = d1 + c1 * (tau - 1);
    if (std::abs(den) < 1e-300) throw InvalidRegion("saddle: singular linear system");
    // (u, v) are affine in r = v^2/u; substituting back leaves a quadratic.
    double u0 = d1 / den, u1 = (-d1 * c2 + c1 * d2) / den;
    double v0 = (tau - 1) / den, v1 = (-(tau - 1) * c2 - d2) / den;
    double qa = u1 - v1 * v1, qb = u0 - 2 * v0 * v1, qc = -v0 * v0;
    std::vector<double> roots;
    if (std::abs(qa) < 1e-300) {
        if (std::abs(qb) < 1e-300) throw InvalidRegion("saddle: degenerate quadratic");
        roots.push_back(-qc / qb);
    } else {
        double disc = qb * qb - 4 * qa * qc;
        if (disc < 0) throw InvalidRegion("saddle: no real root");
        // cancellation-safe root pair: q = -(b + sign(b) sqrt(disc))/2
        double sq = std::sqrt(disc);
        double qq = -(qb + (qb >= 0 ? sq : -sq)) / 2;
        if (std::abs(qq) > 0) roots.push_back(qc / qq);
        roots.push_back(qq / qa);
    }
    for (double r : roots) {
        if (!(r > 0)) continue;
        double u = u0 + u1 * r, v = v0 + v1 * r;
        if (!(u > 0) || !(v > 0)) continue;
        SaddleState st;
        st.u = u;
        st.v = v;
        st.q3 = a3 * v / (a1 * a2 * tau);
        st.q4 = a4 * v / (a1 * a1 * a2 * tau * tau);
        st.q5 = a5 * v * v / (a1 * a2 * a2 * tau * tau * u);
        st.q6 = a6 * v * v / (a1 * a1 * a2 * a2 * tau * tau * tau * u);
        st.s = v + st.q3 + st.q4 + 2 * st.q5 + 2 * st.q6;
        if (!std::isfinite(st.s)) continue;
        return st;
    }
    throw InvalidRegion("saddle: no admissible root (r, u, v > 0)");
}

SaddleState saddle_solve(const WeightParams& p, double xi) {
    PathAlphas al = path_alphas(twenty_v_weights(p));
    return saddle_solve(al, tau_xi(p, xi));
}

std::array<double, 2> branch_range(const WeightParams& p, BranchId which) {
    double lo = 0, hi = 0;
    switch (which) {
        case BranchId::NE:
            lo = 0;
            hi = kPi - p.eta - p.lambda;
            break;
        case BranchId::SE:
            lo = -(p.lambda - p.eta + p.mu) / 2;
            hi = 0;
            break;
        case BranchId::NW:
            lo = -(p.lambda - p.eta - p.mu) / 2;
            hi = 0;
            break;
    }
    if (lo > hi) std::swap(lo, hi);
    return {lo, hi};
}

BranchPoint branch_point(const WeightParams& p, BranchId which, double xi) {
    BranchPoint pt{};
    pt.xi = xi;
    auto kap = [&](double x) { return kappa_of_xi(p, x); };
    switch (which) {
        case BranchId::NE: {
            double kp = derivative(kap, xi);
            double Ap = derivative([&](double x) { return slope_A(p, x); }, xi);
            pt.A = slope_A(p, xi);
            pt.kappa = kap(xi);
            pt.X = kp / Ap;
            pt.Y = pt.kappa - pt.A * pt.X;
            break;
        }
        case BranchId::SE: {
            WeightParams ph = hat_params(p);
            auto Ah = [&](double x) { return slope_A(ph, -x); };
            double kp = derivative(kap, xi);
            double Ahp = derivative(Ah, xi);
            double kappa = kap(xi);
            pt.A = Ah(xi);
            pt.kappa = 2 - kappa;
            pt.X = -kp / Ahp;
            pt.Y = kappa - (pt.A - 1) * kp / Ahp;
            break;
        }
        case BranchId::NW: {
            WeightParams ps = star_params(p);  // kappa* = kappa|_{mu -> -mu}
            WeightParams pb = bar_params(p);
            auto ks = [&](double x) { return kappa_of_xi(ps, x); };
            auto Ab = [&](double x) { return slope_A(pb, -x); };
            double ksp = derivative(ks, xi);
            double Abp = derivative(Ab, xi);
            double kstar = ks(xi);
            pt.A = Ab(xi);
            pt.kappa = 2 - kstar;
            pt.X = kstar - 2 - (pt.A - 1) * ksp / Abp;
            pt.Y = 2 - ksp / Abp;
            break;
        }
    }
    if (!std::isfinite(pt.X) || !std::isfinite(pt.Y))
        throw NonFiniteValue("branch point is not finite");
    return pt;
}

double tangency_residual(const BranchPoint& pt, BranchId which) {
    switch (which) {
        case BranchId::NE:
            return std::abs(pt.Y + pt.A * pt.X - pt.kappa);
        case BranchId::SE:
            // sheared frame (X, 2-X-Y) with intercept 2-kappa
            return std::abs((2 - pt.X - pt.Y) + pt.A * pt.X - pt.kappa);
        case BranchId::NW:
            // reflected frame (Y-2, X+2) with intercept kappa* = 2 - stored
            return std::abs(pt.X + pt.kappa - (pt.A - 1) * (pt.Y - 2));
    }
    return 0;
}

CurveBranch branch(const WeightParams& p, BranchId which, int num_points) {
    if (num_points < 2) throw InvalidSize("branch needs at least 2 points");
    if (!curve_params_admissible(p)) {
        std::string v = disorder_phase_violation(p);
        throw PhaseViolation("parameters outside the disordered phase: " + v);
    }
    auto [lo, hi] = branch_range(p, which);
    CurveBranch cb;
    cb.branch = which;
    cb.params = p;
    cb.xi_lo = lo;
    cb.xi_hi = hi;
    double margin = 1e-4 * (hi - lo);
    for (int i = 0; i < num_points; ++i) {
        double t = static_cast<double>(i) / (num_points - 1);
        double xi = (lo + margin) + t * (hi - lo - 2 * margin);
        cb.points.push_back(branch_point(p, which, xi));
    }
    return cb;
}

BranchEnd branch_endpoint(const WeightParams& p, BranchId which, bool upper) {
    auto [lo, hi] = branch_range(p, which);
    double b = upper ? hi : lo;
    double dir = upper ? -1.0 : 1.0;  // step from the boundary into the range
    double e = 1e-3 * std::min(1.0, hi - lo);
    auto eval = [&](double off) {
        double xi = b + dir * off;
        BranchPoint pt = branch_point(p, which, xi);
        double dx = derivative([&](double x) { return branch_point(p, which, x).X; }, xi);
        double dy = derivative([&](double x) { return branch_point(p, which, x).Y; }, xi);
        double n = std::hypot(dx, dy);
        if (dy < 0 || (dy == 0 && dx < 0)) {
            dx = -dx;
            dy = -dy;
        }
        return std::array<double, 4>{pt.X, pt.Y, dx / n, dy / n};
    };
    // one-sided extrapolation to the boundary, eliminating the linear and
    // quadratic terms of the offset expansion
    auto g0 = eval(e), g1 = eval(e / 2), g2 = eval(e / 4);
    std::array<double, 4> r{};
    for (size_t i = 0; i < 4; ++i) r[i] = (g0[i] - 6 * g1[i] + 8 * g2[i]) / 3;
    double n = std::hypot(r[2], r[3]);
    return BranchEnd{{r[0], r[1]}, {r[2] / n, r[3] / n}};
}

double degree10_poly(double X, double Y) {
    double x = X + 1.5, y = Y - 0.5;
    double r2 = x * x + y * y;
    double s3 = std::sqrt(3.0);
    auto p2 = [](int e) { return std::pow(2.0, e); };
    auto p3 = [](int e) { return std::pow(3.0, e); };
    return p2(6) * p3(11) * std::pow(r2, 5) - p2(4) * p3(9) * 67 * std::pow(r2, 4) -
           p2(2) * p3(6) * r2 * r2 * (13 * 83 * r2 + p2(6) * 125 * s3 * x * y) -
           9 * 17 * 9323 * r2 * r2 - p2(10) * 9 * 3125 * x * x * y * y -
           p2(6) * p3(4) * 25 * 11 * s3 * x * y * r2 - p2(10) * 3 * 41 * r2 -
           p2(7) * 3 * 23 * 241 * s3 * x * y - p2(10) * 169;
}

double degree10_residual(double X, double Y) {
    double h = 1e-6;
    double gx = (degree10_poly(X + h, Y) - degree10_poly(X - h, Y)) / (2 * h);
    double gy = (degree10_poly(X, Y + h) - degree10_poly(X, Y - h)) / (2 * h);
    return std::abs(degree10_poly(X, Y)) / std::hypot(gx, gy);
}

FfLimitCurves free_fermion_limits(const WeightParams& p, FfLimitCase which, int num_points) {
    if (std::abs(p.eta - kPi / 4) > 1e-9)
        throw NotALimitCase("free-fermion limits require eta = pi/4");
    double target = which == FfLimitCase::LambdaLow ? -kPi / 4 : kPi / 4;
    if (std::abs(p.lambda - target) > 1e-9)
        throw NotALimitCase("lambda is not at the requested limit");
    FfLimitCurves out;
    if (which == FfLimitCase::LambdaLow) {
        // (X, Y) = (-4u^2/(1+4u^2), 2 - 4u^2/(1+4u^2)), u in [0, inf)
        out.segments.push_back({PlanePoint{0, 2}, PlanePoint{-1, 1}});
        return out;
    }
    // lambda -> +pi/4: segment (2cos(2u)-3, -2cos(2u)+5)/4 ...
    out.segments.push_back({PlanePoint{-0.25, 0.75}, PlanePoint{-1.25, 1.75}});
    // ... plus two limiting ellipse arcs, parametrized on u in [0, inf).
    std::vector<PlanePoint> arc1, arc2;
    for (int i = 0; i < num_points; ++i) {
        double t = (kPi / 2) * (static_cast<double>(i) / (num_points - 1)) * (1.0 - 1e-9);
        double u = std::tan(t);
        double d1 = 8 * u * (1 - u) - 3;
        arc1.push_back({2 * u * u / d1, -(6 * u * u - 4 * u + 1) / d1});
        double d2 = 8 * u * (1 + u) + 3;
        arc2.push_back({-(10 * u * u + 8 * u + 3) / d2, (14 * u * u + 12 * u + 4) / d2});
    }
    out.arcs.push_back(std::move(arc1));
    out.arcs.push_back(std::move(arc2));
    return out;
}

}  // namespace tv
