#include "tv/exact6v.hpp"

#include "tv/errors.hpp"

namespace tv {

namespace {

// binomial C(n, k) as mpz
mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

std::vector<std::vector<mpz_class>> kernel_matrix(int n) {
    if (n < 1) throw InvalidSize("kernel size must be positive");
    size_t N = static_cast<size_t>(n);
    // g = 1/(1 - x - y - xy):  g[i][j] = g[i-1][j] + g[i][j-1] + g[i-1][j-1]
    std::vector<std::vector<mpz_class>> g(N, std::vector<mpz_class>(N));
    g[0][0] = 1;
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            if (i == 0 && j == 0) continue;
            mpz_class s = 0;
            if (i > 0) s += g[i - 1][j];
            if (j > 0) s += g[i][j - 1];
            if (i > 0 && j > 0) s += g[i - 1][j - 1];
            g[i][j] = s;
        }
    // h = g / (1 - x): prefix sums along i
    std::vector<std::vector<mpz_class>> h = g;
    for (size_t i = 1; i < N; ++i)
        for (size_t j = 0; j < N; ++j) h[i][j] += h[i - 1][j];
    // K = 1/(1-xy) + 2x*h
    std::vector<std::vector<mpz_class>> K(N, std::vector<mpz_class>(N));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) {
            K[i][j] = (i == j) ? 1 : 0;
            if (i > 0) K[i][j] += 2 * h[i - 1][j];
        }
    return K;
}

std::vector<std::vector<mpz_class>> kernel_matrix_refined(int n, const mpz_class& tau) {
    auto K = kernel_matrix(n);
    size_t N = static_cast<size_t>(n);
    // u[k] = [x^k] (1+x)^n / (1-x)^{n+1} = sum_a C(n,a) C(k-a+n, n)
    std::vector<mpz_class> u(N);
    for (size_t k = 0; k < N; ++k) {
        mpz_class s = 0;
        for (size_t a = 0; a <= k && a <= N; ++a)
            s += binom(n, static_cast<long>(a)) *
                 binom(static_cast<long>(k - a) + n, n);
        u[k] = s;
    }
    // extra[i] = [x^i] (tau-1) x/(1-tau x) * (1+x)^n/(1-x)^{n+1}, added in
    // column n-1
    for (size_t i = 1; i < N; ++i) {
        mpz_class s = 0, tp = 1;
        for (size_t p = 0; p <= i - 1; ++p) {
            s += tp * u[i - 1 - p];
            tp *= tau;
        }
        K[i][N - 1] += (tau - 1) * s;
    }
    return K;
}

mpz_class det_bareiss(std::vector<std::vector<mpz_class>> M) {
    size_t n = M.size();
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && M[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(M[k], M[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                M[i][j] = q;
            }
        prev = M[k][k];
    }
    return sign * M[n - 1][n - 1];
}

mpz_class z6v_det(int n) { return det_bareiss(kernel_matrix(n)); }

std::vector<mpz_class> z6v_refined_poly(int n) {
    size_t N = static_cast<size_t>(n);
    // degree n-1 with integer coefficients: interpolate at tau = 0..n-1
    std::vector<mpq_class> vals(N);
    for (size_t t = 0; t < N; ++t)
        vals[t] = mpq_class(det_bareiss(kernel_matrix_refined(n, mpz_class(static_cast<long>(t)))));
    std::vector<mpq_class> coeffs(N, 0);
    for (size_t i = 0; i < N; ++i) {
        std::vector<mpq_class> num{1};
        mpq_class den = 1;
        for (size_t j = 0; j < N; ++j) {
            if (j == i) continue;
            std::vector<mpq_class> next(num.size() + 1, 0);
            for (size_t k = 0; k < num.size(); ++k) {
                next[k] -= num[k] * static_cast<long>(j);
                next[k + 1] += num[k];
            }
            num = std::move(next);
            den *= mpq_class(static_cast<long>(i)) - static_cast<long>(j);
        }
        for (size_t k = 0; k < num.size(); ++k) coeffs[k] += vals[i] * num[k] / den;
    }
    std::vector<mpz_class> out(N);
    for (size_t k = 0; k < N; ++k) {
        mpq_class c = coeffs[k];
        c.canonicalize();
        if (c.get_den() != 1) throw NonFiniteValue("refined determinant interpolation not integral");
        out[k] = c.get_num();
    }
    return out;
}

mpz_class count_det(int m) {
    if (m < 1) throw InvalidSize("triangle size must be positive");
    int n = (m + 1) / 2;
    long e = (m % 2 == 0) ? static_cast<long>(n) * (n + 1) / 2
                          : static_cast<long>(n) * (n - 1) / 2;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
    return p * z6v_det(n);
}

std::vector<mpz_class> refined_det(int m, Bc bc) {
    if (m < 1) throw InvalidSize("triangle size must be positive");
    int n = (m + 1) / 2;
    long e, pw;
    if (m % 2 == 0) {
        e = static_cast<long>(n) * (n - 1) / 2;
        pw = n;
    } else {
        e = static_cast<long>(n - 1) * (n - 2) / 2;
        pw = n - 1;
    }
    mpz_class pref;
    mpz_ui_pow_ui(pref.get_mpz_t(), 2, static_cast<unsigned long>(e));
    std::vector<mpz_class> poly = z6v_refined_poly(n);
    for (auto& c : poly) c *= pref;
    for (long r = 0; r < pw; ++r) {
        std::vector<mpz_class> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] += poly[i];
        }
        poly = std::move(next);
    }
    if (static_cast<int>(poly.size()) != m)
        throw NonFiniteValue("refined determinant polynomial has unexpected degree");
    if (bc != Bc::Dwbc3) std::reverse(poly.begin(), poly.end());
    return poly;
}

cplx brute_6v_dwbc(int n, const std::function<std::array<cplx, 3>(int, int)>& cellw) {
    if (n < 1) throw InvalidSize("grid size must be positive");
    if (n > 6) throw SizeCapExceeded("brute_6v_dwbc: grid too large for exhaustive enumeration");
    cplx total = 0;
    std::vector<int> vnorth(static_cast<size_t>(n), 0);
    // Sweep sites row by row; hwest is the occupancy entering from the west,
    // vnorth[c-1] the occupancy entering column c from the north.
    std::function<void(int, int, int, cplx)> rec = [&](int r, int c, int hwest, cplx acc) {
        if (r > n) {
            for (int v : vnorth)
                if (v != 1) return;
            total += acc;
            return;
        }
        auto abc = cellw(r, c);
        int vn = vnorth[static_cast<size_t>(c - 1)];
        for (int he = 0; he < 2; ++he)
            for (int vs = 0; vs < 2; ++vs) {
                if (hwest + vn != he + vs) continue;
                cplx wgt;
                if (he == hwest && vs == vn)
                    wgt = (hwest == vn) ? abc[0] : abc[1];
                else
                    wgt = abc[2];
                if (c == n && he != 0) continue;
                vnorth[static_cast<size_t>(c - 1)] = vs;
                if (c == n)
                    rec(r + 1, 1, 1, acc * wgt);
                else
                    rec(r, c + 1, he, acc * wgt);
                vnorth[static_cast<size_t>(c - 1)] = vn;
            }
    };
    rec(1, 1, 1, cplx(1));
    return total;
}

}  // namespace tv
