// Minimal dense univariate polynomial ring used by the weighted enumeration
// code (coefficients low degree first).
#pragma once

#include <vector>

namespace tv {

template <class R>
struct Poly {
    std::vector<R> c;

    Poly() = default;
    Poly(R v) { c.push_back(std::move(v)); }  // NOLINT(google-explicit-constructor)
    static Poly monomial(R v, size_t deg) {
        Poly p;
        p.c.assign(deg + 1, R(0));
        p.c[deg] = std::move(v);
        return p;
    }
    size_t size() const { return c.size(); }
    R coeff(size_t i) const { return i < c.size() ? c[i] : R(0); }
    void trim() {
        while (!c.empty() && c.back() == R(0)) c.pop_back();
    }
    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), R(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) {
        a += b;
        return a;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.c.empty() || b.c.empty()) return r;
        r.c.assign(a.c.size() + b.c.size() - 1, R(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == R(0)) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        return r;
    }
    bool operator==(const Poly& o) const {
        Poly x = *this, y = o;
        x.trim();
        y.trim();
        return x.c == y.c;
    }
};

}  // namespace tv
