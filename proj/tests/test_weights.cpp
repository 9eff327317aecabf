#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "tv/weights.hpp"

using namespace tv;

namespace {

WeightParams random_disorder_triple(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0, 1);
    for (;;) {
        WeightParams p;
        p.eta = 0.02 + 0.7 * u(rng);
        p.lambda = p.eta + 1e-3 + (M_PI - 2 * p.eta - 2e-3) * u(rng);
        double span = p.lambda - p.eta;
        p.mu = -span + 2 * span * u(rng);
        p.nu = 0.5 + u(rng);
        if (disorder_phase_violation(p).empty()) return p;
    }
}

}  // namespace

TEST_CASE("combinatorial point gives all-ones class weights") {
    WeightParams p = combinatorial_point();
    CHECK(p.nu == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    auto w = twenty_v_weights(p);
    for (int i = 0; i < 7; ++i) CHECK(w[i] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("class weights are the products of the three 6V sublattice weights") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        WeightParams p = random_disorder_triple(rng);
        auto w = twenty_v_weights(p);
        auto v = six_vertex_weights(p);
        double a1 = v.a[0], a2 = v.a[1], a3 = v.a[2];
        double b1 = v.b[0], b2 = v.b[1], b3 = v.b[2];
        double c1 = v.c[0], c2 = v.c[1], c3 = v.c[2];
        CHECK(w[0] == doctest::Approx(a1 * a2 * a3).epsilon(1e-12));
        CHECK(w[1] == doctest::Approx(b1 * a2 * b3).epsilon(1e-12));
        CHECK(w[2] == doctest::Approx(b1 * a2 * c3).epsilon(1e-12));
        CHECK(w[3] == doctest::Approx(c1 * c2 * c3 + a1 * b2 * b3).epsilon(1e-12));
        CHECK(w[4] == doctest::Approx(c1 * a2 * a3).epsilon(1e-12));
        CHECK(w[5] == doctest::Approx(b1 * c2 * a3).epsilon(1e-12));
        CHECK(w[6] == doctest::Approx(b1 * b2 * a3).epsilon(1e-12));
    }
}

TEST_CASE("hat/star/bar transformations permute the weight vector") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        WeightParams p = random_disorder_triple(rng);
        auto w = twenty_v_weights(p);
        auto wh = twenty_v_weights(hat_params(p));
        auto ws = twenty_v_weights(star_params(p));
        auto wb = twenty_v_weights(bar_params(p));
        for (int i = 0; i < 7; ++i) {
            CHECK(wh[i] == doctest::Approx(w[kPermHat[(size_t)i]]).epsilon(1e-12));
            // mu -> -mu acts exactly (same sine arguments up to sign)
            CHECK(ws[i] == w[kPermBar[(size_t)i]]);
            // bar is the composition of hat and star
            CHECK(wb[i] == doctest::Approx(ws[kPermHat[(size_t)i]]).epsilon(1e-12));
        }
    }
}

TEST_CASE("disorder phase gate names the violated inequality") {
    WeightParams p = combinatorial_point();
    CHECK(disorder_phase_violation(p).empty());
    p.eta = -0.1;
    CHECK(disorder_phase_violation(p) == "eta > 0");
    p = combinatorial_point();
    p.lambda = p.eta / 2;
    CHECK(disorder_phase_violation(p) == "eta < lambda");
    p = combinatorial_point();
    p.mu = p.lambda;  // mu >= lambda - eta
    CHECK(disorder_phase_violation(p) == "mu < lambda - eta");
    // free-fermion analytic continuation is admissible for the curve gate
    WeightParams ff{M_PI / 4, M_PI / 8, 0.0, 1.0};
    CHECK(!disorder_phase_violation(ff).empty());
    CHECK(curve_params_admissible(ff));
    ff.lambda = M_PI / 2;
    CHECK(curve_params_admissible(ff));  // strict phase
}

TEST_CASE("combinatorial-point twist generating functions") {
    WeightParams p = combinatorial_point();
    for (int i = 1; i <= 30; ++i) {
        double xi = i * 0.02;
        CHECK(tau_xi(p, xi) == doctest::Approx(std::tan(xi + M_PI / 4)).epsilon(1e-12));
        CHECK(sigma_xi(p, xi) ==
              doctest::Approx((std::tan(xi + M_PI / 4) + 1) / 2).epsilon(1e-12));
    }
}

TEST_CASE("tau at a pole throws") {
    WeightParams p = combinatorial_point();
    // xi + lambda + eta = pi at xi = pi/4
    CHECK_THROWS_AS(tau_xi(p, M_PI / 4), PoleError);
}

TEST_CASE("path step weights alphas") {
    WeightParams p = combinatorial_point();
    auto al = path_alphas(twenty_v_weights(p));
    CHECK(al[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(al[2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(al[3] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(al[4] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(al[5] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(al[6] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("spectral weights reduce to sine products on the unit circle") {
    // q = e^{i eta}, Z = e^{i z /2}, ...: a1 = z - w -> 2i e^{i(z+w)/2} sin((z-w)/2)
    cplx q = std::polar(1.0, 0.3);
    cplx Z = std::polar(1.0, 0.45), W = std::polar(1.0, 0.15);
    cplx a1 = spec_a1(q, Z * Z, W * W);
    cplx expected = cplx(0, 2) * Z * W * std::sin(0.45 - 0.15);
    CHECK(std::abs(a1 - expected) < 1e-12);
    cplx c1 = spec_c1(q, Z, W);
    cplx cexp = cplx(0, 2) * Z * W * std::sin(2 * 0.3);
    CHECK(std::abs(c1 - cexp) < 1e-12);
}
