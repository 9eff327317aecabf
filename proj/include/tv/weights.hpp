// Integrable vertex weights for the twenty-vertex model on the triangular
// lattice and the three underlying six-vertex models, together with the
// parameter transformations (hat/bar/star) that permute the weight classes,
// the boundary-twist generating functions tau/sigma/gamma, and the effective
// single-path step weights (alphas).
//
// Homogeneous weights are parametrized by angles (eta, lambda, mu) and a
// normalization nu; the seven class weights omega_0..omega_6 are products of
// sines.  Inhomogeneous (spectral) weights live on three line families with
// per-line parameters z, t, w; square roots are handled by carrying the
// half-variables Z, T, W (z = Z^2, ...) so that all branch choices are
// consistent.
#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "tv/errors.hpp"

namespace tv {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// Homogeneous parametrization
// ---------------------------------------------------------------------------

struct WeightParams {
    double eta = 0.0;
    double lambda = 0.0;
    double mu = 0.0;
    double nu = 1.0;  // overall normalization (product of the three betas)

    // Exponent entering the one-point function tail: pi / (pi - 2*eta).
    double alpha_ff() const { return M_PI / (M_PI - 2.0 * eta); }
};

// The combinatorial point: all seven class weights equal 1.
WeightParams combinatorial_point();

// Strict disordered-phase inequalities (all omegas positive):
//   0 < eta < lambda,  eta - lambda < mu < lambda - eta,
//   lambda + eta < pi,  eta < pi/2.
// Returns an empty string when satisfied, otherwise the violated inequality.
std::string disorder_phase_violation(const WeightParams& p);

// Relaxed admissibility used by the curve machinery: either the strict
// inequalities hold, or eta = pi/4 (free-fermion family, where the arctic
// curve is the analytic continuation of the disordered-phase formulas).
bool curve_params_admissible(const WeightParams& p);

struct SixVWeights {
    // Weights (a, b, c) of the three underlying 6V models, index 0..2 for
    // sublattices 1..3.
    std::array<double, 3> a, b, c;
};

struct TwentyVWeights {
    std::array<double, 7> omega;  // omega_0..omega_6
    double operator[](int i) const { return omega[static_cast<size_t>(i)]; }
};

// Sine-product weights of the three 6V models; beta_1=beta_2=beta_3=nu^(1/3).
SixVWeights six_vertex_weights(const WeightParams& p);

// The seven class weights omega_0..omega_6.
TwentyVWeights twenty_v_weights(const WeightParams& p);

// Parameter transformations.  Each fixes eta and acts on (lambda, mu); the
// induced action on the weight vector is a permutation of classes:
//   hat :  omega_i(hat p)  = omega_{pi(i)}(p),        pi    = (01)(24)
//   star:  omega_i(star p) = omega_{pibar(i)}(p),     pibar = (16)(25)
//   bar :  omega_i(bar p)  = omega_{pi(i)}(star p)
WeightParams hat_params(const WeightParams& p);
WeightParams bar_params(const WeightParams& p);
WeightParams star_params(const WeightParams& p);

// Class permutations associated with the transformations above.
extern const std::array<int, 7> kPermHat;   // (01)(24)
extern const std::array<int, 7> kPermBar;   // (16)(25)

// ---------------------------------------------------------------------------
// Boundary-twist generating functions (single shifted column, shift xi)
// ---------------------------------------------------------------------------

// tau[xi]: the refined-enumeration variable as a function of the twist.
double tau_xi(const WeightParams& p, double xi);
// sigma[xi]: its 6V counterpart, sigma = (tau+1)/2 at the combinatorial point.
double sigma_xi(const WeightParams& p, double xi);
// gamma[xi]: relative weight of the horizontal exit channel.
double gamma_xi(const WeightParams& p, double xi);

// ---------------------------------------------------------------------------
// Effective path step weights
// ---------------------------------------------------------------------------

struct PathAlphas {
    // alpha[1..6]; alpha[0] unused.  alpha_4..alpha_6 may be negative inside
    // the disordered phase.
    std::array<double, 7> alpha;
    double operator[](int i) const { return alpha[static_cast<size_t>(i)]; }
};

PathAlphas path_alphas(const TwentyVWeights& w);

// ---------------------------------------------------------------------------
// Inhomogeneous (spectral) weights
// ---------------------------------------------------------------------------

// 6V weights on the three sublattices; arguments are the full spectral
// variables (z, t, w) except for the c-weights which need the half-variables.
cplx spec_a1(cplx q, cplx z, cplx w);
cplx spec_b1(cplx q, cplx z, cplx w);
cplx spec_c1(cplx q, cplx Z, cplx W);
cplx spec_a2(cplx q, cplx z, cplx t);
cplx spec_b2(cplx q, cplx z, cplx t);
cplx spec_c2(cplx q, cplx Z, cplx T);
cplx spec_a3(cplx q, cplx t, cplx w);
cplx spec_b3(cplx q, cplx t, cplx w);
cplx spec_c3(cplx q, cplx T, cplx W);

// Class weight omega_cls at the crossing of lines with half-variables
// (Z, T, W); normalization nu_0 = 1.
cplx spec_omega(int cls, cplx q, cplx Z, cplx T, cplx W);

}  // namespace tv
