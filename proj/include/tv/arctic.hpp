// Tangent-method arctic-curve machinery: the tangent-line data (slope A[xi],
// intercept kappa[xi]), the path-action saddle system, the three envelope
// branches (NE/SE/NW) in the rescaled frame {x+y >= 0, x <= 0, y <= 2}, the
// free-fermion limit curves, and the uniform-case degree-10 algebraic curve.
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "tv/weights.hpp"

namespace tv {

// Central-difference derivative (4th-order stencil, step scaled to the
// argument).  Throws NonFiniteValue if the result is not finite.
double derivative(const std::function<double(double)>& fn, double xi);

// Tangent-line intercept kappa[xi] (closed cot/sin form).
double kappa_of_xi(const WeightParams& p, double xi);

// Tangent-line inverse slope A[xi] = 1/s[xi].
double slope_A(const WeightParams& p, double xi);

// The one-path free energy f(sigma[xi]) (closed log form).
double f_sigma(const WeightParams& p, double xi);

// Residual of the action stationarity condition at xi:
//   d/dxi [ f(sigma) + log sigma - kappa[xi0] * log tau ] at xi = xi0.
double action_stationarity(const WeightParams& p, double xi);

// ---------------------------------------------------------------------------
// Saddle system
// ---------------------------------------------------------------------------

struct SaddleState {
    double u = 0, v = 0;      // auxiliary unknowns of the reduced 2x2 system
    double q3 = 0, q4 = 0, q5 = 0, q6 = 0;  // rescaled step densities
    double s = 0;             // rescaled exit ratio; 1/s = A[xi]
};

// Solves the saddle system for the effective step weights at twist xi.  The
// reduction eliminates the q_i and leaves a quadratic in r = v^2/u; the
// admissible root (r, u, v > 0) is selected.  Throws InvalidRegion when no
// admissible root exists.
SaddleState saddle_solve(const PathAlphas& al, double tau);
SaddleState saddle_solve(const WeightParams& p, double xi);

// ---------------------------------------------------------------------------
// Envelope branches
// ---------------------------------------------------------------------------

enum class BranchId { NE, SE, NW };

struct BranchPoint {
    double xi;
    double X, Y;      // rescaled coordinates
    double A, kappa;  // tangent-line data of the branch's own frame
};

struct CurveBranch {
    BranchId branch;
    WeightParams params;
    double xi_lo, xi_hi;  // closed parameter range
    std::vector<BranchPoint> points;
};

// Parameter range [lo, hi] of a branch: NE [0, pi-eta-lambda],
// SE [-(lambda-eta+mu)/2, 0], NW [-(lambda-eta-mu)/2, 0].
std::array<double, 2> branch_range(const WeightParams& p, BranchId which);

// Single envelope point.  NE: X = kappa'/A', Y = kappa - A X.  SE and NW use
// the hat/bar companion slopes Ahat[xi] = A_hat(-xi), Abar[xi] = A_bar(-xi)
// and the reflected intercept kappa* = kappa|_{mu -> -mu}:
//   SE: X = -kappa'/Ahat',  Y = kappa - (Ahat - 1) kappa'/Ahat'
//   NW: X = kappa* - 2 - (Abar - 1) kappa*'/Abar',  Y = 2 - kappa*'/Abar'.
// The stored (A, kappa) are the branch's own tangent-line data: NE (A, kappa),
// SE (Ahat, 2 - kappa), NW (Abar, 2 - kappa*).
BranchPoint branch_point(const WeightParams& p, BranchId which, double xi);

// Residual of the branch's tangent-line identity at a point (zero by
// construction; asserts internal consistency).
double tangency_residual(const BranchPoint& pt, BranchId which);

// Samples a branch on num_points twist values.  Points keep a small margin
// from the range boundaries where the formulas are 0/0; the exact endpoints
// are exposed through branch_endpoint.
CurveBranch branch(const WeightParams& p, BranchId which, int num_points);

struct BranchEnd {
    std::array<double, 2> pos;      // one-sided limit of (X, Y)
    std::array<double, 2> tangent;  // unit tangent, normalized with t_y >= 0
};

// One-sided limit of a branch endpoint (upper = the xi_hi end), obtained by
// evaluating at decreasing offsets from the boundary and extrapolating.
BranchEnd branch_endpoint(const WeightParams& p, BranchId which, bool upper);

// ---------------------------------------------------------------------------
// Uniform-case degree-10 curve and free-fermion limits
// ---------------------------------------------------------------------------

// Degree-10 polynomial of the uniform-weight arctic curve, evaluated at the
// shifted coordinates (x, y) = (X + 3/2, Y - 1/2).
double degree10_poly(double X, double Y);

// |P(X,Y)| / |grad P(X,Y)|: first-order distance from the curve.
double degree10_residual(double X, double Y);

enum class FfLimitCase {
    LambdaLow,   // eta = pi/4, lambda -> -pi/4
    LambdaHigh,  // eta = pi/4, lambda -> +pi/4
};

struct PlanePoint {
    double x, y;
};

struct FfLimitCurves {
    // Straight segments given by their endpoints.
    std::vector<std::array<PlanePoint, 2>> segments;
    // Sampled ellipse arcs (LambdaHigh only).
    std::vector<std::vector<PlanePoint>> arcs;
};

// Closed-form limit curves of the free-fermion family:
//   lambda -> -pi/4: the segment (-1,1)-(0,2);
//   lambda -> +pi/4: the segment (-1/4,3/4)-(-5/4,7/4) plus two ellipse arcs.
// Throws NotALimitCase unless eta = pi/4 and lambda is at the matching limit.
FfLimitCurves free_fermion_limits(const WeightParams& p, FfLimitCase which,
                                  int num_points = 64);

}  // namespace tv
