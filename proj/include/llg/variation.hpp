#pragma once

// Area functional and its variations along the lightlike normal directions,
// X^eps = X + eps * alpha * (nT +/- nS). The varied immersion is linear in
// eps, so the induced metric is exactly quadratic in eps; one pass over the
// quadrature grid yields A(eps) for every requested eps.

#include <cmath>
#include <vector>

#include "llg/expression.hpp"
#include "llg/surface.hpp"

namespace llg {

enum class LightSign { Plus, Minus };
const char* light_sign_name(LightSign s);

struct Quadrature {
    int n1 = 101; // nodes per axis, rounded up to the next odd count
    int n2 = 101;
};

// Composite Simpson integral of dM = sqrt(det g) over the patch domain.
double area(const SurfacePatch& patch, const Quadrature& quad = {});

// The varied immersion as a fresh patch over the same domain. The base must
// be Taylor capable (TaylorUnavailable otherwise); its frame is rebuilt per
// evaluation, so order-2 jets and frames of the result are exact.
SurfacePatch varied_patch(const SurfacePatch& base, const Expression& alpha, LightSign sign,
                          double eps, FrameRule rule = FrameRule::Generic);

// A(eps) for each requested eps. Raises VariationLeavesSpacelikeClass when
// the varied metric stops being positive definite at a quadrature node.
std::vector<double> areas_along_variation(const SurfacePatch& base, const Expression& alpha,
                                          LightSign sign, const std::vector<double>& epsilons,
                                          FrameRule rule = FrameRule::Generic,
                                          const Quadrature& quad = {});

struct VariationCheck {
    double numeric = 0.0;  // stencil derivative of eps -> A(eps) at eps = 0
    double analytic = 0.0; // closed-form variation integral
    double difference = 0.0;

    bool pass(double tol) const { return difference <= tol * (1.0 + std::fabs(analytic)); }
};

// dA/deps at 0 (five-point stencil, steps {0, +-epsStep, +-2 epsStep})
// against -2 int alpha H_l dM for the chosen direction.
VariationCheck first_variation_check(const SurfacePatch& base, const Expression& alpha,
                                     LightSign sign, FrameRule rule = FrameRule::Generic,
                                     const Quadrature& quad = {}, double epsStep = 1e-3);

// d^2A/deps^2 at 0 against 2 int alpha^2 K_l dM. The base must satisfy
// H_l = 0 along the chosen direction at every quadrature node, within
// mtTol * (1 + |H(nT)| + |H(nS)|); HypothesisViolated otherwise.
VariationCheck second_variation_check(const SurfacePatch& base, const Expression& alpha,
                                      LightSign sign, FrameRule rule = FrameRule::Generic,
                                      const Quadrature& quad = {}, double epsStep = 1e-3,
                                      double mtTol = 1e-6);

// max over an n1 x n2 grid of |S^2 - 2 H_l S + K_l I|_F / (1 + |S|_F^2),
// both lightlike shape operators.
double cayley_hamilton_residual(const SurfacePatch& patch, FrameRule rule = FrameRule::Generic,
                                int n1 = 7, int n2 = 7);

// max over an n1 x n2 grid of the worst entry of
// <l_ui, l_uj> - (2 H_l h_ij - K_l g_ij), relative to the entry scale.
double lightlike_weingarten_residual(const SurfacePatch& patch, LightSign sign,
                                     FrameRule rule = FrameRule::Generic, int n1 = 7, int n2 = 7);

struct DerivativeCheck {
    double lhs = 0.0; // d/deps of H_l(nT, nS) of the varied family at eps = 0
    double rhs = 0.0; // alpha (2 H_l^2 - K_l) - <d l+ /deps, l-> H_l / 2

    double difference() const { return std::fabs(lhs - rhs); }
};

// Pointwise derivative of H_l(nT, nS) under X^eps = X + eps alpha l+. The
// identity holds for any lightlike frame family that is smooth in eps; this
// check pins the generic construction on every varied surface.
DerivativeCheck mean_curvature_derivative_check(const SurfacePatch& base, const Expression& alpha,
                                                double u1, double u2, double epsStep = 1e-3);

struct AreaPolynomial {
    double a0 = 0.0; // A(0)
    double a1 = 0.0; // -2 int alpha H_l dM
    double a2 = 0.0; // int alpha^2 K_l dM

    double at(double eps) const { return a0 + eps * a1 + eps * eps * a2; }
};

// Exact expansion of eps -> A(eps). The varied metric is the congruence
// g(eps) = (I - eps alpha S)^T g (I - eps alpha S), so by Cayley-Hamilton
// sqrt(det g(eps)) = (1 - 2 eps alpha H_l + eps^2 alpha^2 K_l) sqrt(det g)
// pointwise: the area of a lightlike normal variation is a quadratic
// polynomial in eps as long as the surface stays spacelike.
AreaPolynomial area_polynomial(const SurfacePatch& base, const Expression& alpha, LightSign sign,
                               FrameRule rule = FrameRule::Generic, const Quadrature& quad = {});

struct ConvergenceStudy {
    std::vector<double> steps;
    std::vector<double> errors;
    double order = 0.0; // least-squares slope of log(error) against log(step)
};

// Sphere areas on n x n grids, n in {11, 21, 41, 81}, against the closed
// form 4 pi cos(margin). Composite Simpson should show order ~4.
ConvergenceStudy quadrature_convergence_study();

// Three-point central stencils at eps in {0.08, 0.04, 0.02, 0.01} applied
// to eps -> H_l(nT, nS) of the varied offset spheres, against the closed
// form -1/(1 + eps) whose derivative at 0 is 1. The area itself cannot
// carry this study: A(eps) is exactly quadratic (see area_polynomial), so
// area stencils are exact to rounding at every step. The varied mean
// curvature is the genuinely nonlinear quantity in the pipeline; central
// differences on it show the expected order ~2.
ConvergenceStudy eps_convergence_study();

} // namespace llg
