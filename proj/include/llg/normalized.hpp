#pragma once

// Normalized lightcone geometry. The lightcone Gauss maps L~+- scale the
// lightlike normals l+- onto the unit-time section S^2_+, which removes the
// boost freedom of the normal frame: L~+-, h~[+-], H~+-, K~+- and the
// normalized principal curvatures depend only on the surface.

#include <cstdint>

#include "llg/curvature.hpp"
#include "llg/mat2.hpp"
#include "llg/minkowski.hpp"
#include "llg/surface.hpp"

namespace llg {

struct NormalizedPoint {
    Vec4 LPlus, LMinus;    // lightcone Gauss map values, time component 1
    double l0Plus = 0.0;   // time components of l+ and l-
    double l0Minus = 0.0;
    Sym2 hPlusTilde, hMinusTilde; // h~[+-]_ij = h_ij(+-) / l0
    double meanPlusTilde = 0.0;   // H~+- = H_l(+-) / l0
    double meanMinusTilde = 0.0;
    double gaussPlusTilde = 0.0;  // K~+- = K_l(+-) / l0^2
    double gaussMinusTilde = 0.0;
    PrincipalCurvatures pcPlusTilde, pcMinusTilde; // kappa~_i(+-) = kappa_i(+-) / l0
};

NormalizedPoint normalized_point(const NormalFrame& frame, const SecondFundamental& second,
                                 const CurvatureScalars& scalars, const Metric2& metric);

inline NormalizedPoint normalized_point(const CurvatureReport& rep) {
    return normalized_point(rep.frame, rep.second, rep.scalars, rep.metric);
}

NormalizedPoint normalized_report(const SurfacePatch& patch, double u1, double u2,
                                  FrameRule rule = FrameRule::Generic);

// Recomputes every normalized quantity in randomly boosted normal frames
// (nT' = cosh(phi) nT + sinh(phi) nS) and reports the worst deviation from
// the unboosted values, together with the worst residual of the Gauss map
// derivative decomposition l0 dL~ = dl - dl0 L~, where dL~ comes from an
// independent route (series division for Taylor-capable patches, five-point
// stencils of per-node frames otherwise).
struct FrameIndependence {
    double maxValueDeviation = 0.0;
    double maxDerivativeResidual = 0.0;
    int boosts = 0;

    bool pass(double tol = 1e-6) const {
        return maxValueDeviation <= tol && maxDerivativeResidual <= tol;
    }
};

FrameIndependence frame_independence_check(const SurfacePatch& patch, double u1, double u2,
                                           FrameRule rule = FrameRule::Generic, int boosts = 8,
                                           std::uint64_t seed = 1);

// Residual of the isothermal Laplacian identity
//   X_u1u1 + X_u2u2 = g11 (-(l0+ H~+ + l0- H~-) nT + (l0+ H~+ - l0- H~-) nS),
// whose right side is twice the mean curvature vector scaled by g11. Raises
// NotIsothermal unless g11 = g22 and g12 = 0 within isothermalTol * scale.
double isothermal_identity_residual(const SurfacePatch& patch, double u1, double u2,
                                    FrameRule rule = FrameRule::Generic,
                                    double isothermalTol = 1e-8);

} // namespace llg
