#pragma once

// Extrinsic and intrinsic curvature of a spacelike surface patch at a point:
// second fundamental forms against the frame normals and the lightlike
// directions l+- = nT +- nS, shape operators, principal curvatures, mean and
// Gaussian curvature vectors, Christoffel symbols, and the curvature
// component R_1212 of the induced metric by two independent routes.

#include "llg/mat2.hpp"
#include "llg/minkowski.hpp"
#include "llg/surface.hpp"

namespace llg {

// h_ij(n) = <n, X_uiuj>, equivalently -<n_ui, X_uj> for normal fields n.
struct SecondFundamental {
    Sym2 hT;     // against nT
    Sym2 hS;     // against nS
    Sym2 hPlus;  // hT + hS, against lPlus
    Sym2 hMinus; // hT - hS, against lMinus
};

SecondFundamental second_fundamental(const Jet3& jet, const NormalFrame& frame);

// S(n) = h(n) g^{-1}. Self-adjoint with respect to g, so the spectrum is real
// whenever the tangent plane is spacelike.
struct ShapeOperators {
    Mat2 sT, sS, sPlus, sMinus;
};

ShapeOperators shape_operators(const SecondFundamental& h, const Metric2& metric);

struct PrincipalCurvatures {
    double k1 = 0.0; // k1 <= k2
    double k2 = 0.0;

    double spread() const { return k2 - k1; }
};

// Eigenvalues from trace and determinant. A discriminant below rounding noise
// raises ComplexSpectrum; a slightly negative one is clamped to zero.
PrincipalCurvatures principal_curvatures(const Mat2& shape);

struct CurvatureScalars {
    double meanT = 0.0;  // H(nT) = tr S(nT) / 2
    double meanS = 0.0;  // H(nS)
    double gaussT = 0.0; // K(nT) = det S(nT)
    double gaussS = 0.0; // K(nS)
    double meanPlus = 0.0;   // H_l(+) = meanT + meanS
    double meanMinus = 0.0;  // H_l(-) = meanT - meanS
    double gaussPlus = 0.0;  // K_l(+) = det h(+) / det g
    double gaussMinus = 0.0; // K_l(-)
    double intrinsicGauss = 0.0; // K_I = gaussS - gaussT
};

// Determinant-based scalars are computed both as det h / det g and as
// det(h g^{-1}); disagreement beyond crossCheck * scale raises Numerical.
CurvatureScalars curvature_scalars(const SecondFundamental& h, const Metric2& metric,
                                   double crossCheck = 1e-9);

// Normal trace of the vector second fundamental form: -H(nT) nT + H(nS) nS.
// Invariant under boosts of the normal frame.
Vec4 mean_curvature_vector(const CurvatureScalars& s, const NormalFrame& frame);

// K(nT) nT + K(nS) nS.
Vec4 gaussian_curvature_vector(const CurvatureScalars& s, const NormalFrame& frame);

// Christoffel symbols of the induced metric: c[k][i][j] = Gamma^k_ij,
// symmetric in (i, j), indices zero based.
struct Christoffel {
    double c[2][2][2] = {};
};

Christoffel christoffel(const Jet3& jet);

// R_1212 from metric derivatives alone (uses the order-3 jet). Sign
// convention: K_I = -R_1212 / det g.
double riemann1212_from_metric(const Jet3& jet);

// The same component from the second fundamental forms: det hT - det hS.
double riemann1212_from_shape(const SecondFundamental& h);

inline double intrinsic_gauss_from_riemann(double r1212, double detg) { return -r1212 / detg; }

// Base scales for the point classification thresholds; each is multiplied by
// a size factor built from the scalars it gates.
struct Tolerances {
    double mt = 1e-8;         // marginally trapped tests
    double umbilic = 1e-8;    // principal curvature coincidence
    double flat = 1e-8;       // intrinsic / extrinsic flatness
    double crossCheck = 1e-9; // determinant route agreement
};

struct PointClassification {
    bool marginallyTrapped = false;  // |H_l(+) H_l(-)| within tolerance of zero
    bool mtPlus = false;             // H_l(+) vanishes
    bool mtMinus = false;            // H_l(-) vanishes
    bool stronglyMarginallyTrapped = false; // mean curvature vector vanishes
    bool umbilicPlus = false;        // S(+) has a double eigenvalue
    bool umbilicMinus = false;
    bool intrinsicallyFlat = false;  // K_I vanishes
    bool extrinsicallyFlat = false;  // Gaussian curvature vector vanishes
    double mtProduct = 0.0;       // H_l(+) * H_l(-)
    double mtTolerance = 0.0;     // threshold applied to |mtProduct|
    double mtSideTolerance = 0.0; // threshold applied to |H_l(+)|, |H_l(-)|
};

// The product and per-side marginally trapped tests agree exactly: with
// tau = mtTolerance and m = max(|H_l(+)|, |H_l(-)|, sqrt(tau)),
// |H_l(+) H_l(-)| <= tau iff min(|H_l(+)|, |H_l(-)|) <= tau / m.
PointClassification classify_point(const CurvatureScalars& scalars,
                                   const PrincipalCurvatures& pcPlus,
                                   const PrincipalCurvatures& pcMinus,
                                   const Vec4& meanVector, const Vec4& gaussVector,
                                   const Tolerances& tol = {});

// Everything the engine knows about one point of a patch.
struct CurvatureReport {
    Jet3 jet;
    Metric2 metric;
    NormalFrame frame;
    SecondFundamental second;
    ShapeOperators shapes;
    CurvatureScalars scalars;
    PrincipalCurvatures pcT, pcS, pcPlus, pcMinus;
    Vec4 meanVector, gaussVector;
    Christoffel gamma;
    double riemannMetric = 0.0; // R_1212 via metric derivatives
    double riemannShape = 0.0;  // R_1212 via det hT - det hS
    PointClassification cls;
};

CurvatureReport curvature_report(const SurfacePatch& patch, double u1, double u2,
                                 FrameRule rule = FrameRule::Generic,
                                 const Tolerances& tol = {});

} // namespace llg
