#pragma once

// Distinguished 3-slices of R^4_1 and their specialization identities. Each
// slice pins one leg of the normal frame, the lightcone curvatures collapse
// to a classical curvature theory inside the slice, and the classical theory
// is recomputed here from scratch as a two-route oracle:
//   Euclidean3   x0 = 0        nT = e0, H~+- = +-H, K~+- = K (Weingarten map)
//   Minkowski3   x3 = 0        nS = e3, H_l(+-) = H, K_l(+-) = K
//   Hyperbolic3  <X,X> = -1    nT = X, H(nT) = -1, H_l(+-) = -1 +- H(nS)
//   DeSitter3    <X,X> = +1    nS = X, H(nS) = -1, H_l(+-) = H(nT) -+ 1
//   Lightcone    <X,X> = 0     dual map Xell with <X, Xell> = -2

#include <string>
#include <vector>

#include "llg/catalog.hpp"
#include "llg/curvature.hpp"
#include "llg/minkowski.hpp"
#include "llg/surface.hpp"

namespace llg {

// The frame rule the curvature engine should use inside a slice.
FrameRule slice_rule(SliceKind kind);

struct AmbientSlice {
    SliceKind kind = SliceKind::None;
    SurfacePatch patch;
    double maxConstraintResidual = 0.0; // over the validation grid
};

// Validates the slice constraint on an n1 x n2 grid and raises
// ConstraintViolated with the worst residual when it exceeds tol. Hyperbolic
// patches must stay on the upper sheet (x0 > 0), lightcone patches away from
// the origin.
AmbientSlice embed(SliceKind kind, SurfacePatch patch, int n1 = 9, int n2 = 9,
                   double tol = 1e-10);

// Catalog entries carrying a slice tag, embedded and validated.
AmbientSlice slice_from_catalog(const std::string& name);

struct SpecializationReport {
    SliceKind kind = SliceKind::None;
    int samples = 0;
    double frameResidual = 0.0;    // worst deviation of the pinned frame leg
    double meanResidual = 0.0;     // worst mean curvature identity residual
    double gaussResidual = 0.0;    // worst Gauss curvature identity residual
    double positionResidual = 0.0; // worst |H + 1|, |K - 1| of the position normal
    bool mtEquivalenceHolds = true; // Euclidean3/Minkowski3: MT <=> strongly MT
    bool noStronglyMT = true;       // Hyperbolic3/DeSitter3/Lightcone: none exists

    bool pass(double tol = 1e-7) const {
        return frameResidual <= tol && meanResidual <= tol && gaussResidual <= tol &&
               positionResidual <= tol && mtEquivalenceHolds && noStronglyMT;
    }
};

// Grid-quantified residuals of the per-slice identities listed above. The
// Euclidean and Minkowski oracles are classical 3D shape operators computed
// inside the slice, independent of the 4D frame machinery.
SpecializationReport specialization_check(const AmbientSlice& slice, int n1 = 7, int n2 = 7);

struct LightconeDual {
    double u1 = 0.0, u2 = 0.0;
    Vec4 Xell;                   // unique lightlike normal with <X, Xell> = -2
    double kappaEll1 = 0.0;      // eigenvalues of S_ell = -dXell, ascending
    double kappaEll2 = 0.0;
    double gaussLC = 0.0;        // det S_ell
    double meanLC = 0.0;         // half trace of S_ell
    double pairingResidual = 0.0;   // |<X, Xell> + 2|
    double tangencyResidual = 0.0;  // max_i |<X_ui, Xell>|
    double lightlikeResidual = 0.0; // |<Xell, Xell>|
    double frameResidual = 0.0;     // dual frame (X+-Xell)/2 unit and orthogonal
    double kappaCrossResidual = 0.0; // kappa_i(nT) = (-1+kappaEll_i)/2 and the nS twin
};

// Builds the dual by forming the generic frame, identifying which of l+- is
// parallel to the position (both are lightlike normal sections), and
// rescaling the other to pairing -2. S_ell is evaluated by central finite
// differences of the dual field, so the point needs fdStep of room inside
// the domain. Raises DualDegenerate if neither l+- aligns with the position.
LightconeDual lightcone_dual(const AmbientSlice& slice, double u1, double u2,
                             double fdStep = 1e-5);

struct LightconeTheoremReport {
    int samples = 0;
    double worstEgregium = 0.0;   // |K_I - meanLC|
    double worstTracePlus = 0.0;  // |tr S(nT) + tr S(nS) + 2| in the dual frame
    double worstTraceMinus = 0.0; // |tr S(nT) - tr S(nS) - 2 meanLC|
    double worstDual = 0.0;       // worst LightconeDual residual over the grid
    bool predicatesAgree = true;  // the five-way equivalence below
    bool noStronglyMT = true;
    int trappedSamples = 0;

    bool pass(double tolEgregium = 1e-6, double tolTrace = 1e-7) const {
        return worstEgregium <= tolEgregium && worstTracePlus <= tolTrace &&
               worstTraceMinus <= tolTrace && predicatesAgree && noStronglyMT;
    }
};

// Pointwise equivalence on the grid, under the shared tolerance tau:
// marginally trapped <=> meanLC = 0 <=> the mean curvature vector has no
// position component (it is parallel to Xell or zero) <=> K_I = 0 <=> the
// Gauss curvature vector has no Xell component (parallel to X or zero).
LightconeTheoremReport lightcone_theorem_check(const AmbientSlice& slice, int n1 = 7,
                                               int n2 = 7, double tau = 1e-6);

struct HorosphereReport {
    bool insufficientSamples = false;
    bool constantPlus = false; // lightcone Gauss image X + E constant on the grid
    bool constantMinus = false;
    Vec4 vPlus, vMinus;           // grid means of the two images
    double devPlus = 0.0;         // max deviation from the mean
    double devMinus = 0.0;
    double fitResidualPlus = 0.0; // max |<X, v> - c| for the fitted offset c
    double fitResidualMinus = 0.0;
    double planeOffsetPlus = 0.0;
    double planeOffsetMinus = 0.0;
};

// A de Sitter surface has a constant lightcone Gauss image exactly when it
// lies in the intersection of S^3_1 with a lightlike hyperplane <x, v> = c
// (a de Sitter horosphere). Constancy is decided at tau, membership by the
// affine fit residual. A single-sample grid is trivially constant and only
// flags insufficientSamples.
HorosphereReport desitter_horosphere_check(const AmbientSlice& slice, int n1 = 7, int n2 = 7,
                                           double tau = 1e-8);

} // namespace llg
