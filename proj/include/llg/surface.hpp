#pragma once

// Spacelike surface patches X : U c R^2 -> R^4_1 and their normal frames.
//
// A patch carries one of three evaluation backends:
//   ClosedForm        a callable producing degree-4 Taylor series in (u1,u2)
//   ExpressionAD      four parsed expressions, evaluated over doubles or series
//   FiniteDifference  only a point map; jets come from shifted 5x5 stencils
// The first two are "Taylor capable": their order-3 jets are exact to
// rounding. Finite-difference jets degrade with derivative order and are
// meant for cross-checks and externally supplied samplers.

#include <array>
#include <functional>
#include <string>

#include "llg/expression.hpp"
#include "llg/mat2.hpp"
#include "llg/minkowski.hpp"
#include "llg/taylor.hpp"

namespace llg {

struct Domain {
    double lo1 = 0.0, hi1 = 1.0, lo2 = 0.0, hi2 = 1.0;

    double span1() const { return hi1 - lo1; }
    double span2() const { return hi2 - lo2; }
    // Slack of 1e-9 * span per axis, so grid endpoints survive rounding.
    bool contains(double u1, double u2) const;
};

// All partial derivatives of the immersion through order 3 at one point.
struct Jet3 {
    double u1 = 0.0, u2 = 0.0;
    Vec4 X;
    Vec4 X_u1, X_u2;
    Vec4 X_u1u1, X_u1u2, X_u2u2;
    Vec4 X_u1u1u1, X_u1u1u2, X_u1u2u2, X_u2u2u2;
};

enum class Provenance { ClosedForm, ExpressionAD, FiniteDifference };
const char* provenance_name(Provenance p);

using TaylorVec4 = std::array<Taylor, 4>;

Jet3 jet_from_taylor(const TaylorVec4& t, double u1, double u2);

class SurfacePatch {
  public:
    // Receives the seeded coordinate series (var1/var2 at the evaluation
    // point); must return the four component series of X.
    using TaylorMap = std::function<TaylorVec4(const Taylor&, const Taylor&)>;
    using PointMap = std::function<Vec4(double, double)>;

    SurfacePatch() = default;

    static SurfacePatch from_taylor_map(TaylorMap map, Domain dom, std::string name);
    static SurfacePatch from_expressions(const std::array<std::string, 4>& exprs, Domain dom,
                                         std::string name);
    static SurfacePatch from_point_map(PointMap map, Domain dom, std::string name);

    const Domain& domain() const { return dom_; }
    Provenance provenance() const { return prov_; }
    const std::string& name() const { return name_; }
    bool taylor_capable() const { return prov_ != Provenance::FiniteDifference; }

    Vec4 eval_point(double u1, double u2) const;
    // Exact for Taylor-capable patches; finite differences otherwise.
    Jet3 eval_jet(double u1, double u2) const;
    // Degree-4 component series; raises TaylorUnavailable on FD patches.
    TaylorVec4 eval_taylor(double u1, double u2) const;

  private:
    Domain dom_;
    Provenance prov_ = Provenance::ClosedForm;
    std::string name_;
    TaylorMap tmap_;
    PointMap pmap_;
    std::array<Expression, 4> exprs_;

    void require_inside(double u1, double u2) const;
    Jet3 fd_jet(double u1, double u2) const;
};

// Induced metric g_ij = <X_ui, X_uj>. Raises DegenerateMetric unless it is
// positive definite (g11 > 0 and det g > 1e-12 * scale^2).
Metric2 first_fundamental_form(const Jet3& jet);

// How the orthonormal normal frame (nT, nS) is constructed.
//   Generic            nT from the future unit normalization of e0 - e0^tangential,
//                      nS = wedge3(nT, X_u1, X_u2) normalized
//   MinkowskiSlice     nS := e3 for surfaces inside {x3 = 0}
//   HyperbolicPosition nT := X for surfaces inside hyperbolic 3-space <X,X> = -1
//   DeSitterPosition   nS := X for surfaces inside de Sitter 3-space <X,X> = 1
enum class FrameRule { Generic, MinkowskiSlice, HyperbolicPosition, DeSitterPosition };
const char* frame_rule_name(FrameRule r);

struct NormalFrame {
    Vec4 nT;     // unit timelike, future directed
    Vec4 nS;     // unit spacelike, orthogonal to nT and the tangent plane
    Vec4 lPlus;  // nT + nS
    Vec4 lMinus; // nT - nS
    FrameRule rule = FrameRule::Generic;
};

NormalFrame normal_frame(const Jet3& jet, FrameRule rule = FrameRule::Generic);

// Frame as component series, valid through degree 3 when X is a degree-4
// series (one degree is consumed by the tangent vectors).
struct TaylorFrame {
    TaylorVec4 nT, nS;
};
TaylorFrame taylor_frame(const TaylorVec4& X, FrameRule rule = FrameRule::Generic);

struct FrameDerivatives {
    NormalFrame frame;
    Vec4 nT_u1, nT_u2;
    Vec4 nS_u1, nS_u2;
    Vec4 lPlus_u1, lPlus_u2;   // nT_ui + nS_ui
    Vec4 lMinus_u1, lMinus_u2; // nT_ui - nS_ui
};

// First derivatives of the frame fields. Series-exact for Taylor-capable
// patches; five-point finite differences of per-node frames otherwise.
FrameDerivatives frame_derivatives(const SurfacePatch& patch, double u1, double u2,
                                   FrameRule rule = FrameRule::Generic);

// Verifies the induced metric is positive definite on an n1 x n2 grid of
// domain nodes. Raises NotSpacelike naming the first offending node, or
// InsufficientSamples when the grid has fewer than 2 nodes per axis.
void check_spacelike_grid(const SurfacePatch& patch, int n1, int n2);

} // namespace llg
