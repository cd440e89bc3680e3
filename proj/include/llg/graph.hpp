#pragma once

// Graph immersions X(u1, u2) = (f(u), g(u), u1, u2). The normal-bundle
// generators v1 = (1, 0, f1, f2) and v2 = (0, 1, -g1, -g2) have Gram data
//   tau11 = 1 + |grad g|^2, tau12 = grad f . grad g, tau22 = -1 + |grad f|^2,
// and delta = tau12^2 - tau11 tau22 equals det g of the induced metric, so
//   spacelike    <=> delta > 0
//   strongly MT  <=> delta > 0 and phi1 = phi2 = 0
//   MT           <=> delta > 0 and
//                    tau11 phi1^2 - 2 tau12 phi1 phi2 + tau22 phi2^2 = 0,
// where phi1, phi2 are the metric-weighted Laplacians of f and g.

#include <string>
#include <vector>

#include "llg/expression.hpp"
#include "llg/minkowski.hpp"
#include "llg/surface.hpp"

namespace llg {

enum class GraphClass { NotSpacelike, StronglyMT, MT, NotMT };
const char* graph_class_name(GraphClass c);

struct GraphSurface {
    Expression f, g;
    SurfacePatch patch; // (f, g, u1, u2) over the domain
};

GraphSurface make_graph_surface(const std::string& f, const std::string& g, Domain dom,
                                std::string name = "");

struct GraphPointData {
    double u1 = 0.0, u2 = 0.0;
    double tau11 = 0.0, tau12 = 0.0, tau22 = 0.0;
    double delta = 0.0; // tau12^2 - tau11 tau22 = det g
    double phi1 = 0.0, phi2 = 0.0;
    Vec4 v1, v2;
    Vec4 meanVector;          // [(t11 p1 - t12 p2) v1 + (t12 p1 - t22 p2) v2] / (2 delta^2)
    double meanNorm2 = 0.0;   // <H, H> = -mtQuadratic / (4 delta^3)
    double mtQuadratic = 0.0; // tau11 phi1^2 - 2 tau12 phi1 phi2 + tau22 phi2^2
    double gradNorm2F = 0.0, gradNorm2G = 0.0;
    double hessAbs = 0.0; // sum of |f_ij| + |g_ij|; zero exactly on planes
};

// Raises NotSpacelike when delta <= tol.
GraphPointData graph_point_data(const GraphSurface& s, double u1, double u2, double tol = 1e-8);

// Total classification; NotSpacelike is an outcome, not an error. Strongly
// MT requires |phi_i| <= tol; MT requires |mtQuadratic| within a gate that
// scales as tol (1 + |grad f|^2 + |grad g|^2)^2 max(|phi1|, |phi2|, 1)^2,
// since the quadratic is degree 4 in first derivatives.
GraphClass classify_graph(const GraphSurface& s, double u1, double u2, double tol = 1e-8);

struct GraphCrossCheck {
    double meanVectorDeviation = 0.0; // closed form vs curvature engine, relative
    double meanNorm2Deviation = 0.0;
    // Marginally trapped and strongly marginally trapped decisions from the
    // closed-form quantities, taken at the engine's own thresholds, against
    // the engine's point classification.
    bool classAgrees = false;

    bool pass(double tol = 1e-8) const {
        return meanVectorDeviation <= tol && meanNorm2Deviation <= tol && classAgrees;
    }
};

// Closed forms against the general engine on the same patch (generic frame).
// Raises NotSpacelike off the spacelike class.
GraphCrossCheck cross_validate_graph(const GraphSurface& s, double u1, double u2);

struct BernsteinCase {
    std::string f, g;
    std::string summary;
    double halfWidth = 5.0; // sampled over [-halfWidth, halfWidth]^2
    GraphClass expected = GraphClass::StronglyMT;
    bool curved = true; // whether a nonzero Hessian sample must appear
};

std::vector<BernsteinCase> bernstein_cases();

struct BernsteinResult {
    BernsteinCase item;
    bool classMatched = false;     // every sample classifies as expected
    bool deltaPinned = false;      // f = g cases keep |delta - 1| <= 1e-6
    bool curvatureMatched = false; // nonzero-Hessian samples match `curved`

    bool pass() const { return classMatched && deltaPinned && curvatureMatched; }
};

// Entire graphs with f = g and f harmonic are strongly marginally trapped
// everywhere yet non-planar, so the classical Bernstein alternative (an
// entire minimal graph in Euclidean 3-space must be a plane) fails for this
// class. Samples each case on an n x n grid.
std::vector<BernsteinResult> bernstein_counterexample_suite(int n = 9);

} // namespace llg
