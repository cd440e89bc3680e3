#include "llg/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <utility>

#include "llg/catalog.hpp"
#include "llg/curvature.hpp"
#include "llg/error.hpp"

namespace llg {
namespace {

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[192];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

GraphPointData raw_graph_point(const GraphSurface& s, double u1, double u2) {
    if (!s.patch.domain().contains(u1, u2)) {
        raise(Errc::OutOfDomain,
              fmt("graph point (u1, u2) = (%.17g, %.17g) is outside the domain", u1, u2));
    }
    const Taylor tf = s.f.eval_taylor(u1, u2);
    const Taylor tg = s.g.eval_taylor(u1, u2);
    const double f1 = tf.deriv(1, 0), f2 = tf.deriv(0, 1);
    const double f11 = tf.deriv(2, 0), f12 = tf.deriv(1, 1), f22 = tf.deriv(0, 2);
    const double g1 = tg.deriv(1, 0), g2 = tg.deriv(0, 1);
    const double g11 = tg.deriv(2, 0), g12 = tg.deriv(1, 1), g22 = tg.deriv(0, 2);

    // Induced metric of (f, g, u1, u2); its determinant equals delta below.
    const double m11 = 1.0 - f1 * f1 + g1 * g1;
    const double m12 = -f1 * f2 + g1 * g2;
    const double m22 = 1.0 - f2 * f2 + g2 * g2;

    GraphPointData d;
    d.u1 = u1;
    d.u2 = u2;
    d.tau11 = 1.0 + g1 * g1 + g2 * g2;
    d.tau12 = f1 * g1 + f2 * g2;
    d.tau22 = -1.0 + f1 * f1 + f2 * f2;
    d.delta = d.tau12 * d.tau12 - d.tau11 * d.tau22;
    d.phi1 = m22 * f11 - 2.0 * m12 * f12 + m11 * f22;
    d.phi2 = m22 * g11 - 2.0 * m12 * g12 + m11 * g22;
    d.v1 = {1.0, 0.0, f1, f2};
    d.v2 = {0.0, 1.0, -g1, -g2};
    d.mtQuadratic = d.tau11 * d.phi1 * d.phi1 - 2.0 * d.tau12 * d.phi1 * d.phi2 +
                    d.tau22 * d.phi2 * d.phi2;
    d.gradNorm2F = f1 * f1 + f2 * f2;
    d.gradNorm2G = g1 * g1 + g2 * g2;
    d.hessAbs = std::fabs(f11) + std::fabs(f12) + std::fabs(f22) + std::fabs(g11) +
                std::fabs(g12) + std::fabs(g22);
    if (d.delta > 0.0) {
        const double a = d.tau11 * d.phi1 - d.tau12 * d.phi2;
        const double b = d.tau12 * d.phi1 - d.tau22 * d.phi2;
        const double w = 1.0 / (2.0 * d.delta * d.delta);
        for (int k = 0; k < 4; ++k) {
            d.meanVector[k] = w * (a * d.v1[k] + b * d.v2[k]);
        }
        d.meanNorm2 = -d.mtQuadratic / (4.0 * d.delta * d.delta * d.delta);
    }
    return d;
}

} // namespace

const char* graph_class_name(GraphClass c) {
    switch (c) {
    case GraphClass::NotSpacelike: return "not-spacelike";
    case GraphClass::StronglyMT: return "strongly-marginally-trapped";
    case GraphClass::MT: return "marginally-trapped";
    case GraphClass::NotMT: return "not-marginally-trapped";
    }
    return "?";
}

GraphSurface make_graph_surface(const std::string& f, const std::string& g, Domain dom,
                                std::string name) {
    if (name.empty()) {
        name = "graph(" + f + "; " + g + ")";
    }
    GraphSurface s{Expression::parse(f), Expression::parse(g),
                   make_graph_patch(f, g, dom, std::move(name))};
    return s;
}

GraphPointData graph_point_data(const GraphSurface& s, double u1, double u2, double tol) {
    GraphPointData d = raw_graph_point(s, u1, u2);
    if (!(d.delta > tol)) {
        raise(Errc::NotSpacelike,
              fmt("graph tangent plane at (u1, u2) = (%.17g, %.17g) is not spacelike: "
                  "delta = %.17g",
                  u1, u2, d.delta));
    }
    return d;
}

GraphClass classify_graph(const GraphSurface& s, double u1, double u2, double tol) {
    const GraphPointData d = raw_graph_point(s, u1, u2);
    if (!(d.delta > tol)) {
        return GraphClass::NotSpacelike;
    }
    const double gradScale = 1.0 + d.gradNorm2F + d.gradNorm2G;
    const double phiScale = std::max({std::fabs(d.phi1), std::fabs(d.phi2), 1.0});
    const double quadGate = tol * gradScale * gradScale * phiScale * phiScale;
    const bool strongly = std::fabs(d.phi1) <= tol && std::fabs(d.phi2) <= tol;
    const bool trapped = std::fabs(d.mtQuadratic) <= quadGate;
    if (strongly && !trapped) {
        raise(Errc::Numerical,
              fmt("inconsistent classification at (u1, u2) = (%.17g, %.17g): phi1 = phi2 = 0 "
                  "but the trapped quadratic is %.17g",
                  u1, u2, d.mtQuadratic));
    }
    if (strongly) {
        return GraphClass::StronglyMT;
    }
    return trapped ? GraphClass::MT : GraphClass::NotMT;
}

GraphCrossCheck cross_validate_graph(const GraphSurface& s, double u1, double u2) {
    const GraphPointData d = graph_point_data(s, u1, u2);
    const CurvatureReport rep = curvature_report(s.patch, u1, u2, FrameRule::Generic);

    Vec4 diff;
    for (int k = 0; k < 4; ++k) {
        diff[k] = d.meanVector[k] - rep.meanVector[k];
    }
    const double vScale = 1.0 + euclid_norm(d.meanVector) + euclid_norm(rep.meanVector);
    const double engineNorm2 = minkowski_inner(rep.meanVector, rep.meanVector);
    const double nScale = 1.0 + std::fabs(d.meanNorm2) + std::fabs(engineNorm2);

    // Evaluate the closed-form route against the engine's own thresholds, so
    // any disagreement measures the routes and not two tolerance scalings.
    const Tolerances tol{};
    const double strongGate =
        tol.mt * (1.0 + std::fabs(rep.scalars.meanT) + std::fabs(rep.scalars.meanS));
    const bool strongGraph = euclid_norm(d.meanVector) <= strongGate;
    const bool trappedGraph = std::fabs(d.meanNorm2) <= rep.cls.mtTolerance;

    GraphCrossCheck check;
    check.meanVectorDeviation = euclid_norm(diff) / vScale;
    check.meanNorm2Deviation = std::fabs(d.meanNorm2 - engineNorm2) / nScale;
    check.classAgrees = rep.cls.marginallyTrapped == trappedGraph &&
                        rep.cls.stronglyMarginallyTrapped == strongGraph;
    return check;
}

std::vector<BernsteinCase> bernstein_cases() {
    return {
        {"u1^2 - u2^2", "u1^2 - u2^2", "entire harmonic, degree two", 10.0,
         GraphClass::StronglyMT, true},
        {"exp(u1) * cos(u2)", "exp(u1) * cos(u2)", "entire harmonic, transcendental", 5.0,
         GraphClass::StronglyMT, true},
        {"u1^3 - 3*u1*u2^2", "u1^3 - 3*u1*u2^2", "entire harmonic, degree three", 5.0,
         GraphClass::StronglyMT, true},
        {"u1", "u1", "affine: the flat member of the family", 10.0, GraphClass::StronglyMT,
         false},
    };
}

std::vector<BernsteinResult> bernstein_counterexample_suite(int n) {
    if (n < 2) {
        raise(Errc::InsufficientSamples, fmt("suite grid needs n >= 2, got %g", double(n)));
    }
    std::vector<BernsteinResult> out;
    for (const BernsteinCase& item : bernstein_cases()) {
        const double hw = item.halfWidth;
        const GraphSurface s = make_graph_surface(item.f, item.g, {-hw, hw, -hw, hw});
        BernsteinResult r{item, true, true, false};
        bool curvatureSeen = false;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const double u1 = -hw + 2.0 * hw * i / (n - 1);
                const double u2 = -hw + 2.0 * hw * j / (n - 1);
                if (classify_graph(s, u1, u2) != item.expected) {
                    r.classMatched = false;
                }
                const GraphPointData d = raw_graph_point(s, u1, u2);
                if (item.f == item.g && std::fabs(d.delta - 1.0) > 1e-6) {
                    r.deltaPinned = false;
                }
                if (d.hessAbs > 1e-9) {
                    curvatureSeen = true;
                }
            }
        }
        r.curvatureMatched = curvatureSeen == item.curved;
        out.push_back(r);
    }
    return out;
}

} // namespace llg
