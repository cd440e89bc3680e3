#include "llg/variation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "llg/catalog.hpp"
#include "llg/curvature.hpp"
#include "llg/error.hpp"
#include "llg/numerics.hpp"

namespace llg {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

double sign_of(LightSign s) {
    return s == LightSign::Plus ? 1.0 : -1.0;
}

// One quadrature node of a lightlike variation. X^eps is linear in eps, so
// g(eps) = g0 + eps g1 + eps^2 g2 exactly, for every eps.
struct VariationNode {
    double u1 = 0.0, u2 = 0.0;
    double weight = 0.0; // Simpson weight product
    Sym2 g0, g1, g2;
    double rootDet0 = 0.0;
    double alpha = 0.0;
    double meanT = 0.0, meanS = 0.0;
    double meanLight = 0.0;  // H_l along the chosen direction
    double gaussLight = 0.0; // K_l along the chosen direction
};

std::vector<VariationNode> variation_grid(const SurfacePatch& base, const Expression& alpha,
                                          LightSign sign, FrameRule rule, const Quadrature& quad) {
    if (!base.taylor_capable())
        raise(Errc::TaylorUnavailable,
              "lightlike variations need a Taylor capable base patch, got " + base.name());
    const Domain& dom = base.domain();
    const int n1 = odd_nodes(quad.n1), n2 = odd_nodes(quad.n2);
    const std::vector<double> w1 = simpson_weights(n1, dom.lo1, dom.hi1);
    const std::vector<double> w2 = simpson_weights(n2, dom.lo2, dom.hi2);
    const double sgn = sign_of(sign);

    std::vector<VariationNode> nodes;
    nodes.reserve(static_cast<std::size_t>(n1) * n2);
    for (int i = 0; i < n1; ++i) {
        const double u1 = dom.lo1 + dom.span1() * i / (n1 - 1);
        for (int j = 0; j < n2; ++j) {
            const double u2 = dom.lo2 + dom.span2() * j / (n2 - 1);
            const TaylorVec4 X = base.eval_taylor(u1, u2);
            const TaylorFrame tf = taylor_frame(X, rule);
            const Taylor a = alpha.eval_taylor(u1, u2);

            TaylorVec4 w;
            for (int k = 0; k < 4; ++k)
                w[k] = a * (tf.nT[k] + sgn * tf.nS[k]);

            Vec4 Xu1, Xu2, Wu1, Wu2;
            for (int k = 0; k < 4; ++k) {
                Xu1[k] = X[k].deriv(1, 0);
                Xu2[k] = X[k].deriv(0, 1);
                Wu1[k] = w[k].deriv(1, 0);
                Wu2[k] = w[k].deriv(0, 1);
            }

            VariationNode node;
            node.u1 = u1;
            node.u2 = u2;
            node.weight = w1[i] * w2[j];
            node.g0 = {minkowski_inner(Xu1, Xu1), minkowski_inner(Xu1, Xu2),
                       minkowski_inner(Xu2, Xu2)};
            node.g1 = {2.0 * minkowski_inner(Wu1, Xu1),
                       minkowski_inner(Wu1, Xu2) + minkowski_inner(Xu1, Wu2),
                       2.0 * minkowski_inner(Wu2, Xu2)};
            node.g2 = {minkowski_inner(Wu1, Wu1), minkowski_inner(Wu1, Wu2),
                       minkowski_inner(Wu2, Wu2)};
            node.alpha = a.value();

            const Jet3 jet = jet_from_taylor(X, u1, u2);
            const Metric2 metric = first_fundamental_form(jet);
            NormalFrame frame;
            frame.rule = rule;
            for (int k = 0; k < 4; ++k) {
                frame.nT[k] = tf.nT[k].value();
                frame.nS[k] = tf.nS[k].value();
            }
            frame.lPlus = frame.nT + frame.nS;
            frame.lMinus = frame.nT - frame.nS;

            const SecondFundamental h = second_fundamental(jet, frame);
            const CurvatureScalars s = curvature_scalars(h, metric);
            node.rootDet0 = std::sqrt(metric.det);
            node.meanT = s.meanT;
            node.meanS = s.meanS;
            node.meanLight = sign == LightSign::Plus ? s.meanPlus : s.meanMinus;
            node.gaussLight = sign == LightSign::Plus ? s.gaussPlus : s.gaussMinus;
            nodes.push_back(node);
        }
    }
    return nodes;
}

double area_at(const std::vector<VariationNode>& nodes, double eps) {
    double total = 0.0;
    for (const VariationNode& n : nodes) {
        const Sym2 g = n.g0 + eps * n.g1 + (eps * eps) * n.g2;
        const double det = g.det();
        const double scale = g.m11 + g.m22;
        if (!(g.m11 > 0.0 && det > 1e-12 * scale * scale))
            raise(Errc::VariationLeavesSpacelikeClass,
                  fmt("varied surface at eps = %.17g is not spacelike at (u1, u2) = "
                      "(%.17g, %.17g)",
                      eps, n.u1, n.u2));
        total += n.weight * std::sqrt(det);
    }
    return total;
}

std::vector<double> stencil(double step) {
    return {-2.0 * step, -step, 0.0, step, 2.0 * step};
}

void require_step(double epsStep) {
    if (!(epsStep > 0.0))
        raise(Errc::Numerical, fmt("variation step must be positive, got %.17g", epsStep));
}

double least_squares_slope(const std::vector<double>& steps, const std::vector<double>& errors) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const double n = static_cast<double>(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const double x = std::log(steps[i]);
        const double y = std::log(std::max(errors[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

const char* light_sign_name(LightSign s) {
    return s == LightSign::Plus ? "plus" : "minus";
}

double area(const SurfacePatch& patch, const Quadrature& quad) {
    const Domain& dom = patch.domain();
    const int n1 = odd_nodes(quad.n1), n2 = odd_nodes(quad.n2);
    const std::vector<double> w1 = simpson_weights(n1, dom.lo1, dom.hi1);
    const std::vector<double> w2 = simpson_weights(n2, dom.lo2, dom.hi2);
    double total = 0.0;
    for (int i = 0; i < n1; ++i) {
        const double u1 = dom.lo1 + dom.span1() * i / (n1 - 1);
        for (int j = 0; j < n2; ++j) {
            const double u2 = dom.lo2 + dom.span2() * j / (n2 - 1);
            const Metric2 metric = first_fundamental_form(patch.eval_jet(u1, u2));
            total += w1[i] * w2[j] * std::sqrt(metric.det);
        }
    }
    return total;
}

SurfacePatch varied_patch(const SurfacePatch& base, const Expression& alpha, LightSign sign,
                          double eps, FrameRule rule) {
    if (!base.taylor_capable())
        raise(Errc::TaylorUnavailable,
              "lightlike variations need a Taylor capable base patch, got " + base.name());
    const double sgn = sign_of(sign);
    auto map = [base, alpha, sgn, eps, rule](const Taylor& t1, const Taylor& t2) -> TaylorVec4 {
        const TaylorVec4 X = base.eval_taylor(t1.value(), t2.value());
        const TaylorFrame tf = taylor_frame(X, rule);
        const Taylor a = alpha.eval_taylor(t1.value(), t2.value());
        TaylorVec4 out;
        for (int k = 0; k < 4; ++k)
            out[k] = X[k] + eps * (a * (tf.nT[k] + sgn * tf.nS[k]));
        return out;
    };
    const std::string name =
        base.name() + " varied l" + (sign == LightSign::Plus ? "+" : "-") + fmt(" eps=%g", eps);
    return SurfacePatch::from_taylor_map(map, base.domain(), name);
}

std::vector<double> areas_along_variation(const SurfacePatch& base, const Expression& alpha,
                                          LightSign sign, const std::vector<double>& epsilons,
                                          FrameRule rule, const Quadrature& quad) {
    const std::vector<VariationNode> nodes = variation_grid(base, alpha, sign, rule, quad);
    std::vector<double> areas;
    areas.reserve(epsilons.size());
    for (double eps : epsilons)
        areas.push_back(area_at(nodes, eps));
    return areas;
}

VariationCheck first_variation_check(const SurfacePatch& base, const Expression& alpha,
                                     LightSign sign, FrameRule rule, const Quadrature& quad,
                                     double epsStep) {
    require_step(epsStep);
    const std::vector<VariationNode> nodes = variation_grid(base, alpha, sign, rule, quad);
    const std::vector<double> eps = stencil(epsStep);
    const std::vector<std::vector<double>> wts = fornberg_weights(0.0, eps, 1);

    VariationCheck check;
    for (std::size_t k = 0; k < eps.size(); ++k)
        check.numeric += wts[1][k] * area_at(nodes, eps[k]);
    for (const VariationNode& n : nodes)
        check.analytic += -2.0 * n.weight * n.alpha * n.meanLight * n.rootDet0;
    check.difference = std::fabs(check.numeric - check.analytic);
    return check;
}

VariationCheck second_variation_check(const SurfacePatch& base, const Expression& alpha,
                                      LightSign sign, FrameRule rule, const Quadrature& quad,
                                      double epsStep, double mtTol) {
    require_step(epsStep);
    const std::vector<VariationNode> nodes = variation_grid(base, alpha, sign, rule, quad);
    for (const VariationNode& n : nodes) {
        const double gate = mtTol * (1.0 + std::fabs(n.meanT) + std::fabs(n.meanS));
        if (std::fabs(n.meanLight) > gate)
            raise(Errc::HypothesisViolated,
                  fmt("second variation formula needs H_l = 0 along the chosen direction: "
                      "|H_l| = %.17g at (u1, u2) = (%.17g, %.17g)",
                      std::fabs(n.meanLight), n.u1, n.u2));
    }

    const std::vector<double> eps = stencil(epsStep);
    const std::vector<std::vector<double>> wts = fornberg_weights(0.0, eps, 2);

    VariationCheck check;
    for (std::size_t k = 0; k < eps.size(); ++k)
        check.numeric += wts[2][k] * area_at(nodes, eps[k]);
    for (const VariationNode& n : nodes)
        check.analytic += 2.0 * n.weight * n.alpha * n.alpha * n.gaussLight * n.rootDet0;
    check.difference = std::fabs(check.numeric - check.analytic);
    return check;
}

double cayley_hamilton_residual(const SurfacePatch& patch, FrameRule rule, int n1, int n2) {
    const Domain& dom = patch.domain();
    n1 = std::max(n1, 2);
    n2 = std::max(n2, 2);
    double worst = 0.0;
    for (int i = 0; i < n1; ++i) {
        const double u1 = dom.lo1 + dom.span1() * i / (n1 - 1);
        for (int j = 0; j < n2; ++j) {
            const double u2 = dom.lo2 + dom.span2() * j / (n2 - 1);
            const CurvatureReport rep = curvature_report(patch, u1, u2, rule);
            const struct {
                Mat2 s;
                double mean, gauss;
            } sides[2] = {{rep.shapes.sPlus, rep.scalars.meanPlus, rep.scalars.gaussPlus},
                          {rep.shapes.sMinus, rep.scalars.meanMinus, rep.scalars.gaussMinus}};
            for (const auto& side : sides) {
                const Mat2 r = side.s * side.s - 2.0 * side.mean * side.s +
                               side.gauss * Mat2::identity();
                const double denom = 1.0 + side.s.frobenius() * side.s.frobenius();
                worst = std::max(worst, r.frobenius() / denom);
            }
        }
    }
    return worst;
}

double lightlike_weingarten_residual(const SurfacePatch& patch, LightSign sign, FrameRule rule,
                                     int n1, int n2) {
    const Domain& dom = patch.domain();
    n1 = std::max(n1, 2);
    n2 = std::max(n2, 2);
    double worst = 0.0;
    for (int i = 0; i < n1; ++i) {
        const double u1 = dom.lo1 + dom.span1() * i / (n1 - 1);
        for (int j = 0; j < n2; ++j) {
            const double u2 = dom.lo2 + dom.span2() * j / (n2 - 1);
            const FrameDerivatives fd = frame_derivatives(patch, u1, u2, rule);
            const Jet3 jet = patch.eval_jet(u1, u2);
            const Metric2 metric = first_fundamental_form(jet);
            const SecondFundamental h = second_fundamental(jet, fd.frame);
            const CurvatureScalars s = curvature_scalars(h, metric);

            const Vec4 l1 = sign == LightSign::Plus ? fd.lPlus_u1 : fd.lMinus_u1;
            const Vec4 l2 = sign == LightSign::Plus ? fd.lPlus_u2 : fd.lMinus_u2;
            const Sym2 lhs = {minkowski_inner(l1, l1), minkowski_inner(l1, l2),
                              minkowski_inner(l2, l2)};
            const double mean = sign == LightSign::Plus ? s.meanPlus : s.meanMinus;
            const double gauss = sign == LightSign::Plus ? s.gaussPlus : s.gaussMinus;
            const Sym2 hl = sign == LightSign::Plus ? h.hPlus : h.hMinus;
            const Sym2 rhs = 2.0 * mean * hl - gauss * metric.g;

            const double scale = 1.0 + std::fabs(rhs.m11) + std::fabs(rhs.m12) +
                                 std::fabs(rhs.m22) + std::fabs(lhs.m11) + std::fabs(lhs.m12) +
                                 std::fabs(lhs.m22);
            const Sym2 diff = lhs - rhs;
            const double entry = std::max({std::fabs(diff.m11), std::fabs(diff.m12),
                                           std::fabs(diff.m22)});
            worst = std::max(worst, entry / scale);
        }
    }
    return worst;
}

DerivativeCheck mean_curvature_derivative_check(const SurfacePatch& base, const Expression& alpha,
                                                double u1, double u2, double epsStep) {
    require_step(epsStep);
    const std::vector<double> eps = stencil(epsStep);
    const std::vector<std::vector<double>> wts = fornberg_weights(0.0, eps, 1);

    std::vector<double> means;
    std::vector<Vec4> lplus;
    CurvatureReport baseRep;
    for (double e : eps) {
        const SurfacePatch p = varied_patch(base, alpha, LightSign::Plus, e, FrameRule::Generic);
        const CurvatureReport rep = curvature_report(p, u1, u2, FrameRule::Generic);
        means.push_back(rep.scalars.meanPlus);
        lplus.push_back(rep.frame.lPlus);
        if (e == 0.0)
            baseRep = rep;
    }

    DerivativeCheck check;
    Vec4 dl{};
    for (std::size_t k = 0; k < eps.size(); ++k) {
        check.lhs += wts[1][k] * means[k];
        dl = dl + wts[1][k] * lplus[k];
    }
    const double a = alpha.eval(u1, u2);
    const double mean = baseRep.scalars.meanPlus;
    const double gauss = baseRep.scalars.gaussPlus;
    check.rhs = a * (2.0 * mean * mean - gauss) -
                0.5 * minkowski_inner(dl, baseRep.frame.lMinus) * mean;
    return check;
}

AreaPolynomial area_polynomial(const SurfacePatch& base, const Expression& alpha, LightSign sign,
                               FrameRule rule, const Quadrature& quad) {
    const std::vector<VariationNode> nodes = variation_grid(base, alpha, sign, rule, quad);
    AreaPolynomial poly;
    for (const VariationNode& n : nodes) {
        poly.a0 += n.weight * n.rootDet0;
        poly.a1 += -2.0 * n.weight * n.alpha * n.meanLight * n.rootDet0;
        poly.a2 += n.weight * n.alpha * n.alpha * n.gaussLight * n.rootDet0;
    }
    return poly;
}

ConvergenceStudy quadrature_convergence_study() {
    const SurfacePatch sphere = make_sphere_patch(1.0, 1e-3);
    const double exact = 4.0 * kPi * std::cos(1e-3);
    ConvergenceStudy study;
    for (int n : {11, 21, 41, 81}) {
        study.steps.push_back(1.0 / (n - 1));
        study.errors.push_back(std::fabs(area(sphere, {n, n}) - exact));
    }
    study.order = least_squares_slope(study.steps, study.errors);
    return study;
}

ConvergenceStudy eps_convergence_study() {
    const SurfacePatch sphere = make_sphere_patch(1.0, 0.3);
    const Expression alpha = Expression::parse("1");
    const double u1 = 1.0, u2 = kPi / 2.0;

    auto mean_at = [&](double eps) {
        const SurfacePatch p =
            varied_patch(sphere, alpha, LightSign::Plus, eps, FrameRule::Generic);
        return curvature_report(p, u1, u2, FrameRule::Generic).scalars.meanPlus;
    };

    ConvergenceStudy study;
    study.steps = {0.08, 0.04, 0.02, 0.01};
    for (double s : study.steps) {
        const double d1 = (mean_at(s) - mean_at(-s)) / (2.0 * s);
        study.errors.push_back(std::fabs(d1 - 1.0));
    }
    study.order = least_squares_slope(study.steps, study.errors);
    return study;
}

} // namespace llg
