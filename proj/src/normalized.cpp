#include "llg/normalized.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "llg/error.hpp"
#include "llg/numerics.hpp"

namespace llg {

namespace {

constexpr double kFdStepScale = 1e-3;

// The two Gauss map values and their first derivatives, computed with the
// normalization applied before differentiation. A constant boost phi is
// applied to the frame first; the resulting field is the same for every phi.
struct GaussMapDerivs {
    Vec4 LPlus, LMinus;
    Vec4 LPlus_u1, LPlus_u2;
    Vec4 LMinus_u1, LMinus_u2;
};

GaussMapDerivs taylor_gauss_derivs(const SurfacePatch& patch, double u1, double u2,
                                   FrameRule rule, double phi) {
    const TaylorFrame tf = taylor_frame(patch.eval_taylor(u1, u2), rule);
    const double ch = std::cosh(phi);
    const double sh = std::sinh(phi);
    TaylorVec4 lp, lm;
    for (int k = 0; k < 4; ++k) {
        const Taylor nT = ch * tf.nT[k] + sh * tf.nS[k];
        const Taylor nS = sh * tf.nT[k] + ch * tf.nS[k];
        lp[k] = nT + nS;
        lm[k] = nT - nS;
    }
    GaussMapDerivs out;
    for (int k = 0; k < 4; ++k) {
        const Taylor Lp = lp[k] / lp[0];
        const Taylor Lm = lm[k] / lm[0];
        out.LPlus[k] = Lp.value();
        out.LMinus[k] = Lm.value();
        out.LPlus_u1[k] = Lp.deriv(1, 0);
        out.LPlus_u2[k] = Lp.deriv(0, 1);
        out.LMinus_u1[k] = Lm.deriv(1, 0);
        out.LMinus_u2[k] = Lm.deriv(0, 1);
    }
    return out;
}

GaussMapDerivs stencil_gauss_derivs(const SurfacePatch& patch, double u1, double u2,
                                    FrameRule rule, double phi) {
    const double ch = std::cosh(phi);
    const double sh = std::sinh(phi);
    const auto maps_at = [&](double a, double b, Vec4& Lp, Vec4& Lm) {
        const NormalFrame f = normal_frame(patch.eval_jet(a, b), rule);
        const Vec4 nT = ch * f.nT + sh * f.nS;
        const Vec4 nS = sh * f.nT + ch * f.nS;
        Lp = project_to_S2plus(nT + nS);
        Lm = project_to_S2plus(nT - nS);
    };
    GaussMapDerivs out;
    maps_at(u1, u2, out.LPlus, out.LMinus);

    const Domain& dom = patch.domain();
    const auto axis = [&](int which, Vec4& dLp, Vec4& dLm) {
        const double h = kFdStepScale * (which == 0 ? dom.span1() : dom.span2());
        const auto nodes = which == 0 ? shifted_stencil5(u1, h, dom.lo1, dom.hi1)
                                      : shifted_stencil5(u2, h, dom.lo2, dom.hi2);
        const std::vector<double> xs(nodes.begin(), nodes.end());
        const double x0 = which == 0 ? u1 : u2;
        const auto w = fornberg_weights(x0, xs, 1)[1];
        dLp = Vec4{};
        dLm = Vec4{};
        for (int i = 0; i < 5; ++i) {
            Vec4 Lp, Lm;
            if (which == 0)
                maps_at(xs[i], u2, Lp, Lm);
            else
                maps_at(u1, xs[i], Lp, Lm);
            dLp = dLp + w[i] * Lp;
            dLm = dLm + w[i] * Lm;
        }
    };
    axis(0, out.LPlus_u1, out.LMinus_u1);
    axis(1, out.LPlus_u2, out.LMinus_u2);
    return out;
}

GaussMapDerivs gauss_map_derivs(const SurfacePatch& patch, double u1, double u2, FrameRule rule,
                                double phi) {
    return patch.taylor_capable() ? taylor_gauss_derivs(patch, u1, u2, rule, phi)
                                  : stencil_gauss_derivs(patch, u1, u2, rule, phi);
}

double rel_vec(const Vec4& a, const Vec4& b) {
    return euclid_norm(a - b) / (1.0 + euclid_norm(b));
}

double rel_val(double a, double b) { return std::fabs(a - b) / (1.0 + std::fabs(b)); }

double rel_sym(const Sym2& a, const Sym2& b) {
    const double num = std::fabs(a.m11 - b.m11) + std::fabs(a.m12 - b.m12) +
                       std::fabs(a.m22 - b.m22);
    const double den = 1.0 + std::fabs(b.m11) + std::fabs(b.m12) + std::fabs(b.m22);
    return num / den;
}

} // namespace

NormalizedPoint normalized_point(const NormalFrame& frame, const SecondFundamental& second,
                                 const CurvatureScalars& scalars, const Metric2& metric) {
    NormalizedPoint np;
    np.LPlus = project_to_S2plus(frame.lPlus);
    np.LMinus = project_to_S2plus(frame.lMinus);
    np.l0Plus = frame.lPlus.x0;
    np.l0Minus = frame.lMinus.x0;
    np.hPlusTilde = (1.0 / np.l0Plus) * second.hPlus;
    np.hMinusTilde = (1.0 / np.l0Minus) * second.hMinus;
    np.meanPlusTilde = scalars.meanPlus / np.l0Plus;
    np.meanMinusTilde = scalars.meanMinus / np.l0Minus;
    np.gaussPlusTilde = scalars.gaussPlus / (np.l0Plus * np.l0Plus);
    np.gaussMinusTilde = scalars.gaussMinus / (np.l0Minus * np.l0Minus);
    const ShapeOperators shapes = shape_operators(second, metric);
    const PrincipalCurvatures pcPlus = principal_curvatures(shapes.sPlus);
    const PrincipalCurvatures pcMinus = principal_curvatures(shapes.sMinus);
    // l0 > 0 for a future frame, so the division preserves the ordering.
    np.pcPlusTilde = {pcPlus.k1 / np.l0Plus, pcPlus.k2 / np.l0Plus};
    np.pcMinusTilde = {pcMinus.k1 / np.l0Minus, pcMinus.k2 / np.l0Minus};
    return np;
}

NormalizedPoint normalized_report(const SurfacePatch& patch, double u1, double u2,
                                  FrameRule rule) {
    const Jet3 jet = patch.eval_jet(u1, u2);
    const Metric2 metric = first_fundamental_form(jet);
    const NormalFrame frame = normal_frame(jet, rule);
    const SecondFundamental h = second_fundamental(jet, frame);
    const CurvatureScalars s = curvature_scalars(h, metric);
    return normalized_point(frame, h, s, metric);
}

FrameIndependence frame_independence_check(const SurfacePatch& patch, double u1, double u2,
                                           FrameRule rule, int boosts, std::uint64_t seed) {
    if (boosts < 1)
        raise(Errc::Numerical, "frame independence check needs at least one boost");
    const Jet3 jet = patch.eval_jet(u1, u2);
    const Metric2 metric = first_fundamental_form(jet);
    const NormalFrame frame = normal_frame(jet, rule);
    const SecondFundamental h0 = second_fundamental(jet, frame);
    const CurvatureScalars s0 = curvature_scalars(h0, metric);
    const NormalizedPoint np0 = normalized_point(frame, h0, s0, metric);

    FrameIndependence out;
    out.boosts = boosts;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    double phi1 = 0.0;
    for (int k = 0; k < boosts; ++k) {
        const double phi = dist(rng);
        if (k == 0)
            phi1 = phi;
        NormalFrame bf;
        bf.rule = frame.rule;
        bf.nT = std::cosh(phi) * frame.nT + std::sinh(phi) * frame.nS;
        bf.nS = std::sinh(phi) * frame.nT + std::cosh(phi) * frame.nS;
        bf.lPlus = bf.nT + bf.nS;
        bf.lMinus = bf.nT - bf.nS;
        const SecondFundamental hb = second_fundamental(jet, bf);
        const CurvatureScalars sb = curvature_scalars(hb, metric);
        const NormalizedPoint np = normalized_point(bf, hb, sb, metric);
        double d = rel_vec(np.LPlus, np0.LPlus);
        d = std::max(d, rel_vec(np.LMinus, np0.LMinus));
        d = std::max(d, rel_sym(np.hPlusTilde, np0.hPlusTilde));
        d = std::max(d, rel_sym(np.hMinusTilde, np0.hMinusTilde));
        d = std::max(d, rel_val(np.meanPlusTilde, np0.meanPlusTilde));
        d = std::max(d, rel_val(np.meanMinusTilde, np0.meanMinusTilde));
        d = std::max(d, rel_val(np.gaussPlusTilde, np0.gaussPlusTilde));
        d = std::max(d, rel_val(np.gaussMinusTilde, np0.gaussMinusTilde));
        d = std::max(d, rel_val(np.pcPlusTilde.k1, np0.pcPlusTilde.k1));
        d = std::max(d, rel_val(np.pcPlusTilde.k2, np0.pcPlusTilde.k2));
        d = std::max(d, rel_val(np.pcMinusTilde.k1, np0.pcMinusTilde.k1));
        d = std::max(d, rel_val(np.pcMinusTilde.k2, np0.pcMinusTilde.k2));
        out.maxValueDeviation = std::max(out.maxValueDeviation, d);
    }

    // Derivative decomposition l0 dL~ = dl - dl0 L~, with dL~ from the
    // normalize-then-differentiate route and dl from frame_derivatives.
    const GaussMapDerivs gd = gauss_map_derivs(patch, u1, u2, rule, 0.0);
    const FrameDerivatives fd = frame_derivatives(patch, u1, u2, rule);
    const auto decomposition = [&](double l0, const Vec4& L, const Vec4& dL, const Vec4& dl) {
        const Vec4 residual = l0 * dL - (dl - dl.x0 * L);
        return euclid_norm(residual) / (1.0 + euclid_norm(dl));
    };
    double r = decomposition(np0.l0Plus, np0.LPlus, gd.LPlus_u1, fd.lPlus_u1);
    r = std::max(r, decomposition(np0.l0Plus, np0.LPlus, gd.LPlus_u2, fd.lPlus_u2));
    r = std::max(r, decomposition(np0.l0Minus, np0.LMinus, gd.LMinus_u1, fd.lMinus_u1));
    r = std::max(r, decomposition(np0.l0Minus, np0.LMinus, gd.LMinus_u2, fd.lMinus_u2));

    // The normalized field ignores constant boosts, derivatives included.
    const GaussMapDerivs gb = gauss_map_derivs(patch, u1, u2, rule, phi1);
    r = std::max(r, rel_vec(gb.LPlus_u1, gd.LPlus_u1));
    r = std::max(r, rel_vec(gb.LPlus_u2, gd.LPlus_u2));
    r = std::max(r, rel_vec(gb.LMinus_u1, gd.LMinus_u1));
    r = std::max(r, rel_vec(gb.LMinus_u2, gd.LMinus_u2));
    out.maxDerivativeResidual = r;
    return out;
}

double isothermal_identity_residual(const SurfacePatch& patch, double u1, double u2,
                                    FrameRule rule, double isothermalTol) {
    const Jet3 jet = patch.eval_jet(u1, u2);
    const Metric2 metric = first_fundamental_form(jet);
    const double scale = 1.0 + std::fabs(metric.g.m11) + std::fabs(metric.g.m22);
    if (std::fabs(metric.g.m11 - metric.g.m22) > isothermalTol * scale ||
        std::fabs(metric.g.m12) > isothermalTol * scale) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "not an isothermal parameter: g11 = %.17g, g22 = %.17g, g12 = %.17g",
                      metric.g.m11, metric.g.m22, metric.g.m12);
        raise(Errc::NotIsothermal, buf);
    }
    const NormalFrame frame = normal_frame(jet, rule);
    const SecondFundamental h = second_fundamental(jet, frame);
    const CurvatureScalars s = curvature_scalars(h, metric);
    const NormalizedPoint np = normalized_point(frame, h, s, metric);
    const double sum = np.l0Plus * np.meanPlusTilde + np.l0Minus * np.meanMinusTilde;
    const double diff = np.l0Plus * np.meanPlusTilde - np.l0Minus * np.meanMinusTilde;
    const Vec4 rhs = metric.g.m11 * (-sum * frame.nT + diff * frame.nS);
    return euclid_norm(jet.X_u1u1 + jet.X_u2u2 - rhs);
}

} // namespace llg
