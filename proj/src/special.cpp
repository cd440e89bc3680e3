#include "llg/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "llg/error.hpp"
#include "llg/normalized.hpp"

namespace llg {

namespace {

double grid_coord(double lo, double hi, int i, int n, double pad = 0.0) {
    if (n <= 1) return 0.5 * (lo + hi);
    const double a = lo + pad, b = hi - pad;
    return a + (b - a) * (double(i) / double(n - 1));
}

double euclid_dot(const Vec4& a, const Vec4& b) {
    return a.x0 * b.x0 + a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3;
}

double constraint_residual(SliceKind kind, const Vec4& X) {
    switch (kind) {
    case SliceKind::Euclidean3: return std::fabs(X.x0);
    case SliceKind::Minkowski3: return std::fabs(X.x3);
    case SliceKind::Hyperbolic3: return std::fabs(minkowski_inner(X, X) + 1.0);
    case SliceKind::DeSitter3: return std::fabs(minkowski_inner(X, X) - 1.0);
    case SliceKind::Lightcone: return std::fabs(minkowski_inner(X, X));
    case SliceKind::None: break;
    }
    raise(Errc::ConfigParse, "slice constraint needs a concrete slice kind");
}

std::string fmt_residual(const char* label, double worst, double tol) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s: worst residual %.3e exceeds %.3e", label, worst, tol);
    return buf;
}

// Classical mean and Gauss curvature of a surface living inside a 3-slice,
// computed from the 3D fundamental forms alone.
struct Classical3 {
    double mean = 0.0;
    double gauss = 0.0;
};

// x0 = 0 slice: Euclidean shape operator with the unit normal chosen as
// -normalize(r_u1 x r_u2) so it matches the wedge normal nS.
Classical3 euclidean_oracle(const Jet3& jet) {
    const double a1 = jet.X_u1.x1, a2 = jet.X_u1.x2, a3 = jet.X_u1.x3;
    const double b1 = jet.X_u2.x1, b2 = jet.X_u2.x2, b3 = jet.X_u2.x3;
    double n1 = -(a2 * b3 - a3 * b2);
    double n2 = -(a3 * b1 - a1 * b3);
    double n3 = -(a1 * b2 - a2 * b1);
    const double nn = std::sqrt(n1 * n1 + n2 * n2 + n3 * n3);
    if (nn == 0.0) raise(Errc::DegenerateMetric, "euclidean oracle at a singular point");
    n1 /= nn;
    n2 /= nn;
    n3 /= nn;
    const double E = a1 * a1 + a2 * a2 + a3 * a3;
    const double F = a1 * b1 + a2 * b2 + a3 * b3;
    const double G = b1 * b1 + b2 * b2 + b3 * b3;
    const double L = n1 * jet.X_u1u1.x1 + n2 * jet.X_u1u1.x2 + n3 * jet.X_u1u1.x3;
    const double M = n1 * jet.X_u1u2.x1 + n2 * jet.X_u1u2.x2 + n3 * jet.X_u1u2.x3;
    const double N = n1 * jet.X_u2u2.x1 + n2 * jet.X_u2u2.x2 + n3 * jet.X_u2u2.x3;
    const double denom = E * G - F * F;
    return {(L * G - 2.0 * M * F + N * E) / (2.0 * denom), (L * N - M * M) / denom};
}

// x3 = 0 slice: signature (-,+,+) on (x0,x1,x2), normal from the Lorentzian
// cross product, normalized timelike and future directed.
Classical3 minkowski_oracle(const Jet3& jet) {
    const double a0 = jet.X_u1.x0, a1 = jet.X_u1.x1, a2 = jet.X_u1.x2;
    const double b0 = jet.X_u2.x0, b1 = jet.X_u2.x1, b2 = jet.X_u2.x2;
    double w0 = -(a1 * b2 - a2 * b1);
    double w1 = -(a0 * b2 - a2 * b0);
    double w2 = a0 * b1 - a1 * b0;
    const double wn2 = w0 * w0 - w1 * w1 - w2 * w2; // -<w,w> for a timelike w
    if (wn2 <= 0.0) raise(Errc::DegenerateMetric, "minkowski oracle normal is not timelike");
    const double wn = std::sqrt(wn2);
    w0 /= wn;
    w1 /= wn;
    w2 /= wn;
    if (w0 < 0.0) {
        w0 = -w0;
        w1 = -w1;
        w2 = -w2;
    }
    auto inner3 = [](double p0, double p1, double p2, const Vec4& q) {
        return -p0 * q.x0 + p1 * q.x1 + p2 * q.x2;
    };
    const double E = -a0 * a0 + a1 * a1 + a2 * a2;
    const double F = -a0 * b0 + a1 * b1 + a2 * b2;
    const double G = -b0 * b0 + b1 * b1 + b2 * b2;
    const double L = inner3(w0, w1, w2, jet.X_u1u1);
    const double M = inner3(w0, w1, w2, jet.X_u1u2);
    const double N = inner3(w0, w1, w2, jet.X_u2u2);
    const double denom = E * G - F * F;
    return {(L * G - 2.0 * M * F + N * E) / (2.0 * denom), (L * N - M * M) / denom};
}

// Eigenvalues of g^{-1} b for a symmetric form b and the SPD metric g,
// through the Cholesky congruence L^{-1} b L^{-T}. Always real, which the
// trace/determinant route cannot promise once b carries finite difference
// noise near a double eigenvalue.
PrincipalCurvatures pencil_eigen(const Sym2& b, const Metric2& metric) {
    const double l11 = std::sqrt(metric.g.m11);
    const double l21 = metric.g.m12 / l11;
    const double l22 = std::sqrt(metric.det) / l11;
    const double a11 = b.m11 / l11;
    const double a12 = b.m12 / l11;
    const double a21 = -l21 * b.m11 / (l11 * l22) + b.m12 / l22;
    const double a22 = -l21 * b.m12 / (l11 * l22) + b.m22 / l22;
    const double m11 = a11 / l11;
    const double m12 = -a11 * l21 / (l11 * l22) + a12 / l22;
    const double m22 = -a21 * l21 / (l11 * l22) + a22 / l22;
    const double mean = 0.5 * (m11 + m22);
    const double half = 0.5 * (m11 - m22);
    const double root = std::sqrt(half * half + m12 * m12);
    return {mean - root, mean + root};
}

double pencil_trace(const Sym2& b, const Metric2& metric) {
    return metric.inv.m11 * b.m11 + 2.0 * metric.inv.m12 * b.m12 + metric.inv.m22 * b.m22;
}

struct DualSample {
    Vec4 Xell;
    double pairing = 0.0;
    double tangency = 0.0;
    double lightlike = 0.0;
};

// One evaluation of the dual field: build the generic frame, find which of
// l+- is parallel to the position (euclidean projection residual), rescale
// the other one to pairing -2.
DualSample dual_sample(const SurfacePatch& patch, double u1, double u2) {
    const Jet3 jet = patch.eval_jet(u1, u2);
    const NormalFrame frame = normal_frame(jet);
    const double xe2 = euclid_norm2(jet.X);
    auto misalign = [&](const Vec4& l) {
        const double c = euclid_dot(l, jet.X) / xe2;
        const Vec4 r = l - c * jet.X;
        return std::sqrt(euclid_norm2(r) / euclid_norm2(l));
    };
    const double mPlus = misalign(frame.lPlus);
    const double mMinus = misalign(frame.lMinus);
    const double alignTol = 1e-6;
    const Vec4* other = nullptr;
    if (mPlus <= alignTol && mPlus <= mMinus) {
        other = &frame.lMinus;
    } else if (mMinus <= alignTol) {
        other = &frame.lPlus;
    } else {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "no lightlike frame direction is parallel to the position "
                      "(residuals %.3e, %.3e)",
                      mPlus, mMinus);
        raise(Errc::DualDegenerate, buf);
    }
    const double pair = minkowski_inner(jet.X, *other);
    if (std::fabs(pair) < 1e-12) {
        raise(Errc::DualDegenerate, "position pairs to zero against both lightlike directions");
    }
    DualSample s;
    s.Xell = (-2.0 / pair) * (*other);
    s.pairing = std::fabs(minkowski_inner(jet.X, s.Xell) + 2.0);
    s.tangency = std::max(std::fabs(minkowski_inner(jet.X_u1, s.Xell)),
                          std::fabs(minkowski_inner(jet.X_u2, s.Xell)));
    s.lightlike = std::fabs(minkowski_inner(s.Xell, s.Xell));
    return s;
}

double dual_worst_residual(const LightconeDual& d) {
    return std::max({d.pairingResidual, d.tangencyResidual, d.lightlikeResidual, d.frameResidual,
                     d.kappaCrossResidual});
}

} // namespace

FrameRule slice_rule(SliceKind kind) {
    switch (kind) {
    case SliceKind::Minkowski3: return FrameRule::MinkowskiSlice;
    case SliceKind::Hyperbolic3: return FrameRule::HyperbolicPosition;
    case SliceKind::DeSitter3: return FrameRule::DeSitterPosition;
    default: return FrameRule::Generic;
    }
}

AmbientSlice embed(SliceKind kind, SurfacePatch patch, int n1, int n2, double tol) {
    if (kind == SliceKind::None) raise(Errc::ConfigParse, "embed needs a concrete slice kind");
    if (n1 < 1 || n2 < 1) raise(Errc::ConfigParse, "embed needs a nonempty validation grid");
    const Domain dom = patch.domain();
    double worst = 0.0;
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            const double u1 = grid_coord(dom.lo1, dom.hi1, i, n1);
            const double u2 = grid_coord(dom.lo2, dom.hi2, j, n2);
            const Vec4 X = patch.eval_point(u1, u2);
            worst = std::max(worst, constraint_residual(kind, X));
            if (kind == SliceKind::Hyperbolic3 && X.x0 <= 0.0) {
                raise(Errc::ConstraintViolated, "hyperbolic patch leaves the upper sheet");
            }
            if (kind == SliceKind::Lightcone && euclid_norm2(X) < 1e-12) {
                raise(Errc::ConstraintViolated, "lightcone patch touches the origin");
            }
        }
    }
    if (worst > tol) {
        raise(Errc::ConstraintViolated, fmt_residual("slice constraint violated", worst, tol));
    }
    return {kind, std::move(patch), worst};
}

AmbientSlice slice_from_catalog(const std::string& name) {
    CatalogEntry entry = make_catalog(name);
    if (entry.slice == SliceKind::None) {
        raise(Errc::ConfigParse, "catalog entry '" + name + "' carries no slice tag");
    }
    return embed(entry.slice, std::move(entry.patch));
}

SpecializationReport specialization_check(const AmbientSlice& slice, int n1, int n2) {
    if (slice.kind == SliceKind::None) {
        raise(Errc::ConfigParse, "specialization check needs a concrete slice kind");
    }
    SpecializationReport r;
    r.kind = slice.kind;
    if (slice.kind == SliceKind::Lightcone) {
        const LightconeTheoremReport t = lightcone_theorem_check(slice, n1, n2);
        r.samples = t.samples;
        r.frameResidual = t.worstDual;
        r.meanResidual = std::max(t.worstTracePlus, t.worstTraceMinus);
        r.gaussResidual = t.worstEgregium;
        r.mtEquivalenceHolds = t.predicatesAgree;
        r.noStronglyMT = t.noStronglyMT;
        return r;
    }
    const FrameRule rule = slice_rule(slice.kind);
    const Domain dom = slice.patch.domain();
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            const double u1 = grid_coord(dom.lo1, dom.hi1, i, n1);
            const double u2 = grid_coord(dom.lo2, dom.hi2, j, n2);
            const CurvatureReport rep = curvature_report(slice.patch, u1, u2, rule);
            const CurvatureScalars& s = rep.scalars;
            switch (slice.kind) {
            case SliceKind::Euclidean3: {
                const NormalizedPoint np = normalized_point(rep);
                const Classical3 cl = euclidean_oracle(rep.jet);
                r.frameResidual = std::max({r.frameResidual, euclid_norm(rep.frame.nT - e0),
                                            std::fabs(np.l0Plus - 1.0), std::fabs(np.l0Minus - 1.0)});
                r.meanResidual = std::max({r.meanResidual, std::fabs(np.meanPlusTilde - cl.mean),
                                           std::fabs(np.meanMinusTilde + cl.mean)});
                r.gaussResidual = std::max({r.gaussResidual, std::fabs(np.gaussPlusTilde - cl.gauss),
                                            std::fabs(np.gaussMinusTilde - cl.gauss)});
                r.mtEquivalenceHolds = r.mtEquivalenceHolds &&
                                       rep.cls.marginallyTrapped == rep.cls.stronglyMarginallyTrapped;
                break;
            }
            case SliceKind::Minkowski3: {
                const Classical3 cl = minkowski_oracle(rep.jet);
                r.frameResidual = std::max({r.frameResidual, euclid_norm(rep.frame.nS - e3),
                                            std::fabs(rep.frame.nT.x3)});
                r.meanResidual = std::max({r.meanResidual, std::fabs(s.meanPlus - cl.mean),
                                           std::fabs(s.meanMinus - cl.mean)});
                r.gaussResidual = std::max({r.gaussResidual, std::fabs(s.gaussPlus - cl.gauss),
                                            std::fabs(s.gaussMinus - cl.gauss)});
                r.mtEquivalenceHolds = r.mtEquivalenceHolds &&
                                       rep.cls.marginallyTrapped == rep.cls.stronglyMarginallyTrapped;
                break;
            }
            case SliceKind::Hyperbolic3: {
                r.frameResidual = std::max(r.frameResidual, euclid_norm(rep.frame.nT - rep.jet.X));
                r.positionResidual = std::max({r.positionResidual, std::fabs(s.meanT + 1.0),
                                               std::fabs(s.gaussT - 1.0)});
                r.meanResidual = std::max({r.meanResidual, std::fabs(s.meanPlus - (-1.0 + s.meanS)),
                                           std::fabs(s.meanMinus - (-1.0 - s.meanS))});
                r.gaussResidual =
                    std::max({r.gaussResidual, std::fabs(s.gaussPlus - (s.gaussS - 2.0 * s.meanS + 1.0)),
                              std::fabs(s.gaussMinus - (s.gaussS + 2.0 * s.meanS + 1.0))});
                r.noStronglyMT = r.noStronglyMT && !rep.cls.stronglyMarginallyTrapped;
                break;
            }
            case SliceKind::DeSitter3: {
                r.frameResidual = std::max(r.frameResidual, euclid_norm(rep.frame.nS - rep.jet.X));
                r.positionResidual = std::max({r.positionResidual, std::fabs(s.meanS + 1.0),
                                               std::fabs(s.gaussS - 1.0)});
                r.meanResidual = std::max({r.meanResidual, std::fabs(s.meanPlus - (s.meanT - 1.0)),
                                           std::fabs(s.meanMinus - (s.meanT + 1.0))});
                r.gaussResidual =
                    std::max({r.gaussResidual, std::fabs(s.gaussPlus - (s.gaussT - 2.0 * s.meanT + 1.0)),
                              std::fabs(s.gaussMinus - (s.gaussT + 2.0 * s.meanT + 1.0))});
                r.noStronglyMT = r.noStronglyMT && !rep.cls.stronglyMarginallyTrapped;
                break;
            }
            default: break;
            }
            ++r.samples;
        }
    }
    return r;
}

LightconeDual lightcone_dual(const AmbientSlice& slice, double u1, double u2, double fdStep) {
    if (slice.kind != SliceKind::Lightcone) {
        raise(Errc::ConstraintViolated, "the dual map needs a lightcone slice");
    }
    const SurfacePatch& patch = slice.patch;
    const Jet3 jet = patch.eval_jet(u1, u2);
    const Metric2 metric = first_fundamental_form(jet);

    const DualSample center = dual_sample(patch, u1, u2);
    const DualSample p1 = dual_sample(patch, u1 + fdStep, u2);
    const DualSample m1 = dual_sample(patch, u1 - fdStep, u2);
    const DualSample p2 = dual_sample(patch, u1, u2 + fdStep);
    const DualSample m2 = dual_sample(patch, u1, u2 - fdStep);
    const Vec4 d1 = (p1.Xell - m1.Xell) / (2.0 * fdStep);
    const Vec4 d2 = (p2.Xell - m2.Xell) / (2.0 * fdStep);

    // b_ik = <-dXell_i, X_uk> is S_ell lowered by the metric; it is symmetric
    // because the dual stays normal, so the off diagonal is averaged.
    Sym2 b;
    b.m11 = -minkowski_inner(d1, jet.X_u1);
    b.m22 = -minkowski_inner(d2, jet.X_u2);
    b.m12 = -0.5 * (minkowski_inner(d1, jet.X_u2) + minkowski_inner(d2, jet.X_u1));

    LightconeDual d;
    d.u1 = u1;
    d.u2 = u2;
    d.Xell = center.Xell;
    d.pairingResidual = center.pairing;
    d.tangencyResidual = center.tangency;
    d.lightlikeResidual = center.lightlike;

    const PrincipalCurvatures pc = pencil_eigen(b, metric);
    d.kappaEll1 = pc.k1;
    d.kappaEll2 = pc.k2;
    d.meanLC = 0.5 * pencil_trace(b, metric);
    d.gaussLC = b.det() / metric.det;

    // Dual frame nT = (X + Xell)/2, nS = (X - Xell)/2: unit, orthogonal and
    // normal by the pairing alone.
    const Vec4 nTd = 0.5 * (jet.X + d.Xell);
    const Vec4 nSd = 0.5 * (jet.X - d.Xell);
    d.frameResidual = std::max({std::fabs(minkowski_inner(nTd, nTd) + 1.0),
                                std::fabs(minkowski_inner(nSd, nSd) - 1.0),
                                std::fabs(minkowski_inner(nTd, nSd)),
                                std::fabs(minkowski_inner(nTd, jet.X_u1)),
                                std::fabs(minkowski_inner(nTd, jet.X_u2)),
                                std::fabs(minkowski_inner(nSd, jet.X_u1)),
                                std::fabs(minkowski_inner(nSd, jet.X_u2))});

    // Principal curvatures against the dual frame from analytic second
    // derivatives, crossed against the affine images of the kappa_ell pair.
    Sym2 hX, hE;
    hX.m11 = minkowski_inner(jet.X, jet.X_u1u1);
    hX.m12 = minkowski_inner(jet.X, jet.X_u1u2);
    hX.m22 = minkowski_inner(jet.X, jet.X_u2u2);
    hE.m11 = minkowski_inner(d.Xell, jet.X_u1u1);
    hE.m12 = minkowski_inner(d.Xell, jet.X_u1u2);
    hE.m22 = minkowski_inner(d.Xell, jet.X_u2u2);
    const PrincipalCurvatures pcT = pencil_eigen(0.5 * (hX + hE), metric);
    const PrincipalCurvatures pcS = pencil_eigen(0.5 * (hX - hE), metric);
    const double predT1 = 0.5 * (-1.0 + d.kappaEll1);
    const double predT2 = 0.5 * (-1.0 + d.kappaEll2);
    const double predS1 = 0.5 * (-1.0 - d.kappaEll2);
    const double predS2 = 0.5 * (-1.0 - d.kappaEll1);
    d.kappaCrossResidual =
        std::max({std::fabs(pcT.k1 - predT1), std::fabs(pcT.k2 - predT2),
                  std::fabs(pcS.k1 - predS1), std::fabs(pcS.k2 - predS2)});
    return d;
}

LightconeTheoremReport lightcone_theorem_check(const AmbientSlice& slice, int n1, int n2,
                                               double tau) {
    if (slice.kind != SliceKind::Lightcone) {
        raise(Errc::ConstraintViolated, "the lightcone theorem check needs a lightcone slice");
    }
    if (n1 < 1 || n2 < 1) raise(Errc::ConfigParse, "lightcone theorem check needs a nonempty grid");
    const Domain dom = slice.patch.domain();
    const double fdStep = 1e-5;
    const double pad1 = 4.0 * fdStep;
    LightconeTheoremReport t;
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            const double u1 = grid_coord(dom.lo1, dom.hi1, i, n1, pad1);
            const double u2 = grid_coord(dom.lo2, dom.hi2, j, n2, pad1);
            const CurvatureReport rep = curvature_report(slice.patch, u1, u2);
            const LightconeDual d = lightcone_dual(slice, u1, u2, fdStep);
            t.worstDual = std::max(t.worstDual, dual_worst_residual(d));
            t.worstEgregium =
                std::max(t.worstEgregium, std::fabs(rep.scalars.intrinsicGauss - d.meanLC));

            const Jet3& jet = rep.jet;
            Sym2 hX, hE;
            hX.m11 = minkowski_inner(jet.X, jet.X_u1u1);
            hX.m12 = minkowski_inner(jet.X, jet.X_u1u2);
            hX.m22 = minkowski_inner(jet.X, jet.X_u2u2);
            hE.m11 = minkowski_inner(d.Xell, jet.X_u1u1);
            hE.m12 = minkowski_inner(d.Xell, jet.X_u1u2);
            hE.m22 = minkowski_inner(d.Xell, jet.X_u2u2);
            const Sym2 hTd = 0.5 * (hX + hE);
            const Sym2 hSd = 0.5 * (hX - hE);
            const double trT = pencil_trace(hTd, rep.metric);
            const double trS = pencil_trace(hSd, rep.metric);
            t.worstTracePlus = std::max(t.worstTracePlus, std::fabs(trT + trS + 2.0));
            t.worstTraceMinus = std::max(t.worstTraceMinus, std::fabs(trT - trS - 2.0 * d.meanLC));

            // Five routes to the marginally trapped decision. The curvature
            // vectors are decomposed over the lightlike normal basis
            // {X, Xell} through the pairing: v = aX + bXell with
            // a = -<v,Xell>/2 and b = -<v,X>/2.
            const bool mtFlag = rep.cls.marginallyTrapped;
            const bool meanZero = std::fabs(d.meanLC) <= tau;
            const double aH = -0.5 * minkowski_inner(rep.meanVector, d.Xell);
            const double bH = -0.5 * minkowski_inner(rep.meanVector, jet.X);
            const bool meanAlongDual = std::fabs(aH) <= tau * (1.0 + std::fabs(bH));
            const bool flatIntrinsic = std::fabs(rep.scalars.intrinsicGauss) <= tau;
            const Vec4 nTd = 0.5 * (jet.X + d.Xell);
            const Vec4 nSd = 0.5 * (jet.X - d.Xell);
            const Vec4 gaussDual = (hTd.det() / rep.metric.det) * nTd +
                                   (hSd.det() / rep.metric.det) * nSd;
            const double aK = -0.5 * minkowski_inner(gaussDual, d.Xell);
            const double cK = -0.5 * minkowski_inner(gaussDual, jet.X);
            const bool gaussAlongPosition = std::fabs(cK) <= tau * (1.0 + std::fabs(aK));
            t.predicatesAgree = t.predicatesAgree && mtFlag == meanZero &&
                                meanZero == meanAlongDual && meanAlongDual == flatIntrinsic &&
                                flatIntrinsic == gaussAlongPosition;
            if (mtFlag) ++t.trappedSamples;
            t.noStronglyMT = t.noStronglyMT && !rep.cls.stronglyMarginallyTrapped;
            ++t.samples;
        }
    }
    return t;
}

HorosphereReport desitter_horosphere_check(const AmbientSlice& slice, int n1, int n2, double tau) {
    if (slice.kind != SliceKind::DeSitter3) {
        raise(Errc::ConstraintViolated, "the horosphere check needs a de sitter slice");
    }
    if (n1 < 1 || n2 < 1) raise(Errc::ConfigParse, "horosphere check needs a nonempty grid");
    const Domain dom = slice.patch.domain();
    const int samples = n1 * n2;
    std::vector<Vec4> points, plus, minus;
    points.reserve(samples);
    plus.reserve(samples);
    minus.reserve(samples);
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            const double u1 = grid_coord(dom.lo1, dom.hi1, i, n1);
            const double u2 = grid_coord(dom.lo2, dom.hi2, j, n2);
            const Jet3 jet = slice.patch.eval_jet(u1, u2);
            const NormalFrame frame = normal_frame(jet, FrameRule::DeSitterPosition);
            points.push_back(jet.X);
            plus.push_back(frame.lPlus);
            minus.push_back(frame.lMinus);
        }
    }
    HorosphereReport r;
    r.insufficientSamples = samples < 2;
    auto analyse = [&](const std::vector<Vec4>& image, Vec4& v, double& dev, double& fit,
                       double& offset, bool& constant) {
        Vec4 sum;
        for (const Vec4& l : image) sum = sum + l;
        v = sum / double(samples);
        dev = 0.0;
        for (const Vec4& l : image) dev = std::max(dev, euclid_norm(l - v));
        constant = dev <= tau * (1.0 + euclid_norm(v));
        double csum = 0.0;
        for (const Vec4& x : points) csum += minkowski_inner(x, v);
        offset = csum / double(samples);
        fit = 0.0;
        for (const Vec4& x : points) fit = std::max(fit, std::fabs(minkowski_inner(x, v) - offset));
    };
    analyse(plus, r.vPlus, r.devPlus, r.fitResidualPlus, r.planeOffsetPlus, r.constantPlus);
    analyse(minus, r.vMinus, r.devMinus, r.fitResidualMinus, r.planeOffsetMinus, r.constantMinus);
    return r;
}

} // namespace llg
