#include "llg/surface.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "llg/error.hpp"
#include "llg/numerics.hpp"

namespace llg {

namespace {

constexpr double kDomainSlackScale = 1e-9;
constexpr double kFdStepScale = 1e-3;
constexpr double kSliceTol = 1e-8;

// The frame construction below is shared between doubles (point frames) and
// degree-4 Taylor series (frame fields with exact derivatives). GV4<Taylor>
// is the same type as TaylorVec4.
template <class T> using GV4 = std::array<T, 4>;

inline double scalar_value(double x) { return x; }
inline double scalar_value(const Taylor& t) { return t.value(); }

template <class T> GV4<T> gv_add(const GV4<T>& x, const GV4<T>& y) {
    return {x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]};
}
template <class T> GV4<T> gv_sub(const GV4<T>& x, const GV4<T>& y) {
    return {x[0] - y[0], x[1] - y[1], x[2] - y[2], x[3] - y[3]};
}
template <class T> GV4<T> gv_scale(const GV4<T>& x, const T& s) {
    return {x[0] * s, x[1] * s, x[2] * s, x[3] * s};
}
template <class T> T gdot1(const GV4<T>& x, const GV4<T>& y) {
    return x[1] * y[1] + x[2] * y[2] + x[3] * y[3] - x[0] * y[0];
}
template <class T> T det3cols(const GV4<T>& a, const GV4<T>& b, const GV4<T>& c, int i, int j, int k) {
    return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
           a[k] * (b[i] * c[j] - b[j] * c[i]);
}
template <class T> GV4<T> gwedge3(const GV4<T>& a, const GV4<T>& b, const GV4<T>& c) {
    return {-det3cols(a, b, c, 1, 2, 3), -det3cols(a, b, c, 0, 2, 3), det3cols(a, b, c, 0, 1, 3),
            -det3cols(a, b, c, 0, 1, 2)};
}

template <class T> struct FrameV {
    GV4<T> nT, nS;
};

// Future unit normalization of the normal part of e0. The tangent plane is
// spacelike, so nu = e0 - pi^t(e0) satisfies <nu,nu> = -1 - <t,t> <= -1 and
// nu0 = 1 + <t,t> >= 1: timelike and future directed without sign fixes.
template <class T>
GV4<T> generic_timelike_normal(const GV4<T>& Xu1, const GV4<T>& Xu2, const T& g11, const T& g12,
                               const T& g22, const T& detg) {
    using std::sqrt;
    const T idet = recip(detg);
    const T a1 = -Xu1[0];
    const T a2 = -Xu2[0];
    const T b1 = (g22 * a1 - g12 * a2) * idet;
    const T b2 = (g11 * a2 - g12 * a1) * idet;
    const GV4<T> t = gv_add(gv_scale(Xu1, b1), gv_scale(Xu2, b2));
    GV4<T> nu{T(1.0) - t[0], -t[1], -t[2], -t[3]};
    const T q = -gdot1(nu, nu);
    if (!(scalar_value(q) > 0.0))
        raise(Errc::FrameConstructionFailure, "timelike normal candidate degenerated");
    return gv_scale(nu, recip(sqrt(q)));
}

template <class T>
GV4<T> unit_spacelike_wedge(const GV4<T>& nT, const GV4<T>& Xu1, const GV4<T>& Xu2) {
    using std::sqrt;
    const GV4<T> w = gwedge3(nT, Xu1, Xu2);
    const T q = gdot1(w, w);
    if (!(scalar_value(q) > 0.0))
        raise(Errc::FrameConstructionFailure, "wedge normal is not spacelike");
    return gv_scale(w, recip(sqrt(q)));
}

template <class T>
FrameV<T> build_frame_core(const GV4<T>& X, const GV4<T>& Xu1, const GV4<T>& Xu2, FrameRule rule) {
    using std::sqrt;
    const T g11 = gdot1(Xu1, Xu1);
    const T g12 = gdot1(Xu1, Xu2);
    const T g22 = gdot1(Xu2, Xu2);
    const T detg = g11 * g22 - g12 * g12;
    if (!(scalar_value(g11) > 0.0) || !(scalar_value(detg) > 0.0))
        raise(Errc::FrameConstructionFailure, "tangent plane is not spacelike");

    FrameV<T> F;
    switch (rule) {
    case FrameRule::Generic: {
        F.nT = generic_timelike_normal(Xu1, Xu2, g11, g12, g22, detg);
        F.nS = unit_spacelike_wedge(F.nT, Xu1, Xu2);
        break;
    }
    case FrameRule::MinkowskiSlice: {
        const double xs = std::fabs(scalar_value(X[0])) + std::fabs(scalar_value(X[1])) +
                          std::fabs(scalar_value(X[2]));
        const double ts = std::sqrt(std::max(scalar_value(g11), scalar_value(g22)));
        const double off = std::max({std::fabs(scalar_value(X[3])) / (1.0 + xs),
                                     std::fabs(scalar_value(Xu1[3])) / (1.0 + ts),
                                     std::fabs(scalar_value(Xu2[3])) / (1.0 + ts)});
        if (off > kSliceTol)
            raise(Errc::FrameConstructionFailure,
                  "MinkowskiSlice frame rule needs a patch inside the x3 = 0 slice");
        F.nT = generic_timelike_normal(Xu1, Xu2, g11, g12, g22, detg);
        F.nS = {T(0.0), T(0.0), T(0.0), T(1.0)};
        break;
    }
    case FrameRule::HyperbolicPosition: {
        const double s = scalar_value(gdot1(X, X));
        if (std::fabs(s + 1.0) > kSliceTol * (1.0 + std::fabs(s)))
            raise(Errc::FrameConstructionFailure,
                  "HyperbolicPosition frame rule needs a patch inside <X,X> = -1");
        if (!(scalar_value(X[0]) > 0.0))
            raise(Errc::FrameConstructionFailure, "position normal is not future directed");
        F.nT = gv_scale(X, recip(sqrt(-gdot1(X, X))));
        F.nS = unit_spacelike_wedge(F.nT, Xu1, Xu2);
        break;
    }
    case FrameRule::DeSitterPosition: {
        const double s = scalar_value(gdot1(X, X));
        if (std::fabs(s - 1.0) > kSliceTol * (1.0 + std::fabs(s)))
            raise(Errc::FrameConstructionFailure,
                  "DeSitterPosition frame rule needs a patch inside <X,X> = 1");
        F.nS = gv_scale(X, recip(sqrt(gdot1(X, X))));
        const GV4<T> w = gwedge3(Xu1, Xu2, F.nS);
        const T q = -gdot1(w, w);
        if (!(scalar_value(q) > 0.0))
            raise(Errc::FrameConstructionFailure, "wedge normal is not timelike");
        F.nT = gv_scale(w, recip(sqrt(q)));
        if (scalar_value(F.nT[0]) < 0.0) F.nT = gv_scale(F.nT, T(-1.0));
        break;
    }
    }
    return F;
}

Vec4 to_vec4(const GV4<double>& a) { return {a[0], a[1], a[2], a[3]}; }
GV4<double> to_gv4(const Vec4& v) { return {v.x0, v.x1, v.x2, v.x3}; }

} // namespace

bool Domain::contains(double u1, double u2) const {
    const double s1 = kDomainSlackScale * (std::fabs(span1()) + 1.0);
    const double s2 = kDomainSlackScale * (std::fabs(span2()) + 1.0);
    return u1 >= lo1 - s1 && u1 <= hi1 + s1 && u2 >= lo2 - s2 && u2 <= hi2 + s2;
}

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::ClosedForm: return "closed-form";
    case Provenance::ExpressionAD: return "expression-ad";
    case Provenance::FiniteDifference: return "finite-difference";
    }
    return "?";
}

const char* frame_rule_name(FrameRule r) {
    switch (r) {
    case FrameRule::Generic: return "generic";
    case FrameRule::MinkowskiSlice: return "minkowski-slice";
    case FrameRule::HyperbolicPosition: return "hyperbolic-position";
    case FrameRule::DeSitterPosition: return "desitter-position";
    }
    return "?";
}

Jet3 jet_from_taylor(const TaylorVec4& t, double u1, double u2) {
    Jet3 j;
    j.u1 = u1;
    j.u2 = u2;
    for (int k = 0; k < 4; ++k) {
        j.X[k] = t[k].value();
        j.X_u1[k] = t[k].deriv(1, 0);
        j.X_u2[k] = t[k].deriv(0, 1);
        j.X_u1u1[k] = t[k].deriv(2, 0);
        j.X_u1u2[k] = t[k].deriv(1, 1);
        j.X_u2u2[k] = t[k].deriv(0, 2);
        j.X_u1u1u1[k] = t[k].deriv(3, 0);
        j.X_u1u1u2[k] = t[k].deriv(2, 1);
        j.X_u1u2u2[k] = t[k].deriv(1, 2);
        j.X_u2u2u2[k] = t[k].deriv(0, 3);
    }
    return j;
}

SurfacePatch SurfacePatch::from_taylor_map(TaylorMap map, Domain dom, std::string name) {
    SurfacePatch p;
    p.dom_ = dom;
    p.prov_ = Provenance::ClosedForm;
    p.name_ = std::move(name);
    p.tmap_ = std::move(map);
    return p;
}

SurfacePatch SurfacePatch::from_expressions(const std::array<std::string, 4>& exprs, Domain dom,
                                            std::string name) {
    SurfacePatch p;
    p.dom_ = dom;
    p.prov_ = Provenance::ExpressionAD;
    p.name_ = std::move(name);
    for (int k = 0; k < 4; ++k) p.exprs_[k] = Expression::parse(exprs[k]);
    return p;
}

SurfacePatch SurfacePatch::from_point_map(PointMap map, Domain dom, std::string name) {
    SurfacePatch p;
    p.dom_ = dom;
    p.prov_ = Provenance::FiniteDifference;
    p.name_ = std::move(name);
    p.pmap_ = std::move(map);
    return p;
}

void SurfacePatch::require_inside(double u1, double u2) const {
    if (!dom_.contains(u1, u2))
        raise(Errc::OutOfDomain, "(" + std::to_string(u1) + ", " + std::to_string(u2) +
                                     ") outside the domain of patch '" + name_ + "'");
}

Vec4 SurfacePatch::eval_point(double u1, double u2) const {
    require_inside(u1, u2);
    switch (prov_) {
    case Provenance::ClosedForm: {
        const TaylorVec4 t = tmap_(Taylor::var1(u1), Taylor::var2(u2));
        return {t[0].value(), t[1].value(), t[2].value(), t[3].value()};
    }
    case Provenance::ExpressionAD:
        return {exprs_[0].eval(u1, u2), exprs_[1].eval(u1, u2), exprs_[2].eval(u1, u2),
                exprs_[3].eval(u1, u2)};
    case Provenance::FiniteDifference: return pmap_(u1, u2);
    }
    raise(Errc::Numerical, "unreachable");
}

TaylorVec4 SurfacePatch::eval_taylor(double u1, double u2) const {
    require_inside(u1, u2);
    switch (prov_) {
    case Provenance::ClosedForm: return tmap_(Taylor::var1(u1), Taylor::var2(u2));
    case Provenance::ExpressionAD:
        return {exprs_[0].eval_taylor(u1, u2), exprs_[1].eval_taylor(u1, u2),
                exprs_[2].eval_taylor(u1, u2), exprs_[3].eval_taylor(u1, u2)};
    case Provenance::FiniteDifference:
        raise(Errc::TaylorUnavailable,
              "patch '" + name_ + "' has finite-difference provenance; no jet arithmetic");
    }
    raise(Errc::Numerical, "unreachable");
}

Jet3 SurfacePatch::eval_jet(double u1, double u2) const {
    if (taylor_capable()) return jet_from_taylor(eval_taylor(u1, u2), u1, u2);
    require_inside(u1, u2);
    return fd_jet(u1, u2);
}

Jet3 SurfacePatch::fd_jet(double u1, double u2) const {
    const double h1 = kFdStepScale * dom_.span1();
    const double h2 = kFdStepScale * dom_.span2();
    const auto xs = shifted_stencil5(u1, h1, dom_.lo1, dom_.hi1);
    const auto ys = shifted_stencil5(u2, h2, dom_.lo2, dom_.hi2);
    const auto w1 = fornberg_weights(u1, std::vector<double>(xs.begin(), xs.end()), 3);
    const auto w2 = fornberg_weights(u2, std::vector<double>(ys.begin(), ys.end()), 3);

    Vec4 f[5][5];
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) f[a][b] = pmap_(xs[a], ys[b]);

    auto mixed = [&](int m, int n) {
        Vec4 acc{};
        for (int a = 0; a < 5; ++a) {
            Vec4 row{};
            for (int b = 0; b < 5; ++b) row = row + w2[n][b] * f[a][b];
            acc = acc + w1[m][a] * row;
        }
        return acc;
    };

    Jet3 j;
    j.u1 = u1;
    j.u2 = u2;
    j.X = pmap_(u1, u2);
    j.X_u1 = mixed(1, 0);
    j.X_u2 = mixed(0, 1);
    j.X_u1u1 = mixed(2, 0);
    j.X_u1u2 = mixed(1, 1);
    j.X_u2u2 = mixed(0, 2);
    j.X_u1u1u1 = mixed(3, 0);
    j.X_u1u1u2 = mixed(2, 1);
    j.X_u1u2u2 = mixed(1, 2);
    j.X_u2u2u2 = mixed(0, 3);
    return j;
}

Metric2 first_fundamental_form(const Jet3& jet) {
    Metric2 m;
    m.g.m11 = minkowski_inner(jet.X_u1, jet.X_u1);
    m.g.m12 = minkowski_inner(jet.X_u1, jet.X_u2);
    m.g.m22 = minkowski_inner(jet.X_u2, jet.X_u2);
    m.det = m.g.det();
    const double scale = std::max({std::fabs(m.g.m11), std::fabs(m.g.m22), std::fabs(m.g.m12)});
    if (!(m.g.m11 > 0.0) || !(m.det > 1e-12 * scale * scale))
        raise(Errc::DegenerateMetric, "induced metric is not positive definite at (" +
                                          std::to_string(jet.u1) + ", " + std::to_string(jet.u2) + ")");
    m.inv.m11 = m.g.m22 / m.det;
    m.inv.m12 = -m.g.m12 / m.det;
    m.inv.m22 = m.g.m11 / m.det;
    return m;
}

NormalFrame normal_frame(const Jet3& jet, FrameRule rule) {
    const auto F =
        build_frame_core<double>(to_gv4(jet.X), to_gv4(jet.X_u1), to_gv4(jet.X_u2), rule);
    NormalFrame nf;
    nf.nT = to_vec4(F.nT);
    nf.nS = to_vec4(F.nS);
    nf.lPlus = nf.nT + nf.nS;
    nf.lMinus = nf.nT - nf.nS;
    nf.rule = rule;
    return nf;
}

TaylorFrame taylor_frame(const TaylorVec4& X, FrameRule rule) {
    const TaylorVec4 Xu1{d1(X[0]), d1(X[1]), d1(X[2]), d1(X[3])};
    const TaylorVec4 Xu2{d2(X[0]), d2(X[1]), d2(X[2]), d2(X[3])};
    const auto F = build_frame_core<Taylor>(X, Xu1, Xu2, rule);
    return {F.nT, F.nS};
}

FrameDerivatives frame_derivatives(const SurfacePatch& patch, double u1, double u2, FrameRule rule) {
    FrameDerivatives fd;
    if (patch.taylor_capable()) {
        const TaylorFrame tf = taylor_frame(patch.eval_taylor(u1, u2), rule);
        for (int k = 0; k < 4; ++k) {
            fd.frame.nT[k] = tf.nT[k].value();
            fd.frame.nS[k] = tf.nS[k].value();
            fd.nT_u1[k] = tf.nT[k].deriv(1, 0);
            fd.nT_u2[k] = tf.nT[k].deriv(0, 1);
            fd.nS_u1[k] = tf.nS[k].deriv(1, 0);
            fd.nS_u2[k] = tf.nS[k].deriv(0, 1);
        }
        fd.frame.rule = rule;
    } else {
        fd.frame = normal_frame(patch.eval_jet(u1, u2), rule);
        const Domain& dom = patch.domain();
        const double h1 = kFdStepScale * dom.span1();
        const double h2 = kFdStepScale * dom.span2();
        const auto xs = shifted_stencil5(u1, h1, dom.lo1, dom.hi1);
        const auto ys = shifted_stencil5(u2, h2, dom.lo2, dom.hi2);
        const auto w1 = fornberg_weights(u1, std::vector<double>(xs.begin(), xs.end()), 1);
        const auto w2 = fornberg_weights(u2, std::vector<double>(ys.begin(), ys.end()), 1);
        for (int a = 0; a < 5; ++a) {
            const NormalFrame fa = normal_frame(patch.eval_jet(xs[a], u2), rule);
            fd.nT_u1 = fd.nT_u1 + w1[1][a] * fa.nT;
            fd.nS_u1 = fd.nS_u1 + w1[1][a] * fa.nS;
            const NormalFrame fb = normal_frame(patch.eval_jet(u1, ys[a]), rule);
            fd.nT_u2 = fd.nT_u2 + w2[1][a] * fb.nT;
            fd.nS_u2 = fd.nS_u2 + w2[1][a] * fb.nS;
        }
    }
    fd.frame.lPlus = fd.frame.nT + fd.frame.nS;
    fd.frame.lMinus = fd.frame.nT - fd.frame.nS;
    fd.lPlus_u1 = fd.nT_u1 + fd.nS_u1;
    fd.lPlus_u2 = fd.nT_u2 + fd.nS_u2;
    fd.lMinus_u1 = fd.nT_u1 - fd.nS_u1;
    fd.lMinus_u2 = fd.nT_u2 - fd.nS_u2;
    return fd;
}

void check_spacelike_grid(const SurfacePatch& patch, int n1, int n2) {
    if (n1 < 2 || n2 < 2)
        raise(Errc::InsufficientSamples, "spacelike check needs at least a 2x2 grid");
    const Domain& dom = patch.domain();
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            const double u1 = dom.lo1 + dom.span1() * i / (n1 - 1);
            const double u2 = dom.lo2 + dom.span2() * j / (n2 - 1);
            try {
                (void)first_fundamental_form(patch.eval_jet(u1, u2));
            } catch (const Error& e) {
                raise(Errc::NotSpacelike, "grid node (" + std::to_string(i) + ", " +
                                              std::to_string(j) + "): " + e.what());
            }
        }
}

} // namespace llg
