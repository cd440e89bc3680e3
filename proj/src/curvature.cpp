#include "llg/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "llg/error.hpp"

namespace llg {

namespace {

Sym2 form_against(const Vec4& n, const Jet3& jet) {
    return {minkowski_inner(n, jet.X_u1u1), minkowski_inner(n, jet.X_u1u2),
            minkowski_inner(n, jet.X_u2u2)};
}

// dg[k][i][j] = d_k g_ij from the order-2 jet data.
void metric_derivatives(const Jet3& jet, double dg[2][2][2]) {
    const Vec4 xu[2] = {jet.X_u1, jet.X_u2};
    const Vec4 xuu[2][2] = {{jet.X_u1u1, jet.X_u1u2}, {jet.X_u1u2, jet.X_u2u2}};
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = i; j < 2; ++j) {
                const double v =
                    minkowski_inner(xuu[i][k], xu[j]) + minkowski_inner(xu[i], xuu[j][k]);
                dg[k][i][j] = v;
                dg[k][j][i] = v;
            }
}

void christoffel_from(const Metric2& g, const double dg[2][2][2], double gamma[2][2][2]) {
    const double ginv[2][2] = {{g.inv.m11, g.inv.m12}, {g.inv.m12, g.inv.m22}};
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double sum = 0.0;
                for (int m = 0; m < 2; ++m)
                    sum += ginv[k][m] * (dg[i][j][m] + dg[j][i][m] - dg[m][i][j]);
                gamma[k][i][j] = 0.5 * sum;
            }
}

} // namespace

SecondFundamental second_fundamental(const Jet3& jet, const NormalFrame& frame) {
    SecondFundamental h;
    h.hT = form_against(frame.nT, jet);
    h.hS = form_against(frame.nS, jet);
    h.hPlus = h.hT + h.hS;
    h.hMinus = h.hT - h.hS;
    return h;
}

ShapeOperators shape_operators(const SecondFundamental& h, const Metric2& metric) {
    return {mul(h.hT, metric.inv), mul(h.hS, metric.inv), mul(h.hPlus, metric.inv),
            mul(h.hMinus, metric.inv)};
}

PrincipalCurvatures principal_curvatures(const Mat2& shape) {
    const double mean = 0.5 * shape.trace();
    const double det = shape.det();
    const double disc = mean * mean - det;
    const double guard = 1e-12 * (1.0 + mean * mean + std::fabs(det));
    if (disc < -guard)
        raise(Errc::ComplexSpectrum, "shape operator has no real spectrum");
    const double root = std::sqrt(std::max(disc, 0.0));
    return {mean - root, mean + root};
}

CurvatureScalars curvature_scalars(const SecondFundamental& h, const Metric2& metric,
                                   double crossCheck) {
    const auto det_ratio = [&](const Sym2& form, const char* label) {
        const double viaForm = form.det() / metric.det;
        const double viaOperator = mul(form, metric.inv).det();
        if (std::fabs(viaForm - viaOperator) >
            crossCheck * (1.0 + std::fabs(viaForm) + std::fabs(viaOperator))) {
            char buf[160];
            std::snprintf(buf, sizeof buf, "determinant routes disagree for %s: %.17g vs %.17g",
                          label, viaForm, viaOperator);
            raise(Errc::Numerical, buf);
        }
        return viaForm;
    };
    CurvatureScalars s;
    s.meanT = 0.5 * mul(h.hT, metric.inv).trace();
    s.meanS = 0.5 * mul(h.hS, metric.inv).trace();
    s.gaussT = det_ratio(h.hT, "h(nT)");
    s.gaussS = det_ratio(h.hS, "h(nS)");
    s.meanPlus = s.meanT + s.meanS;
    s.meanMinus = s.meanT - s.meanS;
    s.gaussPlus = det_ratio(h.hPlus, "h(+)");
    s.gaussMinus = det_ratio(h.hMinus, "h(-)");
    s.intrinsicGauss = s.gaussS - s.gaussT;
    return s;
}

Vec4 mean_curvature_vector(const CurvatureScalars& s, const NormalFrame& frame) {
    return -s.meanT * frame.nT + s.meanS * frame.nS;
}

Vec4 gaussian_curvature_vector(const CurvatureScalars& s, const NormalFrame& frame) {
    return s.gaussT * frame.nT + s.gaussS * frame.nS;
}

Christoffel christoffel(const Jet3& jet) {
    const Metric2 g = first_fundamental_form(jet);
    double dg[2][2][2];
    metric_derivatives(jet, dg);
    Christoffel out;
    christoffel_from(g, dg, out.c);
    return out;
}

double riemann1212_from_metric(const Jet3& jet) {
    const Metric2 g = first_fundamental_form(jet);
    const Vec4 xu[2] = {jet.X_u1, jet.X_u2};
    const Vec4 xuu[2][2] = {{jet.X_u1u1, jet.X_u1u2}, {jet.X_u1u2, jet.X_u2u2}};
    const Vec4 xuuu[2][2][2] = {
        {{jet.X_u1u1u1, jet.X_u1u1u2}, {jet.X_u1u1u2, jet.X_u1u2u2}},
        {{jet.X_u1u1u2, jet.X_u1u2u2}, {jet.X_u1u2u2, jet.X_u2u2u2}}};

    double dg[2][2][2];
    metric_derivatives(jet, dg);

    // ddg[l][k][i][j] = d_l d_k g_ij
    double ddg[2][2][2][2];
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    ddg[l][k][i][j] = minkowski_inner(xuuu[i][k][l], xu[j]) +
                                      minkowski_inner(xuu[i][k], xuu[j][l]) +
                                      minkowski_inner(xuu[i][l], xuu[j][k]) +
                                      minkowski_inner(xu[i], xuuu[j][k][l]);

    const double ginv[2][2] = {{g.inv.m11, g.inv.m12}, {g.inv.m12, g.inv.m22}};

    // dginv[l][k][m] = d_l g^{km} = -g^{ka} (d_l g_ab) g^{bm}
    double dginv[2][2][2];
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k)
            for (int m = 0; m < 2; ++m) {
                double sum = 0.0;
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b)
                        sum += ginv[k][a] * dg[l][a][b] * ginv[b][m];
                dginv[l][k][m] = -sum;
            }

    double gamma[2][2][2];
    christoffel_from(g, dg, gamma);

    // dgamma[l][k][i][j] = d_l Gamma^k_ij
    double dgamma[2][2][2][2];
    for (int l = 0; l < 2; ++l)
        for (int k = 0; k < 2; ++k)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    double sum = 0.0;
                    for (int m = 0; m < 2; ++m)
                        sum += dginv[l][k][m] * (dg[i][j][m] + dg[j][i][m] - dg[m][i][j]) +
                               ginv[k][m] *
                                   (ddg[l][i][j][m] + ddg[l][j][i][m] - ddg[l][m][i][j]);
                    dgamma[l][k][i][j] = 0.5 * sum;
                }

    // R^m_ijk = d_k Gamma^m_ij - d_j Gamma^m_ik + Gamma^p_ij Gamma^m_pk
    //           - Gamma^p_ik Gamma^m_pj, evaluated at (i, j, k) = (1, 0, 1),
    // then R_1212 = sum_m g_0m R^m.
    double rm[2];
    for (int m = 0; m < 2; ++m) {
        double v = dgamma[1][m][1][0] - dgamma[0][m][1][1];
        for (int p = 0; p < 2; ++p)
            v += gamma[p][1][0] * gamma[m][p][1] - gamma[p][1][1] * gamma[m][p][0];
        rm[m] = v;
    }
    return g.g.m11 * rm[0] + g.g.m12 * rm[1];
}

double riemann1212_from_shape(const SecondFundamental& h) {
    return h.hT.det() - h.hS.det();
}

PointClassification classify_point(const CurvatureScalars& s, const PrincipalCurvatures& pcPlus,
                                   const PrincipalCurvatures& pcMinus, const Vec4& meanVector,
                                   const Vec4& gaussVector, const Tolerances& tol) {
    PointClassification out;
    const double meanScale = 1.0 + std::fabs(s.meanT) + std::fabs(s.meanS);
    const double tauProduct = tol.mt * meanScale * meanScale;
    const double maxSide = std::max(std::fabs(s.meanPlus), std::fabs(s.meanMinus));
    const double tauSide = tauProduct / std::max(maxSide, std::sqrt(tauProduct));
    out.mtProduct = s.meanPlus * s.meanMinus;
    out.mtTolerance = tauProduct;
    out.mtSideTolerance = tauSide;
    out.marginallyTrapped = std::fabs(out.mtProduct) <= tauProduct;
    out.mtPlus = std::fabs(s.meanPlus) <= tauSide;
    out.mtMinus = std::fabs(s.meanMinus) <= tauSide;
    out.stronglyMarginallyTrapped = euclid_norm(meanVector) <= tol.mt * meanScale;
    const double plusScale = 1.0 + std::fabs(pcPlus.k1) + std::fabs(pcPlus.k2);
    out.umbilicPlus = pcPlus.spread() <= tol.umbilic * plusScale;
    const double minusScale = 1.0 + std::fabs(pcMinus.k1) + std::fabs(pcMinus.k2);
    out.umbilicMinus = pcMinus.spread() <= tol.umbilic * minusScale;
    const double gaussScale = 1.0 + std::fabs(s.gaussT) + std::fabs(s.gaussS);
    out.intrinsicallyFlat = std::fabs(s.intrinsicGauss) <= tol.flat * gaussScale;
    out.extrinsicallyFlat = euclid_norm(gaussVector) <= tol.flat * gaussScale;
    return out;
}

CurvatureReport curvature_report(const SurfacePatch& patch, double u1, double u2, FrameRule rule,
                                 const Tolerances& tol) {
    CurvatureReport r;
    r.jet = patch.eval_jet(u1, u2);
    r.metric = first_fundamental_form(r.jet);
    r.frame = normal_frame(r.jet, rule);
    r.second = second_fundamental(r.jet, r.frame);
    r.shapes = shape_operators(r.second, r.metric);
    r.scalars = curvature_scalars(r.second, r.metric, tol.crossCheck);
    r.pcT = principal_curvatures(r.shapes.sT);
    r.pcS = principal_curvatures(r.shapes.sS);
    r.pcPlus = principal_curvatures(r.shapes.sPlus);
    r.pcMinus = principal_curvatures(r.shapes.sMinus);
    r.meanVector = mean_curvature_vector(r.scalars, r.frame);
    r.gaussVector = gaussian_curvature_vector(r.scalars, r.frame);
    r.gamma = christoffel(r.jet);
    r.riemannMetric = riemann1212_from_metric(r.jet);
    r.riemannShape = riemann1212_from_shape(r.second);
    r.cls = classify_point(r.scalars, r.pcPlus, r.pcMinus, r.meanVector, r.gaussVector, tol);
    return r;
}

} // namespace llg
