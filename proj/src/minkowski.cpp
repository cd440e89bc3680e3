#include "llg/minkowski.hpp"

namespace llg {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::OutOfDomain: return "OutOfDomain";
        case Errc::DegenerateMetric: return "DegenerateMetric";
        case Errc::FrameConstructionFailure: return "FrameConstructionFailure";
        case Errc::ComplexSpectrum: return "ComplexSpectrum";
        case Errc::NonLightlikeInput: return "NonLightlikeInput";
        case Errc::ZeroTimeComponent: return "ZeroTimeComponent";
        case Errc::NotIsothermal: return "NotIsothermal";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::VariationLeavesSpacelikeClass: return "VariationLeavesSpacelikeClass";
        case Errc::NotSpacelike: return "NotSpacelike";
        case Errc::DualDegenerate: return "DualDegenerate";
        case Errc::ConstraintViolated: return "ConstraintViolated";
        case Errc::TaylorUnavailable: return "TaylorUnavailable";
        case Errc::InsufficientSamples: return "InsufficientSamples";
        case Errc::ExprParse: return "ExprParse";
        case Errc::ConfigParse: return "ConfigParse";
        case Errc::Io: return "Io";
        case Errc::Numerical: return "Numerical";
    }
    return "Unknown";
}

const char* causal_class_name(CausalClass c) {
    switch (c) {
        case CausalClass::Spacelike: return "Spacelike";
        case CausalClass::Timelike: return "Timelike";
        case CausalClass::Lightlike: return "Lightlike";
        case CausalClass::Zero: return "Zero";
    }
    return "Unknown";
}

CausalClass causal_class(const Vec4& v, double tau_c) {
    if (!all_finite(v)) raise(Errc::Numerical, "causal_class: non-finite component");
    if (tau_c < 0) raise(Errc::Numerical, "causal_class: negative tolerance");
    if (v.x0 == 0 && v.x1 == 0 && v.x2 == 0 && v.x3 == 0) return CausalClass::Zero;
    const double q = minkowski_inner(v, v);
    if (q > tau_c) return CausalClass::Spacelike;
    if (q < -tau_c) return CausalClass::Timelike;
    return CausalClass::Lightlike;
}

Vec4 wedge3(const Vec4& a, const Vec4& b, const Vec4& c) {
    // Cofactor expansion along the formal first row (-e0, e1, e2, e3).
    auto minor3 = [&](int p, int q, int r) {
        return a[p] * (b[q] * c[r] - b[r] * c[q]) - a[q] * (b[p] * c[r] - b[r] * c[p]) +
               a[r] * (b[p] * c[q] - b[q] * c[p]);
    };
    return Vec4{-minor3(1, 2, 3), -minor3(0, 2, 3), minor3(0, 1, 3), -minor3(0, 1, 2)};
}

Vec4 project_to_S2plus(const Vec4& v) {
    if (causal_class(v) != CausalClass::Lightlike)
        raise(Errc::NonLightlikeInput, "project_to_S2plus: input is " + std::string(causal_class_name(causal_class(v))));
    if (std::fabs(v.x0) < 1e-300) raise(Errc::ZeroTimeComponent, "project_to_S2plus: |v0| ~ 0");
    return Vec4{1.0, v.x1 / v.x0, v.x2 / v.x0, v.x3 / v.x0};
}

} // namespace llg
