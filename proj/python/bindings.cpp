#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>
#include <string>

#include "llg/catalog.hpp"
#include "llg/config.hpp"
#include "llg/curvature.hpp"
#include "llg/error.hpp"
#include "llg/graph.hpp"
#include "llg/normalized.hpp"
#include "llg/report.hpp"
#include "llg/runner.hpp"
#include "llg/special.hpp"
#include "llg/variation.hpp"

namespace py = pybind11;
using namespace llg;

namespace {

py::tuple vec_tuple(const Vec4& v) { return py::make_tuple(v.x0, v.x1, v.x2, v.x3); }

FrameRule rule_arg(const std::string& name) {
    for (FrameRule r : {FrameRule::Generic, FrameRule::MinkowskiSlice,
                        FrameRule::HyperbolicPosition, FrameRule::DeSitterPosition}) {
        if (name == frame_rule_name(r)) return r;
    }
    raise(Errc::ConfigParse, "unknown frame rule '" + name + "'");
}

LightSign sign_arg(const std::string& name) {
    if (name == "plus") return LightSign::Plus;
    if (name == "minus") return LightSign::Minus;
    raise(Errc::ConfigParse, "direction must be plus or minus");
}

Domain domain_arg(const std::array<double, 4>& d) { return {d[0], d[1], d[2], d[3]}; }

py::dict variation_dict(const VariationCheck& v) {
    py::dict out;
    out["numeric"] = v.numeric;
    out["analytic"] = v.analytic;
    out["difference"] = v.difference;
    return out;
}

py::dict point_report(const SurfacePatch& patch, double u1, double u2,
                      const std::string& rule) {
    const CurvatureReport rep = curvature_report(patch, u1, u2, rule_arg(rule));
    const NormalizedPoint np = normalized_point(rep);
    const CurvatureScalars& s = rep.scalars;
    py::dict out;
    out["det_g"] = rep.metric.det;
    out["mean_t"] = s.meanT;
    out["mean_s"] = s.meanS;
    out["gauss_t"] = s.gaussT;
    out["gauss_s"] = s.gaussS;
    out["mean_plus"] = s.meanPlus;
    out["mean_minus"] = s.meanMinus;
    out["gauss_plus"] = s.gaussPlus;
    out["gauss_minus"] = s.gaussMinus;
    out["intrinsic_gauss"] = s.intrinsicGauss;
    out["mean_plus_tilde"] = np.meanPlusTilde;
    out["mean_minus_tilde"] = np.meanMinusTilde;
    out["gauss_plus_tilde"] = np.gaussPlusTilde;
    out["gauss_minus_tilde"] = np.gaussMinusTilde;
    out["mean_vector"] = vec_tuple(rep.meanVector);
    out["mean_norm2"] = minkowski_inner(rep.meanVector, rep.meanVector);
    out["n_t"] = vec_tuple(rep.frame.nT);
    out["n_s"] = vec_tuple(rep.frame.nS);
    out["marginally_trapped"] = rep.cls.marginallyTrapped;
    out["mt_plus"] = rep.cls.mtPlus;
    out["mt_minus"] = rep.cls.mtMinus;
    out["strongly_marginally_trapped"] = rep.cls.stronglyMarginallyTrapped;
    out["umbilic_plus"] = rep.cls.umbilicPlus;
    out["umbilic_minus"] = rep.cls.umbilicMinus;
    out["intrinsically_flat"] = rep.cls.intrinsicallyFlat;
    out["extrinsically_flat"] = rep.cls.extrinsicallyFlat;
    out["egregium"] = std::fabs(intrinsic_gauss_from_riemann(rep.riemannMetric, rep.metric.det) -
                                s.intrinsicGauss);
    out["gauss_eq"] = std::fabs(rep.riemannMetric - rep.riemannShape);
    return out;
}

py::dict analyze_config(const std::string& text) {
    const RunConfig config = parse_config_text(text);
    const RunOutput output = analyze(config);
    py::dict out;
    out["report"] = emit_report(output.report);
    out["csv"] = output.dump.fields.empty() ? std::string() : emit_csv(output.dump);
    out["passed"] = output.report.pass();
    return out;
}

} // namespace

PYBIND11_MODULE(pyllg, m) {
    m.doc() = "Lightlike geometry of spacelike surfaces in Minkowski 4-space";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            if (e.code() == Errc::ConfigParse || e.code() == Errc::ExprParse ||
                e.code() == Errc::Io) {
                PyErr_SetString(PyExc_ValueError, e.what());
            } else {
                PyErr_SetString(PyExc_RuntimeError, e.what());
            }
        }
    });

    py::class_<SurfacePatch>(m, "Patch")
        .def_property_readonly("name", &SurfacePatch::name)
        .def_property_readonly("domain",
                               [](const SurfacePatch& p) {
                                   const Domain& d = p.domain();
                                   return py::make_tuple(d.lo1, d.hi1, d.lo2, d.hi2);
                               })
        .def("point", [](const SurfacePatch& p, double u1, double u2) {
            return vec_tuple(p.eval_point(u1, u2));
        });

    py::class_<GraphSurface>(m, "Graph").def_property_readonly(
        "patch", [](const GraphSurface& s) { return s.patch; });

    m.def("catalog_names", &catalog_names);
    m.def(
        "catalog",
        [](const std::string& name) {
            const CatalogEntry e = make_catalog(name);
            py::dict out;
            out["patch"] = e.patch;
            out["summary"] = e.summary;
            out["frame"] = frame_rule_name(e.rule);
            out["slice"] = slice_kind_name(e.slice);
            return out;
        },
        py::arg("name"));
    m.def(
        "expression_patch",
        [](const std::array<std::string, 4>& components, const std::array<double, 4>& domain,
           const std::string& name) {
            return SurfacePatch::from_expressions(components, domain_arg(domain), name);
        },
        py::arg("components"), py::arg("domain"), py::arg("name") = "expr");
    m.def(
        "graph",
        [](const std::string& f, const std::string& g, const std::array<double, 4>& domain,
           const std::string& name) { return make_graph_surface(f, g, domain_arg(domain), name); },
        py::arg("f"), py::arg("g"), py::arg("domain"), py::arg("name") = "");

    m.def("point_report", &point_report, py::arg("patch"), py::arg("u1"), py::arg("u2"),
          py::arg("frame") = "generic");
    m.def(
        "area",
        [](const SurfacePatch& patch, int n1, int n2) { return area(patch, {n1, n2}); },
        py::arg("patch"), py::arg("n1") = 101, py::arg("n2") = 101);
    m.def(
        "first_variation",
        [](const SurfacePatch& patch, const std::string& alpha, const std::string& sign,
           const std::string& frame, int n1, int n2, double epsStep) {
            return variation_dict(first_variation_check(patch, Expression::parse(alpha),
                                                        sign_arg(sign), rule_arg(frame),
                                                        {n1, n2}, epsStep));
        },
        py::arg("patch"), py::arg("alpha") = "1", py::arg("sign") = "plus",
        py::arg("frame") = "generic", py::arg("n1") = 101, py::arg("n2") = 101,
        py::arg("eps_step") = 1e-3);
    m.def(
        "second_variation",
        [](const SurfacePatch& patch, const std::string& alpha, const std::string& sign,
           const std::string& frame, int n1, int n2, double epsStep) {
            return variation_dict(second_variation_check(patch, Expression::parse(alpha),
                                                         sign_arg(sign), rule_arg(frame),
                                                         {n1, n2}, epsStep));
        },
        py::arg("patch"), py::arg("alpha") = "1", py::arg("sign") = "plus",
        py::arg("frame") = "generic", py::arg("n1") = 101, py::arg("n2") = 101,
        py::arg("eps_step") = 1e-3);
    m.def(
        "cayley_hamilton",
        [](const SurfacePatch& patch, const std::string& frame, int n1, int n2) {
            return cayley_hamilton_residual(patch, rule_arg(frame), n1, n2);
        },
        py::arg("patch"), py::arg("frame") = "generic", py::arg("n1") = 7, py::arg("n2") = 7);
    m.def(
        "frame_independence",
        [](const SurfacePatch& patch, double u1, double u2, const std::string& frame, int boosts,
           std::uint64_t seed) {
            const FrameIndependence fi =
                frame_independence_check(patch, u1, u2, rule_arg(frame), boosts, seed);
            py::dict out;
            out["max_value_deviation"] = fi.maxValueDeviation;
            out["max_derivative_residual"] = fi.maxDerivativeResidual;
            out["boosts"] = fi.boosts;
            return out;
        },
        py::arg("patch"), py::arg("u1"), py::arg("u2"), py::arg("frame") = "generic",
        py::arg("boosts") = 8, py::arg("seed") = 1);

    m.def(
        "graph_point",
        [](const GraphSurface& s, double u1, double u2) {
            const GraphPointData d = graph_point_data(s, u1, u2);
            const GraphCrossCheck cc = cross_validate_graph(s, u1, u2);
            py::dict out;
            out["delta"] = d.delta;
            out["phi1"] = d.phi1;
            out["phi2"] = d.phi2;
            out["mean_vector"] = vec_tuple(d.meanVector);
            out["mean_norm2"] = d.meanNorm2;
            out["class"] = graph_class_name(classify_graph(s, u1, u2));
            out["mean_vector_deviation"] = cc.meanVectorDeviation;
            out["mean_norm2_deviation"] = cc.meanNorm2Deviation;
            out["class_agrees"] = cc.classAgrees;
            return out;
        },
        py::arg("graph"), py::arg("u1"), py::arg("u2"));

    m.def("analyze_config", &analyze_config, py::arg("text"));
}
