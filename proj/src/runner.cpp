#include "llg/runner.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <thread>

#include "llg/curvature.hpp"
#include "llg/expression.hpp"
#include "llg/normalized.hpp"
#include "llg/special.hpp"
#include "llg/variation.hpp"

namespace llg {

namespace {

struct PointRecord {
    double u1 = 0.0, u2 = 0.0;
    double detG = 0.0;
    CurvatureScalars s;
    double meanNorm2 = 0.0;
    double tildeMeanPlus = 0.0, tildeMeanMinus = 0.0;
    double tildeGaussPlus = 0.0, tildeGaussMinus = 0.0;
    double egregium = 0.0, gaussEq = 0.0, weingarten = 0.0;
    bool mt = false, mtPlus = false, mtMinus = false, strongly = false;
    bool umbilicPlus = false, umbilicMinus = false, flatI = false, flatE = false;
    bool mtIsotropy = false;
    double delta = 0.0, phi1 = 0.0, phi2 = 0.0;
    double graphDev = 0.0;
    bool graphAgrees = true;
};

// Tangential part of each frame derivative against -S(n) X_ui, all four
// normal fields, worst row relative to the derivative scale.
double weingarten_residual_at(const CurvatureReport& rep, const FrameDerivatives& fd) {
    const Jet3& jet = rep.jet;
    auto tangential = [&](const Vec4& v) {
        return v + minkowski_inner(v, rep.frame.nT) * rep.frame.nT -
               minkowski_inner(v, rep.frame.nS) * rep.frame.nS;
    };
    struct Row {
        const Vec4* d1;
        const Vec4* d2;
        const Mat2* shape;
    };
    const Row rows[] = {{&fd.nT_u1, &fd.nT_u2, &rep.shapes.sT},
                        {&fd.nS_u1, &fd.nS_u2, &rep.shapes.sS},
                        {&fd.lPlus_u1, &fd.lPlus_u2, &rep.shapes.sPlus},
                        {&fd.lMinus_u1, &fd.lMinus_u2, &rep.shapes.sMinus}};
    double worst = 0.0;
    for (const Row& row : rows) {
        const Mat2& S = *row.shape;
        const Vec4 r1 = tangential(*row.d1) + (S.a11 * jet.X_u1 + S.a12 * jet.X_u2);
        const Vec4 r2 = tangential(*row.d2) + (S.a21 * jet.X_u1 + S.a22 * jet.X_u2);
        const double scale = 1.0 + euclid_norm(*row.d1) + euclid_norm(*row.d2);
        worst = std::max(worst, std::max(euclid_norm(r1), euclid_norm(r2)) / scale);
    }
    return worst;
}

PointRecord compute_record(const BuiltSurface& surf, double u1, double u2,
                           const Tolerances& tol, bool needWeingarten, bool needGraphCheck) {
    PointRecord rec;
    rec.u1 = u1;
    rec.u2 = u2;
    const CurvatureReport rep = curvature_report(surf.patch, u1, u2, surf.rule, tol);
    const NormalizedPoint np = normalized_point(rep);
    rec.detG = rep.metric.det;
    rec.s = rep.scalars;
    rec.meanNorm2 = minkowski_inner(rep.meanVector, rep.meanVector);
    rec.tildeMeanPlus = np.meanPlusTilde;
    rec.tildeMeanMinus = np.meanMinusTilde;
    rec.tildeGaussPlus = np.gaussPlusTilde;
    rec.tildeGaussMinus = np.gaussMinusTilde;
    rec.egregium = std::fabs(intrinsic_gauss_from_riemann(rep.riemannMetric, rep.metric.det) -
                             rep.scalars.intrinsicGauss);
    rec.gaussEq = std::fabs(rep.riemannMetric - rep.riemannShape);
    rec.mt = rep.cls.marginallyTrapped;
    rec.mtPlus = rep.cls.mtPlus;
    rec.mtMinus = rep.cls.mtMinus;
    rec.strongly = rep.cls.stronglyMarginallyTrapped;
    rec.umbilicPlus = rep.cls.umbilicPlus;
    rec.umbilicMinus = rep.cls.umbilicMinus;
    rec.flatI = rep.cls.intrinsicallyFlat;
    rec.flatE = rep.cls.extrinsicallyFlat;
    rec.mtIsotropy = std::fabs(rec.meanNorm2) <= rep.cls.mtTolerance;
    if (needWeingarten) {
        const FrameDerivatives fd = frame_derivatives(surf.patch, u1, u2, surf.rule);
        rec.weingarten = weingarten_residual_at(rep, fd);
    }
    if (surf.graph) {
        const GraphPointData d = graph_point_data(*surf.graph, u1, u2);
        rec.delta = d.delta;
        rec.phi1 = d.phi1;
        rec.phi2 = d.phi2;
        if (needGraphCheck) {
            const GraphCrossCheck cc = cross_validate_graph(*surf.graph, u1, u2);
            rec.graphDev = std::max(cc.meanVectorDeviation, cc.meanNorm2Deviation);
            rec.graphAgrees = cc.classAgrees;
        }
    }
    return rec;
}

std::vector<PointRecord> sweep_grid(const BuiltSurface& surf, const RunConfig& config) {
    const Domain dom = surf.patch.domain();
    const int n1 = config.n1, n2 = config.n2;
    const Tolerances tol = engine_tolerances(config);
    const bool needWeingarten = config.wants(Analysis::VerifyWeingarten);
    const bool needGraphCheck = config.wants(Analysis::GraphClassify);
    std::vector<PointRecord> records(std::size_t(n1) * n2);
    auto rowJob = [&](int i) {
        const double u1 = dom.lo1 + (dom.hi1 - dom.lo1) * double(i) / double(n1 - 1);
        for (int j = 0; j < n2; ++j) {
            const double u2 = dom.lo2 + (dom.hi2 - dom.lo2) * double(j) / double(n2 - 1);
            records[std::size_t(i) * n2 + j] =
                compute_record(surf, u1, u2, tol, needWeingarten, needGraphCheck);
        }
    };
    int workers = config.workers > 0 ? config.workers
                                     : int(std::thread::hardware_concurrency());
    workers = std::clamp(workers, 1, n1);
    if (workers == 1) {
        for (int i = 0; i < n1; ++i) rowJob(i);
        return records;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < n1; i += workers) rowJob(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return records;
}

using FieldGetter = std::function<double(const PointRecord&)>;

const std::map<std::string, FieldGetter>& field_registry() {
    auto flag = [](bool b) { return b ? 1.0 : 0.0; };
    static const std::map<std::string, FieldGetter> registry = {
        {"det-g", [](const PointRecord& r) { return r.detG; }},
        {"mean-t", [](const PointRecord& r) { return r.s.meanT; }},
        {"mean-s", [](const PointRecord& r) { return r.s.meanS; }},
        {"gauss-t", [](const PointRecord& r) { return r.s.gaussT; }},
        {"gauss-s", [](const PointRecord& r) { return r.s.gaussS; }},
        {"mean-plus", [](const PointRecord& r) { return r.s.meanPlus; }},
        {"mean-minus", [](const PointRecord& r) { return r.s.meanMinus; }},
        {"gauss-plus", [](const PointRecord& r) { return r.s.gaussPlus; }},
        {"gauss-minus", [](const PointRecord& r) { return r.s.gaussMinus; }},
        {"intrinsic-gauss", [](const PointRecord& r) { return r.s.intrinsicGauss; }},
        {"mean-norm2", [](const PointRecord& r) { return r.meanNorm2; }},
        {"mean-plus-tilde", [](const PointRecord& r) { return r.tildeMeanPlus; }},
        {"mean-minus-tilde", [](const PointRecord& r) { return r.tildeMeanMinus; }},
        {"gauss-plus-tilde", [](const PointRecord& r) { return r.tildeGaussPlus; }},
        {"gauss-minus-tilde", [](const PointRecord& r) { return r.tildeGaussMinus; }},
        {"mt", [flag](const PointRecord& r) { return flag(r.mt); }},
        {"mt-plus", [flag](const PointRecord& r) { return flag(r.mtPlus); }},
        {"mt-minus", [flag](const PointRecord& r) { return flag(r.mtMinus); }},
        {"strongly-mt", [flag](const PointRecord& r) { return flag(r.strongly); }},
        {"umbilic-plus", [flag](const PointRecord& r) { return flag(r.umbilicPlus); }},
        {"umbilic-minus", [flag](const PointRecord& r) { return flag(r.umbilicMinus); }},
        {"flat-intrinsic", [flag](const PointRecord& r) { return flag(r.flatI); }},
        {"flat-extrinsic", [flag](const PointRecord& r) { return flag(r.flatE); }},
        {"delta", [](const PointRecord& r) { return r.delta; }},
        {"phi1", [](const PointRecord& r) { return r.phi1; }},
        {"phi2", [](const PointRecord& r) { return r.phi2; }},
    };
    return registry;
}

bool graph_only_field(const std::string& name) {
    return name == "delta" || name == "phi1" || name == "phi2";
}

ReportCheck make_check(std::string name, double residual, double tolerance) {
    ReportCheck c;
    c.name = std::move(name);
    c.residual = residual;
    c.tolerance = tolerance;
    c.passed = residual <= tolerance;
    return c;
}

} // namespace

BuiltSurface build_surface(const RunConfig& config) {
    BuiltSurface surf;
    if (config.kind == "catalog") {
        CatalogEntry entry = make_catalog(config.name);
        surf.patch = std::move(entry.patch);
        surf.rule = config.ruleSet ? config.rule : entry.rule;
        surf.slice = config.sliceSet ? config.slice : entry.slice;
        surf.label = entry.name;
        return surf;
    }
    const std::string label = config.name.empty() ? config.kind : config.name;
    if (config.kind == "expr") {
        surf.patch = SurfacePatch::from_expressions(config.components, config.domain, label);
    } else if (config.kind == "graph") {
        surf.graph = make_graph_surface(config.f, config.g, config.domain, label);
        surf.patch = surf.graph->patch;
    } else {
        raise(Errc::ConfigParse, "unknown surface kind '" + config.kind + "'");
    }
    surf.rule = config.ruleSet ? config.rule : FrameRule::Generic;
    surf.slice = config.sliceSet ? config.slice : SliceKind::None;
    surf.label = label;
    return surf;
}

std::vector<std::string> dump_field_names() {
    std::vector<std::string> names;
    for (const auto& [name, getter] : field_registry()) names.push_back(name);
    return names;
}

RunConfig with_verification_suite(RunConfig config) {
    std::vector<Analysis> extra = {Analysis::Classify, Analysis::VerifyEgregium,
                                   Analysis::VerifyWeingarten, Analysis::VerifyGaussEq,
                                   Analysis::CayleyHamilton};
    if (config.kind == "graph") extra.push_back(Analysis::GraphClassify);
    if (build_surface(config).slice != SliceKind::None) extra.push_back(Analysis::SliceChecks);
    for (Analysis a : extra) {
        if (!config.wants(a)) config.analyses.push_back(a);
    }
    return config;
}

RunOutput analyze(const RunConfig& config) {
    validate_config(config);
    const BuiltSurface surf = build_surface(config);
    if (config.wants(Analysis::SliceChecks) && surf.slice == SliceKind::None) {
        raise(Errc::ConfigParse, "slice-checks needs a surface with a slice tag");
    }
    for (const std::string& f : config.fields) {
        if (field_registry().find(f) == field_registry().end()) {
            raise(Errc::ConfigParse, "unknown dump field '" + f + "'");
        }
        if (graph_only_field(f) && !surf.graph) {
            raise(Errc::ConfigParse, "dump field '" + f + "' needs a graph surface");
        }
    }

    const std::vector<PointRecord> records = sweep_grid(surf, config);

    RunOutput out;
    Report& rep = out.report;
    rep.surface = surf.label;
    rep.n1 = config.n1;
    rep.n2 = config.n2;

    // Deduplicated analysis list in the config's order drives both the
    // report header and the check sequence.
    std::vector<Analysis> order;
    for (Analysis a : config.analyses) {
        bool seen = false;
        for (Analysis b : order) seen = seen || a == b;
        if (!seen) order.push_back(a);
    }
    for (Analysis a : order) rep.analyses.push_back(analysis_name(a));

    for (Analysis a : order) {
        switch (a) {
        case Analysis::Invariants: {
            double minDet = records.empty() ? 0.0 : records.front().detG;
            double maxMeanPlus = 0.0, maxMeanMinus = 0.0, maxIntrinsic = 0.0;
            for (const PointRecord& r : records) {
                minDet = std::min(minDet, r.detG);
                maxMeanPlus = std::max(maxMeanPlus, std::fabs(r.s.meanPlus));
                maxMeanMinus = std::max(maxMeanMinus, std::fabs(r.s.meanMinus));
                maxIntrinsic = std::max(maxIntrinsic, std::fabs(r.s.intrinsicGauss));
            }
            rep.scalars.push_back({"min-det-g", minDet});
            rep.scalars.push_back({"max-abs-mean-plus", maxMeanPlus});
            rep.scalars.push_back({"max-abs-mean-minus", maxMeanMinus});
            rep.scalars.push_back({"max-abs-intrinsic-gauss", maxIntrinsic});
            break;
        }
        case Analysis::Classify: {
            int trapped = 0, strongly = 0, disagree = 0;
            for (const PointRecord& r : records) {
                trapped += r.mt;
                strongly += r.strongly;
                disagree += r.mt != r.mtIsotropy;
            }
            rep.checks.push_back(make_check("mt-consistency",
                                            double(disagree) / double(records.size()),
                                            config.tolerance("mt-consistency")));
            rep.scalars.push_back({"trapped-count", double(trapped)});
            rep.scalars.push_back({"strongly-trapped-count", double(strongly)});
            break;
        }
        case Analysis::VerifyEgregium: {
            double worst = 0.0;
            for (const PointRecord& r : records) worst = std::max(worst, r.egregium);
            rep.checks.push_back(make_check("egregium", worst, config.tolerance("egregium")));
            break;
        }
        case Analysis::VerifyWeingarten: {
            double worst = 0.0;
            for (const PointRecord& r : records) worst = std::max(worst, r.weingarten);
            rep.checks.push_back(make_check("weingarten", worst, config.tolerance("weingarten")));
            break;
        }
        case Analysis::VerifyGaussEq: {
            double worst = 0.0;
            for (const PointRecord& r : records) worst = std::max(worst, r.gaussEq);
            rep.checks.push_back(make_check("gauss-eq", worst, config.tolerance("gauss-eq")));
            break;
        }
        case Analysis::Variation1: {
            const VariationCheck v =
                first_variation_check(surf.patch, Expression::parse(config.alpha),
                                      config.direction, surf.rule,
                                      Quadrature{config.n1, config.n2}, config.epsStep);
            const double rel = v.difference / (1.0 + std::fabs(v.analytic));
            rep.checks.push_back(make_check("variation-1", rel, config.tolerance("variation-1")));
            rep.scalars.push_back({"variation-1-numeric", v.numeric});
            rep.scalars.push_back({"variation-1-analytic", v.analytic});
            break;
        }
        case Analysis::Variation2: {
            const VariationCheck v =
                second_variation_check(surf.patch, Expression::parse(config.alpha),
                                       config.direction, surf.rule,
                                       Quadrature{config.n1, config.n2}, config.epsStep);
            const double rel = v.difference / (1.0 + std::fabs(v.analytic));
            rep.checks.push_back(make_check("variation-2", rel, config.tolerance("variation-2")));
            rep.scalars.push_back({"variation-2-numeric", v.numeric});
            rep.scalars.push_back({"variation-2-analytic", v.analytic});
            break;
        }
        case Analysis::CayleyHamilton: {
            const double one =
                cayley_hamilton_residual(surf.patch, surf.rule, config.n1, config.n2);
            const double two = std::max(
                lightlike_weingarten_residual(surf.patch, LightSign::Plus, surf.rule, config.n1,
                                              config.n2),
                lightlike_weingarten_residual(surf.patch, LightSign::Minus, surf.rule, config.n1,
                                              config.n2));
            rep.checks.push_back(make_check("cayley-1", one, config.tolerance("cayley-1")));
            rep.checks.push_back(make_check("cayley-2", two, config.tolerance("cayley-2")));
            break;
        }
        case Analysis::GraphClassify: {
            double worst = 0.0;
            int disagree = 0;
            for (const PointRecord& r : records) {
                worst = std::max(worst, r.graphDev);
                disagree += !r.graphAgrees;
            }
            rep.checks.push_back(make_check("graph-route", worst,
                                            config.tolerance("graph-route")));
            rep.checks.push_back(make_check("graph-verdicts",
                                            double(disagree) / double(records.size()),
                                            config.tolerance("graph-verdicts")));
            break;
        }
        case Analysis::SliceChecks: {
            const AmbientSlice slice = embed(surf.slice, surf.patch);
            const SpecializationReport sr = specialization_check(slice, config.n1, config.n2);
            const double tol = config.tolerance("slice");
            rep.checks.push_back(make_check("slice-frame", sr.frameResidual, tol));
            rep.checks.push_back(make_check("slice-mean", sr.meanResidual, tol));
            rep.checks.push_back(make_check("slice-gauss", sr.gaussResidual, tol));
            rep.checks.push_back(make_check("slice-position", sr.positionResidual, tol));
            rep.checks.push_back(make_check(
                "slice-flags", sr.mtEquivalenceHolds && sr.noStronglyMT ? 0.0 : 1.0, 0.0));
            break;
        }
        }
    }

    if (!config.fields.empty()) {
        std::vector<std::string> fields = config.fields;
        std::sort(fields.begin(), fields.end());
        fields.erase(std::unique(fields.begin(), fields.end()), fields.end());
        out.dump.fields = fields;
        out.dump.u1.reserve(records.size());
        out.dump.u2.reserve(records.size());
        out.dump.columns.assign(fields.size(), {});
        for (const PointRecord& r : records) {
            out.dump.u1.push_back(r.u1);
            out.dump.u2.push_back(r.u2);
        }
        for (std::size_t c = 0; c < fields.size(); ++c) {
            const FieldGetter& get = field_registry().at(fields[c]);
            out.dump.columns[c].reserve(records.size());
            for (const PointRecord& r : records) out.dump.columns[c].push_back(get(r));
        }
    }
    return out;
}

RunResult run(const RunConfig& config, const std::string& outDir) {
    const RunOutput output = analyze(config);
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(fs::path(outDir), ec);
    if (ec) raise(Errc::Io, "cannot create output directory '" + outDir + "'");
    auto writeFile = [&](const std::string& name, const std::string& text) {
        const fs::path path = fs::path(outDir) / name;
        std::ofstream out(path, std::ios::binary);
        out << text;
        if (!out) raise(Errc::Io, "cannot write '" + path.string() + "'");
        return path.string();
    };
    RunResult result;
    result.report = output.report;
    result.files.push_back(writeFile(config.reportFile, emit_report(output.report)));
    if (!output.dump.fields.empty()) {
        result.files.push_back(writeFile(config.dumpFile, emit_csv(output.dump)));
    }
    result.exitCode = output.report.pass() ? 0 : 1;
    return result;
}

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::ConfigParse:
    case Errc::Io: return 2;
    default: return 3;
    }
}

} // namespace llg
