#include <cmath>

#include "doctest.h"
#include "llg/catalog.hpp"
#include "llg/error.hpp"
#include "llg/surface.hpp"

using namespace llg;

namespace {

void check_vec(const Vec4& got, const Vec4& want, double tol) {
    CAPTURE(got.x0);
    CAPTURE(got.x1);
    CAPTURE(got.x2);
    CAPTURE(got.x3);
    CHECK(euclid_norm(got - want) <= tol);
}

SurfacePatch coordinate_plane() {
    return SurfacePatch::from_expressions({"0", "0", "u1", "u2"}, Domain{-1, 1, -1, 1}, "plane");
}

} // namespace

TEST_CASE("plane jets and frame") {
    const SurfacePatch p = coordinate_plane();
    const Jet3 j = p.eval_jet(0.25, -0.5);
    check_vec(j.X, {0, 0, 0.25, -0.5}, 0.0);
    check_vec(j.X_u1, {0, 0, 1, 0}, 0.0);
    check_vec(j.X_u2, {0, 0, 0, 1}, 0.0);
    check_vec(j.X_u1u1, {0, 0, 0, 0}, 0.0);
    check_vec(j.X_u1u2, {0, 0, 0, 0}, 0.0);

    const Metric2 m = first_fundamental_form(j);
    CHECK(m.g.m11 == 1.0);
    CHECK(m.g.m12 == 0.0);
    CHECK(m.g.m22 == 1.0);
    CHECK(m.det == 1.0);

    const NormalFrame f = normal_frame(j);
    check_vec(f.nT, {1, 0, 0, 0}, 1e-15);
    check_vec(f.nS, {0, -1, 0, 0}, 1e-15);
    check_vec(f.lPlus, {1, -1, 0, 0}, 1e-15);
    check_vec(f.lMinus, {1, 1, 0, 0}, 1e-15);
    CHECK(minkowski_inner(f.lPlus, f.lMinus) == doctest::Approx(-2.0).epsilon(1e-14));
}

TEST_CASE("graph jets: pinned example at (1,1)") {
    const SurfacePatch p =
        make_graph_patch("u1^2+u2^2", "u1^2+u2^2", Domain{-2, 2, -2, 2}, "paraboloid");
    const Jet3 j = p.eval_jet(1.0, 1.0);
    check_vec(j.X, {2, 2, 1, 1}, 1e-14);
    check_vec(j.X_u1, {2, 2, 1, 0}, 1e-14);
    check_vec(j.X_u2, {2, 2, 0, 1}, 1e-14);
    check_vec(j.X_u1u1, {2, 2, 0, 0}, 1e-14);
    check_vec(j.X_u1u2, {0, 0, 0, 0}, 1e-14);
    check_vec(j.X_u2u2, {2, 2, 0, 0}, 1e-14);
    check_vec(j.X_u1u1u1, {0, 0, 0, 0}, 1e-14);

    // f = g graphs have the identity as induced metric.
    const Metric2 m = first_fundamental_form(j);
    CHECK(m.g.m11 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.g.m12 == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(m.g.m22 == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("polar sphere jet: pinned tangent at the equator") {
    const CatalogEntry e = make_catalog("euclidean-sphere-polar");
    const Jet3 j = e.patch.eval_jet(M_PI / 2, 0.0);
    check_vec(j.X, {0, 1, 0, 0}, 1e-15);
    check_vec(j.X_u1, {0, 0, 0, -1}, 1e-15);
    check_vec(j.X_u2, {0, 0, 1, 0}, 1e-15);
    const Metric2 m = first_fundamental_form(j);
    CHECK(m.g.m11 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.g.m22 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(m.g.m12 == doctest::Approx(0.0).epsilon(1e-14));
    // Polar-first ordering makes the wedge normal point inward.
    const NormalFrame f = normal_frame(j);
    check_vec(f.nS, {0, -1, 0, 0}, 1e-14);
}

TEST_CASE("azimuth sphere: outward normal and metric") {
    const CatalogEntry e = make_catalog("euclidean-sphere");
    const double u1 = 0.5, u2 = 1.0;
    const Jet3 j = e.patch.eval_jet(u1, u2);
    const Metric2 m = first_fundamental_form(j);
    CHECK(m.g.m11 == doctest::Approx(std::sin(u2) * std::sin(u2)).epsilon(1e-13));
    CHECK(m.g.m22 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(m.g.m12 == doctest::Approx(0.0).epsilon(1e-13));
    const NormalFrame f = normal_frame(j);
    check_vec(f.nT, {1, 0, 0, 0}, 1e-13);
    check_vec(f.nS, j.X, 1e-13); // outward: nS equals the position on the unit sphere
}

TEST_CASE("frame invariants across the catalog") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const CatalogEntry e = make_catalog(name);
        const Domain& d = e.patch.domain();
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const double u1 = d.lo1 + d.span1() * i / 4.0;
                const double u2 = d.lo2 + d.span2() * j / 4.0;
                const Jet3 jet = e.patch.eval_jet(u1, u2);
                const NormalFrame f = normal_frame(jet, e.rule);
                CHECK(minkowski_inner(f.nT, f.nT) == doctest::Approx(-1.0).epsilon(1e-12));
                CHECK(minkowski_inner(f.nS, f.nS) == doctest::Approx(1.0).epsilon(1e-12));
                CHECK(std::fabs(minkowski_inner(f.nT, f.nS)) <= 1e-12);
                CHECK(std::fabs(minkowski_inner(f.nT, jet.X_u1)) <= 1e-11);
                CHECK(std::fabs(minkowski_inner(f.nT, jet.X_u2)) <= 1e-11);
                CHECK(std::fabs(minkowski_inner(f.nS, jet.X_u1)) <= 1e-11);
                CHECK(std::fabs(minkowski_inner(f.nS, jet.X_u2)) <= 1e-11);
                CHECK(f.nT.x0 > 0.0);
                CHECK(minkowski_inner(f.lPlus, f.lMinus) == doctest::Approx(-2.0).epsilon(1e-12));
                CHECK(causal_class(f.lPlus) == CausalClass::Lightlike);
                CHECK(causal_class(f.lMinus) == CausalClass::Lightlike);
            }
    }
}

TEST_CASE("position frame rules") {
    const CatalogEntry hyp = make_catalog("hyperbolic-plane");
    const Jet3 j = hyp.patch.eval_jet(0.7, 1.3);
    const NormalFrame f = normal_frame(j, FrameRule::HyperbolicPosition);
    check_vec(f.nT, j.X, 1e-12);
    // Totally geodesic patch: the generic construction lands on the same frame.
    const NormalFrame g = normal_frame(j, FrameRule::Generic);
    check_vec(g.nT, f.nT, 1e-12);

    const CatalogEntry ds = make_catalog("desitter-round");
    const Jet3 jd = ds.patch.eval_jet(1.0, 1.0);
    const NormalFrame fd = normal_frame(jd, FrameRule::DeSitterPosition);
    check_vec(fd.nS, jd.X, 1e-12);
    CHECK(fd.nT.x0 > 0.0);

    const CatalogEntry mg = make_catalog("minkowski-graph");
    const Jet3 jm = mg.patch.eval_jet(0.3, -0.4);
    const NormalFrame fm = normal_frame(jm, FrameRule::MinkowskiSlice);
    check_vec(fm.nS, {0, 0, 0, 1}, 0.0);
    CHECK(std::fabs(fm.nT.x3) <= 1e-14);

    // Rule preconditions are enforced.
    const SurfacePatch plane = coordinate_plane();
    const Jet3 jp = plane.eval_jet(0.0, 0.0);
    CHECK_THROWS_AS(normal_frame(jp, FrameRule::HyperbolicPosition), Error);
    CHECK_THROWS_AS(normal_frame(jp, FrameRule::DeSitterPosition), Error);
    const CatalogEntry sph = make_catalog("euclidean-sphere");
    CHECK_THROWS_AS(normal_frame(sph.patch.eval_jet(0.5, 1.0), FrameRule::MinkowskiSlice), Error);
}

TEST_CASE("finite-difference jets agree with exact jets") {
    const CatalogEntry e = make_catalog("euclidean-sphere");
    const SurfacePatch& exact = e.patch;
    const SurfacePatch fd = SurfacePatch::from_point_map(
        [&exact](double u1, double u2) { return exact.eval_point(u1, u2); }, exact.domain(),
        "sphere-sampled");
    CHECK_FALSE(fd.taylor_capable());
    CHECK_THROWS_AS(fd.eval_taylor(1.0, 1.0), Error);

    // Interior point and a point that forces a shifted window.
    for (const auto& uv : {std::pair{1.1, 0.9}, std::pair{0.0, 0.31}}) {
        const Jet3 a = exact.eval_jet(uv.first, uv.second);
        const Jet3 b = fd.eval_jet(uv.first, uv.second);
        CHECK(euclid_norm(a.X - b.X) <= 1e-14);
        CHECK(euclid_norm(a.X_u1 - b.X_u1) <= 1e-8);
        CHECK(euclid_norm(a.X_u2 - b.X_u2) <= 1e-8);
        CHECK(euclid_norm(a.X_u1u1 - b.X_u1u1) <= 1e-6);
        CHECK(euclid_norm(a.X_u1u2 - b.X_u1u2) <= 1e-6);
        CHECK(euclid_norm(a.X_u2u2 - b.X_u2u2) <= 1e-6);
        CHECK(euclid_norm(a.X_u1u1u1 - b.X_u1u1u1) <= 1e-3);
        CHECK(euclid_norm(a.X_u2u2u2 - b.X_u2u2u2) <= 1e-3);
    }
}

TEST_CASE("frame derivatives: series against finite differences") {
    const CatalogEntry e = make_catalog("euclidean-graph");
    const double u1 = 0.3, u2 = -0.2;
    const FrameDerivatives fd = frame_derivatives(e.patch, u1, u2);

    // Independent check: central differences of point frames.
    const double h = 1e-5;
    auto frame_at = [&](double a, double b) { return normal_frame(e.patch.eval_jet(a, b)); };
    const Vec4 nT_u1 = (frame_at(u1 + h, u2).nT - frame_at(u1 - h, u2).nT) / (2 * h);
    const Vec4 nS_u2 = (frame_at(u1, u2 + h).nS - frame_at(u1, u2 - h).nS) / (2 * h);
    CHECK(euclid_norm(fd.nT_u1 - nT_u1) <= 1e-8);
    CHECK(euclid_norm(fd.nS_u2 - nS_u2) <= 1e-8);

    // The point-map twin goes through the stencil path and must agree.
    const SurfacePatch sampled = SurfacePatch::from_point_map(
        [&e](double a, double b) { return e.patch.eval_point(a, b); }, e.patch.domain(),
        "graph-sampled");
    const FrameDerivatives fd2 = frame_derivatives(sampled, u1, u2);
    CHECK(euclid_norm(fd.nT_u1 - fd2.nT_u1) <= 1e-6);
    CHECK(euclid_norm(fd.nT_u2 - fd2.nT_u2) <= 1e-6);
    CHECK(euclid_norm(fd.nS_u1 - fd2.nS_u1) <= 1e-6);
    CHECK(euclid_norm(fd.nS_u2 - fd2.nS_u2) <= 1e-6);

    // l+- derivatives are sums and differences of the frame leg derivatives.
    check_vec(fd.lPlus_u1, fd.nT_u1 + fd.nS_u1, 0.0);
    check_vec(fd.lMinus_u2, fd.nT_u2 - fd.nS_u2, 0.0);
}

TEST_CASE("domain checks") {
    const SurfacePatch p = coordinate_plane();
    CHECK_THROWS_AS(p.eval_jet(1.5, 0.0), Error);
    try {
        p.eval_point(0.0, -2.0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OutOfDomain);
        CHECK(std::string(e.what()).find("plane") != std::string::npos);
    }
    // Endpoint with rounding slack stays inside.
    CHECK_NOTHROW(p.eval_jet(1.0 + 1e-12, 0.0));
}

TEST_CASE("spacelike grid check") {
    const SurfacePatch good = coordinate_plane();
    CHECK_NOTHROW(check_spacelike_grid(good, 4, 4));
    CHECK_THROWS_AS(check_spacelike_grid(good, 1, 4), Error);

    // Tangent goes timelike: slope 1.5 in the time direction.
    const SurfacePatch bad =
        SurfacePatch::from_expressions({"1.5*u1", "u1", "u2", "0"}, Domain{-1, 1, -1, 1}, "steep");
    try {
        check_spacelike_grid(bad, 3, 3);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotSpacelike);
        CHECK(std::string(e.what()).find("grid node") != std::string::npos);
    }
}

TEST_CASE("degenerate metric is rejected") {
    // X_u1 is lightlike: g11 = 0.
    const SurfacePatch p =
        SurfacePatch::from_expressions({"u1", "u1", "u2", "0"}, Domain{-1, 1, -1, 1}, "null-dir");
    CHECK_THROWS_AS(first_fundamental_form(p.eval_jet(0.0, 0.0)), Error);
    try {
        first_fundamental_form(p.eval_jet(0.0, 0.0));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegenerateMetric);
    }
}
