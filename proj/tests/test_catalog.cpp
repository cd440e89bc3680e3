#include <cmath>

#include "doctest.h"
#include "llg/catalog.hpp"
#include "llg/error.hpp"

using namespace llg;

TEST_CASE("catalog enumerates and rejects unknowns") {
    const auto names = catalog_names();
    CHECK(names.size() >= 15);
    for (const char* expected :
         {"plane", "euclidean-sphere", "euclidean-sphere-polar", "mercator-sphere",
          "hyperbolic-plane", "desitter-round", "desitter-horosphere", "lightcone-s2plus",
          "lightcone-scaled", "lightcone-flat", "graph-fg-harmonic", "graph-general"}) {
        CHECK(std::find(names.begin(), names.end(), expected) != names.end());
    }
    CHECK_THROWS_AS(make_catalog("no-such-surface"), Error);
    try {
        make_catalog("no-such-surface");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ConfigParse);
    }
}

TEST_CASE("catalog surfaces are spacelike and taylor capable") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const CatalogEntry e = make_catalog(name);
        CHECK(e.patch.taylor_capable());
        CHECK(e.patch.domain().span1() > 0.0);
        CHECK(e.patch.domain().span2() > 0.0);
        CHECK_NOTHROW(check_spacelike_grid(e.patch, 5, 5));
        CHECK_FALSE(e.summary.empty());
    }
}

TEST_CASE("slice tags match the geometry") {
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const CatalogEntry e = make_catalog(name);
        const Domain& d = e.patch.domain();
        for (double s : {0.31, 0.77}) {
            const Vec4 X = e.patch.eval_point(d.lo1 + s * d.span1(), d.lo2 + s * d.span2());
            const double q = minkowski_inner(X, X);
            switch (e.slice) {
            case SliceKind::Euclidean3: CHECK(X.x0 == doctest::Approx(0.0).epsilon(1e-14)); break;
            case SliceKind::Minkowski3: CHECK(X.x3 == doctest::Approx(0.0).epsilon(1e-14)); break;
            case SliceKind::Hyperbolic3:
                CHECK(q == doctest::Approx(-1.0).epsilon(1e-12));
                CHECK(X.x0 > 0.0);
                break;
            case SliceKind::DeSitter3: CHECK(q == doctest::Approx(1.0).epsilon(1e-12)); break;
            case SliceKind::Lightcone:
                CHECK(std::fabs(q) <= 1e-12 * (1.0 + euclid_norm2(X)));
                CHECK(X.x0 > 0.0);
                break;
            case SliceKind::None: break;
            }
        }
    }
}

TEST_CASE("exactly flat catalog metrics") {
    for (const char* name : {"desitter-horosphere", "lightcone-flat", "graph-fg-harmonic",
                             "graph-fg-paraboloid", "plane", "minkowski-plane"}) {
        CAPTURE(name);
        const CatalogEntry e = make_catalog(name);
        const Metric2 m = first_fundamental_form(e.patch.eval_jet(0.21, -0.13));
        CHECK(m.g.m11 == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(m.g.m12 == doctest::Approx(0.0).epsilon(1e-13));
        CHECK(m.g.m22 == doctest::Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("mercator parametrization is isothermal") {
    const CatalogEntry e = make_catalog("mercator-sphere");
    const Metric2 m = first_fundamental_form(e.patch.eval_jet(1.1, 0.6));
    const double sech = 1.0 / std::cosh(0.6);
    CHECK(m.g.m11 == doctest::Approx(sech * sech).epsilon(1e-13));
    CHECK(m.g.m22 == doctest::Approx(sech * sech).epsilon(1e-13));
    CHECK(m.g.m12 == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("sphere patch builder") {
    const SurfacePatch p = make_sphere_patch(2.0, 1e-3);
    const Vec4 X = p.eval_point(0.4, 1.2);
    CHECK(minkowski_inner(X, X) == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(X.x0 == 0.0);
    CHECK(p.domain().lo2 == doctest::Approx(1e-3));
    // Near-pole rows are inside the domain now.
    CHECK_NOTHROW(p.eval_jet(0.0, 1e-3));
}
