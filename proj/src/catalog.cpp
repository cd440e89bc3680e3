#include "llg/catalog.hpp"

#include <numbers>

#include "llg/error.hpp"

namespace llg {

namespace {

constexpr double kPi = std::numbers::pi;
// Polar margin for the sphere-like entries. Keeping well away from the poles
// keeps 1/det(g) amplification out of the 1e-8 identity checks; tests that
// need near-pole coverage build their own patch via make_sphere_patch.
constexpr double kPolarMargin = 0.3;

struct Spec {
    const char* name;
    const char* summary;
    std::array<const char*, 4> xyz;
    Domain dom;
    FrameRule rule;
    SliceKind slice;
};

const Spec kSpecs[] = {
    {"plane",
     "flat spacelike coordinate plane (0, 0, u1, u2)",
     {"0", "0", "u1", "u2"},
     {-1.0, 1.0, -1.0, 1.0},
     FrameRule::Generic,
     SliceKind::None},
    {"euclidean-sphere",
     "unit round sphere in the slice x0 = 0, azimuth-first, outward nS",
     {"0", "sin(u2)*cos(u1)", "sin(u2)*sin(u1)", "cos(u2)"},
     {0.0, 2.0 * kPi, kPolarMargin, kPi - kPolarMargin},
     FrameRule::Generic,
     SliceKind::Euclidean3},
    {"euclidean-sphere-polar",
     "unit round sphere, polar-first parametrization (inward nS)",
     {"0", "sin(u1)*cos(u2)", "sin(u1)*sin(u2)", "cos(u1)"},
     {kPolarMargin, kPi - kPolarMargin, 0.0, 2.0 * kPi},
     FrameRule::Generic,
     SliceKind::Euclidean3},
    {"mercator-sphere",
     "unit sphere in isothermal (Mercator) coordinates, g = sech(u2)^2 * id",
     {"0", "cos(u1)/cosh(u2)", "sin(u1)/cosh(u2)", "tanh(u2)"},
     {0.0, 2.0 * kPi, -1.5, 1.5},
     FrameRule::Generic,
     SliceKind::Euclidean3},
    {"euclidean-graph",
     "height graph (0, u1, u2, 0.3 sin u1 cos u2) in the slice x0 = 0",
     {"0", "u1", "u2", "0.3*sin(u1)*cos(u2)"},
     {-1.0, 1.0, -1.0, 1.0},
     FrameRule::Generic,
     SliceKind::Euclidean3},
    {"minkowski-plane",
     "flat plane (0, u1, u2, 0) inside the Minkowski slice x3 = 0",
     {"0", "u1", "u2", "0"},
     {-1.0, 1.0, -1.0, 1.0},
     FrameRule::MinkowskiSlice,
     SliceKind::Minkowski3},
    {"minkowski-graph",
     "spacelike time graph (0.3 sin u1 sin u2, u1, u2, 0) inside x3 = 0",
     {"0.3*sin(u1)*sin(u2)", "u1", "u2", "0"},
     {-1.0, 1.0, -1.0, 1.0},
     FrameRule::MinkowskiSlice,
     SliceKind::Minkowski3},
    {"hyperbolic-plane",
     "totally geodesic plane in hyperbolic 3-space, <X,X> = -1",
     {"cosh(u1)", "sinh(u1)*cos(u2)", "sinh(u1)*sin(u2)", "0"},
     {0.2, 1.2, 0.0, 2.0 * kPi},
     FrameRule::HyperbolicPosition,
     SliceKind::Hyperbolic3},
    {"hyperbolic-graph",
     "graph over the x3 = phi chart of hyperbolic 3-space",
     {"sqrt(1+u1^2+u2^2+(0.3*sin(u1)*cos(u2))^2)", "u1", "u2", "0.3*sin(u1)*cos(u2)"},
     {-0.8, 0.8, -0.8, 0.8},
     FrameRule::HyperbolicPosition,
     SliceKind::Hyperbolic3},
    {"desitter-round",
     "round x0 = 0.3 slice of de Sitter 3-space, <X,X> = 1",
     {"0.3", "sqrt(1.09)*sin(u2)*cos(u1)", "sqrt(1.09)*sin(u2)*sin(u1)", "sqrt(1.09)*cos(u2)"},
     {0.0, 2.0 * kPi, kPolarMargin, kPi - kPolarMargin},
     FrameRule::DeSitterPosition,
     SliceKind::DeSitter3},
    {"desitter-horosphere",
     "intrinsically flat horosphere-type surface in de Sitter 3-space (g = id)",
     {"-(u1^2+u2^2)/2", "1-(u1^2+u2^2)/2", "u1", "u2"},
     {-0.7, 0.7, -0.7, 0.7},
     FrameRule::DeSitterPosition,
     SliceKind::DeSitter3},
    {"lightcone-s2plus",
     "unit-time section of the future lightcone, X = (1, omega)",
     {"1", "sin(u2)*cos(u1)", "sin(u2)*sin(u1)", "cos(u2)"},
     {0.0, 2.0 * kPi, kPolarMargin, kPi - kPolarMargin},
     FrameRule::Generic,
     SliceKind::Lightcone},
    {"lightcone-scaled",
     "radially scaled lightcone section X = rho(u) (1, omega), rho = exp(0.2 sin u2 cos u1)",
     {"exp(0.2*sin(u2)*cos(u1))", "exp(0.2*sin(u2)*cos(u1))*sin(u2)*cos(u1)",
      "exp(0.2*sin(u2)*cos(u1))*sin(u2)*sin(u1)", "exp(0.2*sin(u2)*cos(u1))*cos(u2)"},
     {0.0, 2.0 * kPi, kPolarMargin, kPi - kPolarMargin},
     FrameRule::Generic,
     SliceKind::Lightcone},
    {"lightcone-flat",
     "lightlike-hyperplane cut of the lightcone (x0 + x3 = 2), intrinsically flat",
     {"1+(u1^2+u2^2)/4", "u1", "u2", "1-(u1^2+u2^2)/4"},
     {-1.0, 1.0, -1.0, 1.0},
     FrameRule::Generic,
     SliceKind::Lightcone},
    {"graph-fg-harmonic",
     "graph (f, f, u1, u2) with harmonic f = u1^2 - u2^2 (strongly marginally trapped)",
     {"u1^2-u2^2", "u1^2-u2^2", "u1", "u2"},
     {-1.0, 1.0, -1.0, 1.0},
     FrameRule::Generic,
     SliceKind::None},
    {"graph-fg-paraboloid",
     "graph (f, f, u1, u2) with f = u1^2 (marginally trapped, not strongly)",
     {"u1^2", "u1^2", "u1", "u2"},
     {-1.0, 1.0, -1.0, 1.0},
     FrameRule::Generic,
     SliceKind::None},
    {"graph-general",
     "generic spacelike graph (0.25 sin(u1+u2), 0.2 u1^2 - 0.1 u2^2, u1, u2)",
     {"0.25*sin(u1+u2)", "0.2*u1^2-0.1*u2^2", "u1", "u2"},
     {-1.0, 1.0, -1.0, 1.0},
     FrameRule::Generic,
     SliceKind::None},
};

} // namespace

const char* slice_kind_name(SliceKind s) {
    switch (s) {
    case SliceKind::None: return "none";
    case SliceKind::Euclidean3: return "euclidean-3";
    case SliceKind::Minkowski3: return "minkowski-3";
    case SliceKind::Hyperbolic3: return "hyperbolic-3";
    case SliceKind::DeSitter3: return "desitter-3";
    case SliceKind::Lightcone: return "lightcone";
    }
    return "?";
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (const auto& s : kSpecs) names.emplace_back(s.name);
    return names;
}

CatalogEntry make_catalog(const std::string& name) {
    for (const auto& s : kSpecs) {
        if (name == s.name) {
            CatalogEntry e;
            e.name = s.name;
            e.summary = s.summary;
            e.patch = SurfacePatch::from_expressions(
                {s.xyz[0], s.xyz[1], s.xyz[2], s.xyz[3]}, s.dom, s.name);
            e.rule = s.rule;
            e.slice = s.slice;
            return e;
        }
    }
    raise(Errc::ConfigParse, "unknown catalog surface '" + name + "'");
}

SurfacePatch make_sphere_patch(double r, double polar_margin) {
    auto map = [r](const Taylor& U1, const Taylor& U2) -> TaylorVec4 {
        const Taylor sp = sin(U2), cp = cos(U2), ca = cos(U1), sa = sin(U1);
        return {Taylor(0.0), r * sp * ca, r * sp * sa, r * cp};
    };
    Domain dom{0.0, 2.0 * kPi, polar_margin, kPi - polar_margin};
    return SurfacePatch::from_taylor_map(map, dom, "sphere-r" + std::to_string(r));
}

SurfacePatch make_graph_patch(const std::string& f, const std::string& g, Domain dom,
                              std::string name) {
    return SurfacePatch::from_expressions({f, g, "u1", "u2"}, dom, std::move(name));
}

} // namespace llg
