#pragma once

// Built-in reference surfaces. Every entry is expression-backed (hence
// Taylor capable) and spacelike on its stated domain; entries that live
// inside a distinguished 3-slice carry the matching frame rule and slice tag
// so the specialization checks know what to compare against.

#include <string>
#include <vector>

#include "llg/surface.hpp"

namespace llg {

enum class SliceKind { None, Euclidean3, Minkowski3, Hyperbolic3, DeSitter3, Lightcone };
const char* slice_kind_name(SliceKind s);

struct CatalogEntry {
    std::string name;
    std::string summary;
    SurfacePatch patch;
    FrameRule rule = FrameRule::Generic;
    SliceKind slice = SliceKind::None;
};

std::vector<std::string> catalog_names();

// Raises ConfigParse for unknown names.
CatalogEntry make_catalog(const std::string& name);

// Round sphere of radius r in the Euclidean slice x0 = 0, azimuth-first
// parametrization (u1 azimuth, u2 polar in [margin, pi - margin]); the wedge
// normal nS points outward.
SurfacePatch make_sphere_patch(double r, double polar_margin);

// Graph surface (f(u), g(u), u1, u2) from two expression texts.
SurfacePatch make_graph_patch(const std::string& f, const std::string& g, Domain dom,
                              std::string name);

} // namespace llg
