#pragma once

// Run configuration: a single self-contained text file in an INI-like
// key-value format with sections. No environment variables are consulted,
// so a config file plus the binary pins a run completely.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "llg/catalog.hpp"
#include "llg/curvature.hpp"
#include "llg/surface.hpp"
#include "llg/variation.hpp"

namespace llg {

enum class Analysis {
    Invariants,
    Classify,
    VerifyEgregium,
    VerifyWeingarten,
    VerifyGaussEq,
    Variation1,
    Variation2,
    CayleyHamilton,
    GraphClassify,
    SliceChecks,
};

const char* analysis_name(Analysis a);
Analysis analysis_from_name(const std::string& name); // ConfigParse on unknown names

struct RunConfig {
    // [surface] kind = catalog | expr | graph
    std::string kind = "catalog";
    std::string name;                      // catalog entry, or a label for expr/graph
    std::array<std::string, 4> components; // expr kind: x0..x3
    std::string f, g;                      // graph kind
    Domain domain{-1.0, 1.0, -1.0, 1.0};   // expr and graph kinds
    FrameRule rule = FrameRule::Generic;
    bool ruleSet = false;  // when false a catalog entry's own rule wins
    SliceKind slice = SliceKind::None;
    bool sliceSet = false; // when false a catalog entry's own tag wins

    // [grid]
    int n1 = 25, n2 = 25;

    // [run]
    std::vector<Analysis> analyses;
    int workers = 0; // 0 = all available

    // [variation]
    std::string alpha = "1";
    LightSign direction = LightSign::Plus;
    double epsStep = 1e-3;

    // [tolerances] named overrides; keys validated against the registry
    std::map<std::string, double> tolerances;

    // [output]
    std::string reportFile = "report.txt";
    std::string dumpFile = "fields.csv";
    std::vector<std::string> fields; // dump columns; empty = no dump

    bool wants(Analysis a) const;
    double tolerance(const std::string& key) const; // override or registry default
};

// Registry of known tolerance keys with defaults: the engine thresholds
// (mt, umbilic, flat, cross-check) and one gate per verification check.
const std::map<std::string, double>& tolerance_registry();

// Engine thresholds assembled from the config overrides.
Tolerances engine_tolerances(const RunConfig& config);

// Parses config text. Unknown sections, keys, analyses or tolerance names
// raise ConfigParse; so do structural violations (no analysis requested,
// grid below 3 per axis, malformed numbers).
RunConfig parse_config_text(const std::string& text);

// Reads the file and parses it; raises Io when unreadable.
RunConfig load_config(const std::string& path);

// "key=value" tolerance override, applied after parsing (CLI flag).
void apply_tolerance_override(RunConfig& config, const std::string& spec);

// "NxM" grid override (CLI flag).
void apply_grid_override(RunConfig& config, const std::string& spec);

// Re-checks the structural invariants after overrides.
void validate_config(const RunConfig& config);

} // namespace llg
