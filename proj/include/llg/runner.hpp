#pragma once

// Orchestration: builds the configured surface, sweeps the grid over a
// worker pool, reduces the requested analyses into a report plus an optional
// field dump, and writes both to disk. All module calls are pure; records
// are computed into preassigned slots and reduced in fixed index order, so
// the outputs do not depend on the parallelism degree.

#include <optional>
#include <string>
#include <vector>

#include "llg/config.hpp"
#include "llg/error.hpp"
#include "llg/graph.hpp"
#include "llg/report.hpp"

namespace llg {

struct BuiltSurface {
    SurfacePatch patch;
    FrameRule rule = FrameRule::Generic;
    SliceKind slice = SliceKind::None;
    std::optional<GraphSurface> graph; // set for graph kind
    std::string label;
};

// Resolves the config's surface record: catalog entries keep their own
// frame rule and slice tag unless the config overrides them.
BuiltSurface build_surface(const RunConfig& config);

// Names accepted in [output] fields, sorted; graph-only columns are
// delta, phi1, phi2.
std::vector<std::string> dump_field_names();

struct RunOutput {
    Report report;
    FieldDump dump; // empty field list when the config requests no dump
};

// Pure analysis pass: raises instead of returning partial results.
RunOutput analyze(const RunConfig& config);

// The analysis set for `verify`: the config's own list extended with every
// verification applicable to the surface kind.
RunConfig with_verification_suite(RunConfig config);

struct RunResult {
    Report report;
    int exitCode = 0; // 0 all checks pass, 1 some check failed
    std::vector<std::string> files;
};

// analyze + write report (and dump when requested) under outDir, creating
// it when missing. Raises Io when a file cannot be written.
RunResult run(const RunConfig& config, const std::string& outDir);

// Process exit code for an error escaping a run: 2 for config and io
// problems, 3 for numerical or geometric failures.
int exit_code_for(Errc code);

} // namespace llg
