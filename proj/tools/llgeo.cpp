#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "llg/catalog.hpp"
#include "llg/config.hpp"
#include "llg/error.hpp"
#include "llg/runner.hpp"

int main(int argc, char** argv) {
    CLI::App app{"numerical laboratory for the lightlike geometry of spacelike surfaces in R^4_1"};
    app.require_subcommand(1);

    std::string configPath;
    std::string outDir = ".";
    std::string gridSpec;
    std::vector<std::string> tolSpecs;
    auto addCommon = [&](CLI::App* cmd) {
        cmd->add_option("config", configPath, "run configuration file")->required();
        cmd->add_option("--out", outDir, "output directory (default .)");
        cmd->add_option("--grid", gridSpec, "grid override, e.g. 51x51");
        cmd->add_option("--tolerance", tolSpecs, "tolerance override key=value (repeatable)");
    };
    CLI::App* analyzeCmd =
        app.add_subcommand("analyze", "run the analyses requested by the config");
    addCommon(analyzeCmd);
    CLI::App* verifyCmd =
        app.add_subcommand("verify", "run every verification applicable to the surface");
    addCommon(verifyCmd);
    CLI::App* listCmd = app.add_subcommand("list-catalog", "list the built-in surfaces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (listCmd->parsed()) {
            for (const std::string& name : llg::catalog_names()) {
                const llg::CatalogEntry entry = llg::make_catalog(name);
                std::printf("%-24s %-20s %s\n", entry.name.c_str(),
                            llg::slice_kind_name(entry.slice), entry.summary.c_str());
            }
            return 0;
        }
        llg::RunConfig config = llg::load_config(configPath);
        for (const std::string& spec : tolSpecs) llg::apply_tolerance_override(config, spec);
        if (!gridSpec.empty()) llg::apply_grid_override(config, gridSpec);
        if (verifyCmd->parsed()) config = llg::with_verification_suite(config);
        llg::validate_config(config);
        const llg::RunResult result = llg::run(config, outDir);
        for (const llg::ReportCheck& c : result.report.checks) {
            std::printf("%-16s residual %.3e tolerance %.3e %s\n", c.name.c_str(), c.residual,
                        c.tolerance, c.passed ? "pass" : "FAIL");
        }
        for (const llg::ReportScalar& s : result.report.scalars) {
            std::printf("%-24s %.10g\n", s.name.c_str(), s.value);
        }
        for (const std::string& f : result.files) std::printf("wrote %s\n", f.c_str());
        return result.exitCode;
    } catch (const llg::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return llg::exit_code_for(e.code());
    }
}
