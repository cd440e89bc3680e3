#include "llg/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "llg/error.hpp"

namespace llg {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

double real_value(const std::string& key, const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *trim(end).c_str() != '\0') {
        raise(Errc::ConfigParse, "key '" + key + "' needs a real number, got '" + value + "'");
    }
    return v;
}

int int_value(const std::string& key, const std::string& value) {
    const double v = real_value(key, value);
    const int n = static_cast<int>(v);
    if (double(n) != v) raise(Errc::ConfigParse, "key '" + key + "' needs an integer");
    return n;
}

FrameRule rule_from_name(const std::string& name) {
    for (FrameRule r : {FrameRule::Generic, FrameRule::MinkowskiSlice,
                        FrameRule::HyperbolicPosition, FrameRule::DeSitterPosition}) {
        if (name == frame_rule_name(r)) return r;
    }
    raise(Errc::ConfigParse, "unknown frame rule '" + name + "'");
}

SliceKind slice_from_name(const std::string& name) {
    for (SliceKind s : {SliceKind::None, SliceKind::Euclidean3, SliceKind::Minkowski3,
                        SliceKind::Hyperbolic3, SliceKind::DeSitter3, SliceKind::Lightcone}) {
        if (name == slice_kind_name(s)) return s;
    }
    raise(Errc::ConfigParse, "unknown slice kind '" + name + "'");
}

} // namespace

const char* analysis_name(Analysis a) {
    switch (a) {
    case Analysis::Invariants: return "invariants";
    case Analysis::Classify: return "classify";
    case Analysis::VerifyEgregium: return "verify-egregium";
    case Analysis::VerifyWeingarten: return "verify-weingarten";
    case Analysis::VerifyGaussEq: return "verify-gauss-eq";
    case Analysis::Variation1: return "variation-1";
    case Analysis::Variation2: return "variation-2";
    case Analysis::CayleyHamilton: return "cayley-hamilton";
    case Analysis::GraphClassify: return "graph-classify";
    case Analysis::SliceChecks: return "slice-checks";
    }
    return "?";
}

Analysis analysis_from_name(const std::string& name) {
    for (Analysis a :
         {Analysis::Invariants, Analysis::Classify, Analysis::VerifyEgregium,
          Analysis::VerifyWeingarten, Analysis::VerifyGaussEq, Analysis::Variation1,
          Analysis::Variation2, Analysis::CayleyHamilton, Analysis::GraphClassify,
          Analysis::SliceChecks}) {
        if (name == analysis_name(a)) return a;
    }
    raise(Errc::ConfigParse, "unknown analysis '" + name + "'");
}

bool RunConfig::wants(Analysis a) const {
    for (Analysis x : analyses) {
        if (x == a) return true;
    }
    return false;
}

const std::map<std::string, double>& tolerance_registry() {
    static const std::map<std::string, double> registry = {
        {"mt", 1e-8},          {"umbilic", 1e-8},
        {"flat", 1e-8},        {"cross-check", 1e-9},
        {"egregium", 1e-8},    {"gauss-eq", 1e-7},
        {"weingarten", 1e-6},  {"mt-consistency", 0.0},
        {"cayley-1", 1e-12},   {"cayley-2", 1e-6},
        {"variation-1", 1e-3}, {"variation-2", 1e-3},
        {"graph-route", 1e-8}, {"graph-verdicts", 0.0},
        {"slice", 1e-7},
    };
    return registry;
}

double RunConfig::tolerance(const std::string& key) const {
    const auto over = tolerances.find(key);
    if (over != tolerances.end()) return over->second;
    const auto def = tolerance_registry().find(key);
    if (def == tolerance_registry().end()) {
        raise(Errc::ConfigParse, "unknown tolerance key '" + key + "'");
    }
    return def->second;
}

Tolerances engine_tolerances(const RunConfig& config) {
    Tolerances t;
    t.mt = config.tolerance("mt");
    t.umbilic = config.tolerance("umbilic");
    t.flat = config.tolerance("flat");
    t.crossCheck = config.tolerance("cross-check");
    return t;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig config;
    std::istringstream in(text);
    std::string line, section;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        const std::size_t comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                raise(Errc::ConfigParse, "unterminated section header at line " +
                                             std::to_string(lineNo));
            }
            section = trim(line.substr(1, line.size() - 2));
            if (section != "surface" && section != "grid" && section != "run" &&
                section != "variation" && section != "tolerances" && section != "output") {
                raise(Errc::ConfigParse, "unknown section '" + section + "'");
            }
            continue;
        }
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            raise(Errc::ConfigParse, "expected key = value at line " + std::to_string(lineNo));
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) raise(Errc::ConfigParse, "empty key at line " + std::to_string(lineNo));
        if (section == "surface") {
            if (key == "kind") {
                if (value != "catalog" && value != "expr" && value != "graph") {
                    raise(Errc::ConfigParse, "surface kind must be catalog, expr or graph");
                }
                config.kind = value;
            } else if (key == "name") {
                config.name = value;
            } else if (key == "x0" || key == "x1" || key == "x2" || key == "x3") {
                config.components[key[1] - '0'] = value;
            } else if (key == "f") {
                config.f = value;
            } else if (key == "g") {
                config.g = value;
            } else if (key == "domain") {
                const std::vector<std::string> tok = split_ws(value);
                if (tok.size() != 4) {
                    raise(Errc::ConfigParse, "domain needs four bounds: lo1 hi1 lo2 hi2");
                }
                config.domain = {real_value(key, tok[0]), real_value(key, tok[1]),
                                 real_value(key, tok[2]), real_value(key, tok[3])};
            } else if (key == "frame") {
                config.rule = rule_from_name(value);
                config.ruleSet = true;
            } else if (key == "slice") {
                config.slice = slice_from_name(value);
                config.sliceSet = true;
            } else {
                raise(Errc::ConfigParse, "unknown surface key '" + key + "'");
            }
        } else if (section == "grid") {
            if (key == "n1") {
                config.n1 = int_value(key, value);
            } else if (key == "n2") {
                config.n2 = int_value(key, value);
            } else {
                raise(Errc::ConfigParse, "unknown grid key '" + key + "'");
            }
        } else if (section == "run") {
            if (key == "analyses") {
                config.analyses.clear();
                for (const std::string& name : split_ws(value)) {
                    config.analyses.push_back(analysis_from_name(name));
                }
            } else if (key == "workers") {
                config.workers = int_value(key, value);
            } else {
                raise(Errc::ConfigParse, "unknown run key '" + key + "'");
            }
        } else if (section == "variation") {
            if (key == "alpha") {
                config.alpha = value;
            } else if (key == "direction") {
                if (value == "plus") {
                    config.direction = LightSign::Plus;
                } else if (value == "minus") {
                    config.direction = LightSign::Minus;
                } else {
                    raise(Errc::ConfigParse, "direction must be plus or minus");
                }
            } else if (key == "eps-step") {
                config.epsStep = real_value(key, value);
            } else {
                raise(Errc::ConfigParse, "unknown variation key '" + key + "'");
            }
        } else if (section == "tolerances") {
            if (tolerance_registry().find(key) == tolerance_registry().end()) {
                raise(Errc::ConfigParse, "unknown tolerance key '" + key + "'");
            }
            config.tolerances[key] = real_value(key, value);
        } else if (section == "output") {
            if (key == "report") {
                config.reportFile = value;
            } else if (key == "dump") {
                config.dumpFile = value;
            } else if (key == "fields") {
                config.fields = split_ws(value);
            } else {
                raise(Errc::ConfigParse, "unknown output key '" + key + "'");
            }
        } else {
            raise(Errc::ConfigParse, "key '" + key + "' outside any section");
        }
    }
    validate_config(config);
    return config;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::Io, "cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

void apply_tolerance_override(RunConfig& config, const std::string& spec) {
    const std::size_t eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
        raise(Errc::ConfigParse, "tolerance override must look like key=value");
    }
    const std::string key = trim(spec.substr(0, eq));
    if (tolerance_registry().find(key) == tolerance_registry().end()) {
        raise(Errc::ConfigParse, "unknown tolerance key '" + key + "'");
    }
    config.tolerances[key] = real_value(key, trim(spec.substr(eq + 1)));
}

void apply_grid_override(RunConfig& config, const std::string& spec) {
    const std::size_t x = spec.find('x');
    if (x == std::string::npos) raise(Errc::ConfigParse, "grid override must look like NxM");
    config.n1 = int_value("grid", spec.substr(0, x));
    config.n2 = int_value("grid", spec.substr(x + 1));
    validate_config(config);
}

void validate_config(const RunConfig& config) {
    if (config.analyses.empty()) raise(Errc::ConfigParse, "no analysis requested");
    if (config.n1 < 3 || config.n2 < 3) raise(Errc::ConfigParse, "grid needs at least 3x3 nodes");
    if (config.workers < 0) raise(Errc::ConfigParse, "workers must be nonnegative");
    if (config.kind == "catalog" && config.name.empty()) {
        raise(Errc::ConfigParse, "catalog surface needs a name");
    }
    if (config.kind == "expr") {
        for (const std::string& c : config.components) {
            if (c.empty()) raise(Errc::ConfigParse, "expr surface needs x0..x3");
        }
    }
    if (config.kind == "graph" && (config.f.empty() || config.g.empty())) {
        raise(Errc::ConfigParse, "graph surface needs f and g");
    }
    if (config.wants(Analysis::GraphClassify) && config.kind != "graph") {
        raise(Errc::ConfigParse, "graph-classify needs a graph surface");
    }
    if (config.domain.lo1 >= config.domain.hi1 || config.domain.lo2 >= config.domain.hi2) {
        raise(Errc::ConfigParse, "domain bounds must be increasing");
    }
}

} // namespace llg
