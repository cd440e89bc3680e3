#include "llg/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "llg/error.hpp"

namespace llg {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_real(const std::string& token, const std::string& context) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') {
        raise(Errc::ConfigParse, "bad real '" + token + "' in " + context);
    }
    return v;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

bool Report::pass() const {
    for (const ReportCheck& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

std::string emit_report(const Report& report) {
    std::string out = "llg-report 1\n";
    out += "surface " + report.surface + "\n";
    out += "grid " + std::to_string(report.n1) + " " + std::to_string(report.n2) + "\n";
    for (const std::string& a : report.analyses) out += "analysis " + a + "\n";
    for (const ReportCheck& c : report.checks) {
        out += "check " + c.name + " " + num(c.residual) + " " + num(c.tolerance) + " " +
               (c.passed ? "pass" : "fail") + "\n";
    }
    for (const ReportScalar& s : report.scalars) {
        out += "scalar " + s.name + " " + num(s.value) + "\n";
    }
    out += "end\n";
    return out;
}

Report parse_report(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "llg-report 1") {
        raise(Errc::ConfigParse, "missing llg-report header");
    }
    Report r;
    bool ended = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (ended) raise(Errc::ConfigParse, "content after the end marker");
        if (line == "end") {
            ended = true;
            continue;
        }
        const std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "surface") {
            const std::size_t at = line.find(' ');
            r.surface = at == std::string::npos ? "" : line.substr(at + 1);
        } else if (tok[0] == "grid") {
            if (tok.size() != 3) raise(Errc::ConfigParse, "grid line needs two counts");
            r.n1 = int(parse_real(tok[1], "grid"));
            r.n2 = int(parse_real(tok[2], "grid"));
        } else if (tok[0] == "analysis") {
            if (tok.size() != 2) raise(Errc::ConfigParse, "analysis line needs one name");
            r.analyses.push_back(tok[1]);
        } else if (tok[0] == "check") {
            if (tok.size() != 5) raise(Errc::ConfigParse, "check line needs four fields");
            ReportCheck c;
            c.name = tok[1];
            c.residual = parse_real(tok[2], "check " + c.name);
            c.tolerance = parse_real(tok[3], "check " + c.name);
            if (tok[4] == "pass") {
                c.passed = true;
            } else if (tok[4] == "fail") {
                c.passed = false;
            } else {
                raise(Errc::ConfigParse, "check verdict must be pass or fail");
            }
            r.checks.push_back(std::move(c));
        } else if (tok[0] == "scalar") {
            if (tok.size() != 3) raise(Errc::ConfigParse, "scalar line needs a name and a value");
            r.scalars.push_back({tok[1], parse_real(tok[2], "scalar " + tok[1])});
        } else {
            raise(Errc::ConfigParse, "unknown report line '" + tok[0] + "'");
        }
    }
    if (!ended) raise(Errc::ConfigParse, "missing end marker");
    return r;
}

std::string emit_csv(const FieldDump& dump) {
    const std::size_t rows = dump.rows();
    if (dump.u2.size() != rows || dump.columns.size() != dump.fields.size()) {
        raise(Errc::Numerical, "field dump shape mismatch");
    }
    for (const std::vector<double>& col : dump.columns) {
        if (col.size() != rows) raise(Errc::Numerical, "ragged field dump column");
    }
    std::string out = "u1,u2";
    for (const std::string& f : dump.fields) out += "," + f;
    out += "\n";
    for (std::size_t r = 0; r < rows; ++r) {
        out += num(dump.u1[r]) + "," + num(dump.u2[r]);
        for (const std::vector<double>& col : dump.columns) out += "," + num(col[r]);
        out += "\n";
    }
    return out;
}

} // namespace llg
