#pragma once

// Serialized run outputs: a line-oriented verification report that parses
// back to the same value, and CSV field dumps for external plotting. No
// timestamps and no environment-dependent content anywhere; identical runs
// produce byte-identical files.

#include <string>
#include <vector>

namespace llg {

struct ReportCheck {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;

    friend bool operator==(const ReportCheck&, const ReportCheck&) = default;
};

struct ReportScalar {
    std::string name;
    double value = 0.0;

    friend bool operator==(const ReportScalar&, const ReportScalar&) = default;
};

struct Report {
    std::string surface;
    int n1 = 0, n2 = 0;
    std::vector<std::string> analyses;
    std::vector<ReportCheck> checks;
    std::vector<ReportScalar> scalars;

    bool pass() const;

    friend bool operator==(const Report&, const Report&) = default;
};

// Line format, reals at 17 significant digits:
//   llg-report 1
//   surface <name>
//   grid <n1> <n2>
//   analysis <name>      (one per requested analysis, in order)
//   check <name> <residual> <tolerance> <pass|fail>
//   scalar <name> <value>
//   end
std::string emit_report(const Report& report);

// Inverse of emit_report; raises ConfigParse on malformed input.
Report parse_report(const std::string& text);

// Per-grid-point table. Field columns are kept sorted by name; u1 and u2
// always lead. Rows run in row-major grid order (u1 outer, u2 inner).
struct FieldDump {
    std::vector<std::string> fields;
    std::vector<double> u1, u2;
    std::vector<std::vector<double>> columns; // one per field, row count each

    std::size_t rows() const { return u1.size(); }
};

// Comma-separated text: header "u1,u2,<fields...>", then one row per grid
// node with 17-significant-digit reals. Raises Numerical on ragged columns.
std::string emit_csv(const FieldDump& dump);

} // namespace llg
