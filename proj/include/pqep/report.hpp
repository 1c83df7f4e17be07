#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace pqep {

enum class OutputFormat { Table, Csv, Json };

OutputFormat parse_output_format(std::string_view text); // throws ValueError

/// One cell: text, a floating-point quantity, or an exact count.
using ReportValue = std::variant<std::string, double, std::uint64_t>;

struct ReportColumn {
    std::string name;
    std::string unit; // empty for dimensionless/text columns
};

/// A small unit-annotated table. Column order is fixed by construction and
/// identical across output formats, so runs are byte-reproducible.
struct Report {
    std::vector<ReportColumn> columns;
    std::vector<std::vector<ReportValue>> rows;

    void add_row(std::vector<ReportValue> row);
};

/// Render with the given significant-digit precision for doubles (counts are
/// printed exactly). Table and CSV headers carry units as "name[unit]"; JSON
/// output keeps plain keys and lists units in a "columns" section.
void write_report(std::ostream& out, const Report& report, OutputFormat format, int precision = 4);

/// Shortest decimal form of v at `digits` significant digits ("%.*g").
std::string format_significant(double v, int digits);

/// Shortest decimal that parses back to exactly v (for dataset round-trips).
std::string format_exact(double v);

} // namespace pqep
