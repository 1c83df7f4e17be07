#include "pqep/report.hpp"

#include "pqep/errors.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdio>

namespace pqep {

OutputFormat parse_output_format(std::string_view text) {
    if (text == "table") return OutputFormat::Table;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    throw ValueError("unknown output format '" + std::string(text) + "' (table, csv, json)");
}

std::string format_significant(double v, int digits) {
    char buf[64];
    int n = std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return std::string(buf, static_cast<size_t>(n));
}

std::string format_exact(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

void Report::add_row(std::vector<ReportValue> row) {
    if (row.size() != columns.size())
        throw ValueError("report row has " + std::to_string(row.size()) + " cells, expected " +
                         std::to_string(columns.size()));
    rows.push_back(std::move(row));
}

namespace {

std::string header_label(const ReportColumn& col) {
    return col.unit.empty() ? col.name : col.name + "[" + col.unit + "]";
}

std::string cell_text(const ReportValue& value, int precision) {
    if (const auto* s = std::get_if<std::string>(&value)) return *s;
    if (const auto* d = std::get_if<double>(&value)) return format_significant(*d, precision);
    return std::to_string(std::get<std::uint64_t>(value));
}

void write_table(std::ostream& out, const Report& report, int precision) {
    std::vector<std::string> headers;
    std::vector<size_t> widths;
    std::vector<bool> numeric(report.columns.size(), true);
    for (const auto& col : report.columns) {
        headers.push_back(header_label(col));
        widths.push_back(headers.back().size());
    }
    std::vector<std::vector<std::string>> cells;
    for (const auto& row : report.rows) {
        auto& line = cells.emplace_back();
        for (size_t c = 0; c < row.size(); ++c) {
            line.push_back(cell_text(row[c], precision));
            widths[c] = std::max(widths[c], line.back().size());
            if (std::holds_alternative<std::string>(row[c])) numeric[c] = false;
        }
    }
    auto pad = [&](const std::string& text, size_t c, std::ostream& os) {
        size_t fill = widths[c] - text.size();
        if (numeric[c]) os << std::string(fill, ' ') << text;
        else os << text << std::string(fill, ' ');
    };
    for (size_t c = 0; c < headers.size(); ++c) {
        if (c) out << "  ";
        pad(headers[c], c, out);
    }
    out << '\n';
    for (size_t c = 0; c < headers.size(); ++c) {
        if (c) out << "  ";
        out << std::string(widths[c], '-');
    }
    out << '\n';
    for (const auto& line : cells) {
        for (size_t c = 0; c < line.size(); ++c) {
            if (c) out << "  ";
            pad(line[c], c, out);
        }
        out << '\n';
    }
}

void write_csv(std::ostream& out, const Report& report, int precision) {
    for (size_t c = 0; c < report.columns.size(); ++c) {
        if (c) out << ',';
        out << header_label(report.columns[c]);
    }
    out << '\n';
    for (const auto& row : report.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            out << cell_text(row[c], precision);
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const Report& report) {
    nlohmann::ordered_json doc;
    doc["columns"] = nlohmann::ordered_json::array();
    for (const auto& col : report.columns)
        doc["columns"].push_back({{"name", col.name}, {"unit", col.unit}});
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) {
        nlohmann::ordered_json obj;
        for (size_t c = 0; c < row.size(); ++c) {
            const auto& name = report.columns[c].name;
            if (const auto* s = std::get_if<std::string>(&row[c])) obj[name] = *s;
            else if (const auto* d = std::get_if<double>(&row[c])) obj[name] = *d;
            else obj[name] = std::get<std::uint64_t>(row[c]);
        }
        doc["rows"].push_back(std::move(obj));
    }
    out << doc.dump(2) << '\n';
}

} // namespace

void write_report(std::ostream& out, const Report& report, OutputFormat format, int precision) {
    switch (format) {
        case OutputFormat::Table: write_table(out, report, precision); break;
        case OutputFormat::Csv: write_csv(out, report, precision); break;
        case OutputFormat::Json: write_json(out, report); break;
    }
}

} // namespace pqep
