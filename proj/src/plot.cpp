#include "pqep/plot.hpp"

#include "pqep/crossover.hpp"
#include "pqep/errors.hpp"
#include "pqep/report.hpp"

#include <algorithm>
#include <cmath>

namespace pqep {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json axis(const char* label, const char* unit, const char* scale) {
    return ordered_json{{"label", label}, {"unit", unit}, {"scale", scale}};
}

const char* op_class(const AlgorithmRecord& rec, int op) {
    if (op == 1) return "keygen";
    if (rec.kind == AlgoKind::KEM) return op == 2 ? "encaps" : "decaps";
    return op == 2 ? "sign" : "verify";
}

nlohmann::json lines_plot(std::span<const AlgorithmRecord> records, const EnergyBasket& basket,
                          const PlotRange& range) {
    if (!(range.e_hi > range.e_lo))
        throw ValueError("lines mode needs a nonempty e_xfer range");
    if (range.samples < 2) throw ValueError("need at least 2 samples");

    ordered_json doc;
    doc["mode"] = "lines";
    doc["axes"] = {{"x", axis("Transmission cost", "J/bit", "linear")},
                   {"y", axis("Total basket energy", "J", "linear")}};
    doc["series"] = ordered_json::array();

    std::vector<AffineEnergy> lines;
    for (const auto& rec : records) lines.push_back(affine_energy(rec, basket));

    for (const auto& line : lines) {
        ordered_json series;
        series["name"] = line.algorithm;
        auto points = ordered_json::array();
        for (int i = 0; i < range.samples; ++i) {
            double e = range.e_lo +
                       (range.e_hi - range.e_lo) * static_cast<double>(i) / (range.samples - 1);
            points.push_back({e, line.at(e)});
        }
        series["points"] = std::move(points);
        doc["series"].push_back(std::move(series));
    }

    // Switch-over points of the piecewise-optimal envelope, clipped to view.
    doc["marks"] = ordered_json::array();
    auto segments = frontier(lines, kNoLimit);
    for (size_t i = 1; i < segments.size(); ++i) {
        double e = segments[i].e_lo;
        if (e < range.e_lo || e > range.e_hi) continue;
        const AffineEnergy* owner = nullptr;
        for (const auto& line : lines)
            if (line.algorithm == segments[i].algorithm) owner = &line;
        doc["marks"].push_back({{"x", e},
                                {"y", owner->at(e)},
                                {"label", segments[i - 1].algorithm + " -> " + segments[i].algorithm}});
    }
    return doc;
}

nlohmann::json scatter_plot(std::span<const AlgorithmRecord> records, double freq) {
    if (!(freq > 0)) throw ValueError("freq must be positive");
    ordered_json doc;
    doc["mode"] = "power_scatter";
    doc["axes"] = {{"x", axis("Time", "s", "log")},
                   {"y", axis("Average power", "mW", "linear")}};
    doc["series"] = ordered_json::array();
    static constexpr const char* kClasses[] = {"keygen", "encaps", "decaps", "sign", "verify"};
    for (const char* cls : kClasses) {
        auto points = ordered_json::array();
        auto labels = ordered_json::array();
        for (const auto& rec : records)
            for (int op = 1; op <= 3; ++op)
                if (std::string_view(op_class(rec, op)) == cls) {
                    points.push_back({rec.op(op).cycles / freq, rec.op(op).avg_power * 1e3});
                    labels.push_back(rec.name);
                }
        if (points.empty()) continue;
        ordered_json series;
        series["name"] = cls;
        series["points"] = std::move(points);
        series["labels"] = std::move(labels);
        doc["series"].push_back(std::move(series));
    }
    doc["marks"] = ordered_json::array();
    return doc;
}

} // namespace

nlohmann::json emit_plot(std::span<const AlgorithmRecord> records, const EnergyBasket& basket,
                         PlotMode mode, const PlotRange& range, double freq) {
    if (records.empty()) throw ValueError("plot requires at least one record");
    if (mode == PlotMode::Lines) return lines_plot(records, basket, range);
    return scatter_plot(records, freq);
}

namespace {

struct Scale {
    bool log = false;
    double lo = 0, hi = 1;     // data range (transformed)
    double a = 0, b = 1;       // pixel range
    double t(double v) const { return log ? std::log10(v) : v; }
    double px(double v) const { return a + (t(v) - lo) / (hi - lo) * (b - a); }
};

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

// Tick marks for one scale; `baseline` is the pixel position of the other
// axis (y of the x axis line, or x of the y axis line).
void append_ticks(std::string& svg, const Scale& s, double baseline, bool x_axis) {
    double span = s.hi - s.lo;
    double step;
    if (s.log) {
        step = std::max(1.0, std::floor(span / 6.0));
    } else {
        double raw = span / 5.0;
        double mag = std::pow(10.0, std::floor(std::log10(raw)));
        double norm = raw / mag;
        step = (norm < 1.5 ? 1.0 : norm < 3.5 ? 2.0 : norm < 7.5 ? 5.0 : 10.0) * mag;
    }
    double first = std::ceil(s.lo / step) * step;
    for (double t = first; t <= s.hi + 1e-9 * std::abs(step); t += step) {
        double value = s.log ? std::pow(10.0, t) : t;
        double px = s.a + (t - s.lo) / (s.hi - s.lo) * (s.b - s.a);
        std::string label = format_significant(value, 3);
        std::string p = format_significant(px, 6);
        if (x_axis) {
            std::string y0 = format_significant(baseline, 6);
            std::string y1 = format_significant(baseline + 4, 6);
            svg += "<line x1='" + p + "' y1='" + y0 + "' x2='" + p + "' y2='" + y1 +
                   "' stroke='black'/>\n";
            svg += "<text x='" + p + "' y='" + format_significant(baseline + 16, 6) +
                   "' font-size='10' text-anchor='middle'>" + label + "</text>\n";
        } else {
            std::string x0 = format_significant(baseline - 4, 6);
            std::string x1 = format_significant(baseline, 6);
            svg += "<line x1='" + x0 + "' y1='" + p + "' x2='" + x1 + "' y2='" + p +
                   "' stroke='black'/>\n";
            svg += "<text x='" + format_significant(baseline - 6, 6) + "' y='" +
                   format_significant(px + 3, 6) + "' font-size='10' text-anchor='end'>" + label +
                   "</text>\n";
        }
    }
}

} // namespace

std::string render_svg(const nlohmann::json& doc) {
    constexpr double kWidth = 760, kHeight = 480;
    constexpr double kLeft = 70, kRight = 160, kTop = 24, kBottom = 48;

    const bool log_x = doc.at("axes").at("x").value("scale", "linear") == std::string("log");
    const bool scatter = doc.value("mode", "lines") == std::string("power_scatter");

    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool seen = false;
    for (const auto& series : doc.at("series"))
        for (const auto& pt : series.at("points")) {
            double x = pt.at(0).get<double>(), y = pt.at(1).get<double>();
            if (log_x && !(x > 0)) continue;
            if (!seen) {
                min_x = max_x = x;
                min_y = max_y = y;
                seen = true;
            }
            min_x = std::min(min_x, x); max_x = std::max(max_x, x);
            min_y = std::min(min_y, y); max_y = std::max(max_y, y);
        }
    if (!seen) throw ValueError("plot document has no drawable points");

    Scale xs, ys;
    xs.log = log_x;
    xs.lo = xs.t(min_x); xs.hi = xs.t(max_x);
    ys.lo = min_y; ys.hi = max_y;
    if (xs.hi - xs.lo < 1e-12) { xs.lo -= 1; xs.hi += 1; }
    if (ys.hi - ys.lo < 1e-12) { ys.lo -= 1; ys.hi += 1; }
    double pad_y = 0.05 * (ys.hi - ys.lo);
    ys.lo -= pad_y; ys.hi += pad_y;
    xs.a = kLeft; xs.b = kWidth - kRight;
    ys.a = kHeight - kBottom; ys.b = kTop; // y grows downward in SVG

    std::string svg;
    svg += "<svg xmlns='http://www.w3.org/2000/svg' width='" + format_significant(kWidth, 6) +
           "' height='" + format_significant(kHeight, 6) + "'>\n";
    svg += "<rect width='100%' height='100%' fill='white'/>\n";

    size_t idx = 0;
    for (const auto& series : doc.at("series")) {
        const char* color = kPalette[idx % std::size(kPalette)];
        if (scatter) {
            const auto& labels = series.contains("labels") ? series.at("labels") : nlohmann::json::array();
            size_t i = 0;
            for (const auto& pt : series.at("points")) {
                double x = pt.at(0).get<double>(), y = pt.at(1).get<double>();
                if (xs.log && !(x > 0)) continue;
                std::string cx = format_significant(xs.px(x), 6), cy = format_significant(ys.px(y), 6);
                svg += "<circle cx='" + cx + "' cy='" + cy + "' r='3' fill='" + color +
                       "' fill-opacity='0.7'/>\n";
                if (i < labels.size())
                    svg += "<text x='" + cx + "' y='" + cy +
                           "' dx='4' dy='-3' font-size='7' fill='#444'>" +
                           labels[i].get<std::string>() + "</text>\n";
                ++i;
            }
        } else {
            std::string path;
            for (const auto& pt : series.at("points")) {
                double x = pt.at(0).get<double>(), y = pt.at(1).get<double>();
                path += path.empty() ? "M" : " L";
                path += format_significant(xs.px(x), 6) + "," + format_significant(ys.px(y), 6);
            }
            svg += "<path d='" + path + "' fill='none' stroke='" + color + "' stroke-width='1.5'/>\n";
        }
        // legend entry
        double ly = kTop + 14.0 * static_cast<double>(idx);
        svg += "<rect x='" + format_significant(kWidth - kRight + 12, 6) + "' y='" +
               format_significant(ly, 6) + "' width='10' height='10' fill='" + color + "'/>\n";
        svg += "<text x='" + format_significant(kWidth - kRight + 26, 6) + "' y='" +
               format_significant(ly + 9, 6) + "' font-size='10'>" +
               series.at("name").get<std::string>() + "</text>\n";
        ++idx;
    }

    if (doc.contains("marks"))
        for (const auto& mark : doc.at("marks")) {
            double x = mark.at("x").get<double>(), y = mark.at("y").get<double>();
            std::string cx = format_significant(xs.px(x), 6), cy = format_significant(ys.px(y), 6);
            svg += "<circle cx='" + cx + "' cy='" + cy + "' r='4' fill='black'/>\n";
            svg += "<text x='" + cx + "' y='" + cy + "' dx='6' dy='-4' font-size='9'>" +
                   mark.at("label").get<std::string>() + " @ " +
                   format_significant(x, 3) + "</text>\n";
        }

    // axes frame + ticks + labels
    svg += "<line x1='" + format_significant(xs.a, 6) + "' y1='" + format_significant(ys.a, 6) +
           "' x2='" + format_significant(xs.b, 6) + "' y2='" + format_significant(ys.a, 6) +
           "' stroke='black'/>\n";
    svg += "<line x1='" + format_significant(xs.a, 6) + "' y1='" + format_significant(ys.a, 6) +
           "' x2='" + format_significant(xs.a, 6) + "' y2='" + format_significant(ys.b, 6) +
           "' stroke='black'/>\n";
    append_ticks(svg, xs, ys.a, true);
    append_ticks(svg, ys, xs.a, false);
    auto axis_label = [](const nlohmann::json& ax) {
        return ax.at("label").get<std::string>() + " [" + ax.at("unit").get<std::string>() + "]";
    };
    svg += "<text x='" + format_significant((xs.a + xs.b) / 2, 6) + "' y='" +
           format_significant(kHeight - 10, 6) + "' font-size='11' text-anchor='middle'>" +
           axis_label(doc.at("axes").at("x")) + "</text>\n";
    svg += "<text x='14' y='" + format_significant((ys.a + ys.b) / 2, 6) +
           "' font-size='11' text-anchor='middle' transform='rotate(-90 14 " +
           format_significant((ys.a + ys.b) / 2, 6) + ")'>" + axis_label(doc.at("axes").at("y")) +
           "</text>\n";
    svg += "</svg>\n";
    return svg;
}

} // namespace pqep
