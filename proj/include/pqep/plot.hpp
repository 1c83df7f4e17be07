#pragma once

#include "pqep/basket.hpp"

#include <json.hpp>

namespace pqep {

enum class PlotMode { Lines, PowerScatter };

/// Sampling window for Lines mode, J/bit. Ignored by PowerScatter.
struct PlotRange {
    double e_lo = 0;
    double e_hi = 2.0e-3;
    int samples = 128;
};

/// Build a self-describing plot document:
///   {axes: {x: {label, unit, scale}, y: {...}},
///    series: [{name, points: [[x, y], ...], labels?}], marks: [...]}
///
/// Lines mode samples each record's E(e_xfer) over the range and marks the
/// frontier's switch-over points. PowerScatter emits one point per primitive
/// operation at (cycles/freq seconds, average power mW) with a log time axis,
/// grouped into keygen/encaps/decaps (KEMs) and keygen/sign/verify series.
nlohmann::json emit_plot(std::span<const AlgorithmRecord> records, const EnergyBasket& basket,
                         PlotMode mode, const PlotRange& range, double freq);

/// Minimal SVG rendering of a plot document (polylines, scatter glyphs, axis
/// ticks, mark labels).
std::string render_svg(const nlohmann::json& doc);

} // namespace pqep
