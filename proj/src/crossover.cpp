#include "pqep/crossover.hpp"

#include "pqep/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pqep {

CrossoverResult crossover_point(const AffineEnergy& a, const AffineEnergy& b) {
    using Kind = CrossoverResult::Kind;
    if (a.slope_bits == b.slope_bits) {
        if (a.intercept == b.intercept) return {Kind::Identical, 0};
        return {a.intercept < b.intercept ? Kind::AlwaysFirst : Kind::AlwaysSecond, 0};
    }
    double e_star = (a.intercept - b.intercept) / (b.slope_bits - a.slope_bits);
    if (e_star >= 0) return {Kind::At, e_star + 0.0}; // normalize -0
    return {a.intercept < b.intercept ? Kind::AlwaysFirst : Kind::AlwaysSecond, 0};
}

std::vector<RankedEntry> rank_at(std::span<const AlgorithmRecord> records,
                                 const EnergyBasket& basket, double e_xfer) {
    if (e_xfer < 0 || !std::isfinite(e_xfer)) throw ValueError("e_xfer must be >= 0");
    std::vector<RankedEntry> ranked;
    ranked.reserve(records.size());
    for (const auto& rec : records)
        ranked.push_back({rec.name, affine_energy(rec, basket).at(e_xfer)});
    std::sort(ranked.begin(), ranked.end(), [](const RankedEntry& lhs, const RankedEntry& rhs) {
        if (lhs.energy != rhs.energy) return lhs.energy < rhs.energy;
        return lhs.name < rhs.name;
    });
    return ranked;
}

namespace {

struct Line {
    double slope = 0;
    double intercept = 0;
    const std::string* name = nullptr;
};

double intersect(const Line& a, const Line& b) {
    return (b.intercept - a.intercept) / (a.slope - b.slope);
}

} // namespace

std::vector<FrontierSegment> frontier(std::span<const AffineEnergy> lines, double e_max) {
    if (lines.empty()) throw ValueError("frontier requires at least one line");
    if (!(e_max > 0)) throw ValueError("e_max must be positive");

    std::vector<Line> sorted;
    sorted.reserve(lines.size());
    for (const auto& l : lines) sorted.push_back({l.slope_bits, l.intercept, &l.algorithm});
    std::sort(sorted.begin(), sorted.end(), [](const Line& a, const Line& b) {
        if (a.slope != b.slope) return a.slope < b.slope;
        if (a.intercept != b.intercept) return a.intercept < b.intercept;
        return *a.name < *b.name;
    });
    // Per slope keep only the lowest line; of coincident lines the
    // lexicographically smallest name survives.
    std::vector<Line> candidates;
    for (const auto& line : sorted)
        if (candidates.empty() || candidates.back().slope != line.slope)
            candidates.push_back(line);

    // Lower envelope over all e, steepest line first: the envelope's active
    // slope only decreases left to right. hull[i] becomes active at switch[i].
    std::vector<Line> hull;
    std::vector<double> switches; // switches[i]: where hull[i] takes over from hull[i-1]
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        const Line& line = *it;
        while (!hull.empty()) {
            double x = intersect(hull.back(), line);
            if (switches.empty() || x > switches.back()) {
                switches.push_back(x);
                break;
            }
            hull.pop_back();
            if (!switches.empty()) switches.pop_back();
        }
        hull.push_back(line);
    }

    // Clip to [0, e_max]. switches has hull.size()-1 entries, increasing.
    std::vector<FrontierSegment> segments;
    size_t first = 0;
    while (first + 1 < hull.size() && switches[first] <= 0) ++first;
    for (size_t i = first; i < hull.size(); ++i) {
        double lo = (i == first) ? 0.0 : switches[i - 1];
        double hi = (i + 1 < hull.size()) ? std::min(switches[i], e_max) : e_max;
        if (lo >= e_max) break;
        if (hi > lo) segments.push_back({lo, hi, *hull[i].name});
        if (hi >= e_max) break;
    }
    return segments;
}

std::vector<FrontierSegment> frontier(std::span<const AlgorithmRecord> records,
                                      const EnergyBasket& basket, double e_max) {
    std::vector<AffineEnergy> lines;
    lines.reserve(records.size());
    for (const auto& rec : records) lines.push_back(affine_energy(rec, basket));
    return frontier(lines, e_max);
}

std::vector<TransmissionLink> technology_presets() {
    return {
        {"edge-2g", 1e-5, std::nullopt, "2G (EDGE) era cellular"},
        {"wifi-hspa-ble-lte-generation", 1e-6, std::nullopt,
         "WiFi / HSPA / Bluetooth LE / ZigBee / LTE class radios"},
        {"lte-ble", 1e-7, std::nullopt, "current LTE or Bluetooth LE"},
        {"5g", 1e-9, std::nullopt, "predicted 5G transmission speeds"},
    };
}

const TransmissionLink* find_link(std::span<const TransmissionLink> links, std::string_view name) {
    for (const auto& link : links)
        if (link.name == name) return &link;
    return nullptr;
}

std::uint64_t battery_budget(const AlgorithmRecord& record, const EnergyBasket& basket,
                             double e_xfer, double battery_j) {
    if (!(battery_j > 0) || !std::isfinite(battery_j))
        throw ValueError("battery budget must be positive joules");
    double per_run = basket_energy(record, basket, e_xfer);
    if (!(per_run > 0)) throw ValueError("basket energy is zero for this record");
    double runs = std::floor(battery_j / per_run);
    constexpr double kMax = 1.8e19; // below 2^64
    if (runs >= kMax) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(runs);
}

} // namespace pqep
