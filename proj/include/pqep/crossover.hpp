#pragma once

#include "pqep/basket.hpp"

#include <cstdint>
#include <limits>

namespace pqep {

/// A radio technology's per-bit energy cost, J/bit (send+receive).
struct TransmissionLink {
    std::string name;
    double e_xfer = 0;
    std::optional<double> data_rate; // bit/s
    std::string note;
};

/// Where two affine energy lines intersect on the e_xfer axis. A negative
/// algebraic intersection is reported as AlwaysFirst/AlwaysSecond (whichever
/// line is lower on e >= 0) rather than clamped to zero.
struct CrossoverResult {
    enum class Kind { At, AlwaysFirst, AlwaysSecond, Identical };
    Kind kind = Kind::Identical;
    double e_star = 0; // J/bit, meaningful only when kind == At
};

CrossoverResult crossover_point(const AffineEnergy& a, const AffineEnergy& b);

struct RankedEntry {
    std::string name;
    double energy = 0; // J
};

/// Ascending by total basket energy at e_xfer; ties broken by name.
std::vector<RankedEntry> rank_at(std::span<const AlgorithmRecord> records,
                                 const EnergyBasket& basket, double e_xfer);

/// One interval of the piecewise-optimal frontier: on [e_lo, e_hi) the named
/// algorithm has minimal energy of all candidates. e_hi of the last segment
/// is e_max (or +infinity).
struct FrontierSegment {
    double e_lo = 0;
    double e_hi = 0;
    std::string algorithm;
};

inline constexpr double kNoLimit = std::numeric_limits<double>::infinity();

/// Exact lower envelope of the lines over [0, e_max], O(n log n). Lines that
/// coincide everywhere are merged onto the lexicographically smallest name;
/// dominated lines never appear.
std::vector<FrontierSegment> frontier(std::span<const AffineEnergy> lines, double e_max = kNoLimit);

std::vector<FrontierSegment> frontier(std::span<const AlgorithmRecord> records,
                                      const EnergyBasket& basket, double e_max = kNoLimit);

/// Per-bit cost presets for common radio generations, from published
/// transmission-efficiency surveys.
std::vector<TransmissionLink> technology_presets();

const TransmissionLink* find_link(std::span<const TransmissionLink> links, std::string_view name);

/// How many basket executions a battery of `battery_j` joules sustains:
/// floor(battery / basket_energy). The basket energy must be positive.
std::uint64_t battery_budget(const AlgorithmRecord& record, const EnergyBasket& basket,
                             double e_xfer, double battery_j);

} // namespace pqep
