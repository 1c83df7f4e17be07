#pragma once

#include "pqep/dataset.hpp"

namespace pqep {

/// Inputs of the CMOS dynamic power law P = activity * C * V^2 * f.
struct DynPowerParams {
    double activity = 0;    // dimensionless, (0, 1]
    double capacitance = 0; // F
    double voltage = 0;     // V
    double freq = 0;        // Hz
};

/// P = activity * capacitance * voltage^2 * freq, in watts.
double dynamic_power(const DynPowerParams& params);

/// energy / cycles, in J/cycle. Also equals avg_power / freq when the
/// measurement is internally consistent; see energy_per_cycle_from_power.
double energy_per_cycle(const Measurement& m, double freq);

/// The second route to J/cycle: avg_power / freq.
double energy_per_cycle_from_power(const Measurement& m, double freq);

/// Project a measurement onto another CPU target. Cycle counts carry over
/// unchanged (they are architecture-bound, not frequency-bound); energy
/// scales by the ratio of per-cycle energies; average power is recomputed
/// at the destination clock. The source per-cycle energy falls back to the
/// measurement's own energy/cycles when the platform does not define one;
/// the destination must define one (directly or via uA/MHz).
Measurement scale_measurement(const Measurement& m, const Platform& src, const Platform& dst);

/// bits * e_xfer, in joules. e_xfer is the per-bit radio energy (send and
/// receive combined).
double transfer_energy(double bits, double e_xfer);

struct LatencyEstimate {
    double compute_s = 0;
    double transmit_s = 0;
    double total_s = 0;
};

/// compute_s = cycles/freq, transmit_s = bits/data_rate. data_rate may be
/// zero only when bits is zero.
LatencyEstimate latency(const Measurement& m, double freq, double bits, double data_rate);

} // namespace pqep
