#include "pqep/power.hpp"

#include "pqep/errors.hpp"
#include "pqep/report.hpp"

#include <cmath>

namespace pqep {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0) || !std::isfinite(v))
        throw ValueError(std::string(what) + " must be positive, got " + format_exact(v));
}

} // namespace

double dynamic_power(const DynPowerParams& params) {
    require_positive(params.activity, "activity");
    require_positive(params.capacitance, "capacitance");
    require_positive(params.voltage, "voltage");
    require_positive(params.freq, "freq");
    if (params.activity > 1.0)
        throw ValueError("activity must be <= 1, got " + format_exact(params.activity));
    return params.activity * params.capacitance * params.voltage * params.voltage * params.freq;
}

double energy_per_cycle(const Measurement& m, double freq) {
    require_positive(freq, "freq");
    require_positive(m.cycles, "cycles");
    require_positive(m.energy, "energy");
    return m.energy / m.cycles;
}

double energy_per_cycle_from_power(const Measurement& m, double freq) {
    require_positive(freq, "freq");
    require_positive(m.avg_power, "avg_power");
    return m.avg_power / freq;
}

Measurement scale_measurement(const Measurement& m, const Platform& src, const Platform& dst) {
    require_positive(m.cycles, "cycles");
    require_positive(m.energy, "energy");
    auto dst_epc = dst.effective_energy_per_cycle();
    if (!dst_epc)
        throw ConfigError("destination platform '" + dst.name +
                          "' defines neither energy_per_cycle nor current_per_mhz");
    require_positive(dst.freq, "destination freq");
    // Source per-cycle energy: the platform's figure when known, otherwise
    // the measurement speaks for itself.
    double src_epc = src.effective_energy_per_cycle().value_or(m.energy / m.cycles);
    Measurement out;
    out.cycles = m.cycles;
    out.energy = m.energy * (*dst_epc / src_epc);
    out.avg_power = out.energy * dst.freq / out.cycles;
    return out;
}

double transfer_energy(double bits, double e_xfer) {
    if (bits < 0 || !std::isfinite(bits)) throw ValueError("bits must be >= 0");
    if (e_xfer < 0 || !std::isfinite(e_xfer)) throw ValueError("e_xfer must be >= 0");
    return bits * e_xfer;
}

LatencyEstimate latency(const Measurement& m, double freq, double bits, double data_rate) {
    require_positive(freq, "freq");
    if (bits < 0) throw ValueError("bits must be >= 0");
    LatencyEstimate est;
    est.compute_s = m.cycles / freq;
    if (bits > 0) {
        if (!(data_rate > 0))
            throw ValueError("data_rate must be positive when bits > 0");
        est.transmit_s = bits / data_rate;
    }
    est.total_s = est.compute_s + est.transmit_s;
    return est;
}

} // namespace pqep
