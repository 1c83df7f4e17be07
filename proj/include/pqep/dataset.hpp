#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pqep {

/// NIST post-quantum security categories. `None` marks classical reference
/// algorithms (ECDH/ECDSA) that offer no quantum resistance. Totally ordered
/// None < L1 < L2 < L3 < L4 < L5.
enum class SecurityLevel : int { None = 0, L1, L2, L3, L4, L5 };

std::string_view to_string(SecurityLevel level);
SecurityLevel parse_security_level(std::string_view text); // throws ValueError

enum class AlgoKind { KEM, SIG };

std::string_view to_string(AlgoKind kind);
AlgoKind parse_algo_kind(std::string_view text); // throws ValueError

/// One benchmarked primitive operation. All values SI: absolute clock cycles,
/// watts, joules.
struct Measurement {
    double cycles = 0;
    double avg_power = 0;
    double energy = 0;
};

/// One benchmarked algorithm variant. op1/op2/op3 are keypair generation,
/// encapsulate/sign, decapsulate/verify. payload_bytes is the ciphertext
/// length for KEMs and the signature length for signature schemes.
struct AlgorithmRecord {
    std::string name;
    AlgoKind kind = AlgoKind::KEM;
    std::string family; // empty when unknown
    SecurityLevel pq_level = SecurityLevel::None;
    std::uint64_t pubkey_bytes = 0;
    std::uint64_t payload_bytes = 0;
    Measurement op1, op2, op3;
    std::vector<std::string> flags;

    bool has_flag(std::string_view flag) const;
    const Measurement& op(int index) const; // index in 1..3
};

/// CPU target description. energy_per_cycle (J/cycle) may be given directly
/// or derived from the datasheet scaling parameter in uA/MHz together with
/// the supply voltage: J/cycle = voltage * current_per_mhz * 1e-6.
struct Platform {
    std::string name;
    double freq = 0;    // Hz
    double voltage = 0; // V
    std::optional<double> energy_per_cycle; // J/cycle
    std::optional<double> current_per_mhz;  // A/MHz

    std::optional<double> effective_energy_per_cycle() const;
};

enum class Severity { Warning, Error };

std::string_view to_string(Severity severity);

struct ValidationFinding {
    std::string record_name;
    std::string field_path;
    Severity severity = Severity::Warning;
    std::string message;
    double observed = 0;
    double expected = 0;
};

struct Dataset {
    Platform platform;
    std::vector<AlgorithmRecord> records;
};

enum class DataFormat { Csv, Json };

/// Parse benchmark rows. CSV columns (header required):
///   name,kind,family,level,pubkey_bytes,payload_bytes,
///   op1_mcycles,op1_mw,op1_joules,...(op2,op3)...,flags
/// where *_mcycles is in 10^6 cycles and *_mw in milliwatts; flags is a
/// semicolon-separated list and may be empty or omitted. JSON input is the
/// document produced by to_json(). Values are converted to SI on entry.
std::vector<AlgorithmRecord> parse_records(std::string_view text, DataFormat format);

/// Like parse_records, but keeps the platform: from the JSON document, or the
/// bundled reference platform for CSV input (which carries no platform data).
Dataset parse_dataset(std::string_view text, DataFormat format);

std::string to_csv(std::span<const AlgorithmRecord> records);
std::string to_json(const Dataset& dataset, int indent = 2);

/// Physical consistency check of one record against the platform clock:
/// each op must satisfy energy ~= (cycles/freq) * avg_power within rel_tol
/// (Warning otherwise); non-positive values are Errors. rel_tol must be in
/// (0, 0.5).
std::vector<ValidationFinding> validate_record(const AlgorithmRecord& record,
                                               const Platform& platform,
                                               double rel_tol = 0.02);

std::vector<ValidationFinding> validate_dataset(const Dataset& dataset, double rel_tol = 0.02);

/// The bundled Cortex M4 (STM32F411RE, 96 MHz, 3.00 V) benchmark table:
/// 38 key-establishment rows and 8 signature rows. SIKE rows are flagged
/// "extrapolated" because their energies were projected from a 10 s power
/// trace rather than a full run.
const Dataset& builtin_reference_dataset();
const Platform& reference_platform();

struct RecordFilter {
    std::optional<AlgoKind> kind;
    std::optional<SecurityLevel> min_level;
    std::optional<std::vector<std::string>> families;
};

/// Stable-ordered subset. min_level uses the SecurityLevel order; classical
/// records (pq_level None) are excluded whenever min_level >= L1.
std::vector<AlgorithmRecord> filter_records(std::span<const AlgorithmRecord> records,
                                            const RecordFilter& filter);

const AlgorithmRecord* find_record(std::span<const AlgorithmRecord> records, std::string_view name);

} // namespace pqep
