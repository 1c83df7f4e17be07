#include "pqep/dataset.hpp"

#include "pqep/errors.hpp"
#include "pqep/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

namespace pqep {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double_field(std::string_view raw, std::string_view field, int line) {
    std::string_view s = trim(raw);
    if (s.empty()) throw ParseError("missing field '" + std::string(field) + "'", line);
    double value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("field '" + std::string(field) + "': not a number: '" + std::string(s) + "'", line);
    return value;
}

std::uint64_t parse_count_field(std::string_view raw, std::string_view field, int line) {
    std::string_view s = trim(raw);
    if (s.empty()) throw ParseError("missing field '" + std::string(field) + "'", line);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("field '" + std::string(field) + "': not a count: '" + std::string(s) + "'", line);
    return value;
}

void require_positive(double v, std::string_view field, int line) {
    if (!(v > 0) || !std::isfinite(v)) {
        std::string msg = "field '" + std::string(field) + "' must be positive, got " + format_exact(v);
        if (line > 0) msg = "line " + std::to_string(line) + ": " + msg;
        throw ValueError(msg);
    }
}

constexpr std::string_view kCsvColumns[] = {
    "name", "kind", "family", "level", "pubkey_bytes", "payload_bytes",
    "op1_mcycles", "op1_mw", "op1_joules",
    "op2_mcycles", "op2_mw", "op2_joules",
    "op3_mcycles", "op3_mw", "op3_joules",
    "flags",
};
constexpr size_t kCsvFieldCount = std::size(kCsvColumns);

Measurement parse_csv_measurement(const std::vector<std::string_view>& fields, size_t base,
                                  int op, int line) {
    const std::string prefix = "op" + std::to_string(op);
    Measurement m;
    m.cycles = parse_double_field(fields[base], prefix + "_mcycles", line) * 1e6;
    m.avg_power = parse_double_field(fields[base + 1], prefix + "_mw", line) * 1e-3;
    m.energy = parse_double_field(fields[base + 2], prefix + "_joules", line);
    require_positive(m.cycles, prefix + ".cycles", line);
    require_positive(m.avg_power, prefix + ".avg_power", line);
    require_positive(m.energy, prefix + ".energy", line);
    return m;
}

std::vector<std::string> parse_flags(std::string_view raw) {
    std::vector<std::string> flags;
    for (auto part : split(raw, ';')) {
        auto f = trim(part);
        if (f.empty()) continue;
        if (std::find(flags.begin(), flags.end(), f) == flags.end()) flags.emplace_back(f);
    }
    return flags;
}

std::vector<AlgorithmRecord> parse_csv(std::string_view text) {
    std::vector<AlgorithmRecord> records;
    bool header_seen = false;
    int line_no = 0;
    for (auto raw_line : split(text, '\n')) {
        ++line_no;
        auto line = trim(raw_line);
        if (line.empty()) continue;
        auto fields = split(line, ',');
        if (!header_seen) {
            if (fields.size() != kCsvFieldCount && fields.size() != kCsvFieldCount - 1)
                throw ParseError("expected CSV header with " + std::to_string(kCsvFieldCount) + " columns", line_no);
            for (size_t i = 0; i < fields.size(); ++i)
                if (!iequals(trim(fields[i]), kCsvColumns[i]))
                    throw ParseError("unexpected CSV header column '" + std::string(trim(fields[i])) +
                                         "', expected '" + std::string(kCsvColumns[i]) + "'",
                                     line_no);
            header_seen = true;
            continue;
        }
        // The trailing flags field may be omitted entirely.
        if (fields.size() != kCsvFieldCount && fields.size() != kCsvFieldCount - 1)
            throw ParseError("expected " + std::to_string(kCsvFieldCount) + " fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        AlgorithmRecord rec;
        rec.name = std::string(trim(fields[0]));
        if (rec.name.empty()) throw ParseError("missing field 'name'", line_no);
        rec.kind = parse_algo_kind(trim(fields[1]));
        rec.family = std::string(trim(fields[2]));
        rec.pq_level = parse_security_level(trim(fields[3]));
        rec.pubkey_bytes = parse_count_field(fields[4], "pubkey_bytes", line_no);
        rec.payload_bytes = parse_count_field(fields[5], "payload_bytes", line_no);
        require_positive(static_cast<double>(rec.pubkey_bytes), "pubkey_bytes", line_no);
        require_positive(static_cast<double>(rec.payload_bytes), "payload_bytes", line_no);
        rec.op1 = parse_csv_measurement(fields, 6, 1, line_no);
        rec.op2 = parse_csv_measurement(fields, 9, 2, line_no);
        rec.op3 = parse_csv_measurement(fields, 12, 3, line_no);
        if (fields.size() == kCsvFieldCount) rec.flags = parse_flags(fields[15]);
        records.push_back(std::move(rec));
    }
    return records;
}

double json_number(const ordered_json& obj, const char* field) {
    if (!obj.contains(field)) throw ParseError("missing field '" + std::string(field) + "'");
    const auto& v = obj.at(field);
    if (!v.is_number()) throw ParseError("field '" + std::string(field) + "' must be a number");
    return v.get<double>();
}

Measurement measurement_from_json(const ordered_json& obj, const std::string& path) {
    Measurement m;
    m.cycles = json_number(obj, "cycles");
    m.avg_power = json_number(obj, "avg_power");
    m.energy = json_number(obj, "energy");
    require_positive(m.cycles, path + ".cycles", 0);
    require_positive(m.avg_power, path + ".avg_power", 0);
    require_positive(m.energy, path + ".energy", 0);
    return m;
}

AlgorithmRecord record_from_json(const ordered_json& obj) {
    AlgorithmRecord rec;
    if (!obj.contains("name")) throw ParseError("missing field 'name'");
    rec.name = obj.at("name").get<std::string>();
    if (!obj.contains("kind")) throw ParseError("missing field 'kind'");
    rec.kind = parse_algo_kind(obj.at("kind").get<std::string>());
    if (obj.contains("family") && !obj.at("family").is_null())
        rec.family = obj.at("family").get<std::string>();
    if (!obj.contains("pq_level")) throw ParseError("missing field 'pq_level'");
    rec.pq_level = parse_security_level(obj.at("pq_level").get<std::string>());
    rec.pubkey_bytes = static_cast<std::uint64_t>(json_number(obj, "pubkey_bytes"));
    rec.payload_bytes = static_cast<std::uint64_t>(json_number(obj, "payload_bytes"));
    require_positive(static_cast<double>(rec.pubkey_bytes), "pubkey_bytes", 0);
    require_positive(static_cast<double>(rec.payload_bytes), "payload_bytes", 0);
    for (int i = 1; i <= 3; ++i) {
        std::string key = "op" + std::to_string(i);
        if (!obj.contains(key)) throw ParseError("missing field '" + key + "'");
        (i == 1 ? rec.op1 : i == 2 ? rec.op2 : rec.op3) = measurement_from_json(obj.at(key), key);
    }
    if (obj.contains("flags"))
        for (const auto& f : obj.at("flags")) {
            auto flag = f.get<std::string>();
            if (!rec.has_flag(flag)) rec.flags.push_back(std::move(flag));
        }
    return rec;
}

Platform platform_from_json(const ordered_json& obj) {
    Platform p;
    if (obj.contains("name")) p.name = obj.at("name").get<std::string>();
    p.freq = json_number(obj, "freq");
    p.voltage = json_number(obj, "voltage");
    require_positive(p.freq, "platform.freq", 0);
    require_positive(p.voltage, "platform.voltage", 0);
    if (obj.contains("energy_per_cycle") && !obj.at("energy_per_cycle").is_null()) {
        p.energy_per_cycle = json_number(obj, "energy_per_cycle");
        require_positive(*p.energy_per_cycle, "platform.energy_per_cycle", 0);
    }
    if (obj.contains("current_per_mhz") && !obj.at("current_per_mhz").is_null()) {
        p.current_per_mhz = json_number(obj, "current_per_mhz");
        require_positive(*p.current_per_mhz, "platform.current_per_mhz", 0);
    }
    if (p.energy_per_cycle && p.current_per_mhz) {
        double derived = p.voltage * *p.current_per_mhz * 1e-6;
        if (std::abs(*p.energy_per_cycle - derived) / *p.energy_per_cycle > 0.05)
            throw ValueError("platform '" + p.name + "': energy_per_cycle " +
                             format_exact(*p.energy_per_cycle) + " J/cycle disagrees >5% with voltage*current_per_mhz = " +
                             format_exact(derived) + " J/cycle");
    }
    return p;
}

ordered_json measurement_to_json(const Measurement& m) {
    return ordered_json{{"cycles", m.cycles}, {"avg_power", m.avg_power}, {"energy", m.energy}};
}

ordered_json record_to_json(const AlgorithmRecord& rec) {
    ordered_json obj;
    obj["name"] = rec.name;
    obj["kind"] = to_string(rec.kind);
    if (!rec.family.empty()) obj["family"] = rec.family;
    obj["pq_level"] = to_string(rec.pq_level);
    obj["pubkey_bytes"] = rec.pubkey_bytes;
    obj["payload_bytes"] = rec.payload_bytes;
    obj["op1"] = measurement_to_json(rec.op1);
    obj["op2"] = measurement_to_json(rec.op2);
    obj["op3"] = measurement_to_json(rec.op3);
    obj["flags"] = rec.flags;
    return obj;
}

} // namespace

std::string_view to_string(SecurityLevel level) {
    switch (level) {
        case SecurityLevel::None: return "none";
        case SecurityLevel::L1: return "L1";
        case SecurityLevel::L2: return "L2";
        case SecurityLevel::L3: return "L3";
        case SecurityLevel::L4: return "L4";
        case SecurityLevel::L5: return "L5";
    }
    return "none";
}

SecurityLevel parse_security_level(std::string_view text) {
    auto t = trim(text);
    if (t.empty() || iequals(t, "none")) return SecurityLevel::None;
    if (t.size() == 2 && (t[0] == 'L' || t[0] == 'l') && t[1] >= '1' && t[1] <= '5')
        return static_cast<SecurityLevel>(t[1] - '0');
    throw ValueError("unknown security level '" + std::string(text) + "' (expected none or L1..L5)");
}

std::string_view to_string(AlgoKind kind) {
    return kind == AlgoKind::KEM ? "KEM" : "SIG";
}

AlgoKind parse_algo_kind(std::string_view text) {
    auto t = trim(text);
    if (iequals(t, "KEM")) return AlgoKind::KEM;
    if (iequals(t, "SIG")) return AlgoKind::SIG;
    throw ValueError("unknown algorithm kind '" + std::string(text) + "' (expected KEM or SIG)");
}

std::string_view to_string(Severity severity) {
    return severity == Severity::Error ? "Error" : "Warning";
}

bool AlgorithmRecord::has_flag(std::string_view flag) const {
    return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

const Measurement& AlgorithmRecord::op(int index) const {
    switch (index) {
        case 1: return op1;
        case 2: return op2;
        case 3: return op3;
    }
    throw ValueError("operation index must be 1..3, got " + std::to_string(index));
}

std::optional<double> Platform::effective_energy_per_cycle() const {
    if (energy_per_cycle) return energy_per_cycle;
    if (current_per_mhz && voltage > 0) return voltage * *current_per_mhz * 1e-6;
    return std::nullopt;
}

std::vector<AlgorithmRecord> parse_records(std::string_view text, DataFormat format) {
    if (format == DataFormat::Csv) return parse_csv(text);
    return parse_dataset(text, format).records;
}

Dataset parse_dataset(std::string_view text, DataFormat format) {
    if (format == DataFormat::Csv) {
        Dataset ds;
        ds.platform = reference_platform();
        ds.records = parse_csv(text);
        return ds;
    }
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    try {
        Dataset ds;
        if (!doc.contains("platform")) throw ParseError("missing field 'platform'");
        ds.platform = platform_from_json(doc.at("platform"));
        if (!doc.contains("records")) throw ParseError("missing field 'records'");
        for (const auto& r : doc.at("records")) ds.records.push_back(record_from_json(r));
        return ds;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string to_csv(std::span<const AlgorithmRecord> records) {
    std::string out;
    for (size_t i = 0; i < kCsvFieldCount; ++i) {
        if (i) out += ',';
        out += kCsvColumns[i];
    }
    out += '\n';
    for (const auto& rec : records) {
        out += rec.name;
        out += ',';
        out += to_string(rec.kind);
        out += ',';
        out += rec.family;
        out += ',';
        out += to_string(rec.pq_level);
        out += ',';
        out += std::to_string(rec.pubkey_bytes);
        out += ',';
        out += std::to_string(rec.payload_bytes);
        for (int i = 1; i <= 3; ++i) {
            const Measurement& m = rec.op(i);
            out += ',';
            out += format_exact(m.cycles / 1e6);
            out += ',';
            out += format_exact(m.avg_power * 1e3);
            out += ',';
            out += format_exact(m.energy);
        }
        out += ',';
        for (size_t i = 0; i < rec.flags.size(); ++i) {
            if (i) out += ';';
            out += rec.flags[i];
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Dataset& dataset, int indent) {
    ordered_json doc;
    ordered_json platform;
    platform["name"] = dataset.platform.name;
    platform["freq"] = dataset.platform.freq;
    platform["voltage"] = dataset.platform.voltage;
    if (dataset.platform.energy_per_cycle) platform["energy_per_cycle"] = *dataset.platform.energy_per_cycle;
    if (dataset.platform.current_per_mhz) platform["current_per_mhz"] = *dataset.platform.current_per_mhz;
    doc["platform"] = std::move(platform);
    doc["records"] = ordered_json::array();
    for (const auto& rec : dataset.records) doc["records"].push_back(record_to_json(rec));
    return doc.dump(indent) + "\n";
}

namespace {

void check_positive(std::vector<ValidationFinding>& findings, const AlgorithmRecord& rec,
                    const std::string& path, double value) {
    if (!(value > 0) || !std::isfinite(value))
        findings.push_back({rec.name, path, Severity::Error, "must be positive", value, 0.0});
}

} // namespace

std::vector<ValidationFinding> validate_record(const AlgorithmRecord& record,
                                               const Platform& platform, double rel_tol) {
    if (!(rel_tol > 0.0) || !(rel_tol < 0.5))
        throw ValueError("rel_tol must be in (0, 0.5), got " + format_exact(rel_tol));
    if (!(platform.freq > 0)) throw ValueError("platform frequency must be positive");

    std::vector<ValidationFinding> findings;
    check_positive(findings, record, "pubkey_bytes", static_cast<double>(record.pubkey_bytes));
    check_positive(findings, record, "payload_bytes", static_cast<double>(record.payload_bytes));
    for (int i = 1; i <= 3; ++i) {
        const Measurement& m = record.op(i);
        const std::string prefix = "op" + std::to_string(i);
        check_positive(findings, record, prefix + ".cycles", m.cycles);
        check_positive(findings, record, prefix + ".avg_power", m.avg_power);
        check_positive(findings, record, prefix + ".energy", m.energy);
        if (m.cycles > 0 && m.avg_power > 0 && m.energy > 0) {
            double predicted = m.cycles / platform.freq * m.avg_power;
            double deviation = std::abs(m.energy - predicted) / m.energy;
            if (deviation > rel_tol)
                findings.push_back({record.name, prefix + ".energy", Severity::Warning,
                                    "energy deviates " + format_significant(deviation * 100.0, 3) +
                                        "% from (cycles/freq)*avg_power",
                                    m.energy, predicted});
        }
    }
    return findings;
}

std::vector<ValidationFinding> validate_dataset(const Dataset& dataset, double rel_tol) {
    std::vector<ValidationFinding> findings;
    for (const auto& rec : dataset.records) {
        auto f = validate_record(rec, dataset.platform, rel_tol);
        findings.insert(findings.end(), f.begin(), f.end());
    }
    return findings;
}

std::vector<AlgorithmRecord> filter_records(std::span<const AlgorithmRecord> records,
                                            const RecordFilter& filter) {
    std::vector<AlgorithmRecord> out;
    for (const auto& rec : records) {
        if (filter.kind && rec.kind != *filter.kind) continue;
        if (filter.min_level && *filter.min_level >= SecurityLevel::L1) {
            if (rec.pq_level < *filter.min_level) continue;
        }
        if (filter.families) {
            bool match = false;
            for (const auto& fam : *filter.families)
                if (iequals(fam, rec.family)) { match = true; break; }
            if (!match) continue;
        }
        out.push_back(rec);
    }
    return out;
}

const AlgorithmRecord* find_record(std::span<const AlgorithmRecord> records, std::string_view name) {
    for (const auto& rec : records)
        if (rec.name == name) return &rec;
    return nullptr;
}

} // namespace pqep
