#include "pqep/cli.hpp"

#include "pqep/crossover.hpp"
#include "pqep/errors.hpp"
#include "pqep/plot.hpp"
#include "pqep/power.hpp"
#include "pqep/report.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace pqep::cli {

namespace {

struct CommonOpts {
    std::string dataset_path; // empty: bundled reference data
    std::string format = "table";
    int precision = 4;

    void attach(CLI::App* cmd) {
        cmd->add_option("--dataset", dataset_path, "Dataset file (.csv or .json) replacing the bundled data")
            ->envname("PQEP_DATASET");
        cmd->add_option("--format", format, "Output format: table, csv, json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        cmd->add_option("--precision", precision, "Significant digits for table/csv numbers")
            ->check(CLI::Range(1, 17));
    }

    OutputFormat output_format() const { return parse_output_format(format); }
};

struct FilterOpts {
    std::string kind;
    std::string min_level;
    std::vector<std::string> families;
    std::vector<std::string> names;

    void attach(CLI::App* cmd) {
        cmd->add_option("--kind", kind, "Keep only KEM or SIG records")
            ->check(CLI::IsMember({"KEM", "SIG", "kem", "sig"}));
        cmd->add_option("--min-level", min_level, "Minimum PQ security level (L1..L5)");
        cmd->add_option("--family", families, "Keep only the given families (repeatable)");
        cmd->add_option("--name", names, "Keep only the named records (repeatable)");
    }

    std::vector<AlgorithmRecord> apply(const std::vector<AlgorithmRecord>& records) const {
        RecordFilter filter;
        if (!kind.empty()) filter.kind = parse_algo_kind(kind);
        if (!min_level.empty()) filter.min_level = parse_security_level(min_level);
        if (!families.empty()) filter.families = families;
        auto out = filter_records(records, filter);
        if (!names.empty()) {
            std::vector<AlgorithmRecord> picked;
            for (const auto& name : names) {
                const auto* rec = find_record(out, name);
                if (!rec) throw ValueError("unknown record '" + name + "'");
                picked.push_back(*rec);
            }
            out = std::move(picked);
        }
        return out;
    }
};

Dataset load_dataset(const CommonOpts& opts) {
    if (opts.dataset_path.empty()) return builtin_reference_dataset();
    std::ifstream in(opts.dataset_path, std::ios::binary);
    if (!in) throw ConfigError("cannot open dataset '" + opts.dataset_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    DataFormat format = DataFormat::Csv;
    if (opts.dataset_path.size() >= 5 &&
        opts.dataset_path.compare(opts.dataset_path.size() - 5, 5, ".json") == 0) {
        format = DataFormat::Json;
    } else {
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') format = DataFormat::Json;
    }
    return parse_dataset(text, format);
}

const AlgorithmRecord& need_record(const Dataset& ds, const std::string& name) {
    const auto* rec = find_record(ds.records, name);
    if (!rec) throw ValueError("unknown record '" + name + "' (see the 'list' command)");
    return *rec;
}

double resolve_exfer(const std::string& link, double e_xfer_flag, bool e_xfer_given) {
    if (e_xfer_given && !link.empty())
        throw ValueError("give either --e-xfer or --link, not both");
    if (e_xfer_given) {
        if (e_xfer_flag < 0) throw ValueError("e_xfer must be >= 0");
        return e_xfer_flag;
    }
    if (link.empty()) throw ValueError("missing --e-xfer or --link");
    double value = 0;
    auto [ptr, ec] = std::from_chars(link.data(), link.data() + link.size(), value);
    if (ec == std::errc{} && ptr == link.data() + link.size()) {
        if (value < 0) throw ValueError("e_xfer must be >= 0");
        return value;
    }
    auto presets = technology_presets();
    if (const auto* preset = find_link(presets, link)) return preset->e_xfer;
    std::string known;
    for (const auto& p : presets) {
        if (!known.empty()) known += ", ";
        known += p.name;
    }
    throw ValueError("unknown link '" + link + "' (presets: " + known + "; or give J/bit)");
}

std::string flags_text(const AlgorithmRecord& rec) {
    std::string out;
    for (const auto& flag : rec.flags) {
        if (!out.empty()) out += ';';
        out += flag;
    }
    return out;
}

// ---- commands ----

int cmd_validate(const CommonOpts& common, double rel_tol, bool strict, std::ostream& out,
                 std::ostream& err) {
    Dataset ds = load_dataset(common);
    auto findings = validate_dataset(ds, rel_tol);
    Report report;
    report.columns = {{"record", ""}, {"field", ""}, {"severity", ""},
                      {"message", ""}, {"observed", "SI"}, {"expected", "SI"}};
    size_t errors = 0;
    for (const auto& f : findings) {
        if (f.severity == Severity::Error) ++errors;
        report.add_row({f.record_name, f.field_path, std::string(to_string(f.severity)), f.message,
                        f.observed, f.expected});
    }
    write_report(out, report, common.output_format(), common.precision);
    err << ds.records.size() << " records checked, " << errors << " errors, "
        << findings.size() - errors << " warnings\n";
    return (strict && errors > 0) ? 1 : 0;
}

int cmd_list(const CommonOpts& common, const FilterOpts& filter, std::ostream& out) {
    Dataset ds = load_dataset(common);
    auto records = filter.apply(ds.records);
    Report report;
    report.columns = {{"name", ""},       {"kind", ""},   {"family", ""}, {"level", ""},
                      {"pubkey", "B"},    {"payload", "B"},
                      {"op1_energy", "J"}, {"op2_energy", "J"}, {"op3_energy", "J"},
                      {"flags", ""}};
    for (const auto& rec : records)
        report.add_row({rec.name, std::string(to_string(rec.kind)), rec.family,
                        std::string(to_string(rec.pq_level)), rec.pubkey_bytes, rec.payload_bytes,
                        rec.op1.energy, rec.op2.energy, rec.op3.energy, flags_text(rec)});
    write_report(out, report, common.output_format(), common.precision);
    return 0;
}

int cmd_rank(const CommonOpts& common, const FilterOpts& filter, const std::string& basket_spec,
             const std::string& link, double e_xfer_flag, bool e_xfer_given, std::ostream& out) {
    Dataset ds = load_dataset(common);
    auto records = filter.apply(ds.records);
    EnergyBasket basket = parse_basket(basket_spec);
    double e_xfer = resolve_exfer(link, e_xfer_flag, e_xfer_given);
    auto ranked = rank_at(records, basket, e_xfer);
    Report report;
    report.columns = {{"rank", ""},      {"name", ""},      {"energy", "J"},
                      {"intercept", "J"}, {"slope", "bit"}, {"flags", ""}};
    std::uint64_t position = 0;
    for (const auto& entry : ranked) {
        const auto& rec = need_record(ds, entry.name);
        auto line = affine_energy(rec, basket);
        report.add_row({++position, entry.name, entry.energy, line.intercept, line.slope_bits,
                        flags_text(rec)});
    }
    write_report(out, report, common.output_format(), common.precision);
    return 0;
}

int cmd_crossover(const CommonOpts& common, const std::string& name_a, const std::string& name_b,
                  const std::string& basket_spec, std::ostream& out) {
    Dataset ds = load_dataset(common);
    EnergyBasket basket = parse_basket(basket_spec);
    const auto& rec_a = need_record(ds, name_a);
    const auto& rec_b = need_record(ds, name_b);
    auto line_a = affine_energy(rec_a, basket);
    auto line_b = affine_energy(rec_b, basket);
    auto result = crossover_point(line_a, line_b);
    Report report;
    report.columns = {{"a", ""}, {"b", ""}, {"result", ""}, {"e_star", "J/bit"},
                      {"energy_at_crossover", "J"}, {"flags", ""}};
    std::string kind_text;
    switch (result.kind) {
        case CrossoverResult::Kind::At: kind_text = "at"; break;
        case CrossoverResult::Kind::AlwaysFirst: kind_text = "always-first"; break;
        case CrossoverResult::Kind::AlwaysSecond: kind_text = "always-second"; break;
        case CrossoverResult::Kind::Identical: kind_text = "identical"; break;
    }
    std::string flags = flags_text(rec_a);
    for (const auto& f : rec_b.flags)
        if (!rec_a.has_flag(f)) {
            if (!flags.empty()) flags += ';';
            flags += f;
        }
    std::vector<ReportValue> row{name_a, name_b, kind_text, std::string("-"), std::string("-"), flags};
    if (result.kind == CrossoverResult::Kind::At) {
        row[3] = result.e_star;
        row[4] = line_a.at(result.e_star);
    }
    report.add_row(std::move(row));
    write_report(out, report, common.output_format(), common.precision);
    return 0;
}

int cmd_frontier(const CommonOpts& common, const FilterOpts& filter, const std::string& basket_spec,
                 double e_max, std::ostream& out) {
    Dataset ds = load_dataset(common);
    auto records = filter.apply(ds.records);
    if (records.empty()) throw ValueError("no records match the filter");
    EnergyBasket basket = parse_basket(basket_spec);
    auto segments = frontier(records, basket, e_max);
    Report report;
    report.columns = {{"e_lo", "J/bit"}, {"e_hi", "J/bit"}, {"algorithm", ""}, {"flags", ""}};
    for (const auto& seg : segments) {
        const auto& rec = need_record(ds, seg.algorithm);
        report.add_row({seg.e_lo, seg.e_hi, seg.algorithm, flags_text(rec)});
    }
    write_report(out, report, common.output_format(), common.precision);
    return 0;
}

int cmd_estimate(const CommonOpts& common, const std::string& record_name,
                 const std::string& basket_spec, const std::string& link, double e_xfer_flag,
                 bool e_xfer_given, double battery_j, bool battery_given, double data_rate,
                 bool data_rate_given, std::ostream& out) {
    Dataset ds = load_dataset(common);
    const auto& rec = need_record(ds, record_name);
    EnergyBasket basket = parse_basket(basket_spec);
    double e_xfer = resolve_exfer(link, e_xfer_flag, e_xfer_given);
    auto line = affine_energy(rec, basket);

    Report report;
    report.columns = {{"quantity", ""}, {"value", ""}, {"unit", ""}};
    auto add = [&](const char* quantity, ReportValue value, const char* unit) {
        report.add_row({std::string(quantity), std::move(value), std::string(unit)});
    };
    add("record", rec.name, "");
    add("basket", basket.label.empty() ? std::string("custom") : basket.label, "");
    if (!rec.flags.empty()) add("flags", flags_text(rec), "");
    add("e_xfer", e_xfer, "J/bit");
    add("compute_energy", line.intercept, "J");
    add("transmit_bits", line.slope_bits, "bit");
    add("transmit_energy", transfer_energy(line.slope_bits, e_xfer), "J");
    add("total_energy", line.at(e_xfer), "J");

    double weighted_cycles = basket.w_op1 * rec.op1.cycles + basket.w_op2 * rec.op2.cycles +
                             basket.w_op3 * rec.op3.cycles;
    add("compute_latency", weighted_cycles / ds.platform.freq, "s");
    if (data_rate_given) {
        Measurement combined{weighted_cycles, 1.0, 1.0}; // only cycles matter here
        auto lat = latency(combined, ds.platform.freq, line.slope_bits, data_rate);
        add("transmit_latency", lat.transmit_s, "s");
        add("total_latency", lat.total_s, "s");
    }
    if (battery_given) {
        add("battery", battery_j, "J");
        add("battery_runs", battery_budget(rec, basket, e_xfer, battery_j), "count");
    }
    write_report(out, report, common.output_format(), common.precision);
    return 0;
}

int cmd_scale(const CommonOpts& common, const FilterOpts& filter, const std::string& dst_name,
              double to_freq, double to_voltage, double to_epc, bool epc_given, double to_ua_mhz,
              bool ua_given, std::ostream& out) {
    Dataset ds = load_dataset(common);
    auto records = filter.apply(ds.records);
    Platform dst;
    dst.name = dst_name;
    dst.freq = to_freq;
    dst.voltage = to_voltage;
    if (epc_given) dst.energy_per_cycle = to_epc;
    if (ua_given) dst.current_per_mhz = to_ua_mhz * 1e-6; // flag takes uA/MHz
    if (!dst.effective_energy_per_cycle())
        throw ConfigError("destination needs --to-energy-per-cycle or --to-ua-per-mhz");

    Dataset scaled;
    scaled.platform = dst;
    for (const auto& rec : records) {
        AlgorithmRecord moved = rec;
        moved.op1 = scale_measurement(rec.op1, ds.platform, dst);
        moved.op2 = scale_measurement(rec.op2, ds.platform, dst);
        moved.op3 = scale_measurement(rec.op3, ds.platform, dst);
        scaled.records.push_back(std::move(moved));
    }
    // table: summary; csv/json: a dataset that can be loaded back
    switch (common.output_format()) {
        case OutputFormat::Csv: out << to_csv(scaled.records); break;
        case OutputFormat::Json: out << to_json(scaled); break;
        case OutputFormat::Table: {
            Report report;
            report.columns = {{"name", ""},        {"kind", ""},        {"level", ""},
                              {"op1_energy", "J"}, {"op2_energy", "J"}, {"op3_energy", "J"},
                              {"op1_power", "W"},  {"op2_power", "W"},  {"op3_power", "W"},
                              {"flags", ""}};
            for (const auto& rec : scaled.records)
                report.add_row({rec.name, std::string(to_string(rec.kind)),
                                std::string(to_string(rec.pq_level)), rec.op1.energy,
                                rec.op2.energy, rec.op3.energy, rec.op1.avg_power,
                                rec.op2.avg_power, rec.op3.avg_power, flags_text(rec)});
            write_report(out, report, OutputFormat::Table, common.precision);
            break;
        }
    }
    return 0;
}

int cmd_plot(const CommonOpts& common, const FilterOpts& filter, const std::string& basket_spec,
             const std::string& mode_text, const PlotRange& range, const std::string& svg_path,
             std::ostream& out, std::ostream& err) {
    Dataset ds = load_dataset(common);
    auto records = filter.apply(ds.records);
    if (records.empty()) throw ValueError("no records match the filter");
    EnergyBasket basket = parse_basket(basket_spec);
    PlotMode mode = mode_text == "lines" ? PlotMode::Lines : PlotMode::PowerScatter;
    auto doc = emit_plot(records, basket, mode, range, ds.platform.freq);
    out << doc.dump(2) << '\n';
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path, std::ios::binary);
        if (!svg) throw ConfigError("cannot write '" + svg_path + "'");
        svg << render_svg(doc);
        err << "wrote " << svg_path << '\n';
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Energy model and algorithm selection for post-quantum key"
                 " establishment and signatures, from benchmarked cycle/power data"};
    app.name("pqep");
    app.require_subcommand(1);

    // validate
    auto* validate = app.add_subcommand("validate", "Check dataset physical consistency");
    CommonOpts validate_common;
    validate_common.attach(validate);
    double rel_tol = 0.02;
    bool strict = false;
    validate->add_option("--rel-tol", rel_tol, "Relative energy tolerance (default 0.02)");
    validate->add_flag("--strict", strict, "Exit 1 when any Error finding is present");

    // list
    auto* list = app.add_subcommand("list", "List dataset records");
    CommonOpts list_common;
    FilterOpts list_filter;
    list_common.attach(list);
    list_filter.attach(list);

    // rank
    auto* rank = app.add_subcommand("rank", "Order records by total basket energy at an e_xfer");
    CommonOpts rank_common;
    FilterOpts rank_filter;
    rank_common.attach(rank);
    rank_filter.attach(rank);
    std::string rank_basket = "ephemeral-total";
    std::string rank_link;
    double rank_exfer = 0;
    rank->add_option("--basket", rank_basket, "Basket preset or inline JSON weights");
    rank->add_option("--link", rank_link, "Technology preset name or raw J/bit");
    auto* rank_exfer_opt = rank->add_option("--e-xfer", rank_exfer, "Per-bit cost, J/bit");

    // crossover
    auto* crossover = app.add_subcommand("crossover", "Solve the e_xfer where two records' energies cross");
    CommonOpts crossover_common;
    crossover_common.attach(crossover);
    std::string cross_a, cross_b, cross_basket = "ephemeral-total";
    crossover->add_option("--a", cross_a, "First record")->required();
    crossover->add_option("--b", cross_b, "Second record")->required();
    crossover->add_option("--basket", cross_basket, "Basket preset or inline JSON weights");

    // frontier
    auto* frontier_cmd = app.add_subcommand("frontier", "Piecewise energy-optimal algorithm over e_xfer");
    CommonOpts frontier_common;
    FilterOpts frontier_filter;
    frontier_common.attach(frontier_cmd);
    frontier_filter.attach(frontier_cmd);
    std::string frontier_basket = "ephemeral-total";
    double frontier_emax = kNoLimit;
    frontier_cmd->add_option("--basket", frontier_basket, "Basket preset or inline JSON weights");
    frontier_cmd->add_option("--e-max", frontier_emax, "Upper end of the e_xfer interval, J/bit");

    // estimate
    auto* estimate = app.add_subcommand("estimate", "Energy, latency, and battery budget for one record");
    CommonOpts estimate_common;
    estimate_common.attach(estimate);
    std::string est_record, est_basket = "ephemeral-total", est_link;
    double est_exfer = 0, est_battery = 0, est_rate = 0;
    estimate->add_option("--record", est_record, "Record name")->required();
    estimate->add_option("--basket", est_basket, "Basket preset or inline JSON weights");
    estimate->add_option("--link", est_link, "Technology preset name or raw J/bit");
    auto* est_exfer_opt = estimate->add_option("--e-xfer", est_exfer, "Per-bit cost, J/bit");
    auto* est_battery_opt = estimate->add_option("--battery", est_battery, "Battery capacity, J");
    auto* est_rate_opt = estimate->add_option("--data-rate", est_rate, "Link data rate, bit/s");

    // scale
    auto* scale = app.add_subcommand("scale", "Project measurements onto another CPU target");
    CommonOpts scale_common;
    FilterOpts scale_filter;
    scale_common.attach(scale);
    scale_filter.attach(scale);
    std::string scale_name = "custom";
    double to_freq = 0, to_voltage = 3.0, to_epc = 0, to_ua = 0;
    scale->add_option("--to-name", scale_name, "Destination platform name");
    scale->add_option("--to-freq", to_freq, "Destination clock, Hz")->required();
    scale->add_option("--to-voltage", to_voltage, "Destination supply, V (default 3.0)");
    auto* epc_opt = scale->add_option("--to-energy-per-cycle", to_epc, "Destination J/cycle");
    auto* ua_opt = scale->add_option("--to-ua-per-mhz", to_ua, "Destination scaling parameter, uA/MHz");

    // plot
    auto* plot = app.add_subcommand("plot", "Emit plot data (energy lines or power scatter)");
    CommonOpts plot_common;
    FilterOpts plot_filter;
    plot_common.attach(plot);
    plot_filter.attach(plot);
    std::string plot_basket = "ephemeral-total", plot_mode = "lines", svg_path;
    PlotRange range;
    plot->add_option("--mode", plot_mode, "lines or power-scatter")
        ->check(CLI::IsMember({"lines", "power-scatter"}));
    plot->add_option("--basket", plot_basket, "Basket preset or inline JSON weights");
    plot->add_option("--e-min", range.e_lo, "Range start, J/bit (default 0)");
    plot->add_option("--e-max", range.e_hi, "Range end, J/bit (default 2e-3)");
    plot->add_option("--samples", range.samples, "Points per line (default 128)")
        ->check(CLI::Range(2, 100000));
    plot->add_option("--svg", svg_path, "Also render the document to an SVG file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(validate_common, rel_tol, strict, out, err);
        if (*list) return cmd_list(list_common, list_filter, out);
        if (*rank)
            return cmd_rank(rank_common, rank_filter, rank_basket, rank_link, rank_exfer,
                            rank_exfer_opt->count() > 0, out);
        if (*crossover) return cmd_crossover(crossover_common, cross_a, cross_b, cross_basket, out);
        if (*frontier_cmd)
            return cmd_frontier(frontier_common, frontier_filter, frontier_basket, frontier_emax, out);
        if (*estimate)
            return cmd_estimate(estimate_common, est_record, est_basket, est_link, est_exfer,
                                est_exfer_opt->count() > 0, est_battery, est_battery_opt->count() > 0,
                                est_rate, est_rate_opt->count() > 0, out);
        if (*scale)
            return cmd_scale(scale_common, scale_filter, scale_name, to_freq, to_voltage, to_epc,
                             epc_opt->count() > 0, to_ua, ua_opt->count() > 0, out);
        if (*plot)
            return cmd_plot(plot_common, plot_filter, plot_basket, plot_mode, range, svg_path, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace pqep::cli
