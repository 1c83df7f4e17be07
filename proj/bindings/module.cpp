#include "pqep/cli.hpp"
#include "pqep/crossover.hpp"
#include "pqep/errors.hpp"
#include "pqep/plot.hpp"
#include "pqep/power.hpp"
#include "pqep/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace pqep;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
        case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
            return out;
        }
        default: return py::none();
    }
}

nlohmann::json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) return obj.cast<long long>();
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        nlohmann::json out = nlohmann::json::object();
        for (auto item : obj.cast<py::dict>())
            out[item.first.cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::sequence>(obj)) {
        nlohmann::json out = nlohmann::json::array();
        for (auto item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw py::type_error("cannot convert object to plot document");
}

DataFormat format_from_string(const std::string& format) {
    if (format == "csv") return DataFormat::Csv;
    if (format == "json") return DataFormat::Json;
    throw ValueError("format must be 'csv' or 'json'");
}

RecordFilter filter_from_args(const std::optional<std::string>& kind,
                              const std::optional<std::string>& min_level,
                              const std::optional<std::vector<std::string>>& families) {
    RecordFilter f;
    if (kind) f.kind = parse_algo_kind(*kind);
    if (min_level) f.min_level = parse_security_level(*min_level);
    if (families) f.families = *families;
    return f;
}

} // namespace

PYBIND11_MODULE(_pqep, m) {
    m.doc() = "Energy model and selection of post-quantum key-establishment and "
              "signature algorithms from benchmarked cycle/power data";

    py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValueError>(m, "ValueError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<CompositionError>(m, "CompositionError", PyExc_ValueError);

    py::enum_<SecurityLevel>(m, "SecurityLevel")
        .value("NONE", SecurityLevel::None)
        .value("L1", SecurityLevel::L1)
        .value("L2", SecurityLevel::L2)
        .value("L3", SecurityLevel::L3)
        .value("L4", SecurityLevel::L4)
        .value("L5", SecurityLevel::L5);

    py::enum_<AlgoKind>(m, "AlgoKind").value("KEM", AlgoKind::KEM).value("SIG", AlgoKind::SIG);

    py::enum_<Severity>(m, "Severity")
        .value("Warning", Severity::Warning)
        .value("Error", Severity::Error);

    py::class_<Measurement>(m, "Measurement")
        .def(py::init([](double cycles, double avg_power, double energy) {
                 return Measurement{cycles, avg_power, energy};
             }),
             py::arg("cycles") = 0.0, py::arg("avg_power") = 0.0, py::arg("energy") = 0.0)
        .def_readwrite("cycles", &Measurement::cycles)
        .def_readwrite("avg_power", &Measurement::avg_power)
        .def_readwrite("energy", &Measurement::energy)
        .def("__repr__", [](const Measurement& m_) {
            return "Measurement(cycles=" + format_exact(m_.cycles) +
                   ", avg_power=" + format_exact(m_.avg_power) +
                   ", energy=" + format_exact(m_.energy) + ")";
        });

    py::class_<AlgorithmRecord>(m, "AlgorithmRecord")
        .def(py::init<>())
        .def_readwrite("name", &AlgorithmRecord::name)
        .def_readwrite("kind", &AlgorithmRecord::kind)
        .def_readwrite("family", &AlgorithmRecord::family)
        .def_readwrite("pq_level", &AlgorithmRecord::pq_level)
        .def_readwrite("pubkey_bytes", &AlgorithmRecord::pubkey_bytes)
        .def_readwrite("payload_bytes", &AlgorithmRecord::payload_bytes)
        .def_readwrite("op1", &AlgorithmRecord::op1)
        .def_readwrite("op2", &AlgorithmRecord::op2)
        .def_readwrite("op3", &AlgorithmRecord::op3)
        .def_readwrite("flags", &AlgorithmRecord::flags)
        .def("has_flag", &AlgorithmRecord::has_flag)
        .def("op", &AlgorithmRecord::op, py::return_value_policy::copy)
        .def("__repr__", [](const AlgorithmRecord& r) {
            return "<AlgorithmRecord " + r.name + ">";
        });

    py::class_<Platform>(m, "Platform")
        .def(py::init([](std::string name, double freq, double voltage,
                         std::optional<double> energy_per_cycle,
                         std::optional<double> current_per_mhz) {
                 return Platform{std::move(name), freq, voltage, energy_per_cycle, current_per_mhz};
             }),
             py::arg("name") = "", py::arg("freq") = 0.0, py::arg("voltage") = 0.0,
             py::arg("energy_per_cycle") = py::none(), py::arg("current_per_mhz") = py::none())
        .def_readwrite("name", &Platform::name)
        .def_readwrite("freq", &Platform::freq)
        .def_readwrite("voltage", &Platform::voltage)
        .def_readwrite("energy_per_cycle", &Platform::energy_per_cycle)
        .def_readwrite("current_per_mhz", &Platform::current_per_mhz)
        .def("effective_energy_per_cycle", &Platform::effective_energy_per_cycle);

    py::class_<ValidationFinding>(m, "ValidationFinding")
        .def_readonly("record_name", &ValidationFinding::record_name)
        .def_readonly("field_path", &ValidationFinding::field_path)
        .def_readonly("severity", &ValidationFinding::severity)
        .def_readonly("message", &ValidationFinding::message)
        .def_readonly("observed", &ValidationFinding::observed)
        .def_readonly("expected", &ValidationFinding::expected)
        .def("__repr__", [](const ValidationFinding& f) {
            return "<" + std::string(to_string(f.severity)) + " " + f.record_name + "." +
                   f.field_path + ": " + f.message + ">";
        });

    py::class_<Dataset>(m, "Dataset")
        .def(py::init<>())
        .def_readwrite("platform", &Dataset::platform)
        .def_readwrite("records", &Dataset::records);

    py::class_<EnergyBasket>(m, "EnergyBasket")
        .def(py::init([](double w_op1, double w_op2, double w_op3, double w_pubkey,
                         double w_payload, std::string label) {
                 return EnergyBasket{w_op1, w_op2, w_op3, w_pubkey, w_payload, std::move(label)};
             }),
             py::arg("w_op1") = 0.0, py::arg("w_op2") = 0.0, py::arg("w_op3") = 0.0,
             py::arg("w_pubkey") = 0.0, py::arg("w_payload") = 0.0, py::arg("label") = "")
        .def_readwrite("w_op1", &EnergyBasket::w_op1)
        .def_readwrite("w_op2", &EnergyBasket::w_op2)
        .def_readwrite("w_op3", &EnergyBasket::w_op3)
        .def_readwrite("w_pubkey", &EnergyBasket::w_pubkey)
        .def_readwrite("w_payload", &EnergyBasket::w_payload)
        .def_readwrite("label", &EnergyBasket::label);

    py::class_<AffineEnergy>(m, "AffineEnergy")
        .def(py::init([](double intercept, double slope_bits, std::string algorithm) {
                 return AffineEnergy{intercept, slope_bits, std::move(algorithm)};
             }),
             py::arg("intercept") = 0.0, py::arg("slope_bits") = 0.0, py::arg("algorithm") = "")
        .def_readwrite("intercept", &AffineEnergy::intercept)
        .def_readwrite("slope_bits", &AffineEnergy::slope_bits)
        .def_readwrite("algorithm", &AffineEnergy::algorithm)
        .def("at", &AffineEnergy::at, py::arg("e_xfer"));

    py::class_<DynPowerParams>(m, "DynPowerParams")
        .def(py::init([](double activity, double capacitance, double voltage, double freq) {
                 return DynPowerParams{activity, capacitance, voltage, freq};
             }),
             py::arg("activity"), py::arg("capacitance"), py::arg("voltage"), py::arg("freq"))
        .def_readwrite("activity", &DynPowerParams::activity)
        .def_readwrite("capacitance", &DynPowerParams::capacitance)
        .def_readwrite("voltage", &DynPowerParams::voltage)
        .def_readwrite("freq", &DynPowerParams::freq);

    py::class_<LatencyEstimate>(m, "LatencyEstimate")
        .def_readonly("compute_s", &LatencyEstimate::compute_s)
        .def_readonly("transmit_s", &LatencyEstimate::transmit_s)
        .def_readonly("total_s", &LatencyEstimate::total_s);

    py::class_<TransmissionLink>(m, "TransmissionLink")
        .def_readonly("name", &TransmissionLink::name)
        .def_readonly("e_xfer", &TransmissionLink::e_xfer)
        .def_readonly("data_rate", &TransmissionLink::data_rate)
        .def_readonly("note", &TransmissionLink::note);

    auto crossover_result = py::class_<CrossoverResult>(m, "CrossoverResult")
        .def_readonly("kind", &CrossoverResult::kind)
        .def_readonly("e_star", &CrossoverResult::e_star);
    py::enum_<CrossoverResult::Kind>(crossover_result, "Kind")
        .value("At", CrossoverResult::Kind::At)
        .value("AlwaysFirst", CrossoverResult::Kind::AlwaysFirst)
        .value("AlwaysSecond", CrossoverResult::Kind::AlwaysSecond)
        .value("Identical", CrossoverResult::Kind::Identical);

    py::class_<RankedEntry>(m, "RankedEntry")
        .def_readonly("name", &RankedEntry::name)
        .def_readonly("energy", &RankedEntry::energy);

    py::class_<FrontierSegment>(m, "FrontierSegment")
        .def_readonly("e_lo", &FrontierSegment::e_lo)
        .def_readonly("e_hi", &FrontierSegment::e_hi)
        .def_readonly("algorithm", &FrontierSegment::algorithm);

    // dataset
    m.def("parse_records",
          [](const std::string& text, const std::string& format) {
              return parse_records(text, format_from_string(format));
          },
          py::arg("text"), py::arg("format") = "csv");
    m.def("parse_dataset",
          [](const std::string& text, const std::string& format) {
              return parse_dataset(text, format_from_string(format));
          },
          py::arg("text"), py::arg("format") = "csv");
    m.def("to_csv",
          [](const std::vector<AlgorithmRecord>& records) { return to_csv(records); },
          py::arg("records"));
    m.def("to_json", &to_json, py::arg("dataset"), py::arg("indent") = 2);
    m.def("validate_record", &validate_record, py::arg("record"), py::arg("platform"),
          py::arg("rel_tol") = 0.02);
    m.def("validate_dataset", &validate_dataset, py::arg("dataset"), py::arg("rel_tol") = 0.02);
    m.def("builtin_reference_dataset", &builtin_reference_dataset,
          py::return_value_policy::copy);
    m.def("reference_platform", &reference_platform, py::return_value_policy::copy);
    m.def("filter_records",
          [](const std::vector<AlgorithmRecord>& records, const std::optional<std::string>& kind,
             const std::optional<std::string>& min_level,
             const std::optional<std::vector<std::string>>& families) {
              return filter_records(records, filter_from_args(kind, min_level, families));
          },
          py::arg("records"), py::arg("kind") = py::none(), py::arg("min_level") = py::none(),
          py::arg("families") = py::none());

    // power model
    m.def("dynamic_power", &dynamic_power, py::arg("params"));
    m.def("energy_per_cycle", &energy_per_cycle, py::arg("measurement"), py::arg("freq"));
    m.def("energy_per_cycle_from_power", &energy_per_cycle_from_power, py::arg("measurement"),
          py::arg("freq"));
    m.def("scale_measurement", &scale_measurement, py::arg("measurement"), py::arg("src"),
          py::arg("dst"));
    m.def("transfer_energy", &transfer_energy, py::arg("bits"), py::arg("e_xfer"));
    m.def("latency", &latency, py::arg("measurement"), py::arg("freq"), py::arg("bits"),
          py::arg("data_rate"));

    // baskets
    m.def("basket_keygen", &baskets::keygen);
    m.def("basket_encaps", &baskets::encaps);
    m.def("basket_sign", &baskets::sign);
    m.def("basket_verify", &baskets::verify);
    m.def("basket_ephemeral_total", &baskets::ephemeral_total);
    m.def("basket_names", &baskets::names);
    m.def("parse_basket", [](const std::string& spec) { return parse_basket(spec); },
          py::arg("spec"));
    m.def("affine_energy", &affine_energy, py::arg("record"), py::arg("basket"));
    m.def("basket_energy", &basket_energy, py::arg("record"), py::arg("basket"), py::arg("e_xfer"));
    m.def("compose_hybrid", &compose_hybrid, py::arg("a"), py::arg("b"), py::arg("name"),
          py::arg("freq") = 96.0e6);
    m.def("rsa_equivalent_bits", &rsa_equivalent_bits, py::arg("record"));

    // crossover / frontier
    m.def("crossover_point", &crossover_point, py::arg("a"), py::arg("b"));
    m.def("rank_at",
          [](const std::vector<AlgorithmRecord>& records, const EnergyBasket& basket,
             double e_xfer) { return rank_at(records, basket, e_xfer); },
          py::arg("records"), py::arg("basket"), py::arg("e_xfer"));
    m.def("frontier",
          [](const std::vector<AlgorithmRecord>& records, const EnergyBasket& basket,
             double e_max) { return frontier(records, basket, e_max); },
          py::arg("records"), py::arg("basket"), py::arg("e_max") = kNoLimit);
    m.def("frontier_of_lines",
          [](const std::vector<AffineEnergy>& lines, double e_max) {
              return frontier(lines, e_max);
          },
          py::arg("lines"), py::arg("e_max") = kNoLimit);
    m.def("technology_presets", &technology_presets);
    m.def("battery_budget", &battery_budget, py::arg("record"), py::arg("basket"),
          py::arg("e_xfer"), py::arg("battery_j"));

    // plots
    m.def("emit_plot",
          [](const std::vector<AlgorithmRecord>& records, const EnergyBasket& basket,
             const std::string& mode, double e_lo, double e_hi, int samples, double freq) {
              PlotMode pm = mode == "lines" ? PlotMode::Lines : PlotMode::PowerScatter;
              if (mode != "lines" && mode != "power-scatter" && mode != "power_scatter")
                  throw ValueError("mode must be 'lines' or 'power-scatter'");
              return json_to_py(emit_plot(records, basket, pm, PlotRange{e_lo, e_hi, samples}, freq));
          },
          py::arg("records"), py::arg("basket"), py::arg("mode") = "lines",
          py::arg("e_lo") = 0.0, py::arg("e_hi") = 2.0e-3, py::arg("samples") = 128,
          py::arg("freq") = 96.0e6);
    m.def("render_svg", [](const py::dict& doc) { return render_svg(py_to_json(doc)); },
          py::arg("doc"));

    // CLI entry point, usable for scripting: returns (exit_code, stdout, stderr)
    m.def("cli_run",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              int code = cli::run(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"));
}
