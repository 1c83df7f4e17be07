#include "pqep/basket.hpp"

#include "pqep/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace pqep {

namespace baskets {

EnergyBasket keygen() { return {1, 0, 0, 1, 0, "keygen"}; }
EnergyBasket encaps() { return {0, 1, 0, 0, 1, "encaps"}; }
EnergyBasket sign() { return {0, 1, 0, 0, 1, "sign"}; }
EnergyBasket verify() { return {0, 0, 1, 0, 1, "verify"}; }
EnergyBasket ephemeral_total() { return {1, 1, 1, 1, 1, "ephemeral-total"}; }

std::optional<EnergyBasket> by_name(std::string_view name) {
    if (name == "keygen") return keygen();
    if (name == "encaps") return encaps();
    if (name == "sign") return sign();
    if (name == "verify") return verify();
    if (name == "ephemeral-total") return ephemeral_total();
    return std::nullopt;
}

std::vector<std::string> names() {
    return {"keygen", "encaps", "sign", "verify", "ephemeral-total"};
}

} // namespace baskets

namespace {

void check_basket(const EnergyBasket& basket) {
    const double weights[] = {basket.w_op1, basket.w_op2, basket.w_op3,
                              basket.w_pubkey, basket.w_payload};
    double sum = 0;
    for (double w : weights) {
        if (w < 0 || !std::isfinite(w))
            throw ValueError("basket weights must be nonnegative");
        sum += w;
    }
    if (!(sum > 0)) throw ValueError("basket must have at least one positive weight");
}

} // namespace

EnergyBasket parse_basket(std::string_view spec) {
    if (auto preset = baskets::by_name(spec)) return *preset;
    auto brace = spec.find('{');
    if (brace == std::string_view::npos) {
        std::string known;
        for (const auto& n : baskets::names()) {
            if (!known.empty()) known += ", ";
            known += n;
        }
        throw ValueError("unknown basket '" + std::string(spec) + "' (presets: " + known +
                         "; or an inline JSON weight object)");
    }
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(spec);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValueError(std::string("bad basket JSON: ") + e.what());
    }
    EnergyBasket basket;
    basket.label = "custom";
    for (auto& [key, value] : obj.items()) {
        if (!value.is_number()) throw ValueError("basket weight '" + key + "' must be a number");
        double w = value.get<double>();
        if (key == "w_op1") basket.w_op1 = w;
        else if (key == "w_op2") basket.w_op2 = w;
        else if (key == "w_op3") basket.w_op3 = w;
        else if (key == "w_pubkey") basket.w_pubkey = w;
        else if (key == "w_payload") basket.w_payload = w;
        else throw ValueError("unknown basket weight '" + key + "'");
    }
    check_basket(basket);
    return basket;
}

AffineEnergy affine_energy(const AlgorithmRecord& record, const EnergyBasket& basket) {
    check_basket(basket);
    AffineEnergy line;
    line.algorithm = record.name;
    line.intercept = basket.w_op1 * record.op1.energy + basket.w_op2 * record.op2.energy +
                     basket.w_op3 * record.op3.energy;
    line.slope_bits = 8.0 * (basket.w_pubkey * static_cast<double>(record.pubkey_bytes) +
                             basket.w_payload * static_cast<double>(record.payload_bytes));
    return line;
}

double basket_energy(const AlgorithmRecord& record, const EnergyBasket& basket, double e_xfer) {
    if (e_xfer < 0 || !std::isfinite(e_xfer)) throw ValueError("e_xfer must be >= 0");
    return affine_energy(record, basket).at(e_xfer);
}

AlgorithmRecord compose_hybrid(const AlgorithmRecord& a, const AlgorithmRecord& b,
                               std::string name, double freq) {
    if (a.kind != b.kind)
        throw CompositionError("cannot combine " + a.name + " (" + std::string(to_string(a.kind)) +
                               ") with " + b.name + " (" + std::string(to_string(b.kind)) + ")");
    if (!(freq > 0)) throw ValueError("freq must be positive");
    AlgorithmRecord out;
    out.name = std::move(name);
    out.kind = a.kind;
    out.family = "Hybrid";
    out.pq_level = std::max(a.pq_level, b.pq_level);
    out.pubkey_bytes = a.pubkey_bytes + b.pubkey_bytes;
    out.payload_bytes = a.payload_bytes + b.payload_bytes;
    for (int i = 1; i <= 3; ++i) {
        Measurement m;
        m.cycles = a.op(i).cycles + b.op(i).cycles;
        m.energy = a.op(i).energy + b.op(i).energy;
        m.avg_power = m.energy * freq / m.cycles;
        (i == 1 ? out.op1 : i == 2 ? out.op2 : out.op3) = m;
    }
    out.flags.push_back("hybrid");
    for (const auto* parent : {&a, &b})
        for (const auto& flag : parent->flags)
            if (!out.has_flag(flag)) out.flags.push_back(flag);
    return out;
}

double rsa_equivalent_bits(const AlgorithmRecord& record) {
    return 8.0 * static_cast<double>(record.pubkey_bytes + record.payload_bytes) / 2.0;
}

} // namespace pqep
