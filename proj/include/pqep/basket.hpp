#pragma once

#include "pqep/dataset.hpp"

namespace pqep {

/// An "energy basket": which operations a protocol role pays for, and which
/// objects it transmits. Weighted so asymmetric roles (send the public key,
/// receive the ciphertext) and amortized keys (w_op1 < 1) are expressible.
struct EnergyBasket {
    double w_op1 = 0; // keypair generation
    double w_op2 = 0; // encapsulate / sign
    double w_op3 = 0; // decapsulate / verify
    double w_pubkey = 0;  // transmitted public-key bits
    double w_payload = 0; // transmitted ciphertext/signature bits
    std::string label;
};

namespace baskets {

EnergyBasket keygen();          // E_kg + e*|pubkey|
EnergyBasket encaps();          // E_enc + e*|ciphertext|
EnergyBasket sign();            // E_sign + e*|signature|
EnergyBasket verify();          // E_verify + e*|signature| (receiver side)
EnergyBasket ephemeral_total(); // all three ops + pubkey + ciphertext

/// Lookup by CLI name: keygen, encaps, sign, verify, ephemeral-total.
std::optional<EnergyBasket> by_name(std::string_view name);
std::vector<std::string> names();

} // namespace baskets

/// Parse a basket spec: a preset name, or an inline JSON weight object such
/// as {"w_op1":1,"w_pubkey":0.5}. Throws ValueError on unknown names, bad
/// weights, or an all-zero basket.
EnergyBasket parse_basket(std::string_view spec);

/// Total energy as an affine function of per-bit transmission cost:
/// E(e_xfer) = intercept + slope_bits * e_xfer.
struct AffineEnergy {
    double intercept = 0;  // J, the computation term
    double slope_bits = 0; // transmitted bits, weighted
    std::string algorithm;

    double at(double e_xfer) const { return intercept + slope_bits * e_xfer; }
};

AffineEnergy affine_energy(const AlgorithmRecord& record, const EnergyBasket& basket);

/// affine_energy evaluated at e_xfer (J/bit), in joules.
double basket_energy(const AlgorithmRecord& record, const EnergyBasket& basket, double e_xfer);

/// Combine a classical and a post-quantum scheme (or any two of the same
/// kind) into one record whose costs add: cycles, energies, and transmitted
/// bytes sum per operation; the security level is the max of the two; the
/// result is tagged family "Hybrid" and flag "hybrid". Average power is
/// recomputed from the summed energy at `freq` (the bundled platform clock
/// by default).
AlgorithmRecord compose_hybrid(const AlgorithmRecord& a, const AlgorithmRecord& b,
                               std::string name, double freq = 96.0e6);

/// RSA modulus size (bits) whose pubkey+ciphertext bandwidth matches the
/// record's: 8*(pubkey_bytes + payload_bytes)/2. RSA transmits the modulus
/// twice (key and ciphertext), so halving gives the equivalent key size.
double rsa_equivalent_bits(const AlgorithmRecord& record);

} // namespace pqep
