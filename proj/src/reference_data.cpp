#include "pqep/dataset.hpp"

namespace pqep {

namespace {

// Benchmark table measured on a NUCLEO-F411RE (Cortex M4, 96 MHz, 3.00 V
// core supply): 38 key-establishment rows and 8 signature rows. Cycle counts
// are in 10^6 cycles and power in mW, as published; energies in joules.
// SIKE energies were projected from the power draw of the first 10 s of each
// operation, hence the "extrapolated" flag.
constexpr const char* kReferenceCsv =
    "name,kind,family,level,pubkey_bytes,payload_bytes,"
    "op1_mcycles,op1_mw,op1_joules,op2_mcycles,op2_mw,op2_joules,"
    "op3_mcycles,op3_mw,op3_joules,flags\n"
    "ECDH-secp256k1,KEM,ECC,none,64,64,4.108,65.41,2.799e-3,8.215,65.36,5.594e-3,4.108,65.45,2.801e-3,\n"
    "ECDH-secp256r1,KEM,ECC,none,64,64,5.814,60.47,3.663e-3,11.63,59.99,7.267e-3,5.815,60.35,3.656e-3,\n"
    "FrodoKEM-640-AES,KEM,Lattice,L1,9616,9720,48.38,73.96,37.28e-3,47.20,71.34,35.08e-3,46.65,71.04,34.52e-3,\n"
    "FrodoKEM-640-SHAKE,KEM,Lattice,L1,9616,9720,80.01,79.03,65.87e-3,80.00,77.92,64.94e-3,79.44,77.84,64.42e-3,\n"
    "Kyber512,KEM,Lattice,L1,800,736,0.516,76.88,413.6e-6,0.654,78.33,534.0e-6,0.623,78.28,508.8e-6,\n"
    "Kyber768,KEM,Lattice,L3,1184,1088,0.978,75.77,772.3e-6,1.150,76.80,920.4e-6,1.100,76.50,876.3e-6,\n"
    "Kyber1024,KEM,Lattice,L5,1568,1568,1.575,77.11,1.265e-3,1.784,77.61,1.442e-3,1.714,77.47,1.383e-3,\n"
    "NewHope512-CCA,KEM,Lattice,L1,928,1120,0.591,78.52,483.9e-6,0.922,78.09,750.1e-6,0.906,77.77,734.0e-6,\n"
    "NewHope1024-CCA,KEM,Lattice,L5,1824,2208,1.167,78.91,959.3e-6,1.785,78.31,1.456e-3,1.764,78.13,1.436e-3,\n"
    "NTRU-HPS2048509,KEM,Lattice,L1,699,699,78.79,41.94,34.42e-3,0.634,59.89,395.6e-6,0.546,84.20,479.6e-6,\n"
    "NTRU-HPS2048677,KEM,Lattice,L3,930,930,141.3,41.18,60.62e-3,0.943,59.30,582.7e-6,0.849,83.52,739.0e-6,\n"
    "NTRU-HRSS701,KEM,Lattice,L3,1138,1138,154.2,41.18,66.15e-3,0.398,79.25,328.8e-6,0.898,82.91,776.0e-6,\n"
    "NTRU-HPS4096821,KEM,Lattice,L5,1230,1230,212.0,40.90,90.31e-3,1.189,59.02,731.0e-6,1.079,84.49,949.6e-6,\n"
    "R5ND_1KEM_5d,KEM,Lattice,L1,445,565,0.342,73.76,263.5e-6,0.544,71.82,407.1e-6,0.729,69.47,527.9e-6,\n"
    "R5ND_3KEM_5d,KEM,Lattice,L3,780,883,0.675,70.20,493.9e-6,1.015,70.90,749.4e-6,1.298,69.89,945.3e-6,\n"
    "R5ND_5KEM_5d,KEM,Lattice,L5,972,1095,1.229,66.42,850.0e-6,1.785,66.00,1.227e-3,2.339,64.47,1.571e-3,\n"
    "R5N1_1KEM_0d,KEM,Lattice,L1,5214,5252,5.577,55.63,3.232e-3,4.487,65.57,3.065e-3,5.340,65.61,3.650e-3,\n"
    "R5N1_3KEM_0d,KEM,Lattice,L3,8834,8890,8.914,54.53,5.063e-3,7.416,64.56,4.987e-3,8.445,65.19,5.735e-3,\n"
    "R5N1_5KEM_0d,KEM,Lattice,L5,14264,14320,32.82,60.90,20.82e-3,21.88,59.74,13.62e-3,25.59,60.37,16.10e-3,\n"
    "LightSaber,KEM,Lattice,L1,672,736,0.457,82.50,393.2e-6,0.651,82.41,559.3e-6,0.677,83.23,587.8e-6,\n"
    "Saber,KEM,Lattice,L3,992,1088,0.899,82.32,771.2e-6,1.170,82.71,1.008e-3,1.209,83.44,1.051e-3,\n"
    "FireSaber,KEM,Lattice,L5,1312,1472,1.455,81.87,1.241e-3,1.791,82.20,1.533e-3,1.854,82.63,1.596e-3,\n"
    "LAC128,KEM,Lattice,L1,544,712,2.275,49.61,1.176e-3,3.993,49.11,2.043e-3,6.064,50.58,3.195e-3,\n"
    "LAC192,KEM,Lattice,L3,1056,1188,7.546,49.81,3.916e-3,10.01,50.53,5.267e-3,18.53,50.23,9.698e-3,\n"
    "LAC256,KEM,Lattice,L5,1056,1424,7.686,50.94,4.079e-3,13.56,50.66,7.158e-3,22.22,50.59,11.71e-3,\n"
    "BabyBear,KEM,Lattice,L2,804,917,0.657,71.04,486.7e-6,0.825,69.60,598.8e-6,1.276,68.06,904.5e-6,\n"
    "MamaBear,KEM,Lattice,L4,1194,1307,1.280,70.58,941.4e-6,1.501,69.33,1.084e-3,2.137,68.21,1.518e-3,\n"
    "PapaBear,KEM,Lattice,L5,1584,1697,2.126,70.16,1.554e-3,2.400,69.16,1.729e-3,3.232,68.28,2.299e-3,\n"
    "ntrulpr653,KEM,Lattice,L2,897,1025,56.57,47.06,27.73e-3,112.6,47.07,55.24e-3,168.4,47.09,82.59e-3,\n"
    "ntrulpr761,KEM,Lattice,L3,1039,1167,76.64,47.74,38.12e-3,152.7,47.87,76.14e-3,228.3,47.23,112.3e-3,\n"
    "ntrulpr857,KEM,Lattice,L4,1184,1312,97.03,47.13,47.64e-3,193.3,47.25,95.16e-3,289.2,47.11,141.9e-3,\n"
    "sntrup653,KEM,Lattice,L2,994,897,600.3,46.38,290.1e-3,56.68,47.76,28.21e-3,171.4,46.69,83.34e-3,\n"
    "sntrup761,KEM,Lattice,L3,1158,1039,813.4,46.32,392.5e-3,76.76,47.32,37.84e-3,232.4,46.49,112.6e-3,\n"
    "sntrup857,KEM,Lattice,L4,1322,1184,1027,46.69,499.5e-3,97.16,48.05,48.63e-3,293.9,46.20,141.4e-3,\n"
    "SIKEp434,KEM,Isogeny,L1,330,346,666.0,67.89,471.0e-3,1091,68.18,774.7e-3,1163,68.17,826.1e-3,extrapolated\n"
    "SIKEp503,KEM,Isogeny,L2,378,402,1004,68.69,718.8e-3,1656,68.81,1.187,1761,69.01,1.266,extrapolated\n"
    "SIKEp610,KEM,Isogeny,L3,462,486,1880,68.72,1.346,3460,69.11,2.491,3480,69.10,2.505,extrapolated\n"
    "SIKEp751,KEM,Isogeny,L5,564,596,3404,67.76,2.403,5521,68.40,3.934,5930,68.59,4.237,extrapolated\n"
    "ECDSA-secp256k1,SIG,ECC,none,64,64,4.109,64.02,2.741e-3,4.475,64.96,3.028e-3,4.546,65.00,3.078e-3,\n"
    "ECDSA-secp256r1,SIG,ECC,none,64,64,5.814,59.14,3.582e-3,6.185,59.97,3.864e-3,6.639,59.88,4.142e-3,\n"
    "Dilithium2,SIG,Lattice,L1,1184,2044,1.328,77.58,1.073e-3,4.663,77.75,3.777e-3,1.389,77.49,1.121e-3,\n"
    "Dilithium3,SIG,Lattice,L2,1472,2701,2.172,77.78,1.760e-3,7.212,76.48,5.746e-3,2.116,77.37,1.705e-3,\n"
    "Dilithium4,SIG,Lattice,L3,1760,3366,2.930,78.25,2.389e-3,7.263,77.11,5.834e-3,2.997,78.02,2.436e-3,\n"
    "Falcon-512,SIG,Lattice,L1,897,690,182.2,62.53,118.7e-3,39.57,55.91,23.05e-3,0.493,67.12,345.0e-6,\n"
    "Falcon-512-tree,SIG,Lattice,L1,897,690,200.9,62.31,130.4e-3,18.19,60.18,11.40e-3,0.492,66.80,342.7e-6,\n"
    "Falcon-1024,SIG,Lattice,L5,1793,1330,380.2,58.72,232.6e-3,79.36,54.67,45.19e-3,1.013,65.37,690.0e-6,\n";

} // namespace

const Platform& reference_platform() {
    static const Platform platform{"cortex-m4-stm32f411re", 96.0e6, 3.00, std::nullopt, std::nullopt};
    return platform;
}

const Dataset& builtin_reference_dataset() {
    static const Dataset dataset{reference_platform(),
                                 parse_records(kReferenceCsv, DataFormat::Csv)};
    return dataset;
}

} // namespace pqep
