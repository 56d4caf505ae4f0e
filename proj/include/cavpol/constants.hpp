#pragma once

namespace cavpol::constants {

// CODATA 2018, SI units.
inline constexpr double elementary_charge = 1.602176634e-19;  // C
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double electron_mass = 9.1093837015e-31;  // kg
inline constexpr double hbar = 1.054571817e-34;  // J s
inline constexpr double boltzmann = 1.380649e-23;  // J/K

// Derived, in the meV/nm/s unit system used throughout the library.
inline constexpr double hbar_mev_s = hbar / elementary_charge * 1e3;            // meV s
inline constexpr double boltzmann_mev_per_k = boltzmann / elementary_charge * 1e3;  // meV/K
inline constexpr double hc_mev_nm = 1.23984198433e6;  // photon energy[meV] = hc/lambda[nm]

inline constexpr double joule_to_mev = 1e3 / elementary_charge;
inline constexpr double mev_to_joule = elementary_charge * 1e-3;

// Exact areal-density conversions.
inline constexpr double per_cm2_to_per_m2 = 1e4;
inline constexpr double per_m2_to_per_cm2 = 1e-4;

/// Cavity photon energy in meV for a free-space wavelength in nm.
inline constexpr double photon_energy_mev(double lambda_nm) {
    return hc_mev_nm / lambda_nm;
}

}  // namespace cavpol::constants
