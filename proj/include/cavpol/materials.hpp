#pragma once

#include <optional>
#include <string>

namespace cavpol {

/// Dispersionless optical material: one real index at the design wavelength.
struct OpticalMaterial {
    std::string name;
    double refractive_index = 1.0;
};

/// Quantum-well exciton parameter set. Masses are in units of the free
/// electron mass. The triple (binding energy, Bohr radius, reduced mass)
/// always satisfies E_B = hbar^2 / (2 mu a0^2); construct through
/// make_exciton which derives the missing member and enforces the relation.
struct ExcitonParams {
    double f2d_per_m2 = 0.0;      // areal oscillator strength, m^-2
    double binding_mev = 0.0;     // E_B
    double bohr_radius_nm = 0.0;  // a0 (2D)
    double reduced_mass = 0.0;    // mu
    double total_mass = 0.0;      // M = m_e* + m_h
    double eps_r = 0.0;           // relative permittivity
    double bandgap_mev = 0.0;     // E_g
};

/// Inputs for make_exciton. Exactly two of {binding_mev, bohr_radius_nm,
/// reduced_mass} must be set; the third is derived. Supplying all three is
/// allowed when they already satisfy the consistency relation to 1e-6.
struct ExcitonInputs {
    double f2d_per_m2 = 0.0;
    std::optional<double> binding_mev;
    std::optional<double> bohr_radius_nm;
    std::optional<double> reduced_mass;
    double total_mass = 0.517;  // 0.067 + 0.45, GaAs conduction/heavy-hole
    double eps_r = 12.9;
    double bandgap_mev = 1424.0;
};

ExcitonParams make_exciton(const ExcitonInputs& in);

/// E_B in meV from reduced mass (m_e units) and 2D Bohr radius (nm).
double binding_energy_mev(double reduced_mass, double bohr_radius_nm);

/// Registered materials: GaAs, AlAs, Air, and AlGaAs(x) with x the Ga
/// fraction; AlGaAs interpolates linearly between the AlAs and GaAs indices.
OpticalMaterial builtin_material(const std::string& name);

/// Registered QW excitons: GaAsQW, InGaAsQW.
ExcitonParams builtin_exciton(const std::string& name);

}  // namespace cavpol
