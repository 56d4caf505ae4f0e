#pragma once

#include <vector>

#include "cavpol/exec.hpp"
#include "cavpol/materials.hpp"

namespace cavpol {

/// Photon-exciton detuning context. delta_mev is hbar*omega0 minus the
/// exciton energy; the normalized detuning -1 + delta/E_B follows by
/// construction. k_z is the longitudinal wavenumber of the cavity mode.
struct DetuningSpec {
    double delta_mev = 0.0;
    double photon_energy_mev = 0.0;  // hbar * omega0
    double k_z_per_nm = 0.0;

    double delta0(double binding_mev) const { return -1.0 + delta_mev / binding_mev; }
};

enum class Branch { LP, UP };

/// Variational polariton state. Energies are normalized by the exciton
/// binding energy, with zero at the free electron-hole pair; the bare
/// exciton sits at -1.
struct PolaritonSolution {
    double exciton_fraction = 0.0;  // alpha^2
    double photon_fraction = 0.0;   // beta^2
    double bohr_reduction = 0.0;    // lambda; 0 for an unbound UP state
    double energy_over_eb = 0.0;
    Branch branch = Branch::LP;
    double k_r_per_nm = 0.0;
    bool unbound = false;
};

/// Normalized ground-state energy of the trial state at exciton amplitude
/// alpha (0 < alpha < 1) and Bohr reduction factor lambda:
///   E/E_B = a^2 l^2 - 2 a^2 l - 2 a b gamma l + b^2 Delta0 + delta(K_R),
/// with b = +sqrt(1 - a^2). A negative gamma evaluates the conjugate
/// (upper) branch of the coupling term.
double energy_functional(double alpha, double lambda, double gamma, const DetuningSpec& detuning,
                         double k_r_per_nm, const ExcitonParams& exciton);

/// Closed-form minimizer of the energy functional: the lower polariton.
PolaritonSolution solve_variational(double gamma, const DetuningSpec& detuning,
                                    double k_r_per_nm, const ExcitonParams& exciton);

/// Conjugate stationary point (complementary root, lambda = 1 - beta*gamma/alpha).
/// When that lambda would be nonpositive the state is clamped to the
/// free-pair asymptote E = 0 and flagged unbound.
PolaritonSolution upper_polariton(double gamma, const DetuningSpec& detuning, double k_r_per_nm,
                                  const ExcitonParams& exciton);

struct HopfieldPoint {
    double gamma = 0.0;
    double delta_mev = 0.0;
    double exciton_fraction = 0.0;
    double bohr_reduction = 0.0;
};

/// Dense LP map over a (gamma, detuning) grid at K_R = 0.
std::vector<HopfieldPoint> hopfield_map(double gamma_min, double gamma_max, int gamma_points,
                                        double delta_min_mev, double delta_max_mev,
                                        int delta_points, const ExcitonParams& exciton,
                                        Exec exec = Exec::Parallel);

struct DispersionPoint {
    double k_r_per_nm = 0.0;
    double energy_mev = 0.0;  // relative to the free pair at rest
};

std::vector<DispersionPoint> lp_dispersion(double gamma, const DetuningSpec& detuning,
                                           const ExcitonParams& exciton,
                                           const std::vector<double>& k_r_grid_per_nm);

/// Kinetic terms of the center-of-mass dispersion, normalized by E_B:
/// exciton part hbar^2 K^2 / (2 M E_B) and photon part
/// (hbar omega0 / E_B)(sqrt(1 + (K/K_Z)^2) - 1).
double exciton_kinetic_over_eb(double k_r_per_nm, const ExcitonParams& exciton);
double photon_kinetic_over_eb(double k_r_per_nm, const DetuningSpec& detuning,
                              const ExcitonParams& exciton);

}  // namespace cavpol
