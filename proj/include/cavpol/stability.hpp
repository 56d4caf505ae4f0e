#pragma once

#include "cavpol/materials.hpp"
#include "cavpol/polariton.hpp"

namespace cavpol {

/// Broadening constants for the GaAs QW system. gamma_pt, the photon
/// radiative width, is derived as photon energy / quality factor.
struct BroadeningParams {
    double gamma_a_mev_per_k = 4.4e-3;  // acoustic phonon coefficient
    double gamma_lo_mev = 15.2;         // LO phonon coefficient
    double lo_phonon_mev = 36.0;        // hbar omega_LO
    double gamma_ex_mev = 1.3e-3;       // exciton radiative full-width
    double gamma_inh_mev = 1.0;         // inhomogeneous broadening
    double quality = 4000.0;            // cavity Q

    double gamma_pt_mev(double photon_energy_mev) const { return photon_energy_mev / quality; }
};

/// Phonon collision broadening gamma_pm = gamma_A T + gamma_LO/(exp(hw_LO/kT)-1).
double phonon_broadening(double temperature_k, const BroadeningParams& params);

/// Radiative LP lifetime hbar / (a^2 gamma_ex + b^2 gamma_pt), in seconds.
double lp_lifetime(double exciton_fraction, const BroadeningParams& params,
                   double photon_energy_mev);

/// Total LP linewidth a^2 (gamma_inh + gamma_pm + gamma_ex) + b^2 gamma_pt.
double lp_linewidth(double exciton_fraction, double gamma_pm_mev, const BroadeningParams& params,
                    double photon_energy_mev);

struct DissociationProbability {
    double value = 0.0;      // clamped to [0, 1]
    double unclamped = 0.0;  // raw result, kept visible when it exceeds 1
    bool clamped = false;
};

/// Probability that phonon collisions within the LP coherence time supply
/// the binding deficit and break the polariton into a free pair:
///   P = a^2 (gamma_pm / gamma_LP) (1/2 - arctan(E_LP / (gamma_LP/2)) / pi)
/// with E_LP = lambda E_B the binding depth below the free-pair continuum.
/// The LP lineshape is taken Lorentzian.
DissociationProbability dissociation_probability(double temperature_k,
                                                 const PolaritonSolution& lp,
                                                 const ExcitonParams& exciton,
                                                 const BroadeningParams& params,
                                                 double photon_energy_mev);

/// Temperature at which the dissociation probability reaches `threshold`,
/// bisected to 0.1 K on [1, 2000] K. Throws numerical_error with a
/// "stable beyond bracket" message when P(2000 K) stays below threshold.
double dissociation_temperature(double gamma, const DetuningSpec& detuning,
                                const ExcitonParams& exciton, const BroadeningParams& params,
                                double threshold);

/// E_LP / (gamma_LP / 2) at temperature T for the LP at K_R = 0.
double lp_depth_to_halfwidth_ratio(double gamma, const DetuningSpec& detuning,
                                   const ExcitonParams& exciton, const BroadeningParams& params,
                                   double temperature_k);

/// Phase-space-filling saturation density per QW, in cm^-2:
///   n_s = lambda^2 / (9 pi a0^2 alpha^2).
double saturation_density(const PolaritonSolution& lp, const ExcitonParams& exciton);

}  // namespace cavpol
