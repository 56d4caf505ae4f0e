#include "cavpol/stability.hpp"

#include <cmath>
#include <numbers>

#include "cavpol/constants.hpp"
#include "cavpol/errors.hpp"
#include "cavpol/numerics.hpp"

namespace cavpol {

namespace cc = constants;

double phonon_broadening(double temperature_k, const BroadeningParams& params) {
    if (temperature_k < 0.0) throw invalid_input("phonon_broadening: negative temperature");
    if (temperature_k == 0.0) return 0.0;
    double acoustic = params.gamma_a_mev_per_k * temperature_k;
    double lo = params.gamma_lo_mev /
                std::expm1(params.lo_phonon_mev / (cc::boltzmann_mev_per_k * temperature_k));
    return acoustic + lo;
}

double lp_lifetime(double exciton_fraction, const BroadeningParams& params,
                   double photon_energy_mev) {
    if (exciton_fraction < 0.0 || exciton_fraction > 1.0)
        throw invalid_input("lp_lifetime: exciton fraction must lie in [0, 1]");
    double width = exciton_fraction * params.gamma_ex_mev +
                   (1.0 - exciton_fraction) * params.gamma_pt_mev(photon_energy_mev);
    return cc::hbar_mev_s / width;
}

double lp_linewidth(double exciton_fraction, double gamma_pm_mev, const BroadeningParams& params,
                    double photon_energy_mev) {
    if (exciton_fraction < 0.0 || exciton_fraction > 1.0)
        throw invalid_input("lp_linewidth: exciton fraction must lie in [0, 1]");
    return exciton_fraction * (params.gamma_inh_mev + gamma_pm_mev + params.gamma_ex_mev) +
           (1.0 - exciton_fraction) * params.gamma_pt_mev(photon_energy_mev);
}

DissociationProbability dissociation_probability(double temperature_k,
                                                 const PolaritonSolution& lp,
                                                 const ExcitonParams& exciton,
                                                 const BroadeningParams& params,
                                                 double photon_energy_mev) {
    if (lp.branch != Branch::LP || lp.k_r_per_nm != 0.0)
        throw invalid_input("dissociation_probability: needs the LP solution at K_R = 0");
    double gamma_pm = phonon_broadening(temperature_k, params);
    if (gamma_pm == 0.0) return {0.0, 0.0, false};

    double depth_mev = lp.bohr_reduction * exciton.binding_mev;  // E/E_B = -lambda at K_R = 0
    double gamma_lp =
        lp_linewidth(lp.exciton_fraction, gamma_pm, params, photon_energy_mev);
    double tail = 0.5 - std::atan(depth_mev / (0.5 * gamma_lp)) / std::numbers::pi;
    double p = lp.exciton_fraction * (gamma_pm / gamma_lp) * tail;

    DissociationProbability result;
    result.unclamped = p;
    result.clamped = p > 1.0;
    result.value = std::clamp(p, 0.0, 1.0);
    return result;
}

double dissociation_temperature(double gamma, const DetuningSpec& detuning,
                                const ExcitonParams& exciton, const BroadeningParams& params,
                                double threshold) {
    if (threshold <= 0.0 || threshold >= 1.0)
        throw invalid_input("dissociation_temperature: threshold must lie in (0, 1)");
    PolaritonSolution lp = solve_variational(gamma, detuning, 0.0, exciton);
    auto probability = [&](double t) {
        return dissociation_probability(t, lp, exciton, params, detuning.photon_energy_mev)
            .value;
    };

    const double t_lo = 1.0, t_hi = 2000.0;
    double prev = -1.0;
    for (int i = 0; i <= 32; ++i) {
        double p = probability(t_lo + (t_hi - t_lo) * i / 32.0);
        if (p < prev - 1e-15)
            throw numerical_error("dissociation_temperature: P(T) is not monotone");
        prev = p;
    }
    if (probability(t_hi) < threshold)
        throw numerical_error(
            "dissociation_temperature: stable beyond bracket (P < threshold at 2000 K)");
    if (probability(t_lo) >= threshold) return t_lo;
    return num::bisect([&](double t) { return probability(t) - threshold; }, t_lo, t_hi, 0.1);
}

double lp_depth_to_halfwidth_ratio(double gamma, const DetuningSpec& detuning,
                                   const ExcitonParams& exciton, const BroadeningParams& params,
                                   double temperature_k) {
    PolaritonSolution lp = solve_variational(gamma, detuning, 0.0, exciton);
    double gamma_pm = phonon_broadening(temperature_k, params);
    double gamma_lp =
        lp_linewidth(lp.exciton_fraction, gamma_pm, params, detuning.photon_energy_mev);
    return lp.bohr_reduction * exciton.binding_mev / (0.5 * gamma_lp);
}

double saturation_density(const PolaritonSolution& lp, const ExcitonParams& exciton) {
    if (lp.exciton_fraction <= 0.0)
        throw invalid_input("saturation_density: vanishing exciton fraction");
    double a0_cm = exciton.bohr_radius_nm * 1e-7;
    return lp.bohr_reduction * lp.bohr_reduction /
           (9.0 * std::numbers::pi * a0_cm * a0_cm * lp.exciton_fraction);
}

}  // namespace cavpol
