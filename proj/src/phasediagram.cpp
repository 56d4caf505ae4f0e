#include "cavpol/phasediagram.hpp"

#include <cmath>
#include <numbers>

#include "cavpol/constants.hpp"
#include "cavpol/errors.hpp"
#include "cavpol/numerics.hpp"

namespace cavpol {

namespace cc = constants;

double critical_density(double temperature_k, const StructureSpec& spec, double rtol) {
    if (temperature_k <= 0.0)
        throw invalid_input("critical_density: temperature must be positive");
    if (spec.spot_radius_um <= 0.0 || spec.g_mev <= 0.0)
        throw invalid_input("critical_density: spot radius and g must be positive");

    double gamma = spec.g_mev / spec.exciton.binding_mev;
    double kt_mev = cc::boltzmann_mev_per_k * temperature_k;
    double k_min = std::numbers::pi / (spec.spot_radius_um * 1e3);  // 1/nm

    double e_bottom =
        solve_variational(gamma, spec.detuning, 0.0, spec.exciton).energy_over_eb *
        spec.exciton.binding_mev;
    auto lp_energy = [&](double k) {
        return solve_variational(gamma, spec.detuning, k, spec.exciton).energy_over_eb *
               spec.exciton.binding_mev;
    };
    // integrand of integral k n_B(E(k) - E(0)) dk in u = ln k
    auto integrand_u = [&](double u) {
        double k = std::exp(u);
        double e = lp_energy(k) - e_bottom;
        return k * k / std::expm1(e / kt_mev);
    };

    // Octave-by-octave integration; the exciton-branch tail cuts off
    // exponentially a few thermal wavevectors out.
    double k_thermal =
        std::sqrt(2.0 * spec.exciton.total_mass * cc::electron_mass * kt_mev *
                  cc::mev_to_joule) /
        cc::hbar * 1e-9;  // 1/nm
    double total = 0.0;
    double u = std::log(k_min);
    const double du = std::numbers::ln2;
    for (int octave = 0; octave < 64; ++octave) {
        double coarse = std::abs(num::integrate(integrand_u, u, u + du, 1e300, 4));
        double tol = std::max(rtol * std::max(total, coarse), 1e-30);
        double piece = num::integrate(integrand_u, u, u + du, tol);
        total += piece;
        u += du;
        if (std::exp(u) > 8.0 * k_thermal && piece < rtol * total) break;
    }

    double per_nm2 = spec.spin_degeneracy / (2.0 * std::numbers::pi) * total;
    return per_nm2 * 1e14;  // cm^-2
}

PhaseDiagram build_phase_diagram(const StructureSpec& spec,
                                 const std::vector<double>& temperature_grid_k,
                                 double dissociation_threshold, Exec exec) {
    for (std::size_t i = 0; i < temperature_grid_k.size(); ++i) {
        if (temperature_grid_k[i] <= 0.0)
            throw invalid_input("build_phase_diagram: temperatures must be positive");
        if (i > 0 && temperature_grid_k[i] <= temperature_grid_k[i - 1])
            throw invalid_input("build_phase_diagram: temperature grid must be increasing");
    }

    PhaseDiagram diagram;
    diagram.spec = spec;
    diagram.temperature_k = temperature_grid_k;
    diagram.n_crit_cm2.resize(temperature_grid_k.size());

    int n = int(temperature_grid_k.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i)
            diagram.n_crit_cm2[i] = critical_density(temperature_grid_k[i], spec);
    } else {
        for (int i = 0; i < n; ++i)
            diagram.n_crit_cm2[i] = critical_density(temperature_grid_k[i], spec);
    }

    double gamma = spec.g_mev / spec.exciton.binding_mev;
    diagram.t_d_k = dissociation_temperature(gamma, spec.detuning, spec.exciton,
                                             spec.broadening, dissociation_threshold);
    PolaritonSolution lp = solve_variational(gamma, spec.detuning, 0.0, spec.exciton);
    diagram.n_s_per_qw_cm2 = saturation_density(lp, spec.exciton);
    diagram.n_s_total_cm2 = diagram.n_s_per_qw_cm2 * spec.total_qw_count;
    return diagram;
}

}  // namespace cavpol
