#include "cavpol/polariton.hpp"

#include <cassert>
#include <cmath>

#include "cavpol/constants.hpp"
#include "cavpol/errors.hpp"

namespace cavpol {

namespace cc = constants;

double exciton_kinetic_over_eb(double k_r_per_nm, const ExcitonParams& exciton) {
    double k = k_r_per_nm * 1e9;  // 1/m
    double e_joule = cc::hbar * cc::hbar * k * k /
                     (2.0 * exciton.total_mass * cc::electron_mass);
    return e_joule * cc::joule_to_mev / exciton.binding_mev;
}

double photon_kinetic_over_eb(double k_r_per_nm, const DetuningSpec& detuning,
                              const ExcitonParams& exciton) {
    if (k_r_per_nm == 0.0) return 0.0;
    double ratio = k_r_per_nm / detuning.k_z_per_nm;
    return detuning.photon_energy_mev / exciton.binding_mev *
           (std::sqrt(1.0 + ratio * ratio) - 1.0);
}

double energy_functional(double alpha, double lambda, double gamma, const DetuningSpec& detuning,
                         double k_r_per_nm, const ExcitonParams& exciton) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw invalid_input("energy_functional: alpha must lie strictly in (0, 1)");
    if (lambda <= 0.0) throw invalid_input("energy_functional: lambda must be positive");
    double a2 = alpha * alpha;
    double beta = std::sqrt(1.0 - a2);
    double b2 = 1.0 - a2;
    double delta0 = detuning.delta0(exciton.binding_mev);
    double kinetic = a2 * exciton_kinetic_over_eb(k_r_per_nm, exciton) +
                     b2 * photon_kinetic_over_eb(k_r_per_nm, detuning, exciton);
    return a2 * lambda * lambda - 2.0 * a2 * lambda - 2.0 * alpha * beta * gamma * lambda +
           b2 * delta0 + kinetic;
}

namespace {

// Stationarity reduces to (4 + f^2) a^4 - (4 + f^2) a^2 + 1 = 0 with
// sign(1 - 2 a^2) = sign(f); the quadratic root is picked accordingly.
double exciton_fraction_from_f(double f) {
    double disc = std::sqrt(1.0 - 4.0 / (4.0 + f * f));
    return f > 0.0 ? 0.5 * (1.0 - disc) : 0.5 * (1.0 + disc);
}

double stationarity_f(double gamma, const DetuningSpec& detuning, double k_r_per_nm,
                      const ExcitonParams& exciton) {
    return (gamma * gamma - detuning.delta_mev / exciton.binding_mev +
            exciton_kinetic_over_eb(k_r_per_nm, exciton) -
            photon_kinetic_over_eb(k_r_per_nm, detuning, exciton)) /
           gamma;
}

}  // namespace

PolaritonSolution solve_variational(double gamma, const DetuningSpec& detuning,
                                    double k_r_per_nm, const ExcitonParams& exciton) {
    if (gamma <= 0.0) throw invalid_input("solve_variational: gamma must be positive");
    double f = stationarity_f(gamma, detuning, k_r_per_nm, exciton);
    double a2 = exciton_fraction_from_f(f);
    double alpha = std::sqrt(a2);
    double beta = std::sqrt(1.0 - a2);

    PolaritonSolution sol;
    sol.exciton_fraction = a2;
    sol.photon_fraction = 1.0 - a2;
    sol.bohr_reduction = 1.0 + beta * gamma / alpha;
    sol.energy_over_eb = energy_functional(alpha, sol.bohr_reduction, gamma, detuning,
                                           k_r_per_nm, exciton);
    sol.branch = Branch::LP;
    sol.k_r_per_nm = k_r_per_nm;

#ifndef NDEBUG
    // stationary point is a local minimum
    double h = 1e-5;
    double e0 = sol.energy_over_eb;
    for (double da : {-h, h})
        if (alpha + da > 0.0 && alpha + da < 1.0)
            assert(energy_functional(alpha + da, sol.bohr_reduction, gamma, detuning, k_r_per_nm,
                                     exciton) >= e0 - 1e-9);
    for (double dl : {-h, h})
        assert(energy_functional(alpha, sol.bohr_reduction + dl, gamma, detuning, k_r_per_nm,
                                 exciton) >= e0 - 1e-9);
#endif
    return sol;
}

PolaritonSolution upper_polariton(double gamma, const DetuningSpec& detuning, double k_r_per_nm,
                                  const ExcitonParams& exciton) {
    if (gamma <= 0.0) throw invalid_input("upper_polariton: gamma must be positive");
    double f = stationarity_f(gamma, detuning, k_r_per_nm, exciton);
    double a2 = 1.0 - exciton_fraction_from_f(f);  // complementary root
    double alpha = std::sqrt(a2);
    double beta = std::sqrt(1.0 - a2);

    PolaritonSolution sol;
    sol.exciton_fraction = a2;
    sol.photon_fraction = 1.0 - a2;
    sol.branch = Branch::UP;
    sol.k_r_per_nm = k_r_per_nm;

    double lambda = 1.0 - beta * gamma / alpha;
    if (lambda <= 0.0) {
        sol.bohr_reduction = 0.0;
        sol.energy_over_eb = 0.0;
        sol.unbound = true;
        return sol;
    }
    sol.bohr_reduction = lambda;
    sol.energy_over_eb = energy_functional(alpha, lambda, -gamma, detuning, k_r_per_nm, exciton);
    return sol;
}

std::vector<HopfieldPoint> hopfield_map(double gamma_min, double gamma_max, int gamma_points,
                                        double delta_min_mev, double delta_max_mev,
                                        int delta_points, const ExcitonParams& exciton,
                                        Exec exec) {
    if (gamma_points < 1 || delta_points < 1)
        throw invalid_input("hopfield_map: grid must be non-empty");
    if (gamma_min <= 0.0) throw invalid_input("hopfield_map: gamma must be positive");

    std::vector<HopfieldPoint> out(std::size_t(gamma_points) * delta_points);
    auto point = [&](int ig, int id) {
        double gamma = gamma_points == 1
                           ? gamma_min
                           : gamma_min + (gamma_max - gamma_min) * ig / (gamma_points - 1);
        double delta = delta_points == 1
                           ? delta_min_mev
                           : delta_min_mev + (delta_max_mev - delta_min_mev) * id /
                                                 (delta_points - 1);
        DetuningSpec det{delta, 0.0, 1.0};  // photon kinetic terms vanish at K_R = 0
        PolaritonSolution sol = solve_variational(gamma, det, 0.0, exciton);
        out[std::size_t(ig) * delta_points + id] =
            HopfieldPoint{gamma, delta, sol.exciton_fraction, sol.bohr_reduction};
    };

    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (int idx = 0; idx < gamma_points * delta_points; ++idx)
            point(idx / delta_points, idx % delta_points);
    } else {
        for (int idx = 0; idx < gamma_points * delta_points; ++idx)
            point(idx / delta_points, idx % delta_points);
    }
    return out;
}

std::vector<DispersionPoint> lp_dispersion(double gamma, const DetuningSpec& detuning,
                                           const ExcitonParams& exciton,
                                           const std::vector<double>& k_r_grid_per_nm) {
    for (std::size_t i = 0; i < k_r_grid_per_nm.size(); ++i) {
        if (k_r_grid_per_nm[i] < 0.0)
            throw invalid_input("lp_dispersion: K_R grid must be nonnegative");
        if (i > 0 && k_r_grid_per_nm[i] <= k_r_grid_per_nm[i - 1])
            throw invalid_input("lp_dispersion: K_R grid must be increasing");
    }
    std::vector<DispersionPoint> out;
    out.reserve(k_r_grid_per_nm.size());
    for (double k : k_r_grid_per_nm) {
        PolaritonSolution sol = solve_variational(gamma, detuning, k, exciton);
        out.push_back({k, sol.energy_over_eb * exciton.binding_mev});
    }
    return out;
}

}  // namespace cavpol
