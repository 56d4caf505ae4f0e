#include "cavpol/coupling.hpp"

#include <cmath>
#include <numbers>

#include "cavpol/constants.hpp"
#include "cavpol/errors.hpp"

namespace cavpol {

namespace cc = constants;

double fabry_perot_g(int wells_per_antinode, double f2d_per_m2, double n_c, double lambda0_nm) {
    if (wells_per_antinode < 0) throw invalid_input("fabry_perot_g: negative well count");
    if (f2d_per_m2 <= 0.0 || n_c <= 0.0 || lambda0_nm <= 0.0)
        throw invalid_input("fabry_perot_g: f_2D, n_c and lambda0 must be positive");
    double omega_sq = wells_per_antinode * cc::elementary_charge * cc::elementary_charge *
                      f2d_per_m2 /
                      (n_c * cc::vacuum_permittivity * cc::electron_mass * lambda0_nm * 1e-9);
    return cc::hbar * std::sqrt(omega_sq) * cc::joule_to_mev;
}

double effective_index_from_g(double g_mev, int wells_per_antinode, double f2d_per_m2,
                              double lambda0_nm) {
    if (g_mev <= 0.0) throw invalid_input("effective_index_from_g: g must be positive");
    double omega = g_mev * cc::mev_to_joule / cc::hbar;
    return wells_per_antinode * cc::elementary_charge * cc::elementary_charge * f2d_per_m2 /
           (cc::vacuum_permittivity * cc::electron_mass * lambda0_nm * 1e-9 * omega * omega);
}

DbrEffectiveParams dbr_effective_params(double n1, double n2, double lambda0_nm) {
    if (!(n1 > n2) || n2 < 1.0)
        throw invalid_input("dbr_effective_params: need n1 > n2 >= 1");
    if (lambda0_nm <= 0.0) throw invalid_input("dbr_effective_params: lambda0 must be positive");
    DbrEffectiveParams p;
    p.lambda1_nm = lambda0_nm / n1;
    p.lambda2_nm = lambda0_nm / n2;
    p.k1_per_nm = 2.0 * std::numbers::pi * n1 / lambda0_nm;
    p.k2_per_nm = 2.0 * std::numbers::pi * n2 / lambda0_nm;
    p.a_per_nm = (8.0 / lambda0_nm) * (n1 * n2 / (n1 + n2)) * std::log(n1 / n2);
    double a = p.a_per_nm, k1 = p.k1_per_nm, k2 = p.k2_per_nm;
    p.f1_nm = (-a * a + 2.0 * k1 * k1 * std::expm1(a * p.lambda1_nm / 4.0)) /
              (a * (a * a + 4.0 * k1 * k1));
    p.f2_nm = (a * a + 2.0 * k2 * k2 * (-std::expm1(-a * p.lambda2_nm / 4.0))) /
              (a * (a * a + 4.0 * k2 * k2));
    return p;
}

CouplingResult analytic_g(double n1, double n2, CavityKind kind, int order,
                          int wells_per_antinode, double f2d_per_m2, double lambda0_nm) {
    if (order < 1) throw invalid_input("analytic_g: cavity order must be >= 1");
    if (wells_per_antinode < 1) throw invalid_input("analytic_g: need at least one well");
    DbrEffectiveParams p = dbr_effective_params(n1, n2, lambda0_nm);

    double ratio_sq = (n2 / n1) * (n2 / n1);
    double n_c, l_int, l_ext, bracket;
    if (kind == CavityKind::HighIndex) {
        n_c = n1;
        l_int = (order - 0.5) / 2.0 * p.lambda1_nm;
        l_ext = 2.0 * (n1 * n1 * p.f1_nm + n2 * n2 * p.f2_nm) / (n1 * n1 - n2 * n2);
        bracket = 2.0 * order - 1.0 + 2.0 / (1.0 - ratio_sq);
    } else {
        n_c = n2;
        l_int = (order - 0.5) / 2.0 * p.lambda2_nm;
        l_ext = 2.0 * (n1 * n1 * p.f2_nm + n2 * n2 * p.f1_nm) / (n1 * n1 - n2 * n2);
        bracket = 2.0 * order - 2.0 + 2.0 / (1.0 - ratio_sq);
    }

    CouplingResult r;
    r.l_int_nm = l_int;
    r.l_ext_nm = l_ext;
    r.l_eff_nm = l_int + l_ext;
    double g0_sq = cc::elementary_charge * cc::elementary_charge * f2d_per_m2 /
                   (4.0 * cc::vacuum_permittivity * n_c * n_c * cc::electron_mass *
                    r.l_eff_nm * 1e-9);
    double omega = std::sqrt(g0_sq * wells_per_antinode * bracket);
    r.g_total_mev = cc::hbar * omega * cc::joule_to_mev;
    r.n_eff = effective_index_from_g(r.g_total_mev, wells_per_antinode, f2d_per_m2, lambda0_nm);
    return r;
}

CouplingResult numeric_g(const LayerStack& stack, const FieldProfile& profile) {
    if (stack.sheets.empty()) throw invalid_input("numeric_g: stack carries no QW sheets");
    double total = stack.total_thickness_nm();
    if (profile.z_nm.empty() || profile.z_nm.front() > 1e-9 ||
        profile.z_nm.back() < total - 1e-9)
        throw invalid_input("numeric_g: field profile does not span this stack");

    FieldSolution sol = solve_field(stack, profile.lambda_nm);

    // integral n^2 |E|^2 dz in raw solution units; per-layer closed form of
    // |F e^{ikz} + B e^{-ikz}|^2 so no quadrature error enters.
    double energy_integral = 0.0;  // nm * (raw amplitude)^2
    for (std::size_t j = 0; j < stack.layers.size(); ++j) {
        double n = stack.layers[j].material.refractive_index;
        double d = stack.layers[j].thickness_nm;
        double k = sol.wavenumber_per_nm[j + 1];
        std::complex<double> f = sol.forward[j + 1], b = sol.backward[j + 1];
        std::complex<double> cross =
            f * std::conj(b) * (std::exp(std::complex<double>(0.0, 2.0 * k * d)) - 1.0);
        double piece = (std::norm(f) + std::norm(b)) * d + cross.imag() / k;
        energy_integral += n * n * piece;
    }
    if (energy_integral <= 0.0) throw numerical_error("numeric_g: vanishing mode energy");

    const auto& exciton = stack.sheets.front().exciton;
    int wells = stack.sheets.front().wells;
    double prefactor = cc::elementary_charge * cc::elementary_charge /
                       (4.0 * cc::vacuum_permittivity * cc::electron_mass);

    CouplingResult r;
    double sum_sq = 0.0;  // omega^2
    for (const auto& sheet : stack.sheets) {
        double amp = sol.amplitude_at(sheet.z_nm);
        double gi_sq = prefactor * sheet.wells * sheet.exciton.f2d_per_m2 * amp * amp /
                       (energy_integral * 1e-9);
        sum_sq += gi_sq;
        r.g_per_sheet_mev.push_back(cc::hbar * std::sqrt(gi_sq) * cc::joule_to_mev);
    }
    r.g_total_mev = cc::hbar * std::sqrt(sum_sq) * cc::joule_to_mev;

    auto [l_eff, l_int] = mode_effective_lengths(stack, profile);
    r.l_eff_nm = l_eff;
    r.l_int_nm = l_int;
    r.l_ext_nm = l_eff - l_int;
    r.n_eff = effective_index_from_g(r.g_total_mev, wells, exciton.f2d_per_m2, profile.lambda_nm);
    return r;
}

}  // namespace cavpol
