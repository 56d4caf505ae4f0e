#pragma once

#include <vector>

#include "cavpol/stack.hpp"
#include "cavpol/tmm.hpp"

namespace cavpol {

/// Photon-exciton coupling for one structure. Energies are hbar*g in meV.
struct CouplingResult {
    double g_total_mev = 0.0;
    std::vector<double> g_per_sheet_mev;  // numeric path only
    double l_eff_nm = 0.0;
    double l_int_nm = 0.0;  // cavity-layer share; l_int + l_ext = l_eff
    double l_ext_nm = 0.0;
    double n_eff = 0.0;
};

enum class CavityKind { HighIndex, LowIndex };

/// Mirror-penetration constants for a quarter-wave pair (n1 > n2):
/// intensity attenuation a and the f1/f2 length factors of the effective
/// length expansion.
struct DbrEffectiveParams {
    double f1_nm = 0.0;
    double f2_nm = 0.0;
    double a_per_nm = 0.0;
    double k1_per_nm = 0.0;
    double k2_per_nm = 0.0;
    double lambda1_nm = 0.0;
    double lambda2_nm = 0.0;
};

/// Perfect-mirror Fabry-Perot coupling for N wells per antinode,
///   hbar * sqrt(N e^2 f_2D / (n_c eps0 m_e lambda0)),
/// independent of cavity length. N = 0 is allowed and gives 0.
double fabry_perot_g(int wells_per_antinode, double f2d_per_m2, double n_c, double lambda0_nm);

/// Exact algebraic inverse of fabry_perot_g in the cavity index.
double effective_index_from_g(double g_mev, int wells_per_antinode, double f2d_per_m2,
                              double lambda0_nm);

DbrEffectiveParams dbr_effective_params(double n1, double n2, double lambda0_nm);

/// Infinite-mirror closed form: g = g0 sqrt(N) sqrt(2s - 1 + 2/(1 - (n2/n1)^2))
/// for the high-index cavity, with 2s - 2 in place of 2s - 1 for the
/// low-index one; g0 and the effective lengths use n_c = n1 (high) or n2 (low).
CouplingResult analytic_g(double n1, double n2, CavityKind kind, int order,
                          int wells_per_antinode, double f2d_per_m2, double lambda0_nm);

/// Transfer-matrix path: per-sheet couplings from the resonant field profile,
///   g_i^2 = (e^2 f_2D N_i / (4 eps0 m_e)) |E(z_i)|^2 / integral n^2 |E|^2 dz,
/// summed in quadrature. The mode-energy normalization makes the result
/// independent of the profile's amplitude scale.
CouplingResult numeric_g(const LayerStack& stack, const FieldProfile& profile);

}  // namespace cavpol
