#pragma once

#include <string>
#include <vector>

#include "cavpol/exec.hpp"
#include "cavpol/stability.hpp"

namespace cavpol {

/// One microcavity structure entering the phase diagram. The coupling
/// constant is either computed upstream (DBR structures) or supplied
/// directly (black-box mirrors).
struct StructureSpec {
    std::string name;
    double g_mev = 0.0;
    DetuningSpec detuning;
    ExcitonParams exciton;
    BroadeningParams broadening;
    int n_per_antinode = 1;
    int total_qw_count = 1;
    double spot_radius_um = 50.0;
    double spin_degeneracy = 2.0;
};

struct PhaseDiagram {
    std::vector<double> temperature_k;
    std::vector<double> n_crit_cm2;     // total areal polariton density
    double t_d_k = 0.0;                 // dissociation temperature
    double n_s_per_qw_cm2 = 0.0;        // saturation density per QW
    double n_s_total_cm2 = 0.0;         // per-QW value * total QW count
    StructureSpec spec;
};

/// BEC critical density at temperature T: Bose-Einstein occupation of the
/// LP dispersion integrated over in-plane wavevectors above the finite-size
/// cutoff k_min = pi / R_spot, with zero chemical potential at the K_R = 0
/// band bottom. Result in cm^-2.
double critical_density(double temperature_k, const StructureSpec& spec, double rtol = 1e-6);

/// Full diagram: n_crit over the temperature grid plus the dissociation
/// temperature (P = threshold) and saturation density boundary lines.
PhaseDiagram build_phase_diagram(const StructureSpec& spec,
                                 const std::vector<double>& temperature_grid_k,
                                 double dissociation_threshold = 0.01,
                                 Exec exec = Exec::Parallel);

}  // namespace cavpol
