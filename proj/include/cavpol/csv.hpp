#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cavpol/coupling.hpp"
#include "cavpol/phasediagram.hpp"
#include "cavpol/polariton.hpp"
#include "cavpol/tmm.hpp"

namespace cavpol::csv {

/// Floats are printed with 9 significant digits so identical inputs always
/// produce byte-identical files.
std::string format(double value);

void write_spectrum(std::ostream& os, const std::vector<SpectrumPoint>& rows);
void write_field_profile(std::ostream& os, const FieldProfile& profile);

struct CouplingSweepRow {
    double x = 0.0;  // mirror sweep fraction
    int order = 0;
    double l_int_nm = 0.0;
    double l_ext_nm = 0.0;
    double l_eff_nm = 0.0;
    double g_numeric_mev = 0.0;
    double g_analytic_mev = 0.0;
    double n_eff = 0.0;
};
void write_coupling_sweep(std::ostream& os, const std::vector<CouplingSweepRow>& rows);

void write_hopfield(std::ostream& os, const std::vector<HopfieldPoint>& rows);
void write_dispersion(std::ostream& os, const std::vector<DispersionPoint>& rows);

struct BranchEnergyRow {
    double gamma = 0.0;
    double g_mev = 0.0;
    double e_lp_mev = 0.0;
    double e_up_mev = 0.0;
    double e_lp_standard_mev = 0.0;  // coupled-oscillator -E_B - g
    double e_up_standard_mev = 0.0;  // coupled-oscillator -E_B + g
};
void write_branch_energies(std::ostream& os, const std::vector<BranchEnergyRow>& rows);

struct TdSweepRow {
    double g_mev = 0.0;
    double t_d_k = 0.0;                    // NaN when stable beyond bracket
    double depth_to_halfwidth_ratio = 0.0;
};
void write_td_sweep(std::ostream& os, const std::vector<TdSweepRow>& rows);

void write_phase_curve(std::ostream& os, const PhaseDiagram& diagram);

struct PhaseSummaryRow {
    std::string name;
    double g_mev = 0.0;
    double t_d_k = 0.0;
    double n_s_per_qw_cm2 = 0.0;
    double n_s_total_cm2 = 0.0;
};
void write_phase_summary(std::ostream& os, const std::vector<PhaseSummaryRow>& rows,
                         const std::string& config_hash_hex);

}  // namespace cavpol::csv
