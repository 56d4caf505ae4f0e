#include "cavpol/csv.hpp"

#include <cmath>
#include <cstdio>

namespace cavpol::csv {

std::string format(double value) {
    if (std::isnan(value)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

namespace {
void row(std::ostream& os, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) os << ',';
        os << format(v);
        first = false;
    }
    os << '\n';
}
}  // namespace

void write_spectrum(std::ostream& os, const std::vector<SpectrumPoint>& rows) {
    os << "lambda_nm,R,T\n";
    for (const auto& r : rows) row(os, {r.lambda_nm, r.reflectance, r.transmittance});
}

void write_field_profile(std::ostream& os, const FieldProfile& p) {
    os << "z_nm,abs_E,n\n";
    for (std::size_t i = 0; i < p.z_nm.size(); ++i)
        row(os, {p.z_nm[i], p.amplitude[i], p.index[i]});
}

void write_coupling_sweep(std::ostream& os, const std::vector<CouplingSweepRow>& rows) {
    os << "x,s,L_int_nm,L_ext_nm,L_eff_nm,g_numeric_meV,g_analytic_meV,n_eff\n";
    for (const auto& r : rows)
        row(os, {r.x, double(r.order), r.l_int_nm, r.l_ext_nm, r.l_eff_nm, r.g_numeric_mev,
                 r.g_analytic_mev, r.n_eff});
}

void write_hopfield(std::ostream& os, const std::vector<HopfieldPoint>& rows) {
    os << "gamma,Delta_meV,alpha_sq,lambda\n";
    for (const auto& r : rows)
        row(os, {r.gamma, r.delta_mev, r.exciton_fraction, r.bohr_reduction});
}

void write_dispersion(std::ostream& os, const std::vector<DispersionPoint>& rows) {
    os << "K_R_per_nm,E_LP_meV\n";
    for (const auto& r : rows) row(os, {r.k_r_per_nm, r.energy_mev});
}

void write_branch_energies(std::ostream& os, const std::vector<BranchEnergyRow>& rows) {
    os << "gamma,g_meV,E_LP_meV,E_UP_meV,E_LP_standard_meV,E_UP_standard_meV\n";
    for (const auto& r : rows)
        row(os, {r.gamma, r.g_mev, r.e_lp_mev, r.e_up_mev, r.e_lp_standard_mev,
                 r.e_up_standard_mev});
}

void write_td_sweep(std::ostream& os, const std::vector<TdSweepRow>& rows) {
    os << "g_meV,T_d_K,depth_to_halfwidth_ratio\n";
    for (const auto& r : rows) row(os, {r.g_mev, r.t_d_k, r.depth_to_halfwidth_ratio});
}

void write_phase_curve(std::ostream& os, const PhaseDiagram& d) {
    os << "T_K,n_crit_cm2\n";
    for (std::size_t i = 0; i < d.temperature_k.size(); ++i)
        row(os, {d.temperature_k[i], d.n_crit_cm2[i]});
}

void write_phase_summary(std::ostream& os, const std::vector<PhaseSummaryRow>& rows,
                         const std::string& config_hash_hex) {
    os << "# config_hash=" << config_hash_hex << '\n';
    os << "name,g_meV,T_d_K,n_s_per_qw_cm2,n_s_total_cm2\n";
    for (const auto& r : rows) {
        os << r.name << ',' << format(r.g_mev) << ',' << format(r.t_d_k) << ','
           << format(r.n_s_per_qw_cm2) << ',' << format(r.n_s_total_cm2) << '\n';
    }
}

}  // namespace cavpol::csv
